#include "helpers.hpp"

#include "bdcoh/io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace bdtest;
using bdcoh::io::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args)
{
    std::string cmd = std::string(BDCOH_CLI_PATH) + " " + args + " 2>&1";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("bdcoh_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string ses_json(const ShortExactSequence& ses)
{
    json j = io::write_ses(ses);
    j["group"] = io::write_group(*ses.A->group());
    return j.dump();
}

} // namespace

TEST(Cli, ExamplePipedIntoBdAxioms)
{
    CliRun r = run("example c3 | " + std::string(BDCOH_CLI_PATH) + " bd-axioms --cutoff 4");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("bd_equation"), std::string::npos);
}

TEST(Cli, CohomologyLines)
{
    std::string f3 = write_temp("f3.json", R"({"moduli": [3]})");
    CliRun r = run("cohomology --group '{\"cyclic\":3}' --module " + f3 + " --max-degree 6");
    EXPECT_EQ(r.code, 0) << r.out;
    for (int n = 0; n <= 6; ++n)
        EXPECT_NE(r.out.find("H^" + std::to_string(n) + "  order 3"), std::string::npos) << r.out;
}

TEST(Cli, JsonEnvelope)
{
    CliRun r = run("example c3 --json | " + std::string(BDCOH_CLI_PATH) + " verify-sitstarstar --json");
    EXPECT_EQ(r.code, 0) << r.out;
    json j = json::parse(r.out);
    EXPECT_EQ(j["command"], "verify-sitstarstar");
    for (const char* key : {"inputs", "results", "timing_ms"})
        EXPECT_TRUE(j.contains(key)) << key;
    for (const auto& res : j["results"])
        EXPECT_NE(res["status"], "fail") << res.dump();
}

TEST(Cli, FlippedRetractionExitsOneWithWitness)
{
    json f = io::write_family(build_c3_family());
    f["members"]["x"] = f["members"]["x^2"];
    std::string path = write_temp("flipped.json", f.dump());
    CliRun r = run("bd-axioms --cutoff 4 --family " + path);
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("bd_equation"), std::string::npos);
    EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, NonSectionExitsOneWithWitness)
{
    ShortExactSequence ses = c3_ses(3, 1);
    ses.s[1] = {2};
    std::string path = write_temp("nonsection.json", ses_json(ses));
    CliRun r = run("verify-sitstar --ses " + path + " --json");
    EXPECT_EQ(r.code, 1) << r.out;
    json j = json::parse(r.out);
    bool found = false;
    for (const auto& res : j["results"])
        if (res["check"] == "section") {
            found = true;
            EXPECT_EQ(res["status"], "fail");
            EXPECT_TRUE(res.contains("witness"));
        }
    EXPECT_TRUE(found);
}

TEST(Cli, ValidSequencePasses)
{
    std::string path = write_temp("ses_x2.json", ses_json(c3_ses(6, 2)));
    EXPECT_EQ(run("verify-sitstar --ses " + path).code, 0);
    EXPECT_EQ(run("theta --ses " + path + " --max-degree 3").code, 0);
}

TEST(Cli, MalformedInputExitsTwo)
{
    EXPECT_EQ(run("cohomology --group '{\"cyclic\":' --module '{\"moduli\":[3]}'").code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
    EXPECT_EQ(run("example cp --p 4").code, 2);
    EXPECT_EQ(run("bd-axioms --family /nonexistent/file.json").code, 2);
}

TEST(Cli, OtherSubcommands)
{
    EXPECT_EQ(run("bockstein --p 5 --max-degree 3").code, 0);
    EXPECT_EQ(run("example cp --p 2 | " + std::string(BDCOH_CLI_PATH) + " bd-table --max-degree 3 --family -").code, 0);
    CliRun cup = run("cup --group '{\"cyclic\":3}' --algebra '{\"moduli\":[3],\"mult\":[[[1]]],\"unit\":[1]}' --deg 1 1 --json");
    EXPECT_EQ(cup.code, 0) << cup.out;
}

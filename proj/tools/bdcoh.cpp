// bdcoh command line front end. Everything goes through the C API.

#include "bdcoh/bdcoh.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Failure {
    bdcoh_status status;
    std::string message;
};

void check(bdcoh_status st)
{
    if (st != BDCOH_OK)
        throw Failure{st, bdcoh_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Group = std::unique_ptr<bdcoh_group, Deleter<bdcoh_group, bdcoh_group_free>>;
using Module = std::unique_ptr<bdcoh_module, Deleter<bdcoh_module, bdcoh_module_free>>;
using Coh = std::unique_ptr<bdcoh_cohomology, Deleter<bdcoh_cohomology, bdcoh_cohomology_free>>;
using Ses = std::unique_ptr<bdcoh_ses, Deleter<bdcoh_ses, bdcoh_ses_free>>;
using Family = std::unique_ptr<bdcoh_family, Deleter<bdcoh_family, bdcoh_family_free>>;
using BD = std::unique_ptr<bdcoh_bd, Deleter<bdcoh_bd, bdcoh_bd_free>>;
using ReportH = std::unique_ptr<bdcoh_report, Deleter<bdcoh_report, bdcoh_report_free>>;

json take_json(char* s)
{
    json j = json::parse(s);
    bdcoh_string_free(s);
    return j;
}

json report_json(const ReportH& r)
{
    char* s = nullptr;
    check(bdcoh_report_to_json(r.get(), &s));
    return take_json(s);
}

// "-" reads stdin, text starting with { or [ is taken literally, anything
// else is a file name.
std::string load(const std::string& arg, const char* what)
{
    if (arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (arg[i] == '{' || arg[i] == '['))
        return arg;
    std::ifstream in(arg);
    if (!in)
        throw Failure{BDCOH_MALFORMED_INPUT, std::string("cannot read ") + what + " file '" + arg + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Accepts a bare family document or the envelope printed by `example --json`.
std::string unwrap_family(const std::string& text)
{
    try {
        json j = json::parse(text);
        if (j.is_object() && j.contains("data") && j["data"].is_object() && j["data"].contains("family"))
            return j["data"]["family"].dump();
    } catch (const json::exception&) {
    }
    return text;
}

Group read_group(const std::string& arg)
{
    bdcoh_group* g = nullptr;
    check(bdcoh_group_from_json(load(arg, "group").c_str(), &g));
    return Group(g);
}

Family read_family(const std::string& arg)
{
    bdcoh_family* f = nullptr;
    check(bdcoh_family_from_json(unwrap_family(load(arg, "family")).c_str(), nullptr, &f));
    return Family(f);
}

Ses read_ses(const std::string& arg, const std::string& group)
{
    Group g = group.empty() ? Group() : read_group(group);
    bdcoh_ses* s = nullptr;
    check(bdcoh_ses_from_json(load(arg, "sequence").c_str(), g.get(), &s));
    return Ses(s);
}

/// Collects reports and data, then prints text or the JSON envelope.
class Output {
public:
    Output(std::string command, bool as_json) : command_(std::move(command)), json_(as_json) {}

    json inputs = json::object();
    json data = json::object();
    bool passed = true;

    void add_report(const json& report, const std::string& prefix = {})
    {
        if (!report.value("passed", true))
            passed = false;
        for (const auto& c : report["checks"]) {
            json e{{"check", prefix + c["name"].get<std::string>()}};
            bool info = c.value("informational", false);
            bool ok = c["status"] == "pass";
            e["status"] = info ? "info" : (ok ? "pass" : "fail");
            if (info)
                e["holds"] = ok;
            if (c.contains("witness"))
                e["witness"] = c["witness"];
            results_.push_back(e);
            rows_.push_back({prefix + c["name"].get<std::string>(), info ? (ok ? "info: holds" : "info: fails") : (ok ? "PASS" : "FAIL"),
                             c.value("witness", std::string()), c.value("detail", std::string())});
        }
        text_ << report.value("title", std::string()) << (report.value("passed", true) ? ": pass" : ": FAIL")
              << "\n";
        flush_rows();
        for (const auto& n : report["notes"])
            text_ << "  note: " << n.get<std::string>() << "\n";
    }

    std::ostream& text() { return text_; }

    int finish(std::chrono::steady_clock::time_point start)
    {
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (json_) {
            json env{{"command", command_}, {"inputs", inputs}, {"results", results_}, {"timing_ms", ms}};
            if (!data.empty())
                env["data"] = data;
            std::cout << env.dump(2) << "\n";
        } else {
            std::cout << text_.str();
        }
        return passed ? 0 : 1;
    }

private:
    struct Row {
        std::string name, status, witness, detail;
    };
    void flush_rows()
    {
        size_t w = 0;
        for (const auto& r : rows_)
            w = std::max(w, r.name.size());
        for (const auto& r : rows_) {
            text_ << "  " << std::left << std::setw(static_cast<int>(w)) << r.name << "  " << std::setw(12)
                  << r.status;
            if (!r.detail.empty())
                text_ << "  " << r.detail;
            text_ << "\n";
            if (!r.witness.empty())
                text_ << "      witness: " << r.witness << "\n";
        }
        rows_.clear();
    }

    std::string command_;
    bool json_;
    json results_ = json::array();
    std::vector<Row> rows_;
    std::ostringstream text_;
};

std::string join(const json& arr)
{
    std::string out;
    for (const auto& v : arr)
        out += (out.empty() ? "" : " ") + v.dump();
    return out;
}

std::string matrix_text(const json& rows)
{
    std::ostringstream os;
    for (const auto& r : rows)
        os << "    [" << join(r) << "]\n";
    return os.str();
}

int exit_for(bdcoh_status st)
{
    switch (st) {
    case BDCOH_FAMILY_NOT_VALIDATED:
    case BDCOH_SITUATION_NOT_VALIDATED:
    case BDCOH_LEMMA_VIOLATION:
    case BDCOH_NOT_EQUIVARIANT_INPUT:
        return 1;
    default:
        return 2;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bdcoh: group cohomology, connecting maps and BD structures"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    uint64_t limit = 0;
    app.add_option("--table-limit", limit, "cochain table cap (entries)");

    std::string group, module, algebra, ses, family = "-";
    size_t max_degree = 6, cutoff = 4;
    std::vector<size_t> degs;
    bool reps = false;
    int r_value = 0;
    bool pr = false;
    uint64_t p = 0;

    auto* coh = app.add_subcommand("cohomology", "invariant factors of H^n(G, A)");
    coh->add_option("--group", group, "group JSON (file, inline or -)")->required();
    coh->add_option("--module", module, "module JSON (file, inline or -)")->required();
    coh->add_option("--max-degree", max_degree, "top degree")->capture_default_str();
    coh->add_flag("--representatives", reps, "include basis representatives");

    auto* cup = app.add_subcommand("cup", "cup products of basis classes");
    cup->add_option("--group", group)->required();
    cup->add_option("--algebra", algebra)->required();
    cup->add_option("--deg", degs, "degrees m n")->expected(2)->required();

    auto* theta = app.add_subcommand("theta", "connecting map on basis classes");
    theta->add_option("--ses", ses, "sequence JSON")->required();
    theta->add_option("--group", group, "group, when the sequence has none");
    theta->add_option("--max-degree", max_degree)->capture_default_str();

    auto* sitstar = app.add_subcommand("verify-sitstar", "check a sequence");
    sitstar->add_option("--ses", ses)->required();
    sitstar->add_option("--group", group);

    size_t family_cutoff = 5;
    auto* sitss = app.add_subcommand("verify-sitstarstar", "check a family");
    sitss->add_option("--family", family, "family JSON (default stdin)")->capture_default_str();
    sitss->add_option("--cutoff", family_cutoff)->capture_default_str();

    auto* axioms = app.add_subcommand("bd-axioms", "BD axioms on KG (x) H*(G, A)");
    axioms->add_option("--family", family)->capture_default_str();
    axioms->add_option("--cutoff", cutoff, "total degree bound for triples")->capture_default_str();
    size_t pair_cutoff = 0;
    axioms->add_option("--pair-cutoff", pair_cutoff, "total degree bound for pairs (0: cutoff + 2)")
        ->capture_default_str();
    axioms->add_option("--r", r_value, "also run the generic P_r / BD_r checker with this r")
        ->each([&](const std::string&) { pr = true; });

    auto* table = app.add_subcommand("bd-table", "Delta on basis elements");
    table->add_option("--family", family)->capture_default_str();
    size_t table_degree = 4;
    table->add_option("--max-degree", table_degree)->capture_default_str();

    auto* bock = app.add_subcommand("bockstein", "Bockstein sequence 0 -> Z/p -> Z/p^2 -> Z/p -> 0");
    bock->add_option("--p", p)->required();
    bock->add_option("--group", group, "group (default C_p)");
    size_t bock_degree = 5;
    bock->add_option("--max-degree", bock_degree)->capture_default_str();

    auto* example = app.add_subcommand("example", "built-in families (prints the family JSON)");
    example->require_subcommand(1);
    example->add_subcommand("c3", "the C3 family");
    auto* ex_cp = example->add_subcommand("cp", "the C_p Bockstein family");
    ex_cp->add_option("--p", p)->required();

    for (auto* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "machine-readable output");
    for (auto* sub : example->get_subcommands({}))
        sub->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    auto* sub = app.get_subcommands().front();
    Output out(sub->get_name(), as_json);

    try {
        if (limit)
            check(bdcoh_set_table_limit(limit));

        if (sub == coh) {
            out.inputs = {{"group", group}, {"module", module}, {"max_degree", max_degree}};
            Group g = read_group(group);
            bdcoh_module* m = nullptr;
            check(bdcoh_module_from_json(g.get(), load(module, "module").c_str(), &m));
            Module mod(m);
            bdcoh_cohomology* c = nullptr;
            check(bdcoh_cohomology_build(mod.get(), max_degree, &c));
            Coh ctx(c);
            json degrees = json::array();
            for (size_t n = 0; n <= max_degree; ++n) {
                char* s = nullptr;
                check(bdcoh_cohomology_summary_json(ctx.get(), n, reps ? 1 : 0, &s));
                json d = take_json(s);
                out.text() << "H^" << n << "  order " << d["order"].get<std::string>() << "  factors ["
                           << join(d["invariant_factors"]) << "]\n";
                if (reps)
                    for (size_t t = 0; t < d["representatives"].size(); ++t)
                        out.text() << "    rep " << t << ": " << join(d["representatives"][t]) << "\n";
                degrees.push_back(d);
            }
            out.data["degrees"] = degrees;
        } else if (sub == cup) {
            out.inputs = {{"group", group}, {"algebra", algebra}, {"deg", degs}};
            Group g = read_group(group);
            bdcoh_module* m = nullptr;
            check(bdcoh_module_from_json(g.get(), load(algebra, "algebra").c_str(), &m));
            Module mod(m);
            bdcoh_cohomology* c = nullptr;
            check(bdcoh_cohomology_build(mod.get(), degs[0] + degs[1], &c));
            Coh ctx(c);
            char* s = nullptr;
            check(bdcoh_cup_table_json(ctx.get(), degs[0], degs[1], &s));
            json t = take_json(s);
            out.text() << "H^" << degs[0] << " x H^" << degs[1] << " -> H^" << degs[0] + degs[1] << " (factors ["
                       << join(t["factors"]) << "])\n";
            for (size_t i = 0; i < t["table"].size(); ++i)
                for (size_t j = 0; j < t["table"][i].size(); ++j)
                    out.text() << "  e" << i << " u f" << j << " = [" << join(t["table"][i][j]) << "]\n";
            out.data = t;
        } else if (sub == theta) {
            out.inputs = {{"ses", ses}, {"max_degree", max_degree}};
            Ses s = read_ses(ses, group);
            char* str = nullptr;
            check(bdcoh_ses_theta_json(s.get(), max_degree, &str));
            json t = take_json(str);
            for (const auto& d : t["degrees"])
                out.text() << "theta: H^" << d["degree"] << " -> H^" << d["degree"].get<size_t>() + 1 << "\n"
                           << matrix_text(d["matrix"]);
            out.data = t;
        } else if (sub == sitstar) {
            out.inputs = {{"ses", ses}};
            Ses s = read_ses(ses, group);
            bdcoh_report* r = nullptr;
            check(bdcoh_ses_validate(s.get(), &r));
            out.add_report(report_json(ReportH(r)));
        } else if (sub == sitss) {
            out.inputs = {{"family", family}, {"cutoff", family_cutoff}};
            Family f = read_family(family);
            bdcoh_report* r = nullptr;
            check(bdcoh_family_validate(f.get(), family_cutoff, &r));
            out.add_report(report_json(ReportH(r)));
        } else if (sub == axioms) {
            out.inputs = {{"family", family}, {"cutoff", cutoff}, {"pair_cutoff", pair_cutoff}};
            Family f = read_family(family);
            bdcoh_bd* b = nullptr;
            check(bdcoh_bd_create(f.get(), cutoff + 1, &b));
            BD bd(b);
            bdcoh_report* r = nullptr;
            check(bdcoh_bd_validation(bd.get(), &r));
            json validation = report_json(ReportH(r));
            bool valid = validation["passed"].get<bool>();
            if (!valid) {
                out.add_report(validation, "family: ");
                out.text() << "family fails validation; evaluating the identities anyway\n";
            }
            check(bdcoh_bd_verify_axioms_ex(bd.get(), cutoff, pair_cutoff, valid ? 0 : 1, &r));
            out.add_report(report_json(ReportH(r)));
            if (pr) {
                out.inputs["r"] = r_value;
                check(bdcoh_bd_verify_pr(bd.get(), cutoff, r_value, &r));
                out.add_report(report_json(ReportH(r)), "generic: ");
            }
        } else if (sub == table) {
            out.inputs = {{"family", family}, {"max_degree", table_degree}};
            Family f = read_family(family);
            bdcoh_bd* b = nullptr;
            check(bdcoh_bd_create(f.get(), table_degree + 1, &b));
            BD bd(b);
            char* s = nullptr;
            check(bdcoh_bd_delta_table_json(bd.get(), table_degree, &s));
            json t = take_json(s);
            for (const auto& row : t["rows"])
                out.text() << "Delta(" << row["g"].get<std::string>() << " (x) H^" << row["degree"] << "["
                           << row["index"] << "]) = " << row["g"].get<std::string>() << " (x) ["
                           << join(row["image"]) << "] in H^" << row["degree"].get<size_t>() + 1 << "\n";
            out.data = t;
        } else if (sub == bock) {
            out.inputs = {{"p", p}, {"group", group}, {"max_degree", bock_degree}};
            Group g;
            if (group.empty()) {
                bdcoh_group* gg = nullptr;
                check(bdcoh_group_cyclic(p, &gg));
                g.reset(gg);
            } else {
                g = read_group(group);
            }
            bdcoh_ses* s = nullptr;
            check(bdcoh_ses_bockstein(g.get(), p, &s));
            Ses sq(s);
            bdcoh_report* r = nullptr;
            check(bdcoh_ses_validate(sq.get(), &r));
            out.add_report(report_json(ReportH(r)));
            check(bdcoh_ses_identities(sq.get(), bock_degree, &r));
            out.add_report(report_json(ReportH(r)));
            char* str = nullptr;
            check(bdcoh_ses_theta_json(sq.get(), bock_degree, &str));
            json t = take_json(str);
            for (const auto& d : t["degrees"])
                out.text() << "beta: H^" << d["degree"] << " -> H^" << d["degree"].get<size_t>() + 1 << "\n"
                           << matrix_text(d["matrix"]);
            out.data = t;
        } else if (sub == example) {
            auto* which = sub->get_subcommands().front();
            bdcoh_family* f = nullptr;
            if (which->get_name() == "c3") {
                check(bdcoh_family_c3(&f));
            } else {
                out.inputs = {{"p", p}};
                check(bdcoh_family_cp(p, &f));
            }
            Family fam(f);
            out.inputs["example"] = which->get_name();
            char* s = nullptr;
            check(bdcoh_family_to_json(fam.get(), &s));
            json fj = take_json(s);
            bdcoh_report* r = nullptr;
            check(bdcoh_family_validate(fam.get(), 5, &r));
            json rep = report_json(ReportH(r));
            if (as_json) {
                out.add_report(rep);
                out.data["family"] = fj;
                return out.finish(start);
            }
            std::cout << fj.dump() << "\n";
            return rep["passed"].get<bool>() ? 0 : 1;
        }
    } catch (const Failure& f) {
        std::cerr << "bdcoh: " << bdcoh_status_name(f.status) << ": " << f.message << "\n";
        return exit_for(f.status);
    } catch (const json::exception& e) {
        std::cerr << "bdcoh: malformed output: " << e.what() << "\n";
        return 2;
    }
    return out.finish(start);
}

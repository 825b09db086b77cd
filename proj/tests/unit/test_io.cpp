#include "helpers.hpp"

#include "bdcoh/io.hpp"

using namespace bdtest;
using bdcoh::io::json;

TEST(Io, MalformedJson)
{
    EXPECT_BDCOH_ERROR(io::parse("{\"cyclic\": "), ErrorCode::MalformedInput);
}

TEST(Io, GroupForms)
{
    EXPECT_EQ(io::read_group(json{{"cyclic", 4}})->order(), 4u);
    json prod = {{"product", json::array({json{{"cyclic", 2}}, json{{"cyclic", 3}}})}};
    EXPECT_EQ(io::read_group(prod)->order(), 6u);
    json table = {{"mult", {{0, 1}, {1, 0}}}, {"labels", {"e", "t"}}};
    GroupPtr g = io::read_group(table);
    EXPECT_EQ(g->label(1), "t");
    EXPECT_BDCOH_ERROR(io::read_group(json{{"mult", {{0, 1}, {1, 1}}}}), ErrorCode::NoInverse);
    EXPECT_BDCOH_ERROR(io::read_group(json{{"cyclic", 0}}), ErrorCode::MalformedInput);
}

TEST(Io, GroupRoundTrip)
{
    GroupPtr g = FiniteGroup::cyclic(5);
    GroupPtr h = io::read_group(io::write_group(*g));
    EXPECT_EQ(h->table(), g->table());
    EXPECT_EQ(h->labels(), g->labels());
}

TEST(Io, ModuleDefaultsToTrivialAction)
{
    GroupPtr g = FiniteGroup::cyclic(3);
    ModulePtr m = io::read_module(json{{"moduli", {3}}}, g);
    EXPECT_TRUE(m->is_trivial());
    AlgebraPtr a = io::read_algebra(json{{"moduli", {3}}, {"mult", {{{1}}}}, {"unit", {1}}}, g);
    EXPECT_EQ(a->mul({2}, {2}), Element{1});
}

TEST(Io, ModuleWithAction)
{
    GroupPtr g = FiniteGroup::cyclic(2);
    ModulePtr m = io::read_module(json{{"moduli", {4}}, {"action", {{"x", {{-1}}}}}}, g);
    EXPECT_EQ(m->act(1, {1}), Element{3});
    EXPECT_BDCOH_ERROR(io::read_module(json{{"moduli", {4}}, {"action", {{"y", {{-1}}}}}}, g),
                       ErrorCode::UnknownElement);
}

TEST(Io, ElementKeys)
{
    GroupPtr g = FiniteGroup::cyclic(3);
    EXPECT_EQ(io::read_element_key("x^2", *g), 2u);
    EXPECT_EQ(io::read_element_key("1", *g), 0u); // label wins over index
    EXPECT_EQ(io::read_element_key("2", *g), 2u);
    EXPECT_BDCOH_ERROR(io::read_element_key("7", *g), ErrorCode::UnknownElement);
}

TEST(Io, FamilyRoundTrip)
{
    ThetaFamily f = build_c3_family();
    json j = io::write_family(f);
    ThetaFamily g = io::read_family(io::parse(j.dump()));
    EXPECT_EQ(io::write_family(g), j);
    EXPECT_TRUE(validate_situation_starstar(g).passed());
}

TEST(Io, FamilyMissingMember)
{
    json j = io::write_family(build_c3_family());
    j["members"].erase("1");
    EXPECT_BDCOH_ERROR(io::read_family(j), ErrorCode::MalformedInput);
}

TEST(Io, SesRoundTrip)
{
    ShortExactSequence ses = c3_ses(6, 2);
    json j = io::write_ses(ses);
    j["group"] = io::write_group(*ses.A->group());
    ShortExactSequence back = io::read_ses(j);
    EXPECT_EQ(back.iota, ses.iota);
    EXPECT_EQ(back.s, ses.s);
    EXPECT_EQ(back.r.apply({3}), Element{2});
}

TEST(Io, ReportShape)
{
    Report r;
    r.title = "t";
    r.add("a", true);
    r.add("b", false, "w");
    r.info("c", false, "w2");
    json j = io::write_report(r);
    EXPECT_FALSE(j["passed"].get<bool>());
    ASSERT_EQ(j["checks"].size(), 3u);
    EXPECT_EQ(j["checks"][1]["witness"], "w");
    json res = io::report_results(r);
    EXPECT_EQ(res[0]["status"], "pass");
    EXPECT_EQ(res[1]["status"], "fail");
    EXPECT_EQ(res[2]["status"], "info");
}

TEST(Io, InstanceRoundTrip)
{
    auto bd = BDAlgebra::create(build_c3_family(), 4);
    GradedAlgebraInstance inst = export_instance(*bd, 2, 0);
    json j = io::write_instance(inst);
    GradedAlgebraInstance back = io::read_instance(io::parse(j.dump()));
    EXPECT_EQ(io::write_instance(back), j);
    EXPECT_EQ(verify_pr_axioms(back).passed(), verify_pr_axioms(inst).passed());
}

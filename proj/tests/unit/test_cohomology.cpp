#include "helpers.hpp"

using namespace bdtest;

namespace {

uint64_t order(const ContextPtr& ctx, size_t n)
{
    uint64_t o = 1;
    for (uint64_t f : ctx->invariant_factors(n))
        o *= f;
    return o;
}

} // namespace

TEST(Cohomology, C3F3HasOrderThreeInDegreesZeroToSix)
{
    auto ctx = CohomologyContext::build(trivial_module(FiniteGroup::cyclic(3), 3), 6);
    for (size_t n = 0; n <= 6; ++n)
        EXPECT_EQ(order(ctx, n), 3u) << "degree " << n;
}

TEST(Cohomology, C3F3AgreesWithEliminationOracle)
{
    auto ctx = CohomologyContext::build(trivial_module(FiniteGroup::cyclic(3), 3), 5);
    oracle::Group G = oracle::Group::cyclic(3);
    oracle::Module M = oracle::Module::trivial(G, 3);
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(order(ctx, n), static_cast<uint64_t>(oracle::ipow(3, oracle::cohomology_log_order(G, M, n, 3, 1))));
}

TEST(Cohomology, TrivialGroup)
{
    auto ctx = CohomologyContext::build(trivial_module(FiniteGroup::cyclic(1), 5, 2), 4);
    EXPECT_EQ(ctx->invariant_factors(0), (std::vector<uint64_t>{5, 5}));
    for (size_t n = 1; n <= 4; ++n)
        EXPECT_EQ(ctx->rank(n), 0u);
}

TEST(Cohomology, C3WithF2CoefficientsVanishes)
{
    auto ctx = CohomologyContext::build(trivial_module(FiniteGroup::cyclic(3), 2), 4);
    oracle::Group G = oracle::Group::cyclic(3);
    oracle::Module M = oracle::Module::trivial(G, 2);
    EXPECT_EQ(order(ctx, 0), 2u);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(order(ctx, n), 1u);
        EXPECT_EQ(oracle::cohomology_log_order(G, M, n, 2, 1), 0);
    }
}

TEST(Cohomology, ZModPSquaredAgainstOracle)
{
    // C3 on Z/9, C4 on Z/4, C2 x C2 on F2, all trivial
    struct Case {
        GroupPtr G;
        oracle::Group og;
        uint64_t p;
        int K;
        int max_n;
    };
    oracle::Group klein;
    klein.n = 4;
    klein.mul.assign(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            klein.mul[i][j] = i ^ j;
    GroupPtr klein_lib = validate_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0);
    std::vector<Case> cases = {{FiniteGroup::cyclic(3), oracle::Group::cyclic(3), 3, 2, 4},
                               {FiniteGroup::cyclic(4), oracle::Group::cyclic(4), 2, 2, 4},
                               {klein_lib, klein, 2, 1, 4}};
    for (const auto& c : cases) {
        uint64_t N = static_cast<uint64_t>(oracle::ipow(static_cast<int64_t>(c.p), c.K));
        auto ctx = CohomologyContext::build(trivial_module(c.G, N), c.max_n);
        oracle::Module M = oracle::Module::trivial(c.og, static_cast<int64_t>(N));
        for (int n = 0; n <= c.max_n; ++n)
            EXPECT_EQ(order(ctx, n),
                      static_cast<uint64_t>(oracle::ipow(c.p, oracle::cohomology_log_order(c.og, M, n, c.p, c.K))))
                << "|G|=" << c.G->order() << " N=" << N << " n=" << n;
    }
}

TEST(Cohomology, SignActionOnZ4AgainstOracle)
{
    GroupPtr G = FiniteGroup::cyclic(2);
    Carrier c({4});
    auto M = std::make_shared<GModule>(G, c, std::vector<AdditiveMap>{AdditiveMap::identity(c), AdditiveMap(c, c, {{-1}})});
    auto ctx = CohomologyContext::build(M, 5);
    oracle::Group og = oracle::Group::cyclic(2);
    oracle::Module om;
    om.N = 4;
    om.act = {{{1}}, {{-1}}};
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(order(ctx, n), static_cast<uint64_t>(oracle::ipow(2, oracle::cohomology_log_order(og, om, n, 2, 2))))
            << n;
}

TEST(Cohomology, S3WithF3AgainstOracle)
{
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int64_t>> t(6, std::vector<int64_t>(6));
    oracle::Group og;
    og.n = 6;
    og.mul.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> comp(3);
            for (int k = 0; k < 3; ++k)
                comp[k] = perms[a][perms[b][k]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == comp)
                    t[a][b] = og.mul[a][b] = k;
        }
    GroupPtr G = validate_group(t, 0);
    auto ctx = CohomologyContext::build(trivial_module(G, 3), 3);
    oracle::Module om = oracle::Module::trivial(og, 3);
    for (int n = 0; n <= 3; ++n)
        EXPECT_EQ(order(ctx, n), static_cast<uint64_t>(oracle::ipow(3, oracle::cohomology_log_order(og, om, n, 3, 1))))
            << n;
}

TEST(Cohomology, ClassOfCanonicalCocycleGeneratesH1)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    auto ctx = CohomologyContext::build(M, 3);
    CohomologyClass c = ctx->class_of(canonical_one_cochain(M));
    EXPECT_FALSE(c.is_zero());
    EXPECT_TRUE(ctx->class_of(canonical_one_cochain(M).scaled(3)).is_zero());
}

TEST(Cohomology, BasisRepresentativesAreCocycles)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 9);
    auto ctx = CohomologyContext::build(M, 4);
    for (size_t n = 0; n <= 4; ++n)
        for (size_t t = 0; t < ctx->rank(n); ++t) {
            const Cochain& rep = ctx->basis_representative(n, t);
            EXPECT_TRUE(is_cocycle(rep));
            std::vector<uint64_t> e(ctx->rank(n), 0);
            e[t] = 1;
            EXPECT_EQ(ctx->coordinates_of(rep), e);
        }
}

TEST(Cohomology, CoboundaryPerturbationKeepsTheClass)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    auto ctx = CohomologyContext::build(M, 3);
    std::mt19937_64 rng(3);
    Cochain carry = from_oracle(M, 2, oracle::carry_cocycle(3));
    for (int i = 0; i < 10; ++i) {
        Cochain shifted = carry + coboundary(Cochain::random(M, 1, rng));
        EXPECT_TRUE(ctx->is_cohomologous(carry, shifted));
    }
    EXPECT_FALSE(oracle::is_coboundary_mod_p(oracle::Group::cyclic(3), oracle::Module::trivial(oracle::Group::cyclic(3), 3),
                                             oracle::carry_cocycle(3), 2));
    EXPECT_FALSE(ctx->class_of(carry).is_zero());
}

TEST(Cohomology, NonCocycleIsRejected)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    auto ctx = CohomologyContext::build(M, 3);
    Cochain bad(M, 1);
    bad.set(0, {1});
    EXPECT_BDCOH_ERROR(ctx->class_of(bad), ErrorCode::NotACocycle);
}

TEST(Cohomology, ForeignGroupIsRejected)
{
    auto ctx = CohomologyContext::build(trivial_module(FiniteGroup::cyclic(3), 3), 2);
    ModulePtr other = trivial_module(FiniteGroup::cyclic(2), 3);
    EXPECT_BDCOH_ERROR(ctx->class_of(Cochain(other, 1)), ErrorCode::GroupMismatch);
}

TEST(Cohomology, SummaryOrders)
{
    auto ctx = CohomologyContext::build(trivial_module(FiniteGroup::cyclic(3), 3), 3);
    DegreeSummary s = ctx->summary(2);
    EXPECT_EQ(s.cochains.value(), std::optional<uint64_t>(19683));
    EXPECT_EQ(s.cohomology.value(), std::optional<uint64_t>(3));
    GroupOrder z = s.cocycles;
    z /= s.coboundaries;
    EXPECT_EQ(z, s.cohomology);
}

TEST(Cohomology, DegreeOverflowOnBuild)
{
    uint64_t old = table_limit();
    set_table_limit(1000);
    EXPECT_BDCOH_ERROR(CohomologyContext::build(trivial_module(FiniteGroup::cyclic(3), 3), 8), ErrorCode::DegreeOverflow);
    set_table_limit(old);
}

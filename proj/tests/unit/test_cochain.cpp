#include "helpers.hpp"

using namespace bdtest;

namespace {

// C2 acting on Z/4 by negation, in both representations
struct SignModule {
    GroupPtr G = FiniteGroup::cyclic(2);
    ModulePtr M;
    oracle::Group og = oracle::Group::cyclic(2);
    oracle::Module om;

    SignModule()
    {
        Carrier c({4});
        M = std::make_shared<GModule>(G, c, std::vector<AdditiveMap>{AdditiveMap::identity(c), AdditiveMap(c, c, {{-1}})});
        om.N = 4;
        om.d = 1;
        om.act = {{{1}}, {{-1}}};
    }
};

} // namespace

TEST(Coboundary, ZeroCochainGoesToZero)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    for (size_t n = 0; n < 4; ++n)
        EXPECT_TRUE(coboundary(Cochain(M, n)).is_zero());
}

TEST(Coboundary, ConstantUnderTrivialActionIsClosed)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    EXPECT_TRUE(coboundary(Cochain::constant(M, {2})).is_zero());
}

TEST(Coboundary, CanonicalOneCochainIsACocycle)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    EXPECT_TRUE(is_cocycle(canonical_one_cochain(M)));
}

TEST(Coboundary, OneCocyclesOfC3F3AreTheAdditiveMaps)
{
    // oracle: enumerate all 27 one-cochains
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    int cocycles = 0;
    for (uint64_t a = 0; a < 3; ++a)
        for (uint64_t b = 0; b < 3; ++b)
            for (uint64_t c = 0; c < 3; ++c) {
                Cochain phi(M, 1);
                phi.set(0, {a});
                phi.set(1, {b});
                phi.set(2, {c});
                bool additive = a == 0 && c == (2 * b) % 3;
                EXPECT_EQ(is_cocycle(phi), additive) << a << b << c;
                cocycles += is_cocycle(phi);
            }
    EXPECT_EQ(cocycles, 3);
    EXPECT_EQ(oracle::brute_force_cocycle_count(oracle::Group::cyclic(3), oracle::Module::trivial(oracle::Group::cyclic(3), 3), 1), 3);
}

TEST(Coboundary, MatchesOracleWithNontrivialAction)
{
    SignModule s;
    std::mt19937_64 rng(11);
    for (size_t n = 0; n < 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            Cochain phi = Cochain::random(s.M, n, rng);
            EXPECT_EQ(to_oracle(coboundary(phi)), oracle::coboundary(s.og, s.om, to_oracle(phi), static_cast<int>(n)));
        }
}

TEST(Coboundary, DegreeZeroIsGMinusOne)
{
    SignModule s;
    Cochain a = Cochain::constant(s.M, {1});
    Cochain d = coboundary(a);
    EXPECT_EQ(d.at(0), Element{0});
    EXPECT_EQ(d.at(1), Element{2}); // -1 - 1
}

TEST(Cochain, TableLimitIsEnforced)
{
    uint64_t old = table_limit();
    set_table_limit(100);
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    EXPECT_BDCOH_ERROR(Cochain(M, 5), ErrorCode::DegreeOverflow);
    set_table_limit(old);
    EXPECT_NO_THROW(Cochain(M, 5));
}

TEST(Cochain, ArithmeticAndMismatch)
{
    ModulePtr M = trivial_module(FiniteGroup::cyclic(3), 3);
    Cochain psi = canonical_one_cochain(M);
    EXPECT_TRUE((psi - psi).is_zero());
    EXPECT_EQ(psi + psi, psi.scaled(2));
    EXPECT_EQ(-psi, psi.scaled(2));
    EXPECT_THROW(psi + Cochain(M, 2), Error);
}

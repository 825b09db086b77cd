#include "helpers.hpp"

#include "bdcoh/zn.hpp"

using namespace bdtest;
using bdcoh::zn::Vec;

TEST(Zn, InverseAndPrimes)
{
    EXPECT_EQ(*zn::inverse(2, 9), 5u);
    EXPECT_FALSE(zn::inverse(3, 9).has_value());
    EXPECT_TRUE(zn::is_prime(5));
    EXPECT_FALSE(zn::is_prime(9));
    EXPECT_FALSE(zn::is_prime(1));
}

TEST(Zn, HowellMembershipOverZ9)
{
    // span of (3) in Z/9 is {0,3,6}
    zn::HowellForm h(9, 1, {{3}});
    EXPECT_TRUE(h.contains({6}));
    EXPECT_FALSE(h.contains({1}));
}

TEST(Zn, HowellPropertyNeedsExtraRow)
{
    // over Z/4 the span of (2, 1) contains (0, 2) = 2*(2,1)
    zn::HowellForm h(4, 2, {{2, 1}});
    EXPECT_TRUE(h.contains({0, 2}));
    EXPECT_FALSE(h.contains({0, 1}));
}

TEST(Zn, SpanOrderMatchesOracle)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
        oracle::Mat m(rows, oracle::Vec(cols));
        std::vector<Vec> zm(rows, Vec(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                zm[i][j] = static_cast<uint64_t>(m[i][j] = static_cast<int64_t>(rng() % 27));
        zn::HowellForm h(27, cols, zm);
        uint64_t order = 1;
        for (uint64_t o : h.row_orders())
            order *= o;
        EXPECT_EQ(order, static_cast<uint64_t>(oracle::ipow(3, oracle::span_log_order(m, 3, 3))));
    }
}

TEST(Zn, LeftSolver)
{
    std::vector<Vec> m = {{1, 3}, {0, 3}};
    zn::LeftSolver s(m, 2, 9);
    auto x = s.solve({2, 3});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(((*x)[0] * 1) % 9, 2u);
    EXPECT_EQ(((*x)[0] * 3 + (*x)[1] * 3) % 9, 3u);
    EXPECT_FALSE(s.solve({0, 1}).has_value());
}

TEST(Zn, SmithQuotientOfZ9ByThree)
{
    auto q = zn::smith_quotient({{3}}, 1, 9);
    std::vector<uint64_t> nontrivial;
    for (uint64_t f : q.factors)
        if (f != 1)
            nontrivial.push_back(f);
    EXPECT_EQ(nontrivial, std::vector<uint64_t>{3});
}

#include "helpers.hpp"

#include "bdcoh/group.hpp"

using namespace bdtest;

TEST(Group, TrivialGroupIsValidAndAbelian)
{
    GroupPtr g = validate_group({{0}});
    EXPECT_EQ(g->order(), 1u);
    EXPECT_TRUE(g->is_abelian());
    EXPECT_EQ(g->inv(0), 0u);
}

TEST(Group, C3TableIsValidAndAbelian)
{
    GroupPtr g = validate_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    EXPECT_EQ(g->order(), 3u);
    EXPECT_TRUE(g->is_abelian());
    EXPECT_EQ(g->identity(), 0u);
    EXPECT_EQ(g->inv(1), 2u);
    EXPECT_EQ(g->mul(2, 2), 1u);
}

TEST(Group, IdentityIsSearchedWhenNotGiven)
{
    // identity at index 2
    GroupPtr g = validate_group({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    EXPECT_EQ(g->identity(), 2u);
}

TEST(Group, CorruptedZ4TableIsRejectedWithWitness)
{
    std::vector<std::vector<int64_t>> t(4, std::vector<int64_t>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t[i][j] = (i + j) % 4;
    t[2][3] = 3; // 2 + 3 should be 1
    try {
        validate_group(t, 0);
        FAIL() << "corrupted table accepted";
    } catch (const Error& e) {
        EXPECT_TRUE(e.code() == ErrorCode::NonAssociative || e.code() == ErrorCode::NoInverse ||
                    e.code() == ErrorCode::MalformedInput)
            << error_code_name(e.code());
        EXPECT_NE(std::string(e.what()).find_first_of("0123"), std::string::npos);
    }
}

TEST(Group, EveryCorruptionOfZ4IsCaught)
{
    // oracle: the validator on the uncorrupted table, then each single change
    std::vector<std::vector<int64_t>> t(4, std::vector<int64_t>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t[i][j] = (i + j) % 4;
    ASSERT_NO_THROW(validate_group(t, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int v = 0; v < 4; ++v) {
                if (v == t[i][j])
                    continue;
                auto bad = t;
                bad[i][j] = v;
                EXPECT_THROW(validate_group(bad, 0), Error) << i << "," << j << "->" << v;
            }
}

TEST(Group, MissingIdentity)
{
    EXPECT_BDCOH_ERROR(validate_group({{1, 1}, {1, 1}}), ErrorCode::NoIdentity);
}

TEST(Group, NonSquareTableIsMalformed)
{
    EXPECT_BDCOH_ERROR(validate_group({{0, 1}, {1}}), ErrorCode::MalformedInput);
    EXPECT_BDCOH_ERROR(validate_group({{0, 5}, {5, 0}}), ErrorCode::MalformedInput);
}

TEST(Group, NonAbelianS3)
{
    // S3 as permutations of {0,1,2}
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<int64_t>> t(6, std::vector<int64_t>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int k = 0; k < 3; ++k)
                c[k] = perms[a][perms[b][k]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == c)
                    t[a][b] = k;
        }
    GroupPtr g = validate_group(t);
    EXPECT_FALSE(g->is_abelian());
    for (Elt a = 0; a < 6; ++a)
        EXPECT_EQ(g->mul(a, g->inv(a)), g->identity());
}

TEST(Group, DirectProductOfCyclics)
{
    GroupPtr g = FiniteGroup::direct_product(*FiniteGroup::cyclic(2), *FiniteGroup::cyclic(3));
    EXPECT_EQ(g->order(), 6u);
    EXPECT_TRUE(g->is_abelian());
}

TEST(TupleIndex, EmptyTupleEncodesToZero)
{
    TupleIndex idx(3, 0);
    EXPECT_EQ(idx.size(), 1u);
    EXPECT_EQ(idx.encode(std::vector<Elt>{}), 0u);
}

TEST(TupleIndex, MixedRadix)
{
    TupleIndex idx(3, 2);
    std::vector<Elt> t = {1, 2};
    EXPECT_EQ(idx.encode(t), 5u);
    EXPECT_EQ(idx.decode(5), t);
}

TEST(TupleIndex, RoundTrip)
{
    TupleIndex idx(4, 3);
    for (uint64_t i = 0; i < idx.size(); ++i)
        EXPECT_EQ(idx.encode(idx.decode(i)), i);
}

TEST(TupleIndex, OutOfRangeEntry)
{
    TupleIndex idx(3, 2);
    std::vector<Elt> t = {1, 3};
    EXPECT_BDCOH_ERROR(idx.encode(t), ErrorCode::IndexOutOfRange);
}

TEST(TupleIndex, CheckedPowerOverflow)
{
    EXPECT_EQ(checked_power(3, 4, 1000), 81u);
    EXPECT_BDCOH_ERROR(checked_power(3, 40, 1000000), ErrorCode::DegreeOverflow);
}

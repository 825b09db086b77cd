#include "bdcoh/examples.hpp"

#include "bdcoh/error.hpp"

namespace bdcoh {

namespace {

std::vector<Element> lift_table(uint64_t p)
{
    std::vector<Element> s;
    for (uint64_t a = 0; a < p; ++a)
        s.push_back({a});
    return s;
}

// member with iota(a) = c a and r(p) = v
FamilyMember member(const AlgebraPtr& A, const AlgebraPtr& B, const AdditiveMap& pi, uint64_t c, uint64_t v)
{
    AdditiveMap iota(A->carrier(), B->carrier(), {{static_cast<int64_t>(c)}});
    uint64_t p = A->carrier().modulus(0);
    return {std::move(iota), retraction_on_kernel(pi, A->carrier(), {{p}}, {{v}})};
}

} // namespace

ThetaFamily build_c3_family()
{
    GroupPtr G = FiniteGroup::cyclic(3);
    auto A = std::make_shared<GAlgebra>(GAlgebra::cyclic_ring(G, 3));
    auto B = std::make_shared<GAlgebra>(GAlgebra::cyclic_ring(G, 9));
    AdditiveMap pi(B->carrier(), A->carrier(), {{1}});
    std::vector<std::optional<FamilyMember>> members(3);
    members[1] = member(A, B, pi, 3, 1); // x
    members[2] = member(A, B, pi, 6, 2); // x^2: -3a, r(-3) = 1
    return make_family(A, B, pi, lift_table(3), std::move(members));
}

ThetaFamily build_cp_bockstein_family(uint64_t p)
{
    if (!zn::is_prime(p))
        fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    GroupPtr G = FiniteGroup::cyclic(p);
    auto A = std::make_shared<GAlgebra>(GAlgebra::cyclic_ring(G, p));
    auto B = std::make_shared<GAlgebra>(GAlgebra::cyclic_ring(G, p * p));
    AdditiveMap pi(B->carrier(), A->carrier(), {{1}});
    std::vector<std::optional<FamilyMember>> members(p);
    for (uint64_t j = 1; j < p; ++j)
        members[j] = member(A, B, pi, *zn::inverse(j, p) * p, j);
    return make_family(A, B, pi, lift_table(p), std::move(members));
}

std::vector<DeltaRow> report_delta_table(const ThetaFamily& family, size_t max_degree)
{
    auto bd = BDAlgebra::create(family, max_degree + 1);
    return report_delta_table(*bd, max_degree);
}

} // namespace bdcoh

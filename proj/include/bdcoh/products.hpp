#pragma once

#include "bdcoh/cochain.hpp"
#include "bdcoh/cohomology.hpp"
#include "bdcoh/modules.hpp"

#include <vector>

namespace bdcoh {

/// Bilinear map mu: A x B -> C given on generators, table[i][j] = mu(e_i, f_j).
class Pairing {
public:
    // Throws PairingNotBilinear when an entry is not killed by both generator
    // orders, or (if check_equivariance) when g mu(e_i, f_j) != mu(g e_i, g f_j).
    // GroupMismatch when the three modules are over different groups.
    Pairing(ModulePtr left, ModulePtr right, ModulePtr out, std::vector<std::vector<Element>> table,
            bool check_equivariance = true);

    // The multiplication of an algebra, A x A -> A.
    static Pairing from_algebra(const AlgebraPtr& algebra);

    const ModulePtr& left() const { return left_; }
    const ModulePtr& right() const { return right_; }
    const ModulePtr& out() const { return out_; }
    Element apply(const Element& a, const Element& b) const;

private:
    ModulePtr left_, right_, out_;
    std::vector<std::vector<Element>> table_;
};

// (phi u psi)(g1..g_{m+n}) = mu(phi(g1..gm), (g1...gm) psi(g_{m+1}..g_{m+n}))
Cochain cup_cochain(const Cochain& phi, const Cochain& psi, const Pairing& mu);
// Uses the multiplication of phi's coefficient algebra (phi and psi over the same algebra).
Cochain cup_cochain(const Cochain& phi, const Cochain& psi);

// Class of the cup of representatives; the context module must be a GAlgebra.
CohomologyClass cup_class(const CohomologyClass& a, const CohomologyClass& b);

AlgebraPtr algebra_of(const ContextPtr& ctx);

} // namespace bdcoh

#pragma once

// Built-in families over cyclic groups.

#include "bdcoh/bd.hpp"

namespace bdcoh {

// C3 acting trivially on A = Z/3 and B = Z/9, pi = reduction, s the lift
// {0,1,2}; iota_x(a) = 3a with r_x(3) = 1, iota_{x^2}(a) = -3a with
// r_{x^2}(3) = -1, zero member at 1.
ThetaFamily build_c3_family();

// C_p acting trivially on Z/p and Z/p^2. The member at x^j (j != 0) has
// iota(a) = j^{-1} p a and r(p) = j, so r_{x^j} = j r_x; zero member at 1.
// Throws NotPrime.
ThetaFamily build_cp_bockstein_family(uint64_t p);

// Validates the family and tabulates Delta on basis elements of degree <=
// max_degree. Throws FamilyNotValidated.
std::vector<DeltaRow> report_delta_table(const ThetaFamily& family, size_t max_degree);

} // namespace bdcoh

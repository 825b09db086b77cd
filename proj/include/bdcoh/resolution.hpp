#pragma once

// A free (Z/N)G-resolution P of the trivial module Z/N together with
// comparison maps to and from the bar resolution.
//
// Elements of P_n are coefficient vectors of length rank(n)*|G|, entry
// j*|G| + g being the coefficient of g.e_j. Bar cells are inhomogeneous
// tuples [g1|...|gn] indexed as in TupleIndex.

#include "bdcoh/group.hpp"
#include "bdcoh/zn.hpp"

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace bdcoh {

class FreeResolution {
public:
    FreeResolution(GroupPtr group, uint64_t modulus);

    const GroupPtr& group() const { return group_; }
    uint64_t modulus() const { return n_; }

    // Makes d_1..d_degree available.
    void extend_to(size_t degree);
    size_t built_degree() const { return ranks_.size() - 1; }

    size_t rank(size_t n) const { return ranks_.at(n); }
    // d(e_j) for e_j a generator of P_n, n >= 1.
    const zn::Vec& boundary(size_t n, size_t j) const { return boundary_.at(n).at(j); }

    // g.x for x in P_n.
    zn::Vec act(Elt g, const zn::Vec& x, size_t n) const;
    // d(x) for x in P_n, n >= 1.
    zn::Vec apply_boundary(const zn::Vec& x, size_t n) const;

    // Chain map P -> bar: Phi_n(e_j) as (cell index, coefficient) pairs.
    const std::vector<std::pair<uint64_t, uint64_t>>& to_bar(size_t n, size_t j);

    // Chain map bar -> P: Psi_n([g1|..|gn]) in P_n.
    void build_from_bar(size_t n);
    bool has_from_bar(size_t n) const { return n < psi_.size(); }
    std::span<const uint32_t> from_bar(size_t n, uint64_t cell) const;

private:
    std::vector<zn::Vec> boundary_rows(size_t n) const;
    std::vector<zn::Vec> choose_generators(const std::vector<zn::Vec>& kernel, size_t n) const;

    GroupPtr group_;
    uint64_t n_;
    bool local_ = false;
    uint64_t prime_ = 0;
    std::vector<size_t> ranks_;
    std::vector<std::vector<zn::Vec>> boundary_;
    std::vector<std::vector<std::vector<std::pair<uint64_t, uint64_t>>>> phi_;
    std::vector<std::vector<uint32_t>> psi_;
};

} // namespace bdcoh

#pragma once

// H^n(G, A) for a finite group G and a finite G-module A.
//
// Classes are computed on a small free resolution of Z/N (N the exponent of
// A) and transported to and from bar cochains with comparison maps, so the
// inputs and outputs are ordinary bar cochains while the linear algebra stays
// small. Representatives of basis classes are bar cocycles.

#include "bdcoh/cochain.hpp"
#include "bdcoh/modules.hpp"
#include "bdcoh/resolution.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace bdcoh {

class CohomologyContext;
using ContextPtr = std::shared_ptr<const CohomologyContext>;

class CohomologyClass {
public:
    CohomologyClass(ContextPtr ctx, size_t degree, std::vector<uint64_t> coords,
                    std::shared_ptr<const Cochain> representative = nullptr);

    const ContextPtr& context() const { return ctx_; }
    size_t degree() const { return degree_; }
    // Coordinates with respect to the basis classes, reduced mod the invariant factors.
    const std::vector<uint64_t>& coordinates() const { return coords_; }
    bool is_zero() const;

    // The cochain this class was made from, or the canonical combination of
    // basis representatives.
    Cochain representative() const;

    CohomologyClass operator+(const CohomologyClass& o) const;
    CohomologyClass operator-(const CohomologyClass& o) const;
    CohomologyClass operator-() const;
    CohomologyClass scaled(uint64_t c) const;
    // Same context, same degree, same coordinates. Throws ContextMismatch for
    // classes of different contexts.
    bool operator==(const CohomologyClass& o) const;

private:
    ContextPtr ctx_;
    size_t degree_;
    std::vector<uint64_t> coords_;
    std::shared_ptr<const Cochain> rep_;
};

struct DegreeSummary {
    size_t degree = 0;
    std::vector<uint64_t> invariant_factors; // H^n = sum Z/f
    GroupOrder cochains, cocycles, coboundaries, cohomology;
};

class CohomologyContext : public std::enable_shared_from_this<CohomologyContext> {
public:
    // Prepares H^0..H^max_degree. Later degrees are computed on demand, within
    // the table limit. Throws DegreeOverflow when |G|^(max_degree+1) * dim A is
    // over the table limit.
    static ContextPtr build(ModulePtr module, size_t max_degree);

    const ModulePtr& module() const { return module_; }
    const GroupPtr& group() const { return module_->group(); }
    size_t max_degree() const { return max_degree_; }

    const std::vector<uint64_t>& invariant_factors(size_t n) const;
    size_t rank(size_t n) const { return invariant_factors(n).size(); }
    DegreeSummary summary(size_t n) const;

    const Cochain& basis_representative(size_t n, size_t t) const;
    CohomologyClass basis_class(size_t n, size_t t) const;
    CohomologyClass zero_class(size_t n) const;
    CohomologyClass from_coordinates(size_t n, std::vector<uint64_t> coords) const;
    // Class of the unit 0-cochain; the module must be the underlying module of a GAlgebra.
    CohomologyClass unit_class(const Element& unit) const;

    // Throws NotACocycle, GroupMismatch.
    CohomologyClass class_of(const Cochain& phi) const;
    std::vector<uint64_t> coordinates_of(const Cochain& cocycle) const;
    bool is_cohomologous(const Cochain& a, const Cochain& b) const;
    bool classes_equal(const CohomologyClass& a, const CohomologyClass& b) const;

    Cochain combine(size_t n, const std::vector<uint64_t>& coords) const;

    bool accepts(const Cochain& phi) const;

private:
    struct Degree;
    explicit CohomologyContext(ModulePtr module, size_t max_degree);
    const Degree& degree(size_t n) const;
    const Degree& degree_locked(size_t n) const;
    void build_representatives(const Degree& deg) const;
    std::vector<uint64_t> pullback_coordinates(const Degree& deg, const Cochain& phi) const;
    AdditiveMap cochain_differential(size_t n) const;

    ModulePtr module_;
    size_t max_degree_;
    uint64_t modulus_;
    mutable std::recursive_mutex mutex_;
    mutable FreeResolution resolution_;
    mutable std::vector<std::unique_ptr<Degree>> degrees_;
};

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

} // namespace bdcoh

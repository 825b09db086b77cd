#pragma once

// Families of sequences indexed by group elements, the operators theta_x they
// induce on H*(G, A), and the product, bracket and operator on KG (x) H*(G, A)
//
//   (x (x) a)(y (x) b)   = xy (x) a u b
//   [x (x) a, y (x) b]   = xy (x) ((-1)^|a| theta_y(a) u b + a u theta_x(b))
//   Delta(x (x) a)       = x (x) theta_x(a)
//
// together with a generic checker for P_r / BD_r axioms on finite tables.

#include "bdcoh/cohomology.hpp"
#include "bdcoh/connecting.hpp"
#include "bdcoh/report.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace bdcoh {

struct FamilyMember {
    AdditiveMap iota;
    SubgroupMap r;
};

struct ThetaFamily {
    GroupPtr group;
    AlgebraPtr A;
    AlgebraPtr B;
    AdditiveMap pi;
    std::vector<Element> s;
    // one entry per group element; nullopt marks the zero retraction
    std::vector<std::optional<FamilyMember>> members;

    uint64_t prime() const { return A->carrier().modulus(0); }
    bool is_zero_member(Elt x) const { return !members.at(x).has_value(); }
    ShortExactSequence member_ses(Elt x) const;
    // r_x as a map on Ker pi (zero for a zero member).
    SubgroupMap retraction(Elt x) const;
};

// Structural checks: A is over a prime field, one member per group element,
// all carriers consistent. Throws MalformedInput / NotPrime.
ThetaFamily make_family(AlgebraPtr A, AlgebraPtr B, AdditiveMap pi, std::vector<Element> s,
                        std::vector<std::optional<FamilyMember>> members);

/// theta_x on H^n as matrices over F_p, computed on demand.
class ThetaOperators {
public:
    ThetaOperators(const ThetaFamily& family, ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    // rows indexed by basis classes of H^n, entries coordinates in H^(n+1)
    const std::vector<std::vector<uint64_t>>& matrix(Elt x, size_t n) const;
    std::vector<uint64_t> apply(Elt x, size_t n, const std::vector<uint64_t>& coords) const;

private:
    const ThetaFamily* family_;
    ContextPtr ctx_;
    std::vector<std::optional<ShortExactSequence>> ses_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Elt, size_t>, std::vector<std::vector<uint64_t>>> cache_;
};

// Situation-star on every member, the pairwise extension condition for all
// (y, z), then theta_{xy} = theta_x + theta_y on basis classes of degree <=
// cutoff and theta_x theta_y = 0 on degree <= cutoff - 1.
Report validate_situation_starstar(const ThetaFamily& family, size_t cutoff = 5);

class BDAlgebra;

/// Element of KG (x) H*(G, A): coordinates per (group element, degree).
class BDElement {
public:
    using Key = std::pair<Elt, size_t>;

    BDElement() = default;
    explicit BDElement(const BDAlgebra* owner) : owner_(owner) {}

    const BDAlgebra* owner() const { return owner_; }
    const std::map<Key, std::vector<uint64_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree if all terms share one, nullopt otherwise (or when zero).
    std::optional<size_t> degree() const;

    void add_term(Elt g, size_t n, const std::vector<uint64_t>& coords, uint64_t scalar = 1);
    BDElement operator+(const BDElement& o) const;
    BDElement operator-(const BDElement& o) const;
    BDElement scaled(uint64_t c) const;
    BDElement scaled_sign(int sign) const { return sign >= 0 ? *this : scaled(modulus() - 1); }
    bool operator==(const BDElement& o) const;
    std::string str() const;

private:
    uint64_t modulus() const;
    void check_owner(const BDElement& o) const;

    const BDAlgebra* owner_ = nullptr;
    std::map<Key, std::vector<uint64_t>> terms_;
};

class BDAlgebra : public std::enable_shared_from_this<BDAlgebra> {
public:
    // Validates the family (report kept); operations need a passing report.
    static std::shared_ptr<const BDAlgebra> create(ThetaFamily family, size_t cutoff = 5);

    const ThetaFamily& family() const { return family_; }
    const ContextPtr& context() const { return ctx_; }
    const Report& validation() const { return validation_; }
    bool validated() const { return validation_.passed(); }
    uint64_t prime() const { return family_.prime(); }
    const FiniteGroup& group() const { return *family_.group; }
    const ThetaOperators& operators() const { return *theta_; }

    CohomologyClass theta_x(Elt x, const CohomologyClass& c) const;

    BDElement zero() const { return BDElement(this); }
    BDElement unit() const;
    BDElement basis_element(Elt g, size_t n, size_t t) const;
    BDElement element(Elt g, const CohomologyClass& c) const;
    // basis elements g (x) H^n[t] with n <= max_degree, ordered by (n, g, t)
    std::vector<BDElement> basis(size_t max_degree) const;

    BDElement mul(const BDElement& u, const BDElement& v) const;
    BDElement bracket(const BDElement& u, const BDElement& v) const;
    BDElement delta(const BDElement& u) const;

    // cup product structure constants H^m x H^n -> H^(m+n)
    const std::vector<std::vector<std::vector<uint64_t>>>& cup_table(size_t m, size_t n) const;

    static constexpr size_t kAutoPairCutoff = static_cast<size_t>(-1);

    // Identities on basis triples of total degree <= cutoff; unary and
    // binary ones up to pair_cutoff (cutoff + 2 by default).
    // Throws NonAbelianGroup, FamilyNotValidated. With force the identities
    // are evaluated even when the family failed validation (the operations
    // are still defined as long as each theta_x is); the report then starts
    // with a failing "family_validated" check.
    Report verify_axioms(size_t cutoff, bool force = false, size_t pair_cutoff = kAutoPairCutoff) const;

    std::string label(Elt g, size_t n, size_t t) const;

private:
    BDAlgebra(ThetaFamily family, size_t cutoff);
    void require_validated() const;
    BDElement unit_() const;
    BDElement mul_(const BDElement& u, const BDElement& v) const;
    BDElement bracket_(const BDElement& u, const BDElement& v) const;
    BDElement delta_(const BDElement& u) const;
    void check(const BDElement& u) const;
    std::vector<uint64_t> cup_coords(size_t m, const std::vector<uint64_t>& a, size_t n,
                                     const std::vector<uint64_t>& b) const;

    ThetaFamily family_;
    ContextPtr ctx_;
    std::unique_ptr<ThetaOperators> theta_;
    Report validation_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<size_t, size_t>, std::vector<std::vector<std::vector<uint64_t>>>> cup_cache_;
};

// thin wrappers matching the operator names
CohomologyClass theta_x(const BDAlgebra& bd, Elt x, const CohomologyClass& c);
BDElement bd_mul(const BDElement& u, const BDElement& v);
BDElement bd_bracket(const BDElement& u, const BDElement& v);
BDElement bd_delta(const BDElement& u);
Report verify_bd_axioms(const BDAlgebra& bd, size_t cutoff = 4, bool force = false,
                        size_t pair_cutoff = BDAlgebra::kAutoPairCutoff);

struct DeltaRow {
    Elt g;
    size_t degree;
    size_t index;
    std::vector<uint64_t> image; // coordinates of Delta(g (x) H^degree[index]) in g (x) H^(degree+1)
};
// Throws FamilyNotValidated.
std::vector<DeltaRow> report_delta_table(const BDAlgebra& bd, size_t max_degree);

// ---------------------------------------------------------------------------
// Generic P_r / BD_r checker on finite tables over F_p.

struct GradedAlgebraInstance {
    uint64_t modulus = 2;
    int r = 0;
    std::vector<int> degrees;
    std::vector<std::string> labels;
    // product[i][j], bracket[i][j], op[i]: coordinate vectors over the basis,
    // absent entries mean "not provided"
    std::vector<std::vector<std::optional<std::vector<uint64_t>>>> product;
    std::vector<std::vector<std::optional<std::vector<uint64_t>>>> bracket;
    std::vector<std::optional<std::vector<uint64_t>>> op; // empty: no operator
    std::optional<std::vector<uint64_t>> unit;
    // identities are checked for basis tuples of total degree <= cutoff
    int cutoff = 0;
};

// Tables for the basis up to degree cutoff + 2 of a BD algebra.
GradedAlgebraInstance export_instance(const BDAlgebra& bd, size_t cutoff, int r = 0);

// Throws TablesNotClosed when an identity needs an entry that is absent.
Report verify_pr_axioms(const GradedAlgebraInstance& instance);

} // namespace bdcoh

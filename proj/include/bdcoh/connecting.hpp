#pragma once

// Short exact sequences 0 -> A -> B -> A -> 0 of G-modules with a chosen set
// section s of pi and the retraction r: Ker pi -> A inverse to iota, and the
// connecting map theta(phi) = r o d_B(s o phi).

#include "bdcoh/cochain.hpp"
#include "bdcoh/cohomology.hpp"
#include "bdcoh/modules.hpp"
#include "bdcoh/report.hpp"

#include <memory>
#include <vector>

namespace bdcoh {

struct ShortExactSequence {
    AlgebraPtr A;
    AlgebraPtr B;
    AdditiveMap iota; // A -> B
    AdditiveMap pi;   // B -> A
    std::vector<Element> s; // s[A.encode(a)] in B
    SubgroupMap r;          // Ker pi -> A

    const Subgroup& ker_pi() const { return r.domain(); }
    Element section(const Element& a) const;
};

// Structural checks only (shapes, carriers, groups, r defined on Ker pi);
// throws MalformedInput / GroupMismatch. The mathematical conditions are
// left to validate_situation_star.
ShortExactSequence make_ses(AlgebraPtr A, AlgebraPtr B, AdditiveMap iota, AdditiveMap pi, std::vector<Element> s,
                            SubgroupMap r);

// r given by its values on a generating set of Ker pi (the canonical
// generators when `generators` is empty).
SubgroupMap retraction_on_kernel(const AdditiveMap& pi, const Carrier& A, std::vector<Element> generators,
                                 std::vector<Element> images);

Report validate_situation_star(const ShortExactSequence& ses);

// Throws NotACocycle when phi is not a cocycle, LemmaViolation when d_B(s o phi)
// leaves Ker pi or the result fails to be a cocycle.
Cochain theta_cochain(const ShortExactSequence& ses, const Cochain& phi);

// The class is taken in its own context, whose module must be ses.A.
CohomologyClass theta_class(const ShortExactSequence& ses, const CohomologyClass& c);

/// A sequence together with its Situation-star report.
class ValidatedSES {
public:
    explicit ValidatedSES(ShortExactSequence ses);
    const ShortExactSequence& ses() const { return ses_; }
    const Report& report() const { return report_; }
    bool validated() const { return report_.passed(); }

private:
    ShortExactSequence ses_;
    Report report_;
};

struct IdentityCheck {
    bool holds = true;
    std::string witness;
};

// theta(a u b) = theta(a) u b + (-1)^m a u theta(b). Throws SituationNotValidated.
IdentityCheck check_derivation(const ValidatedSES& v, const CohomologyClass& a, const CohomologyClass& b);
// theta o theta = 0 on every basis class of H^n, n <= n_max - 1. Throws SituationNotValidated.
IdentityCheck check_differential(const ValidatedSES& v, const ContextPtr& ctx, size_t n_max);

// 0 -> Z/p -> Z/p^2 -> Z/p -> 0 over G with trivial action; throws NotPrime.
ShortExactSequence bockstein_ses(GroupPtr group, uint64_t p);

std::string show_element(const Element& a);
std::string show_tuple(const FiniteGroup& G, const std::vector<Elt>& t);

} // namespace bdcoh

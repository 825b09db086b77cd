#pragma once

// Finite abelian groups Z/m_1 + ... + Z/m_d, additive maps between them,
// G-actions, algebra structures and subgroups.
//
// Elements are written in natural coordinates (entry i in [0, m_i)). For
// linear algebra a carrier is embedded into (Z/N)^d for a multiple N of its
// exponent by a_i -> a_i * (N / m_i), which turns every subgroup and every
// well-defined additive map into Z/N-linear data.

#include "bdcoh/group.hpp"
#include "bdcoh/zn.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bdcoh {

using Element = std::vector<uint64_t>;
using IntMatrix = std::vector<std::vector<int64_t>>;

class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::vector<uint64_t> moduli);

    size_t dim() const { return moduli_.size(); }
    uint64_t modulus(size_t i) const { return moduli_[i]; }
    const std::vector<uint64_t>& moduli() const { return moduli_; }
    uint64_t exponent() const { return exponent_; }
    // Number of elements, or nullopt if it does not fit in 64 bits.
    std::optional<uint64_t> order() const { return order_; }

    Element zero() const { return Element(dim(), 0); }
    Element basis(size_t i) const;
    Element reduce(const std::vector<int64_t>& v) const;
    bool contains(const Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(uint64_t c, const Element& a) const;
    bool is_zero(const Element& a) const;

    // Mixed-radix code, first coordinate most significant.
    uint64_t encode(const Element& a) const;
    Element decode(uint64_t code) const;

    zn::Vec embed(const Element& a, uint64_t n) const;
    Element unembed(const zn::Vec& v, uint64_t n) const;

    // d copies of this carrier side by side.
    Carrier power(size_t copies) const;

    bool operator==(const Carrier& o) const { return moduli_ == o.moduli_; }
    std::string describe() const;

private:
    std::vector<uint64_t> moduli_;
    uint64_t exponent_ = 1;
    std::optional<uint64_t> order_ = 1;
};

/// Additive map given by an integer matrix (target dim x source dim).
class AdditiveMap {
public:
    AdditiveMap() = default;
    // Throws MalformedInput when the matrix shape is wrong or an entry breaks
    // the congruence M[i][j] * m_j^src == 0 (mod m_i^tgt).
    AdditiveMap(Carrier source, Carrier target, IntMatrix matrix);

    static AdditiveMap identity(const Carrier& c);
    static AdditiveMap zero(const Carrier& source, const Carrier& target);

    const Carrier& source() const { return source_; }
    const Carrier& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    Element apply(const Element& a) const;
    AdditiveMap compose(const AdditiveMap& inner) const; // this o inner
    AdditiveMap add(const AdditiveMap& o) const;
    AdditiveMap sub(const AdditiveMap& o) const;

    // Embedded matrix over Z/n, source dim x target dim, so that
    // embed(apply(a)) == embed(a) * M.
    std::vector<zn::Vec> embedded(uint64_t n) const;

    bool operator==(const AdditiveMap& o) const;

private:
    Carrier source_;
    Carrier target_;
    IntMatrix matrix_;
};

/// Finite abelian group with a left G-action by additive automorphisms.
class GModule {
public:
    // Throws MalformedInput if action(1) != id or action(gh) != action(g)action(h).
    GModule(GroupPtr group, Carrier carrier, std::vector<AdditiveMap> action);
    static GModule trivial(GroupPtr group, Carrier carrier);
    virtual ~GModule() = default;
    GModule(const GModule&) = default;
    GModule& operator=(const GModule&) = default;
    GModule(GModule&&) = default;
    GModule& operator=(GModule&&) = default;

    const GroupPtr& group() const { return group_; }
    const Carrier& carrier() const { return carrier_; }
    const AdditiveMap& action(Elt g) const { return action_[g]; }
    Element act(Elt g, const Element& a) const;
    bool is_trivial() const { return trivial_; }

private:
    GroupPtr group_;
    Carrier carrier_;
    std::vector<AdditiveMap> action_;
    bool trivial_ = true;
};

/// A GModule with an associative unital multiplication given by structure
/// constants on the standard generators.
class GAlgebra : public GModule {
public:
    // products[i][j] = e_i * e_j. Validation is done on generators, which is
    // complete by bilinearity. When acts_by_automorphisms is set the
    // compatibility g(ab) = (ga)(gb), g(1) = 1 is checked as well.
    GAlgebra(GModule module, std::vector<std::vector<Element>> products, Element unit,
             bool acts_by_automorphisms);

    const std::vector<std::vector<Element>>& structure_constants() const { return products_; }
    const Element& unit() const { return unit_; }
    bool acts_by_automorphisms() const { return by_automorphisms_; }
    Element mul(const Element& a, const Element& b) const;
    bool is_commutative() const;

    // Z/m with trivial action and the ring multiplication.
    static GAlgebra cyclic_ring(GroupPtr group, uint64_t m);

private:
    std::vector<std::vector<Element>> products_;
    Element unit_;
    bool by_automorphisms_ = false;
};

using ModulePtr = std::shared_ptr<const GModule>;
using AlgebraPtr = std::shared_ptr<const GAlgebra>;

/// Subgroup of a carrier, kept as a canonical (Howell) generating set.
class Subgroup {
public:
    Subgroup() = default;
    static Subgroup generated_by(const Carrier& ambient, const std::vector<Element>& generators);
    static Subgroup whole(const Carrier& ambient);
    static Subgroup trivial(const Carrier& ambient);

    const Carrier& ambient() const { return ambient_; }
    // Canonical generators (natural coordinates of the Howell rows).
    const std::vector<Element>& generators() const { return generators_; }
    bool contains(const Element& a) const;
    Element normalize(const Element& a) const;
    std::optional<uint64_t> order() const;
    // Exponents of each canonical generator modulo the earlier ones.
    std::vector<uint64_t> generator_orders() const;
    std::vector<Element> elements() const;
    const zn::HowellForm& howell() const { return howell_; }

    bool operator==(const Subgroup& o) const { return ambient_ == o.ambient_ && howell_ == o.howell_; }
    bool is_subgroup_of(const Subgroup& o) const;

private:
    Carrier ambient_;
    zn::HowellForm howell_{1, 0};
    std::vector<Element> generators_;
};

/// Additive map defined on a subgroup, by the images of a generating set.
class SubgroupMap {
public:
    SubgroupMap() = default;
    // Throws MalformedInput when the generators do not span `domain` or the
    // assignment does not respect the relations among them.
    SubgroupMap(Subgroup domain, std::vector<Element> generators, Carrier target, std::vector<Element> images);
    static SubgroupMap zero(const Subgroup& domain, const Carrier& target);

    const Subgroup& domain() const { return domain_; }
    const Carrier& target() const { return target_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::vector<Element>& images() const { return images_; }

    // Throws MalformedInput if a is not in the domain.
    Element apply(const Element& a) const;
    SubgroupMap add(const SubgroupMap& o) const;
    SubgroupMap sub(const SubgroupMap& o) const;
    SubgroupMap negate() const;

private:
    Subgroup domain_;
    std::vector<Element> generators_;
    Carrier target_;
    std::vector<Element> images_;
    uint64_t n_ = 1;
    std::shared_ptr<const zn::LeftSolver> solver_;
};

Subgroup kernel(const AdditiveMap& f);
Subgroup kernel_on(const AdditiveMap& f, const Subgroup& domain);
Subgroup image(const AdditiveMap& f);
Subgroup image_of(const AdditiveMap& f, const Subgroup& domain);

// Solves f(x) = y for x in the source carrier.
std::optional<Element> preimage(const AdditiveMap& f, const Element& y);

struct IdealCheck {
    bool is_ideal = true;
    // witness: k * b or b * k escaped the subgroup
    std::optional<Element> generator;
    std::optional<Element> multiplier;
    bool left_side = false;
};
IdealCheck is_ideal(const Subgroup& sub, const GAlgebra& algebra);

SubgroupMap restrict(const AdditiveMap& f, const Subgroup& sub);

struct ExtensionResult {
    bool exists = false;
    std::optional<AdditiveMap> witness;
};
// Decides whether f = F|_K for a G-equivariant additive F: B -> A, where K is
// f's domain (a subgroup of B's carrier). Throws NotEquivariantInput if f is
// not itself equivariant on K.
ExtensionResult equivariant_extension_exists(const SubgroupMap& f, const GModule& source, const GModule& target);

// A^G.
Subgroup invariants(const GModule& m);

/// Structure of a quotient Z/B of finite abelian groups, with coordinates.
class FiniteQuotient {
public:
    FiniteQuotient() = default;
    FiniteQuotient(const Subgroup& numerator, const Subgroup& denominator);

    // Orders of the cyclic summands (each > 1, each dividing the next).
    const std::vector<uint64_t>& factors() const { return factors_; }
    // A numerator element generating each summand.
    const std::vector<Element>& generators() const { return generators_; }
    // Coordinates of z (which must lie in the numerator), reduced mod factors.
    std::vector<uint64_t> coordinates(const Element& z) const;
    // sum coords[i] * generators[i]
    Element combine(const std::vector<uint64_t>& coords) const;

private:
    Carrier ambient_;
    uint64_t n_ = 1;
    std::vector<uint64_t> factors_;
    std::vector<Element> generators_;
    std::vector<Element> numerator_generators_;
    std::vector<std::vector<uint64_t>> transform_columns_; // one column of the transform per summand
    std::shared_ptr<const zn::LeftSolver> solver_;
};

/// Orders of finite abelian groups as prime factorisations, so that |C^n| for
/// large n stays representable.
class GroupOrder {
public:
    GroupOrder() = default;
    static GroupOrder of(uint64_t n);
    GroupOrder& operator*=(const GroupOrder& o);
    GroupOrder& operator/=(const GroupOrder& o);
    GroupOrder pow(uint64_t e) const;
    bool operator==(const GroupOrder& o) const { return exps_ == o.exps_; }
    std::optional<uint64_t> value() const;
    std::string str() const;
    const std::vector<std::pair<uint64_t, uint64_t>>& factors() const { return exps_; }

private:
    std::vector<std::pair<uint64_t, uint64_t>> exps_; // sorted (prime, exponent)
};

GroupOrder order_of(const Subgroup& s);
GroupOrder order_of(const Carrier& c);

} // namespace bdcoh

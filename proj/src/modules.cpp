#include "bdcoh/modules.hpp"

#include "bdcoh/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bdcoh {

namespace {

std::string show(const Element& a)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i)
        os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

uint64_t mod_signed(int64_t x, uint64_t m) { return zn::reduce_signed(x, m); }

// Natural coordinates of sum_k c[k] * gens[k].
Element combination(const Carrier& c, const std::vector<Element>& gens, const zn::Vec& coeffs)
{
    Element out = c.zero();
    for (size_t k = 0; k < gens.size(); ++k)
        if (coeffs[k] != 0)
            out = c.add(out, c.scale(coeffs[k], gens[k]));
    return out;
}

std::vector<zn::Vec> embed_all(const Carrier& c, const std::vector<Element>& xs, uint64_t n)
{
    std::vector<zn::Vec> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(c.embed(x, n));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(std::vector<uint64_t> moduli)
    : moduli_(std::move(moduli))
{
    for (uint64_t m : moduli_) {
        if (m < 2)
            fail(ErrorCode::MalformedInput, "carrier moduli must be at least 2");
        if (m >= (uint64_t(1) << 31))
            fail(ErrorCode::MalformedInput, "carrier modulus too large");
        exponent_ = zn::lcm(exponent_, m);
        if (exponent_ >= (uint64_t(1) << 31))
            fail(ErrorCode::MalformedInput, "carrier exponent too large");
        if (order_ && *order_ > UINT64_MAX / m)
            order_.reset();
        else if (order_)
            *order_ *= m;
    }
}

Element Carrier::basis(size_t i) const
{
    if (i >= dim())
        fail(ErrorCode::IndexOutOfRange, "basis index out of range");
    Element e = zero();
    e[i] = 1;
    return e;
}

Element Carrier::reduce(const std::vector<int64_t>& v) const
{
    if (v.size() != dim())
        fail(ErrorCode::MalformedInput, "element has wrong dimension");
    Element out(dim());
    for (size_t i = 0; i < dim(); ++i)
        out[i] = mod_signed(v[i], moduli_[i]);
    return out;
}

bool Carrier::contains(const Element& a) const
{
    if (a.size() != dim())
        return false;
    for (size_t i = 0; i < dim(); ++i)
        if (a[i] >= moduli_[i])
            return false;
    return true;
}

Element Carrier::add(const Element& a, const Element& b) const
{
    Element out(dim());
    for (size_t i = 0; i < dim(); ++i)
        out[i] = (a[i] + b[i]) % moduli_[i];
    return out;
}

Element Carrier::sub(const Element& a, const Element& b) const
{
    Element out(dim());
    for (size_t i = 0; i < dim(); ++i)
        out[i] = (a[i] + moduli_[i] - b[i] % moduli_[i]) % moduli_[i];
    return out;
}

Element Carrier::neg(const Element& a) const
{
    Element out(dim());
    for (size_t i = 0; i < dim(); ++i)
        out[i] = zn::negmod(a[i] % moduli_[i], moduli_[i]);
    return out;
}

Element Carrier::scale(uint64_t c, const Element& a) const
{
    Element out(dim());
    for (size_t i = 0; i < dim(); ++i)
        out[i] = zn::mulmod(c % moduli_[i], a[i] % moduli_[i], moduli_[i]);
    return out;
}

bool Carrier::is_zero(const Element& a) const
{
    for (size_t i = 0; i < dim(); ++i)
        if (a[i] % moduli_[i] != 0)
            return false;
    return true;
}

uint64_t Carrier::encode(const Element& a) const
{
    if (!order_)
        fail(ErrorCode::DegreeOverflow, "carrier too large to enumerate");
    if (!contains(a))
        fail(ErrorCode::IndexOutOfRange, "element " + show(a) + " not in carrier " + describe());
    uint64_t code = 0;
    for (size_t i = 0; i < dim(); ++i)
        code = code * moduli_[i] + a[i];
    return code;
}

Element Carrier::decode(uint64_t code) const
{
    if (!order_ || code >= *order_)
        fail(ErrorCode::IndexOutOfRange, "element code out of range");
    Element out(dim());
    for (size_t i = dim(); i-- > 0;) {
        out[i] = code % moduli_[i];
        code /= moduli_[i];
    }
    return out;
}

zn::Vec Carrier::embed(const Element& a, uint64_t n) const
{
    zn::Vec v(dim());
    for (size_t i = 0; i < dim(); ++i)
        v[i] = (a[i] % moduli_[i]) * (n / moduli_[i]) % n;
    return v;
}

Element Carrier::unembed(const zn::Vec& v, uint64_t n) const
{
    Element a(dim());
    for (size_t i = 0; i < dim(); ++i) {
        uint64_t step = n / moduli_[i];
        if (v[i] % step != 0)
            fail(ErrorCode::Internal, "vector does not lie in the embedded carrier");
        a[i] = (v[i] / step) % moduli_[i];
    }
    return a;
}

Carrier Carrier::power(size_t copies) const
{
    std::vector<uint64_t> m;
    m.reserve(copies * dim());
    for (size_t c = 0; c < copies; ++c)
        m.insert(m.end(), moduli_.begin(), moduli_.end());
    return Carrier(std::move(m));
}

std::string Carrier::describe() const
{
    if (moduli_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < dim(); ++i)
        os << (i ? " + " : "") << "Z/" << moduli_[i];
    return os.str();
}

// ---------------------------------------------------------------------------
// AdditiveMap

AdditiveMap::AdditiveMap(Carrier source, Carrier target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target))
{
    if (matrix.size() != target_.dim())
        fail(ErrorCode::MalformedInput, "map matrix needs one row per target coordinate");
    matrix_.assign(target_.dim(), std::vector<int64_t>(source_.dim(), 0));
    for (size_t i = 0; i < target_.dim(); ++i) {
        if (matrix[i].size() != source_.dim())
            fail(ErrorCode::MalformedInput, "map matrix needs one column per source coordinate");
        uint64_t mt = target_.modulus(i);
        for (size_t j = 0; j < source_.dim(); ++j) {
            uint64_t e = mod_signed(matrix[i][j], mt);
            if (zn::mulmod(e, source_.modulus(j) % mt, mt) != 0)
                fail(ErrorCode::MalformedInput, "map entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") is not well defined on Z/" +
                                                    std::to_string(source_.modulus(j)));
            matrix_[i][j] = static_cast<int64_t>(e);
        }
    }
}

AdditiveMap AdditiveMap::identity(const Carrier& c)
{
    IntMatrix m(c.dim(), std::vector<int64_t>(c.dim(), 0));
    for (size_t i = 0; i < c.dim(); ++i)
        m[i][i] = 1;
    return AdditiveMap(c, c, std::move(m));
}

AdditiveMap AdditiveMap::zero(const Carrier& source, const Carrier& target)
{
    return AdditiveMap(source, target, IntMatrix(target.dim(), std::vector<int64_t>(source.dim(), 0)));
}

Element AdditiveMap::apply(const Element& a) const
{
    if (a.size() != source_.dim())
        fail(ErrorCode::MalformedInput, "element " + show(a) + " has wrong dimension for " + source_.describe());
    Element out(target_.dim());
    for (size_t i = 0; i < target_.dim(); ++i) {
        uint64_t m = target_.modulus(i), acc = 0;
        for (size_t j = 0; j < source_.dim(); ++j)
            acc = (acc + zn::mulmod(static_cast<uint64_t>(matrix_[i][j]), a[j] % m, m)) % m;
        out[i] = acc;
    }
    return out;
}

AdditiveMap AdditiveMap::compose(const AdditiveMap& inner) const
{
    if (!(inner.target_ == source_))
        fail(ErrorCode::MalformedInput, "composition of maps with mismatched carriers");
    IntMatrix m(target_.dim(), std::vector<int64_t>(inner.source_.dim(), 0));
    for (size_t j = 0; j < inner.source_.dim(); ++j) {
        Element col = apply(inner.apply(inner.source_.basis(j)));
        for (size_t i = 0; i < target_.dim(); ++i)
            m[i][j] = static_cast<int64_t>(col[i]);
    }
    return AdditiveMap(inner.source_, target_, std::move(m));
}

AdditiveMap AdditiveMap::add(const AdditiveMap& o) const
{
    if (!(o.source_ == source_) || !(o.target_ == target_))
        fail(ErrorCode::MalformedInput, "sum of maps with mismatched carriers");
    IntMatrix m = matrix_;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            m[i][j] += o.matrix_[i][j];
    return AdditiveMap(source_, target_, std::move(m));
}

AdditiveMap AdditiveMap::sub(const AdditiveMap& o) const
{
    if (!(o.source_ == source_) || !(o.target_ == target_))
        fail(ErrorCode::MalformedInput, "difference of maps with mismatched carriers");
    IntMatrix m = matrix_;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            m[i][j] -= o.matrix_[i][j];
    return AdditiveMap(source_, target_, std::move(m));
}

std::vector<zn::Vec> AdditiveMap::embedded(uint64_t n) const
{
    if (n % source_.exponent() != 0 || n % target_.exponent() != 0)
        fail(ErrorCode::Internal, "embedding modulus is not a common multiple of the exponents");
    std::vector<zn::Vec> out(source_.dim(), zn::Vec(target_.dim(), 0));
    for (size_t j = 0; j < source_.dim(); ++j)
        for (size_t i = 0; i < target_.dim(); ++i) {
            uint64_t e = static_cast<uint64_t>(matrix_[i][j]) * source_.modulus(j) / target_.modulus(i);
            out[j][i] = e % n;
        }
    return out;
}

bool AdditiveMap::operator==(const AdditiveMap& o) const
{
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
}

// ---------------------------------------------------------------------------
// GModule / GAlgebra

GModule::GModule(GroupPtr group, Carrier carrier, std::vector<AdditiveMap> action)
    : group_(std::move(group)), carrier_(std::move(carrier)), action_(std::move(action))
{
    if (!group_)
        fail(ErrorCode::MalformedInput, "module needs a group");
    const size_t n = group_->order();
    if (action_.size() != n)
        fail(ErrorCode::MalformedInput, "module needs one action matrix per group element");
    for (Elt g = 0; g < n; ++g)
        if (!(action_[g].source() == carrier_) || !(action_[g].target() == carrier_))
            fail(ErrorCode::MalformedInput, "action of " + group_->label(g) + " is not an endomorphism of the carrier");
    auto id = AdditiveMap::identity(carrier_);
    if (!(action_[group_->identity()] == id))
        fail(ErrorCode::MalformedInput, "the identity does not act as the identity map");
    for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h)
            if (!(action_[g].compose(action_[h]) == action_[group_->mul(g, h)]))
                fail(ErrorCode::MalformedInput, "action is not compatible with multiplication at (" +
                                                    group_->label(g) + "," + group_->label(h) + ")");
    trivial_ = std::all_of(action_.begin(), action_.end(), [&](const AdditiveMap& a) { return a == id; });
}

GModule GModule::trivial(GroupPtr group, Carrier carrier)
{
    std::vector<AdditiveMap> act(group->order(), AdditiveMap::identity(carrier));
    return GModule(std::move(group), std::move(carrier), std::move(act));
}

Element GModule::act(Elt g, const Element& a) const
{
    if (trivial_)
        return a;
    return action_[g].apply(a);
}

GAlgebra::GAlgebra(GModule module, std::vector<std::vector<Element>> products, Element unit,
                   bool acts_by_automorphisms)
    : GModule(std::move(module)), products_(std::move(products)), unit_(std::move(unit)),
      by_automorphisms_(acts_by_automorphisms)
{
    const Carrier& c = carrier();
    const size_t d = c.dim();
    if (products_.size() != d)
        fail(ErrorCode::MalformedInput, "structure constants need d rows");
    for (size_t i = 0; i < d; ++i) {
        if (products_[i].size() != d)
            fail(ErrorCode::MalformedInput, "structure constants need d columns");
        for (size_t j = 0; j < d; ++j) {
            if (!c.contains(products_[i][j]))
                fail(ErrorCode::MalformedInput, "structure constant (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") is not a carrier element");
            if (!c.is_zero(c.scale(c.modulus(i), products_[i][j])) ||
                !c.is_zero(c.scale(c.modulus(j), products_[i][j])))
                fail(ErrorCode::MalformedInput, "multiplication is not well defined on generators (" +
                                                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    if (!c.contains(unit_))
        fail(ErrorCode::MalformedInput, "unit is not a carrier element");
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k)
                if (mul(products_[i][j], c.basis(k)) != mul(c.basis(i), products_[j][k]))
                    fail(ErrorCode::NonAssociative, "multiplication is not associative on generators (" +
                                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                                        std::to_string(k) + ")");
    for (size_t i = 0; i < d; ++i)
        if (mul(unit_, c.basis(i)) != c.basis(i) || mul(c.basis(i), unit_) != c.basis(i))
            fail(ErrorCode::NoIdentity, "unit " + show(unit_) + " fails on generator " + std::to_string(i));
    if (by_automorphisms_) {
        const size_t n = group()->order();
        for (Elt g = 0; g < n; ++g) {
            if (act(g, unit_) != unit_)
                fail(ErrorCode::MalformedInput, group()->label(g) + " does not fix the unit");
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    if (act(g, products_[i][j]) != mul(act(g, c.basis(i)), act(g, c.basis(j))))
                        fail(ErrorCode::MalformedInput, group()->label(g) +
                                                            " is not a ring automorphism on generators (" +
                                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

Element GAlgebra::mul(const Element& a, const Element& b) const
{
    const Carrier& c = carrier();
    const size_t d = c.dim();
    Element out = c.zero();
    for (size_t i = 0; i < d; ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < d; ++j) {
            if (b[j] == 0)
                continue;
            const Element& p = products_[i][j];
            for (size_t k = 0; k < d; ++k) {
                uint64_t m = c.modulus(k);
                out[k] = (out[k] + (a[i] % m) * (b[j] % m) % m * p[k]) % m;
            }
        }
    }
    return out;
}

bool GAlgebra::is_commutative() const
{
    for (size_t i = 0; i < products_.size(); ++i)
        for (size_t j = i + 1; j < products_.size(); ++j)
            if (products_[i][j] != products_[j][i])
                return false;
    return true;
}

GAlgebra GAlgebra::cyclic_ring(GroupPtr group, uint64_t m)
{
    Carrier c({m});
    return GAlgebra(GModule::trivial(std::move(group), c), {{Element{1}}}, Element{1}, true);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup Subgroup::generated_by(const Carrier& ambient, const std::vector<Element>& generators)
{
    Subgroup s;
    s.ambient_ = ambient;
    uint64_t n = ambient.exponent();
    for (const auto& g : generators)
        if (!ambient.contains(g))
            fail(ErrorCode::MalformedInput, "generator " + show(g) + " is not an element of " + ambient.describe());
    s.howell_ = zn::HowellForm(n, ambient.dim(), embed_all(ambient, generators, n));
    for (const auto& r : s.howell_.rows())
        s.generators_.push_back(ambient.unembed(r, n));
    return s;
}

Subgroup Subgroup::whole(const Carrier& ambient)
{
    std::vector<Element> gens;
    for (size_t i = 0; i < ambient.dim(); ++i)
        gens.push_back(ambient.basis(i));
    return generated_by(ambient, gens);
}

Subgroup Subgroup::trivial(const Carrier& ambient) { return generated_by(ambient, {}); }

bool Subgroup::contains(const Element& a) const
{
    if (!ambient_.contains(a))
        return false;
    return howell_.contains(ambient_.embed(a, howell_.modulus()));
}

Element Subgroup::normalize(const Element& a) const
{
    uint64_t n = howell_.modulus();
    return ambient_.unembed(howell_.reduce(ambient_.embed(a, n)), n);
}

std::optional<uint64_t> Subgroup::order() const
{
    uint64_t r = 1;
    for (uint64_t o : howell_.row_orders()) {
        if (r > UINT64_MAX / o)
            return std::nullopt;
        r *= o;
    }
    return r;
}

std::vector<uint64_t> Subgroup::generator_orders() const { return howell_.row_orders(); }

std::vector<Element> Subgroup::elements() const
{
    auto ord = order();
    if (!ord || *ord > 10'000'000)
        fail(ErrorCode::DegreeOverflow, "subgroup too large to enumerate");
    auto orders = generator_orders();
    std::vector<Element> out;
    out.reserve(*ord);
    zn::Vec coeff(orders.size(), 0);
    for (;;) {
        out.push_back(combination(ambient_, generators_, coeff));
        size_t k = 0;
        for (; k < coeff.size(); ++k) {
            if (++coeff[k] < orders[k])
                break;
            coeff[k] = 0;
        }
        if (k == coeff.size())
            break;
    }
    return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& o) const
{
    if (!(ambient_ == o.ambient_))
        return false;
    return std::all_of(generators_.begin(), generators_.end(), [&](const Element& g) { return o.contains(g); });
}

// ---------------------------------------------------------------------------
// SubgroupMap

SubgroupMap::SubgroupMap(Subgroup domain, std::vector<Element> generators, Carrier target,
                         std::vector<Element> images)
    : domain_(std::move(domain)), generators_(std::move(generators)), target_(std::move(target)),
      images_(std::move(images))
{
    if (generators_.size() != images_.size())
        fail(ErrorCode::MalformedInput, "map on a subgroup needs one image per generator");
    const Carrier& amb = domain_.ambient();
    for (const auto& g : generators_)
        if (!domain_.contains(g))
            fail(ErrorCode::MalformedInput, "generator " + show(g) + " is outside the domain subgroup");
    for (const auto& y : images_)
        if (!target_.contains(y))
            fail(ErrorCode::MalformedInput, "image " + show(y) + " is not an element of " + target_.describe());
    if (!(Subgroup::generated_by(amb, generators_) == domain_))
        fail(ErrorCode::MalformedInput, "generators do not span the domain subgroup");

    n_ = zn::lcm(amb.exponent(), target_.exponent());
    auto rows = embed_all(amb, generators_, n_);
    solver_ = std::make_shared<zn::LeftSolver>(rows, amb.dim(), n_);
    for (const auto& rel : solver_->kernel()) {
        Element y = combination(target_, images_, rel);
        if (!target_.is_zero(y))
            fail(ErrorCode::MalformedInput, "assignment on generators does not respect their relations");
    }
}

SubgroupMap SubgroupMap::zero(const Subgroup& domain, const Carrier& target)
{
    return SubgroupMap(domain, domain.generators(), target,
                       std::vector<Element>(domain.generators().size(), target.zero()));
}

Element SubgroupMap::apply(const Element& a) const
{
    if (!solver_)
        fail(ErrorCode::Internal, "map on a subgroup is not initialised");
    auto c = solver_->solve(domain_.ambient().embed(a, n_));
    if (!c || !domain_.ambient().contains(a))
        fail(ErrorCode::MalformedInput, "element " + show(a) + " is outside the domain subgroup");
    return combination(target_, images_, *c);
}

SubgroupMap SubgroupMap::add(const SubgroupMap& o) const
{
    if (!(o.domain_ == domain_) || !(o.target_ == target_))
        fail(ErrorCode::MalformedInput, "sum of subgroup maps with different domains");
    std::vector<Element> imgs;
    for (size_t k = 0; k < generators_.size(); ++k)
        imgs.push_back(target_.add(images_[k], o.apply(generators_[k])));
    return SubgroupMap(domain_, generators_, target_, std::move(imgs));
}

SubgroupMap SubgroupMap::sub(const SubgroupMap& o) const { return add(o.negate()); }

SubgroupMap SubgroupMap::negate() const
{
    std::vector<Element> imgs;
    for (const auto& y : images_)
        imgs.push_back(target_.neg(y));
    return SubgroupMap(domain_, generators_, target_, std::move(imgs));
}

// ---------------------------------------------------------------------------

Subgroup kernel_on(const AdditiveMap& f, const Subgroup& domain)
{
    const Carrier& src = f.source();
    const Carrier& tgt = f.target();
    if (!(domain.ambient() == src))
        fail(ErrorCode::MalformedInput, "kernel domain lives in a different carrier");
    uint64_t n = zn::lcm(src.exponent(), tgt.exponent());
    std::vector<zn::Vec> rows;
    for (const auto& g : domain.generators())
        rows.push_back(tgt.embed(f.apply(g), n));
    std::vector<Element> gens;
    for (const auto& c : zn::left_kernel(rows, tgt.dim(), n))
        gens.push_back(combination(src, domain.generators(), c));
    return Subgroup::generated_by(src, gens);
}

Subgroup kernel(const AdditiveMap& f)
{
    const Carrier& src = f.source();
    Subgroup k = kernel_on(f, Subgroup::whole(src));
    auto ord = src.order();
    if (ord && *ord <= 10'000) {
        for (uint64_t code = 0; code < *ord; ++code) {
            Element a = src.decode(code);
            if (f.target().is_zero(f.apply(a)) != k.contains(a))
                fail(ErrorCode::Internal, "kernel verification failed at " + show(a));
        }
    } else {
        GroupOrder lhs = order_of(k);
        lhs *= order_of(image(f));
        if (!(lhs == order_of(src)))
            fail(ErrorCode::Internal, "kernel verification failed: |ker|*|im| != |source|");
    }
    return k;
}

Subgroup image_of(const AdditiveMap& f, const Subgroup& domain)
{
    std::vector<Element> imgs;
    for (const auto& g : domain.generators())
        imgs.push_back(f.apply(g));
    return Subgroup::generated_by(f.target(), imgs);
}

Subgroup image(const AdditiveMap& f) { return image_of(f, Subgroup::whole(f.source())); }

std::optional<Element> preimage(const AdditiveMap& f, const Element& y)
{
    const Carrier& src = f.source();
    const Carrier& tgt = f.target();
    uint64_t n = zn::lcm(src.exponent(), tgt.exponent());
    std::vector<zn::Vec> rows;
    for (size_t j = 0; j < src.dim(); ++j)
        rows.push_back(tgt.embed(f.apply(src.basis(j)), n));
    zn::LeftSolver solver(rows, tgt.dim(), n);
    auto c = solver.solve(tgt.embed(y, n));
    if (!c)
        return std::nullopt;
    Element x(src.dim());
    for (size_t j = 0; j < src.dim(); ++j)
        x[j] = (*c)[j] % src.modulus(j);
    return x;
}

IdealCheck is_ideal(const Subgroup& sub, const GAlgebra& algebra)
{
    const Carrier& c = algebra.carrier();
    if (!(sub.ambient() == c))
        fail(ErrorCode::MalformedInput, "subgroup is not inside the algebra");
    for (const auto& k : sub.generators())
        for (size_t i = 0; i < c.dim(); ++i) {
            Element b = c.basis(i);
            if (!sub.contains(algebra.mul(b, k)))
                return {false, k, b, true};
            if (!sub.contains(algebra.mul(k, b)))
                return {false, k, b, false};
        }
    return {};
}

SubgroupMap restrict(const AdditiveMap& f, const Subgroup& sub)
{
    if (!(sub.ambient() == f.source()))
        fail(ErrorCode::MalformedInput, "restriction to a subgroup of another carrier");
    std::vector<Element> imgs;
    for (const auto& g : sub.generators())
        imgs.push_back(f.apply(g));
    return SubgroupMap(sub, sub.generators(), f.target(), std::move(imgs));
}

ExtensionResult equivariant_extension_exists(const SubgroupMap& f, const GModule& source, const GModule& target)
{
    const Carrier& B = source.carrier();
    const Carrier& A = target.carrier();
    const Subgroup& K = f.domain();
    if (!(K.ambient() == B) || !(f.target() == A))
        fail(ErrorCode::MalformedInput, "extension problem with mismatched carriers");
    if (source.group() != target.group() && source.group()->order() != target.group()->order())
        fail(ErrorCode::GroupMismatch, "source and target modules over different groups");
    const size_t ng = source.group()->order();

    for (Elt g = 0; g < ng; ++g)
        for (const auto& k : K.generators()) {
            Element gk = source.act(g, k);
            if (!K.contains(gk) || f.apply(gk) != target.act(g, f.apply(k)))
                fail(ErrorCode::NotEquivariantInput, "map is not equivariant at " + source.group()->label(g) +
                                                         " on generator " + show(k));
        }

    // Unknowns y_{j,i} = F(e_j)_i, laid out as A^{dim B}.
    const size_t dB = B.dim(), dA = A.dim();
    Carrier X = A.power(dB);
    auto col = [&](size_t j, size_t i) { return j * dA + i; };

    std::vector<uint64_t> tmoduli;
    IntMatrix rows;
    Element rhs;
    auto new_row = [&](uint64_t modulus) {
        tmoduli.push_back(modulus);
        rows.emplace_back(X.dim(), 0);
        rhs.push_back(0);
        return rows.size() - 1;
    };
    // well-definedness: m_j * y_j = 0
    for (size_t j = 0; j < dB; ++j)
        for (size_t i = 0; i < dA; ++i) {
            size_t r = new_row(A.modulus(i));
            rows[r][col(j, i)] = static_cast<int64_t>(B.modulus(j));
        }
    // equivariance: F(g e_j) - g F(e_j) = 0
    for (Elt g = 0; g < ng; ++g) {
        const IntMatrix& mb = source.action(g).matrix();
        const IntMatrix& ma = target.action(g).matrix();
        for (size_t j = 0; j < dB; ++j)
            for (size_t i = 0; i < dA; ++i) {
                size_t r = new_row(A.modulus(i));
                for (size_t k = 0; k < dB; ++k)
                    rows[r][col(k, i)] += mb[k][j];
                for (size_t l = 0; l < dA; ++l)
                    rows[r][col(j, l)] -= ma[i][l];
            }
    }
    // restriction: F(kappa) = f(kappa)
    for (const auto& k : K.generators()) {
        Element fk = f.apply(k);
        for (size_t i = 0; i < dA; ++i) {
            size_t r = new_row(A.modulus(i));
            for (size_t j = 0; j < dB; ++j)
                rows[r][col(j, i)] += static_cast<int64_t>(k[j]);
            rhs[r] = fk[i];
        }
    }

    if (rows.empty()) {
        ExtensionResult out;
        out.exists = true;
        out.witness = AdditiveMap::zero(B, A);
        return out;
    }
    Carrier T(tmoduli);
    AdditiveMap L(X, T, rows);
    auto sol = preimage(L, rhs);
    if (!sol)
        return {};

    IntMatrix m(dA, std::vector<int64_t>(dB, 0));
    for (size_t j = 0; j < dB; ++j)
        for (size_t i = 0; i < dA; ++i)
            m[i][j] = static_cast<int64_t>((*sol)[col(j, i)]);
    AdditiveMap F(B, A, m);
    for (const auto& k : K.generators())
        if (F.apply(k) != f.apply(k))
            fail(ErrorCode::Internal, "extension witness does not restrict to the given map");
    for (Elt g = 0; g < ng; ++g)
        for (size_t j = 0; j < dB; ++j)
            if (F.apply(source.act(g, B.basis(j))) != target.act(g, F.apply(B.basis(j))))
                fail(ErrorCode::Internal, "extension witness is not equivariant");
    ExtensionResult out;
    out.exists = true;
    out.witness = std::move(F);
    return out;
}

Subgroup invariants(const GModule& m)
{
    const Carrier& c = m.carrier();
    const size_t ng = m.group()->order();
    Carrier T = c.power(ng);
    IntMatrix rows(T.dim(), std::vector<int64_t>(c.dim(), 0));
    for (Elt g = 0; g < ng; ++g) {
        const IntMatrix& a = m.action(g).matrix();
        for (size_t i = 0; i < c.dim(); ++i)
            for (size_t j = 0; j < c.dim(); ++j)
                rows[g * c.dim() + i][j] = a[i][j] - (i == j ? 1 : 0);
    }
    if (c.dim() == 0)
        return Subgroup::trivial(c);
    return kernel(AdditiveMap(c, T, rows));
}

// ---------------------------------------------------------------------------
// FiniteQuotient

FiniteQuotient::FiniteQuotient(const Subgroup& numerator, const Subgroup& denominator)
    : ambient_(numerator.ambient()), n_(numerator.howell().modulus())
{
    if (!(denominator.ambient() == ambient_) || !denominator.is_subgroup_of(numerator))
        fail(ErrorCode::Internal, "quotient of subgroups that are not nested");
    numerator_generators_ = numerator.generators();
    const size_t k = numerator_generators_.size();
    const size_t d = ambient_.dim();

    std::vector<zn::Vec> zrows = embed_all(ambient_, numerator_generators_, n_);
    std::vector<zn::Vec> stacked = zrows;
    for (const auto& b : denominator.generators())
        stacked.push_back(ambient_.embed(b, n_));
    std::vector<zn::Vec> relations;
    for (const auto& c : zn::left_kernel(stacked, d, n_))
        relations.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));

    zn::SmithQuotient sq = zn::smith_quotient(std::move(relations), k, n_);
    for (size_t t = 0; t < sq.factors.size(); ++t) {
        if (sq.factors[t] == 1)
            continue;
        factors_.push_back(sq.factors[t]);
        generators_.push_back(combination(ambient_, numerator_generators_, sq.inverse_transform[t]));
        std::vector<uint64_t> column(k);
        for (size_t i = 0; i < k; ++i)
            column[i] = sq.transform[i][t];
        transform_columns_.push_back(std::move(column));
    }
    solver_ = std::make_shared<zn::LeftSolver>(zrows, d, n_);
}

std::vector<uint64_t> FiniteQuotient::coordinates(const Element& z) const
{
    std::vector<uint64_t> out(factors_.size(), 0);
    if (factors_.empty())
        return out;
    auto c = solver_->solve(ambient_.embed(z, n_));
    if (!c)
        fail(ErrorCode::Internal, "element " + show(z) + " is outside the quotient numerator");
    for (size_t t = 0; t < factors_.size(); ++t) {
        uint64_t acc = 0;
        for (size_t i = 0; i < c->size(); ++i)
            acc = (acc + zn::mulmod((*c)[i], transform_columns_[t][i], n_)) % n_;
        out[t] = acc % factors_[t];
    }
    return out;
}

Element FiniteQuotient::combine(const std::vector<uint64_t>& coords) const
{
    return combination(ambient_, generators_, coords);
}

// ---------------------------------------------------------------------------
// GroupOrder

GroupOrder GroupOrder::of(uint64_t n)
{
    GroupOrder o;
    for (uint64_t p : zn::prime_factors(n)) {
        uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        o.exps_.emplace_back(p, e);
    }
    return o;
}

GroupOrder& GroupOrder::operator*=(const GroupOrder& o)
{
    std::map<uint64_t, int64_t> m;
    for (auto [p, e] : exps_)
        m[p] += static_cast<int64_t>(e);
    for (auto [p, e] : o.exps_)
        m[p] += static_cast<int64_t>(e);
    exps_.clear();
    for (auto [p, e] : m)
        if (e != 0)
            exps_.emplace_back(p, static_cast<uint64_t>(e));
    return *this;
}

GroupOrder& GroupOrder::operator/=(const GroupOrder& o)
{
    std::map<uint64_t, int64_t> m;
    for (auto [p, e] : exps_)
        m[p] += static_cast<int64_t>(e);
    for (auto [p, e] : o.exps_)
        m[p] -= static_cast<int64_t>(e);
    exps_.clear();
    for (auto [p, e] : m) {
        if (e < 0)
            fail(ErrorCode::Internal, "group order division is not exact");
        if (e != 0)
            exps_.emplace_back(p, static_cast<uint64_t>(e));
    }
    return *this;
}

GroupOrder GroupOrder::pow(uint64_t e) const
{
    GroupOrder o = *this;
    for (auto& pe : o.exps_)
        pe.second *= e;
    if (e == 0)
        o.exps_.clear();
    return o;
}

std::optional<uint64_t> GroupOrder::value() const
{
    uint64_t r = 1;
    for (auto [p, e] : exps_)
        for (uint64_t i = 0; i < e; ++i) {
            if (r > UINT64_MAX / p)
                return std::nullopt;
            r *= p;
        }
    return r;
}

std::string GroupOrder::str() const
{
    if (auto v = value())
        return std::to_string(*v);
    std::ostringstream os;
    for (size_t i = 0; i < exps_.size(); ++i)
        os << (i ? "*" : "") << exps_[i].first << "^" << exps_[i].second;
    return os.str();
}

GroupOrder order_of(const Subgroup& s)
{
    GroupOrder o;
    for (uint64_t k : s.generator_orders())
        o *= GroupOrder::of(k);
    return o;
}

GroupOrder order_of(const Carrier& c)
{
    GroupOrder o;
    for (uint64_t m : c.moduli())
        o *= GroupOrder::of(m);
    return o;
}

} // namespace bdcoh

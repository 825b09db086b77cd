#include "bdcoh/cohomology.hpp"

#include "bdcoh/error.hpp"

namespace bdcoh {

struct CohomologyContext::Degree {
    size_t n = 0;
    Carrier hom; // Hom_G(P_n, A) = A^rank
    Subgroup cocycles;
    Subgroup coboundaries;
    FiniteQuotient quotient;
    DegreeSummary summary;
    std::vector<std::shared_ptr<const Cochain>> reps;
    bool reps_built = false;
};

bool same_group(const FiniteGroup& a, const FiniteGroup& b)
{
    if (&a == &b)
        return true;
    if (a.order() != b.order())
        return false;
    for (Elt x = 0; x < a.order(); ++x)
        for (Elt y = 0; y < a.order(); ++y)
            if (a.mul(x, y) != b.mul(x, y))
                return false;
    return true;
}

// ---------------------------------------------------------------------------

CohomologyClass::CohomologyClass(ContextPtr ctx, size_t degree, std::vector<uint64_t> coords,
                                 std::shared_ptr<const Cochain> representative)
    : ctx_(std::move(ctx)), degree_(degree), coords_(std::move(coords)), rep_(std::move(representative))
{
    const auto& f = ctx_->invariant_factors(degree_);
    if (coords_.size() != f.size())
        fail(ErrorCode::MalformedInput, "class coordinates have the wrong length for H^" + std::to_string(degree_));
    for (size_t t = 0; t < f.size(); ++t)
        coords_[t] %= f[t];
}

bool CohomologyClass::is_zero() const
{
    for (uint64_t c : coords_)
        if (c != 0)
            return false;
    return true;
}

Cochain CohomologyClass::representative() const
{
    if (rep_)
        return *rep_;
    return ctx_->combine(degree_, coords_);
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& o) const
{
    if (ctx_ != o.ctx_)
        fail(ErrorCode::ContextMismatch, "sum of classes from different contexts");
    if (degree_ != o.degree_)
        fail(ErrorCode::DegreeMismatch, "sum of classes of different degrees");
    std::vector<uint64_t> c = coords_;
    const auto& f = ctx_->invariant_factors(degree_);
    for (size_t t = 0; t < c.size(); ++t)
        c[t] = (c[t] + o.coords_[t]) % f[t];
    return CohomologyClass(ctx_, degree_, std::move(c));
}

CohomologyClass CohomologyClass::operator-() const
{
    std::vector<uint64_t> c = coords_;
    const auto& f = ctx_->invariant_factors(degree_);
    for (size_t t = 0; t < c.size(); ++t)
        c[t] = zn::negmod(c[t], f[t]);
    return CohomologyClass(ctx_, degree_, std::move(c));
}

CohomologyClass CohomologyClass::operator-(const CohomologyClass& o) const { return *this + (-o); }

CohomologyClass CohomologyClass::scaled(uint64_t k) const
{
    std::vector<uint64_t> c = coords_;
    const auto& f = ctx_->invariant_factors(degree_);
    for (size_t t = 0; t < c.size(); ++t)
        c[t] = zn::mulmod(k % f[t], c[t], f[t]);
    return CohomologyClass(ctx_, degree_, std::move(c));
}

bool CohomologyClass::operator==(const CohomologyClass& o) const { return ctx_->classes_equal(*this, o); }

// ---------------------------------------------------------------------------

CohomologyContext::CohomologyContext(ModulePtr module, size_t max_degree)
    : module_(std::move(module)), max_degree_(max_degree),
      modulus_(std::max<uint64_t>(module_->carrier().exponent(), 2)),
      resolution_(module_->group(), modulus_)
{
}

ContextPtr CohomologyContext::build(ModulePtr module, size_t max_degree)
{
    if (!module)
        fail(ErrorCode::MalformedInput, "cohomology needs a module");
    checked_table_size(module->group()->order(), max_degree + 1, module->carrier().dim());
    auto ctx = std::shared_ptr<CohomologyContext>(new CohomologyContext(std::move(module), max_degree));
    for (size_t n = 0; n <= max_degree; ++n)
        ctx->degree(n);
    return ctx;
}

AdditiveMap CohomologyContext::cochain_differential(size_t n) const
{
    resolution_.extend_to(n + 1);
    const Carrier& A = module_->carrier();
    const size_t d = A.dim();
    const size_t q = group()->order();
    const size_t ks = resolution_.rank(n), kt = resolution_.rank(n + 1);
    Carrier src = A.power(ks), tgt = A.power(kt);
    IntMatrix m(tgt.dim(), std::vector<int64_t>(src.dim(), 0));
    for (size_t j = 0; j < kt; ++j) {
        const zn::Vec& bd = resolution_.boundary(n + 1, j);
        for (size_t i = 0; i < ks; ++i)
            for (Elt g = 0; g < q; ++g) {
                uint64_t c = bd[i * q + g];
                if (c == 0)
                    continue;
                const IntMatrix& act = module_->action(g).matrix();
                for (size_t a = 0; a < d; ++a)
                    for (size_t b = 0; b < d; ++b) {
                        uint64_t mod = A.modulus(a);
                        auto& e = m[j * d + a][i * d + b];
                        e = static_cast<int64_t>((static_cast<uint64_t>(e) +
                                                  (c % mod) * static_cast<uint64_t>(act[a][b])) % mod);
                    }
            }
    }
    return AdditiveMap(src, tgt, std::move(m));
}

const CohomologyContext::Degree& CohomologyContext::degree(size_t n) const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    return degree_locked(n);
}

const CohomologyContext::Degree& CohomologyContext::degree_locked(size_t n) const
{
    while (degrees_.size() <= n) {
        const size_t m = degrees_.size();
        checked_table_size(group()->order(), m + 1, module_->carrier().dim());
        auto deg = std::make_unique<Degree>();
        deg->n = m;
        AdditiveMap delta = cochain_differential(m);
        deg->hom = delta.source();
        deg->cocycles = kernel(delta);
        deg->coboundaries = m == 0 ? Subgroup::trivial(deg->hom) : image(cochain_differential(m - 1));
        if (!deg->coboundaries.is_subgroup_of(deg->cocycles))
            fail(ErrorCode::Internal, "resolution differential does not square to zero");
        deg->quotient = FiniteQuotient(deg->cocycles, deg->coboundaries);

        DegreeSummary& s = deg->summary;
        s.degree = m;
        s.invariant_factors = deg->quotient.factors();
        const uint64_t cells = checked_power(group()->order(), m, UINT64_MAX);
        s.cochains = order_of(module_->carrier()).pow(cells);
        for (uint64_t f : s.invariant_factors)
            s.cohomology *= GroupOrder::of(f);
        if (m == 0) {
            s.coboundaries = GroupOrder();
        } else {
            const DegreeSummary& prev = degrees_[m - 1]->summary;
            s.coboundaries = prev.cochains;
            s.coboundaries /= prev.cocycles;
        }
        s.cocycles = s.coboundaries;
        s.cocycles *= s.cohomology;
        degrees_.push_back(std::move(deg));
    }
    return *degrees_[n];
}

const std::vector<uint64_t>& CohomologyContext::invariant_factors(size_t n) const
{
    return degree(n).summary.invariant_factors;
}

DegreeSummary CohomologyContext::summary(size_t n) const { return degree(n).summary; }

std::vector<uint64_t> CohomologyContext::pullback_coordinates(const Degree& deg, const Cochain& phi) const
{
    const size_t n = deg.n;
    const Carrier& A = module_->carrier();
    const size_t d = A.dim();
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    const size_t k = resolution_.rank(n);
    Element z(k * d, 0);
    auto raw = phi.raw();
    for (size_t j = 0; j < k; ++j) {
        for (auto [cell, coef] : resolution_.to_bar(n, j))
            for (size_t a = 0; a < d; ++a) {
                uint64_t mod = A.modulus(a);
                z[j * d + a] = (z[j * d + a] + (coef % mod) * raw[cell * d + a]) % mod;
            }
    }
    return deg.quotient.coordinates(z);
}

void CohomologyContext::build_representatives(const Degree& cdeg) const
{
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (cdeg.reps_built)
        return;
    auto& deg = const_cast<Degree&>(cdeg);
    const size_t n = deg.n;
    const Carrier& A = module_->carrier();
    const size_t d = A.dim();
    const size_t q = group()->order();
    resolution_.build_from_bar(n);
    const size_t k = resolution_.rank(n);

    for (size_t t = 0; t < deg.quotient.generators().size(); ++t) {
        const Element& z = deg.quotient.generators()[t];
        // g.z_j for every (j, g)
        std::vector<Element> gz(k * q);
        for (size_t j = 0; j < k; ++j) {
            Element zj(z.begin() + static_cast<std::ptrdiff_t>(j * d),
                       z.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
            for (Elt g = 0; g < q; ++g)
                gz[j * q + g] = module_->act(g, zj);
        }
        auto rep = std::make_shared<Cochain>(module_, n);
        auto out = rep->raw();
        std::vector<uint64_t> acc(d);
        for (uint64_t cell = 0; cell < rep->size(); ++cell) {
            auto y = resolution_.from_bar(n, cell);
            std::fill(acc.begin(), acc.end(), 0);
            for (size_t idx = 0; idx < y.size(); ++idx) {
                uint64_t c = y[idx];
                if (c == 0)
                    continue;
                for (size_t a = 0; a < d; ++a)
                    acc[a] = (acc[a] + (c % A.modulus(a)) * gz[idx][a]) % A.modulus(a);
            }
            for (size_t a = 0; a < d; ++a)
                out[cell * d + a] = static_cast<uint32_t>(acc[a]);
        }
        auto coords = pullback_coordinates(deg, *rep);
        for (size_t s = 0; s < coords.size(); ++s)
            if (coords[s] != (s == t ? 1 % deg.summary.invariant_factors[s] : 0))
                fail(ErrorCode::Internal, "basis representative of H^" + std::to_string(n) +
                                              " does not return to its own class");
        deg.reps.push_back(std::move(rep));
    }
    deg.reps_built = true;
}

const Cochain& CohomologyContext::basis_representative(size_t n, size_t t) const
{
    const Degree& deg = degree(n);
    build_representatives(deg);
    if (t >= deg.reps.size())
        fail(ErrorCode::IndexOutOfRange, "H^" + std::to_string(n) + " has no basis class " + std::to_string(t));
    return *deg.reps[t];
}

CohomologyClass CohomologyContext::basis_class(size_t n, size_t t) const
{
    const auto& f = invariant_factors(n);
    if (t >= f.size())
        fail(ErrorCode::IndexOutOfRange, "H^" + std::to_string(n) + " has no basis class " + std::to_string(t));
    std::vector<uint64_t> c(f.size(), 0);
    c[t] = 1;
    return CohomologyClass(shared_from_this(), n, std::move(c));
}

CohomologyClass CohomologyContext::zero_class(size_t n) const
{
    return CohomologyClass(shared_from_this(), n, std::vector<uint64_t>(rank(n), 0));
}

CohomologyClass CohomologyContext::from_coordinates(size_t n, std::vector<uint64_t> coords) const
{
    return CohomologyClass(shared_from_this(), n, std::move(coords));
}

CohomologyClass CohomologyContext::unit_class(const Element& unit) const
{
    return class_of(Cochain::constant(module_, unit));
}

bool CohomologyContext::accepts(const Cochain& phi) const
{
    return phi.carrier() == module_->carrier() && same_group(*phi.group(), *group());
}

std::vector<uint64_t> CohomologyContext::coordinates_of(const Cochain& phi) const
{
    if (!accepts(phi)) {
        if (!same_group(*phi.group(), *group()))
            fail(ErrorCode::GroupMismatch, "cochain lives over a different group");
        fail(ErrorCode::ContextMismatch, "cochain has coefficients outside this context's module");
    }
    if (!is_cocycle(phi))
        fail(ErrorCode::NotACocycle, "cochain of degree " + std::to_string(phi.degree()) + " is not a cocycle");
    return pullback_coordinates(degree(phi.degree()), phi);
}

CohomologyClass CohomologyContext::class_of(const Cochain& phi) const
{
    auto coords = coordinates_of(phi);
    return CohomologyClass(shared_from_this(), phi.degree(), std::move(coords), std::make_shared<Cochain>(phi));
}

bool CohomologyContext::is_cohomologous(const Cochain& a, const Cochain& b) const
{
    if (a.degree() != b.degree())
        fail(ErrorCode::DegreeMismatch, "cochains of different degrees");
    return coordinates_of(a) == coordinates_of(b);
}

bool CohomologyContext::classes_equal(const CohomologyClass& a, const CohomologyClass& b) const
{
    if (a.context() != b.context())
        fail(ErrorCode::ContextMismatch, "classes from different contexts");
    if (a.degree() != b.degree())
        fail(ErrorCode::DegreeMismatch, "classes of degree " + std::to_string(a.degree()) + " and " +
                                            std::to_string(b.degree()));
    return a.coordinates() == b.coordinates();
}

Cochain CohomologyContext::combine(size_t n, const std::vector<uint64_t>& coords) const
{
    Cochain out(module_, n);
    for (size_t t = 0; t < coords.size(); ++t)
        if (coords[t] != 0)
            out += basis_representative(n, t).scaled(coords[t]);
    return out;
}

} // namespace bdcoh

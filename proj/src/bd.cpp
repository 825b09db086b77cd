#include "bdcoh/bd.hpp"

#include "bdcoh/error.hpp"
#include "bdcoh/products.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace bdcoh {

namespace {

using Vec = std::vector<uint64_t>;

std::string show(const Vec& v) { return show_element(v); }

bool all_zero(const Vec& v)
{
    for (uint64_t x : v)
        if (x != 0)
            return false;
    return true;
}

void axpy_mod(Vec& acc, uint64_t c, const Vec& v, uint64_t p)
{
    if (c == 0)
        return;
    if (acc.size() < v.size())
        acc.resize(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        acc[i] = (acc[i] + c * v[i]) % p;
}

// (-1)^k
int sgn(long long k) { return (k % 2 == 0) ? 1 : -1; }

uint64_t signed_unit(int s, uint64_t p) { return s > 0 ? 1 : p - 1; }

// First failure of a family of identity checks, plus a count.
struct Tally {
    explicit Tally(std::string n) : name(std::move(n)) {}

    std::string name;
    bool ok = true;
    std::string witness;
    size_t count = 0;

    void record(bool holds, const std::function<std::string()>& describe)
    {
        ++count;
        if (!holds && ok) {
            ok = false;
            witness = describe();
        }
    }
    void put(Report& rep, const std::string& unit = "cases") const
    {
        rep.add(name, ok, witness, "checked " + std::to_string(count) + " " + unit);
    }
};

} // namespace

// ---------------------------------------------------------------------------

ShortExactSequence ThetaFamily::member_ses(Elt x) const
{
    if (x >= members.size())
        fail(ErrorCode::UnknownElement, "no family member for element " + std::to_string(x));
    if (!members[x])
        fail(ErrorCode::MalformedInput, "member " + group->label(x) + " is the zero retraction");
    return make_ses(A, B, members[x]->iota, pi, s, members[x]->r);
}

SubgroupMap ThetaFamily::retraction(Elt x) const
{
    if (x >= members.size())
        fail(ErrorCode::UnknownElement, "no family member for element " + std::to_string(x));
    if (members[x])
        return members[x]->r;
    return SubgroupMap::zero(kernel(pi), A->carrier());
}

ThetaFamily make_family(AlgebraPtr A, AlgebraPtr B, AdditiveMap pi, std::vector<Element> s,
                        std::vector<std::optional<FamilyMember>> members)
{
    if (!A || !B)
        fail(ErrorCode::MalformedInput, "family needs both algebras");
    const Carrier& ca = A->carrier();
    if (ca.dim() == 0)
        fail(ErrorCode::MalformedInput, "A must be a nonzero F_p-vector space");
    uint64_t p = ca.modulus(0);
    for (size_t i = 0; i < ca.dim(); ++i)
        if (ca.modulus(i) != p)
            fail(ErrorCode::MalformedInput, "A must be an F_p-vector space (all moduli equal)");
    if (!zn::is_prime(p))
        fail(ErrorCode::MalformedInput, "A must be over a prime field, modulus " + std::to_string(p));
    if (!same_group(*A->group(), *B->group()))
        fail(ErrorCode::GroupMismatch, "A and B are modules over different groups");
    const auto& G = *A->group();
    if (members.size() != G.order())
        fail(ErrorCode::MalformedInput, "family needs one member per group element (" + std::to_string(G.order()) +
                                            "), got " + std::to_string(members.size()));
    ThetaFamily fam{A->group(), A, B, std::move(pi), std::move(s), std::move(members)};
    for (Elt x = 0; x < fam.members.size(); ++x) {
        if (!fam.members[x])
            continue;
        try {
            (void)fam.member_ses(x);
        } catch (const Error& e) {
            fail(e.code(), "member " + G.label(x) + ": " + e.what());
        }
        if (!(fam.members[x]->r.domain() == kernel(fam.pi)))
            fail(ErrorCode::MalformedInput, "member " + G.label(x) + ": r must be defined on Ker pi");
    }
    return fam;
}

// ---------------------------------------------------------------------------

ThetaOperators::ThetaOperators(const ThetaFamily& family, ContextPtr ctx)
    : family_(&family), ctx_(std::move(ctx))
{
    ses_.resize(family.members.size());
    for (Elt x = 0; x < family.members.size(); ++x)
        if (family.members[x])
            ses_[x] = family.member_ses(x);
}

const std::vector<Vec>& ThetaOperators::matrix(Elt x, size_t n) const
{
    if (x >= ses_.size())
        fail(ErrorCode::UnknownElement, "no family member for element " + std::to_string(x));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({x, n});
    if (it != cache_.end())
        return it->second;
    std::vector<Vec> rows;
    size_t target = ctx_->rank(n + 1);
    for (size_t t = 0; t < ctx_->rank(n); ++t) {
        if (!ses_[x])
            rows.emplace_back(target, 0);
        else
            rows.push_back(theta_class(*ses_[x], ctx_->basis_class(n, t)).coordinates());
    }
    return cache_.emplace(std::make_pair(x, n), std::move(rows)).first->second;
}

Vec ThetaOperators::apply(Elt x, size_t n, const Vec& coords) const
{
    const auto& m = matrix(x, n);
    uint64_t p = family_->prime();
    Vec out(ctx_->rank(n + 1), 0);
    for (size_t t = 0; t < m.size() && t < coords.size(); ++t)
        axpy_mod(out, coords[t] % p, m[t], p);
    return out;
}

// ---------------------------------------------------------------------------

Report validate_situation_starstar(const ThetaFamily& family, size_t cutoff)
{
    Report rep;
    rep.title = "situation-star-star";
    const auto& G = *family.group;
    uint64_t p = family.prime();

    for (Elt x = 0; x < family.members.size(); ++x) {
        if (!family.members[x]) {
            rep.notes.push_back("member " + G.label(x) +
                                " carries the zero retraction: no sequence is attached and theta_" + G.label(x) +
                                " is taken to be 0");
            continue;
        }
        rep.merge(validate_situation_star(family.member_ses(x)), "member " + G.label(x) + ": ");
    }
    bool members_ok = rep.passed();

    Tally ext{"extension_condition"};
    for (Elt y = 0; y < G.order(); ++y)
        for (Elt z = 0; z < G.order(); ++z) {
            bool holds = false;
            std::string why;
            try {
                SubgroupMap f = family.retraction(G.mul(y, z)).sub(family.retraction(y)).sub(family.retraction(z));
                holds = equivariant_extension_exists(f, *family.B, *family.A).exists;
                if (!holds)
                    why = "no equivariant extension";
            } catch (const Error& e) {
                why = e.what();
            }
            ext.record(holds, [&] {
                return "r_{" + G.label(y) + "*" + G.label(z) + "} - r_" + G.label(y) + " - r_" + G.label(z) + ": " +
                       why;
            });
        }
    ext.put(rep, "pairs (y, z)");

    if (!members_ok) {
        rep.notes.push_back("theta identities skipped: some member fails situation-star");
        return rep;
    }

    try {
        ContextPtr ctx = CohomologyContext::build(family.A, cutoff + 1);
        ThetaOperators ops(family, ctx);
        Tally add{"theta_additive"};
        Tally sq{"theta_products_vanish"};
        for (Elt x = 0; x < G.order(); ++x)
            for (Elt y = 0; y < G.order(); ++y)
                for (size_t n = 0; n <= cutoff; ++n)
                    for (size_t t = 0; t < ctx->rank(n); ++t) {
                        Vec sum = ops.matrix(x, n)[t];
                        axpy_mod(sum, 1, ops.matrix(y, n)[t], p);
                        const Vec& lhs = ops.matrix(G.mul(x, y), n)[t];
                        add.record(lhs == sum, [&] {
                            return "H^" + std::to_string(n) + "[" + std::to_string(t) + "]: theta_" +
                                   G.label(G.mul(x, y)) + " = " + show(lhs) + ", theta_" + G.label(x) + " + theta_" +
                                   G.label(y) + " = " + show(sum);
                        });
                        if (n + 1 <= cutoff) {
                            Vec tt = ops.apply(x, n + 1, ops.matrix(y, n)[t]);
                            sq.record(all_zero(tt), [&] {
                                return "theta_" + G.label(x) + " theta_" + G.label(y) + " H^" + std::to_string(n) +
                                       "[" + std::to_string(t) + "] = " + show(tt);
                            });
                        }
                    }
        add.put(rep, "basis classes");
        sq.put(rep, "basis classes");
    } catch (const Error& e) {
        rep.add("theta_identities", false, e.what());
    }
    return rep;
}

// ---------------------------------------------------------------------------

uint64_t BDElement::modulus() const { return owner_ ? owner_->prime() : 2; }

void BDElement::check_owner(const BDElement& o) const
{
    if (owner_ && o.owner_ && owner_ != o.owner_)
        fail(ErrorCode::ContextMismatch, "elements of different BD algebras");
}

std::optional<size_t> BDElement::degree() const
{
    std::optional<size_t> d;
    for (const auto& [k, v] : terms_) {
        if (d && *d != k.second)
            return std::nullopt;
        d = k.second;
    }
    return d;
}

void BDElement::add_term(Elt g, size_t n, const Vec& coords, uint64_t scalar)
{
    uint64_t p = modulus();
    scalar %= p;
    if (scalar == 0 || all_zero(coords))
        return;
    auto& v = terms_[{g, n}];
    axpy_mod(v, scalar, coords, p);
    if (all_zero(v))
        terms_.erase({g, n});
}

BDElement BDElement::operator+(const BDElement& o) const
{
    check_owner(o);
    BDElement out = *this;
    if (!out.owner_)
        out.owner_ = o.owner_;
    for (const auto& [k, v] : o.terms_)
        out.add_term(k.first, k.second, v);
    return out;
}

BDElement BDElement::operator-(const BDElement& o) const
{
    check_owner(o);
    BDElement out = *this;
    if (!out.owner_)
        out.owner_ = o.owner_;
    uint64_t p = out.modulus();
    for (const auto& [k, v] : o.terms_)
        out.add_term(k.first, k.second, v, p - 1);
    return out;
}

BDElement BDElement::scaled(uint64_t c) const
{
    BDElement out(owner_);
    for (const auto& [k, v] : terms_)
        out.add_term(k.first, k.second, v, c);
    return out;
}

bool BDElement::operator==(const BDElement& o) const
{
    check_owner(o);
    return terms_ == o.terms_;
}

std::string BDElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << (owner_ ? owner_->group().label(k.first) : std::to_string(k.first)) << "|H^" << k.second << show(v);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::shared_ptr<const BDAlgebra> BDAlgebra::create(ThetaFamily family, size_t cutoff)
{
    return std::shared_ptr<const BDAlgebra>(new BDAlgebra(std::move(family), cutoff));
}

BDAlgebra::BDAlgebra(ThetaFamily family, size_t cutoff)
    : family_(std::move(family))
{
    validation_ = validate_situation_starstar(family_, cutoff);
    ctx_ = CohomologyContext::build(family_.A, cutoff + 1);
    theta_ = std::make_unique<ThetaOperators>(family_, ctx_);
}

void BDAlgebra::require_validated() const
{
    if (!validated()) {
        const Check* c = validation_.first_failure();
        fail(ErrorCode::FamilyNotValidated,
             "family does not satisfy situation-star-star" + (c ? " (" + c->name + ")" : std::string()));
    }
}

void BDAlgebra::check(const BDElement& u) const
{
    if (u.owner() && u.owner() != this)
        fail(ErrorCode::ContextMismatch, "element belongs to a different BD algebra");
}

std::string BDAlgebra::label(Elt g, size_t n, size_t t) const
{
    return group().label(g) + "|H^" + std::to_string(n) + "[" + std::to_string(t) + "]";
}

CohomologyClass BDAlgebra::theta_x(Elt x, const CohomologyClass& c) const
{
    require_validated();
    if (x >= group().order())
        fail(ErrorCode::UnknownElement, "unknown group element " + std::to_string(x));
    if (c.context() != ctx_)
        fail(ErrorCode::ContextMismatch, "class is not from this algebra's context");
    return ctx_->from_coordinates(c.degree() + 1, theta_->apply(x, c.degree(), c.coordinates()));
}

BDElement BDAlgebra::unit() const
{
    require_validated();
    return unit_();
}

BDElement BDAlgebra::mul(const BDElement& u, const BDElement& v) const
{
    require_validated();
    return mul_(u, v);
}

BDElement BDAlgebra::bracket(const BDElement& u, const BDElement& v) const
{
    require_validated();
    return bracket_(u, v);
}

BDElement BDAlgebra::delta(const BDElement& u) const
{
    require_validated();
    return delta_(u);
}

BDElement BDAlgebra::unit_() const
{
    BDElement out(this);
    out.add_term(group().identity(), 0, ctx_->unit_class(family_.A->unit()).coordinates());
    return out;
}

BDElement BDAlgebra::basis_element(Elt g, size_t n, size_t t) const
{
    if (g >= group().order())
        fail(ErrorCode::UnknownElement, "unknown group element " + std::to_string(g));
    if (t >= ctx_->rank(n))
        fail(ErrorCode::IndexOutOfRange, "H^" + std::to_string(n) + " has rank " + std::to_string(ctx_->rank(n)));
    Vec v(ctx_->rank(n), 0);
    v[t] = 1;
    BDElement out(this);
    out.add_term(g, n, v);
    return out;
}

BDElement BDAlgebra::element(Elt g, const CohomologyClass& c) const
{
    if (g >= group().order())
        fail(ErrorCode::UnknownElement, "unknown group element " + std::to_string(g));
    if (c.context() != ctx_)
        fail(ErrorCode::ContextMismatch, "class is not from this algebra's context");
    BDElement out(this);
    out.add_term(g, c.degree(), c.coordinates());
    return out;
}

std::vector<BDElement> BDAlgebra::basis(size_t max_degree) const
{
    std::vector<BDElement> out;
    for (size_t n = 0; n <= max_degree; ++n)
        for (Elt g = 0; g < group().order(); ++g)
            for (size_t t = 0; t < ctx_->rank(n); ++t)
                out.push_back(basis_element(g, n, t));
    return out;
}

const std::vector<std::vector<Vec>>& BDAlgebra::cup_table(size_t m, size_t n) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cup_cache_.find({m, n});
    if (it != cup_cache_.end())
        return it->second;
    std::vector<std::vector<Vec>> table(ctx_->rank(m));
    for (size_t i = 0; i < ctx_->rank(m); ++i)
        for (size_t j = 0; j < ctx_->rank(n); ++j)
            table[i].push_back(cup_class(ctx_->basis_class(m, i), ctx_->basis_class(n, j)).coordinates());
    return cup_cache_.emplace(std::make_pair(m, n), std::move(table)).first->second;
}

Vec BDAlgebra::cup_coords(size_t m, const Vec& a, size_t n, const Vec& b) const
{
    uint64_t p = prime();
    Vec out(ctx_->rank(m + n), 0);
    if (all_zero(a) || all_zero(b))
        return out;
    const auto& table = cup_table(m, n);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            axpy_mod(out, a[i] * b[j] % p, table[i][j], p);
    return out;
}

BDElement BDAlgebra::mul_(const BDElement& u, const BDElement& v) const
{
    check(u);
    check(v);
    BDElement out(this);
    for (const auto& [ku, a] : u.terms())
        for (const auto& [kv, b] : v.terms())
            out.add_term(group().mul(ku.first, kv.first), ku.second + kv.second,
                         cup_coords(ku.second, a, kv.second, b));
    return out;
}

BDElement BDAlgebra::bracket_(const BDElement& u, const BDElement& v) const
{
    check(u);
    check(v);
    uint64_t p = prime();
    BDElement out(this);
    for (const auto& [ku, a] : u.terms())
        for (const auto& [kv, b] : v.terms()) {
            auto [x, m] = ku;
            auto [y, n] = kv;
            Elt xy = group().mul(x, y);
            out.add_term(xy, m + n + 1, cup_coords(m + 1, theta_->apply(y, m, a), n, b), signed_unit(sgn(m), p));
            out.add_term(xy, m + n + 1, cup_coords(m, a, n + 1, theta_->apply(x, n, b)));
        }
    return out;
}

BDElement BDAlgebra::delta_(const BDElement& u) const
{
    check(u);
    BDElement out(this);
    for (const auto& [k, a] : u.terms())
        out.add_term(k.first, k.second + 1, theta_->apply(k.first, k.second, a));
    return out;
}

Report BDAlgebra::verify_axioms(size_t cutoff, bool force, size_t pair_cutoff) const
{
    if (!group().is_abelian())
        fail(ErrorCode::NonAbelianGroup, "BD structure needs an abelian group");
    if (!force)
        require_validated();
    if (pair_cutoff == kAutoPairCutoff)
        pair_cutoff = cutoff + 2;
    pair_cutoff = std::max(pair_cutoff, cutoff);
    uint64_t p = prime();

    struct B {
        BDElement e;
        size_t deg;
        std::string label;
    };
    std::vector<B> basis;
    for (size_t n = 0; n <= pair_cutoff; ++n)
        for (Elt g = 0; g < group().order(); ++g)
            for (size_t t = 0; t < ctx_->rank(n); ++t)
                basis.push_back({basis_element(g, n, t), n, label(g, n, t)});

    auto sc = [&](const BDElement& e, int s) { return e.scaled(signed_unit(s, p)); };
    auto pair_w = [](const B& a, const B& b, const BDElement& l, const BDElement& r) {
        return "(" + a.label + ", " + b.label + "): lhs " + l.str() + ", rhs " + r.str();
    };
    auto triple_w = [](const B& a, const B& b, const B& c, const std::string& rest) {
        return "(" + a.label + ", " + b.label + ", " + c.label + "): " + rest;
    };

    Tally comm{"graded_commutative"}, assoc{"associative"}, unital{"unital"};
    Tally anti{"antisymmetry"}, literal{"antisymmetry_literal_sign"}, jac{"jacobi"}, pois{"poisson"};
    Tally dsq{"delta_square_zero"}, bdeq{"bd_equation"}, bdeg{"bracket_degree"}, ddeg{"delta_degree"};

    BDElement one = unit_();
    for (const auto& a : basis) {
        BDElement l = mul_(one, a.e), r = mul_(a.e, one);
        unital.record(l == a.e && r == a.e, [&] { return a.label + ": 1*a = " + l.str() + ", a*1 = " + r.str(); });
        BDElement d = delta_(a.e);
        ddeg.record(d.is_zero() || d.degree() == a.deg + 1, [&] { return a.label + ": " + d.str(); });
        BDElement dd = delta_(d);
        dsq.record(dd.is_zero(), [&] { return a.label + ": " + dd.str(); });
    }

    for (const auto& a : basis)
        for (const auto& b : basis) {
            long long m = a.deg, n = b.deg;
            if (a.deg + b.deg > pair_cutoff)
                continue;
            BDElement ab = mul_(a.e, b.e), ba = mul_(b.e, a.e);
            comm.record(ab == sc(ba, sgn(m * n)), [&] { return pair_w(a, b, ab, sc(ba, sgn(m * n))); });

            BDElement br = bracket_(a.e, b.e), rb = bracket_(b.e, a.e);
            bdeg.record(br.is_zero() || br.degree() == a.deg + b.deg + 1, [&] { return pair_w(a, b, br, br); });
            BDElement koszul = sc(rb, -sgn((m + 1) * (n + 1)));
            anti.record(br == koszul, [&] { return pair_w(a, b, br, koszul); });
            BDElement lit = sc(rb, sgn((m - 1) * (n - 1)));
            literal.record(br == lit, [&] {
                return pair_w(a, b, br, lit) + " ([b,a] = " + rb.str() + ")";
            });

            BDElement rhs = sc(delta_(ab), sgn(m)) - sc(mul_(delta_(a.e), b.e), sgn(m)) - mul_(a.e, delta_(b.e));
            bdeq.record(br == rhs, [&] { return pair_w(a, b, br, rhs); });
        }

    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis) {
                if (a.deg > cutoff || b.deg > cutoff || a.deg + b.deg + c.deg > cutoff)
                    continue;
                long long m = a.deg, n = b.deg, t = c.deg;
                BDElement l = mul_(mul_(a.e, b.e), c.e), r = mul_(a.e, mul_(b.e, c.e));
                assoc.record(l == r, [&] { return triple_w(a, b, c, "(ab)c = " + l.str() + ", a(bc) = " + r.str()); });

                BDElement j = sc(bracket_(bracket_(a.e, b.e), c.e), sgn((m - 1) * (t - 1))) +
                              sc(bracket_(bracket_(b.e, c.e), a.e), sgn((n - 1) * (m - 1))) +
                              sc(bracket_(bracket_(c.e, a.e), b.e), sgn((t - 1) * (n - 1)));
                jac.record(j.is_zero(), [&] { return triple_w(a, b, c, "cyclic sum = " + j.str()); });

                BDElement pl = bracket_(a.e, mul_(b.e, c.e));
                BDElement pr = mul_(bracket_(a.e, b.e), c.e) + sc(mul_(b.e, bracket_(a.e, c.e)), sgn((m + 1) * n));
                pois.record(pl == pr,
                            [&] { return triple_w(a, b, c, "[a,bc] = " + pl.str() + ", rhs = " + pr.str()); });
            }

    Report rep;
    rep.title = "bd-axioms (triples of total degree <= " + std::to_string(cutoff) + ", pairs <= " +
                std::to_string(pair_cutoff) + ")";
    if (!validated()) {
        const Check* c = validation_.first_failure();
        rep.add("family_validated", false, c ? c->name + ": " + c->witness : std::string(),
                "identities evaluated on an unvalidated family");
    }
    comm.put(rep, "pairs");
    assoc.put(rep, "triples");
    unital.put(rep, "basis elements");
    anti.put(rep, "pairs");
    jac.put(rep, "triples");
    pois.put(rep, "triples");
    dsq.put(rep, "basis elements");
    bdeq.put(rep, "pairs");
    bdeg.put(rep, "pairs");
    ddeg.put(rep, "basis elements");
    rep.info(literal.name, literal.ok, literal.witness,
             "[a,b] = (-1)^((m-1)(n-1)) [b,a] without the Koszul minus sign; checked " +
                 std::to_string(literal.count) + " pairs");
    return rep;
}

CohomologyClass theta_x(const BDAlgebra& bd, Elt x, const CohomologyClass& c) { return bd.theta_x(x, c); }

namespace {
const BDAlgebra& owner_of(const BDElement& u, const BDElement* v = nullptr)
{
    const BDAlgebra* o = u.owner();
    if (v) {
        if (o && v->owner() && o != v->owner())
            fail(ErrorCode::ContextMismatch, "elements of different BD algebras");
        if (!o)
            o = v->owner();
    }
    if (!o)
        fail(ErrorCode::ContextMismatch, "element is not attached to a BD algebra");
    return *o;
}
} // namespace

BDElement bd_mul(const BDElement& u, const BDElement& v) { return owner_of(u, &v).mul(u, v); }
BDElement bd_bracket(const BDElement& u, const BDElement& v) { return owner_of(u, &v).bracket(u, v); }
BDElement bd_delta(const BDElement& u) { return owner_of(u).delta(u); }
Report verify_bd_axioms(const BDAlgebra& bd, size_t cutoff, bool force, size_t pair_cutoff)
{
    return bd.verify_axioms(cutoff, force, pair_cutoff);
}

std::vector<DeltaRow> report_delta_table(const BDAlgebra& bd, size_t max_degree)
{
    if (!bd.validated())
        fail(ErrorCode::FamilyNotValidated, "delta table needs a validated family");
    std::vector<DeltaRow> rows;
    for (size_t n = 0; n <= max_degree; ++n)
        for (Elt g = 0; g < bd.group().order(); ++g)
            for (size_t t = 0; t < bd.context()->rank(n); ++t)
                rows.push_back({g, n, t, bd.operators().matrix(g, n)[t]});
    return rows;
}

// ---------------------------------------------------------------------------

GradedAlgebraInstance export_instance(const BDAlgebra& bd, size_t cutoff, int r)
{
    if (!bd.validated())
        fail(ErrorCode::FamilyNotValidated, "export needs a validated family");
    size_t top = cutoff + 2;
    GradedAlgebraInstance inst;
    inst.modulus = bd.prime();
    inst.r = r;
    inst.cutoff = static_cast<int>(cutoff);

    std::map<std::tuple<Elt, size_t, size_t>, size_t> index;
    std::vector<BDElement> basis;
    for (size_t n = 0; n <= top; ++n)
        for (Elt g = 0; g < bd.group().order(); ++g)
            for (size_t t = 0; t < bd.context()->rank(n); ++t) {
                index[{g, n, t}] = basis.size();
                basis.push_back(bd.basis_element(g, n, t));
                inst.degrees.push_back(static_cast<int>(n));
                inst.labels.push_back(bd.label(g, n, t));
            }
    size_t N = basis.size();
    auto flatten = [&](const BDElement& e) {
        Vec v(N, 0);
        for (const auto& [k, c] : e.terms())
            for (size_t t = 0; t < c.size(); ++t)
                if (c[t] != 0)
                    v.at(index.at({k.first, k.second, t})) = c[t];
        return v;
    };
    inst.product.assign(N, std::vector<std::optional<Vec>>(N));
    inst.bracket.assign(N, std::vector<std::optional<Vec>>(N));
    inst.op.assign(N, std::nullopt);
    for (size_t i = 0; i < N; ++i) {
        size_t di = inst.degrees[i];
        if (di + 1 <= top)
            inst.op[i] = flatten(bd.delta(basis[i]));
        for (size_t j = 0; j < N; ++j) {
            size_t dj = inst.degrees[j];
            if (di + dj <= top)
                inst.product[i][j] = flatten(bd.mul(basis[i], basis[j]));
            if (di + dj + 1 <= top)
                inst.bracket[i][j] = flatten(bd.bracket(basis[i], basis[j]));
        }
    }
    inst.unit = flatten(bd.unit());
    return inst;
}

namespace {

class TableAlgebra {
public:
    explicit TableAlgebra(const GradedAlgebraInstance& inst) : in_(inst), p_(inst.modulus), n_(inst.degrees.size()) {}

    Vec basis(size_t i) const
    {
        Vec v(n_, 0);
        v[i] = 1;
        return v;
    }
    Vec mul(const Vec& u, const Vec& v) const { return bilinear(in_.product, u, v, "product"); }
    Vec br(const Vec& u, const Vec& v) const { return bilinear(in_.bracket, u, v, "bracket"); }
    Vec op(const Vec& u) const
    {
        Vec out(n_, 0);
        for (size_t i = 0; i < n_; ++i) {
            if (u[i] == 0)
                continue;
            if (!in_.op[i])
                fail(ErrorCode::TablesNotClosed, "operator entry for " + in_.labels[i] + " is missing");
            axpy_mod(out, u[i], *in_.op[i], p_);
        }
        return out;
    }
    Vec add(Vec a, const Vec& b, int s = 1) const
    {
        axpy_mod(a, signed_unit(s, p_), b, p_);
        return a;
    }
    Vec sc(const Vec& a, int s) const { return add(Vec(n_, 0), a, s); }
    std::string str(const Vec& v) const
    {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < n_; ++i)
            if (v[i]) {
                os << (first ? "" : " + ") << v[i] << "*" << in_.labels[i];
                first = false;
            }
        return first ? "0" : os.str();
    }

private:
    Vec bilinear(const std::vector<std::vector<std::optional<Vec>>>& table, const Vec& u, const Vec& v,
                 const char* what) const
    {
        Vec out(n_, 0);
        for (size_t i = 0; i < n_; ++i) {
            if (u[i] == 0)
                continue;
            for (size_t j = 0; j < n_; ++j) {
                if (v[j] == 0)
                    continue;
                if (!table[i][j])
                    fail(ErrorCode::TablesNotClosed, std::string(what) + " entry (" + in_.labels[i] + ", " +
                                                         in_.labels[j] + ") is missing");
                axpy_mod(out, u[i] * v[j] % p_, *table[i][j], p_);
            }
        }
        return out;
    }

    const GradedAlgebraInstance& in_;
    uint64_t p_;
    size_t n_;
};

} // namespace

Report verify_pr_axioms(const GradedAlgebraInstance& inst)
{
    size_t N = inst.degrees.size();
    if (!zn::is_prime(inst.modulus))
        fail(ErrorCode::NotPrime, "instance modulus " + std::to_string(inst.modulus) + " is not prime");
    auto square = [&](const auto& t) {
        if (t.size() != N)
            return false;
        for (const auto& row : t)
            if (row.size() != N)
                return false;
        return true;
    };
    if (inst.labels.size() != N || !square(inst.product) || !square(inst.bracket) ||
        !(inst.op.empty() || inst.op.size() == N))
        fail(ErrorCode::MalformedInput, "instance tables do not match the basis size");
    auto vec_ok = [&](const std::optional<Vec>& v) { return !v || v->size() == N; };
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j)
            if (!vec_ok(inst.product[i][j]) || !vec_ok(inst.bracket[i][j]))
                fail(ErrorCode::MalformedInput, "table entry has the wrong length");
        if (!inst.op.empty() && !vec_ok(inst.op[i]))
            fail(ErrorCode::MalformedInput, "operator entry has the wrong length");
    }
    if (!vec_ok(inst.unit))
        fail(ErrorCode::MalformedInput, "unit has the wrong length");

    TableAlgebra T(inst);
    const int r = inst.r;
    const auto& deg = inst.degrees;
    bool has_op = !inst.op.empty();

    auto homogeneous = [&](const Vec& v, int d) {
        for (size_t k = 0; k < N; ++k)
            if (v[k] % inst.modulus != 0 && deg[k] != d)
                return false;
        return true;
    };

    Report rep;
    rep.title = "P_" + std::to_string(r) + (has_op ? " / BD_" + std::to_string(r) : std::string()) +
                " axioms (total degree <= " + std::to_string(inst.cutoff) + ")";

    Tally pdeg{"product_degree"}, bdeg{"bracket_degree"}, odeg{"operator_degree"};
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) {
            if (inst.product[i][j])
                pdeg.record(homogeneous(*inst.product[i][j], deg[i] + deg[j]), [&] {
                    return inst.labels[i] + " * " + inst.labels[j] + " = " + T.str(*inst.product[i][j]);
                });
            if (inst.bracket[i][j])
                bdeg.record(homogeneous(*inst.bracket[i][j], deg[i] + deg[j] + 1 - r), [&] {
                    return "[" + inst.labels[i] + ", " + inst.labels[j] + "] = " + T.str(*inst.bracket[i][j]);
                });
        }
        if (has_op && inst.op[i])
            odeg.record(homogeneous(*inst.op[i], deg[i] + 1 - r),
                        [&] { return "Delta " + inst.labels[i] + " = " + T.str(*inst.op[i]); });
    }

    std::vector<size_t> low;
    for (size_t i = 0; i < N; ++i)
        if (deg[i] <= inst.cutoff)
            low.push_back(i);

    Tally comm{"graded_commutative"}, assoc{"associative"}, unital{"unital"};
    Tally anti{"antisymmetry"}, jac{"jacobi"}, pois{"poisson"}, dsq{"delta_square_zero"}, bdeq{"bd_equation"};
    auto pw = [&](size_t i, size_t j, const Vec& l, const Vec& rr) {
        return "(" + inst.labels[i] + ", " + inst.labels[j] + "): lhs " + T.str(l) + ", rhs " + T.str(rr);
    };
    auto tw = [&](size_t i, size_t j, size_t k, const std::string& rest) {
        return "(" + inst.labels[i] + ", " + inst.labels[j] + ", " + inst.labels[k] + "): " + rest;
    };
    auto shifted = [&](size_t i) { return static_cast<long long>(deg[i]) - r + 1; };

    for (size_t i : low) {
        Vec a = T.basis(i);
        if (inst.unit) {
            Vec l = T.mul(*inst.unit, a), rr = T.mul(a, *inst.unit);
            unital.record(l == a && rr == a,
                          [&] { return inst.labels[i] + ": 1*a = " + T.str(l) + ", a*1 = " + T.str(rr); });
        }
        if (has_op) {
            Vec dd = T.op(T.op(a));
            dsq.record(all_zero(dd), [&] { return inst.labels[i] + ": " + T.str(dd); });
        }
    }
    for (size_t i : low)
        for (size_t j : low) {
            if (deg[i] + deg[j] > inst.cutoff)
                continue;
            long long m = deg[i], n = deg[j];
            Vec a = T.basis(i), b = T.basis(j);
            Vec ab = T.mul(a, b), ba = T.sc(T.mul(b, a), sgn(m * n));
            comm.record(ab == ba, [&] { return pw(i, j, ab, ba); });
            Vec br = T.br(a, b), rb = T.sc(T.br(b, a), -sgn(shifted(i) * shifted(j)));
            anti.record(br == rb, [&] { return pw(i, j, br, rb); });
            if (has_op) {
                Vec rhs = T.add(T.add(T.sc(T.op(ab), sgn(m)), T.mul(T.op(a), b), -sgn(m)), T.mul(a, T.op(b)), -1);
                bdeq.record(br == rhs, [&] { return pw(i, j, br, rhs); });
            }
        }
    for (size_t i : low)
        for (size_t j : low)
            for (size_t k : low) {
                if (deg[i] + deg[j] + deg[k] > inst.cutoff)
                    continue;
                Vec a = T.basis(i), b = T.basis(j), c = T.basis(k);
                Vec l = T.mul(T.mul(a, b), c), rr = T.mul(a, T.mul(b, c));
                assoc.record(l == rr, [&] { return tw(i, j, k, "(ab)c = " + T.str(l) + ", a(bc) = " + T.str(rr)); });
                long long sa = shifted(i), sb = shifted(j), sc = shifted(k);
                Vec jsum = T.add(T.add(T.sc(T.br(T.br(a, b), c), sgn(sa * sc)), T.br(T.br(b, c), a), sgn(sb * sa)),
                                 T.br(T.br(c, a), b), sgn(sc * sb));
                jac.record(all_zero(jsum), [&] { return tw(i, j, k, "cyclic sum = " + T.str(jsum)); });
                Vec pl = T.br(a, T.mul(b, c));
                Vec pr = T.add(T.mul(T.br(a, b), c), T.mul(b, T.br(a, c)), sgn(sa * deg[j]));
                pois.record(pl == pr, [&] { return tw(i, j, k, "[a,bc] = " + T.str(pl) + ", rhs = " + T.str(pr)); });
            }

    pdeg.put(rep, "entries");
    bdeg.put(rep, "entries");
    if (has_op)
        odeg.put(rep, "entries");
    comm.put(rep, "pairs");
    assoc.put(rep, "triples");
    if (inst.unit)
        unital.put(rep, "basis elements");
    else
        rep.notes.push_back("no unit given; unitality not checked");
    anti.put(rep, "pairs");
    jac.put(rep, "triples");
    pois.put(rep, "triples");
    if (has_op) {
        dsq.put(rep, "basis elements");
        bdeq.put(rep, "pairs");
    }
    return rep;
}

} // namespace bdcoh

#include "bdcoh/products.hpp"

#include "bdcoh/error.hpp"

namespace bdcoh {

Pairing::Pairing(ModulePtr left, ModulePtr right, ModulePtr out, std::vector<std::vector<Element>> table,
                 bool check_equivariance)
    : left_(std::move(left)), right_(std::move(right)), out_(std::move(out)), table_(std::move(table))
{
    if (!left_ || !right_ || !out_)
        fail(ErrorCode::MalformedInput, "pairing needs three modules");
    if (!same_group(*left_->group(), *right_->group()) || !same_group(*left_->group(), *out_->group()))
        fail(ErrorCode::GroupMismatch, "pairing between modules over different groups");
    const Carrier& L = left_->carrier();
    const Carrier& R = right_->carrier();
    const Carrier& C = out_->carrier();
    if (table_.size() != L.dim())
        fail(ErrorCode::MalformedInput, "pairing table needs one row per left generator");
    for (size_t i = 0; i < L.dim(); ++i) {
        if (table_[i].size() != R.dim())
            fail(ErrorCode::MalformedInput, "pairing table needs one column per right generator");
        for (size_t j = 0; j < R.dim(); ++j) {
            const Element& v = table_[i][j];
            if (!C.contains(v))
                fail(ErrorCode::MalformedInput, "pairing value is not an element of the target");
            if (!C.is_zero(C.scale(L.modulus(i), v)) || !C.is_zero(C.scale(R.modulus(j), v)))
                fail(ErrorCode::PairingNotBilinear, "pairing value on generators (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ") is not killed by their orders");
        }
    }
    if (check_equivariance) {
        const FiniteGroup& G = *left_->group();
        for (Elt g = 0; g < G.order(); ++g)
            for (size_t i = 0; i < L.dim(); ++i)
                for (size_t j = 0; j < R.dim(); ++j)
                    if (out_->act(g, table_[i][j]) != apply(left_->act(g, L.basis(i)), right_->act(g, R.basis(j))))
                        fail(ErrorCode::PairingNotBilinear, "pairing is not G-equivariant at " + G.label(g) +
                                                                " on generators (" + std::to_string(i) + "," +
                                                                std::to_string(j) + ")");
    }
}

Pairing Pairing::from_algebra(const AlgebraPtr& algebra)
{
    return Pairing(algebra, algebra, algebra, algebra->structure_constants(), algebra->acts_by_automorphisms());
}

Element Pairing::apply(const Element& a, const Element& b) const
{
    const Carrier& C = out_->carrier();
    Element out = C.zero();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0)
                continue;
            const Element& v = table_[i][j];
            for (size_t k = 0; k < C.dim(); ++k) {
                uint64_t m = C.modulus(k);
                out[k] = (out[k] + (a[i] % m) * (b[j] % m) % m * v[k]) % m;
            }
        }
    }
    return out;
}

Cochain cup_cochain(const Cochain& phi, const Cochain& psi, const Pairing& mu)
{
    if (!same_group(*phi.group(), *psi.group()) || !same_group(*phi.group(), *mu.out()->group()))
        fail(ErrorCode::GroupMismatch, "cup product of cochains over different groups");
    if (!(phi.carrier() == mu.left()->carrier()) || !(psi.carrier() == mu.right()->carrier()))
        fail(ErrorCode::MalformedInput, "cochain coefficients do not match the pairing");
    const FiniteGroup& G = *phi.group();
    const size_t m = phi.degree(), n = psi.degree();
    Cochain out(mu.out(), m + n);
    const GModule& right = *mu.right();
    const size_t dC = out.carrier().dim();

    TupleIndex left_index(G.order(), m);
    std::vector<Elt> t(m);
    auto dst = out.raw();
    for (uint64_t i1 = 0; i1 < phi.size(); ++i1) {
        left_index.decode_into(i1, t);
        Elt g = G.identity();
        for (Elt x : t)
            g = G.mul(g, x);
        Element a = phi.at(i1);
        for (uint64_t i2 = 0; i2 < psi.size(); ++i2) {
            Element v = mu.apply(a, right.act(g, psi.at(i2)));
            uint64_t I = i1 * psi.size() + i2;
            for (size_t k = 0; k < dC; ++k)
                dst[I * dC + k] = static_cast<uint32_t>(v[k]);
        }
    }
    return out;
}

Cochain cup_cochain(const Cochain& phi, const Cochain& psi)
{
    auto alg = std::dynamic_pointer_cast<const GAlgebra>(phi.module());
    if (!alg)
        fail(ErrorCode::MalformedInput, "cup product without a pairing needs algebra coefficients");
    if (!(psi.carrier() == alg->carrier()))
        fail(ErrorCode::MalformedInput, "cup product of cochains over different algebras");
    return cup_cochain(phi, psi, Pairing::from_algebra(alg));
}

AlgebraPtr algebra_of(const ContextPtr& ctx)
{
    auto alg = std::dynamic_pointer_cast<const GAlgebra>(ctx->module());
    if (!alg)
        fail(ErrorCode::MalformedInput, "context coefficients are not an algebra");
    return alg;
}

CohomologyClass cup_class(const CohomologyClass& a, const CohomologyClass& b)
{
    if (a.context() != b.context())
        fail(ErrorCode::ContextMismatch, "cup product of classes from different contexts");
    auto alg = algebra_of(a.context());
    Cochain c = cup_cochain(a.representative(), b.representative(), Pairing::from_algebra(alg));
    return a.context()->class_of(c);
}

} // namespace bdcoh

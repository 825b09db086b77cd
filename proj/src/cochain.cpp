#include "bdcoh/cochain.hpp"

#include "bdcoh/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace bdcoh {

namespace {

uint64_t initial_limit()
{
    if (const char* env = std::getenv("BDCOH_TABLE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 3'000'000;
}

std::atomic<uint64_t>& limit_cell()
{
    static std::atomic<uint64_t> cell{initial_limit()};
    return cell;
}

} // namespace

uint64_t table_limit() { return limit_cell().load(); }

void set_table_limit(uint64_t limit) { limit_cell().store(limit == 0 ? initial_limit() : limit); }

uint64_t checked_table_size(size_t group_order, size_t degree, size_t dim)
{
    uint64_t lim = table_limit();
    uint64_t d = dim == 0 ? 1 : dim;
    uint64_t tuples = checked_power(group_order, degree, lim / d);
    return tuples;
}

Cochain::Cochain(ModulePtr module, size_t degree)
    : module_(std::move(module)), degree_(degree)
{
    if (!module_)
        fail(ErrorCode::MalformedInput, "cochain needs a module");
    size_ = checked_table_size(group()->order(), degree_, carrier().dim());
    values_.assign(size_ * carrier().dim(), 0);
}

Element Cochain::at(uint64_t index) const
{
    if (index >= size_)
        fail(ErrorCode::IndexOutOfRange, "cochain index " + std::to_string(index) + " out of range");
    const size_t d = carrier().dim();
    return Element(values_.begin() + static_cast<std::ptrdiff_t>(index * d),
                   values_.begin() + static_cast<std::ptrdiff_t>((index + 1) * d));
}

Element Cochain::at(std::span<const Elt> tuple) const
{
    return at(TupleIndex(group()->order(), degree_).encode(tuple));
}

void Cochain::set(uint64_t index, const Element& value)
{
    if (index >= size_)
        fail(ErrorCode::IndexOutOfRange, "cochain index " + std::to_string(index) + " out of range");
    if (!carrier().contains(value))
        fail(ErrorCode::MalformedInput, "cochain value is not an element of " + carrier().describe());
    const size_t d = carrier().dim();
    for (size_t i = 0; i < d; ++i)
        values_[index * d + i] = static_cast<uint32_t>(value[i]);
}

void Cochain::set(std::span<const Elt> tuple, const Element& value)
{
    set(TupleIndex(group()->order(), degree_).encode(tuple), value);
}

void Cochain::check_compatible(const Cochain& o) const
{
    if (o.degree_ != degree_)
        fail(ErrorCode::DegreeMismatch, "cochains of degree " + std::to_string(degree_) + " and " +
                                            std::to_string(o.degree_));
    if (o.group() != group() && o.group()->order() != group()->order())
        fail(ErrorCode::GroupMismatch, "cochains over different groups");
    if (!(o.carrier() == carrier()))
        fail(ErrorCode::MalformedInput, "cochains with different coefficient carriers");
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    check_compatible(o);
    const size_t d = carrier().dim();
    for (size_t k = 0; k < values_.size(); ++k) {
        uint64_t m = carrier().modulus(k % d);
        values_[k] = static_cast<uint32_t>((uint64_t(values_[k]) + o.values_[k]) % m);
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o)
{
    check_compatible(o);
    const size_t d = carrier().dim();
    for (size_t k = 0; k < values_.size(); ++k) {
        uint64_t m = carrier().modulus(k % d);
        values_[k] = static_cast<uint32_t>((uint64_t(values_[k]) + m - o.values_[k]) % m);
    }
    return *this;
}

Cochain Cochain::operator+(const Cochain& o) const
{
    Cochain r = *this;
    r += o;
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const
{
    Cochain r = *this;
    r -= o;
    return r;
}

Cochain Cochain::operator-() const
{
    Cochain r(module_, degree_);
    r -= *this;
    return r;
}

Cochain Cochain::scaled(uint64_t c) const
{
    Cochain r = *this;
    const size_t d = carrier().dim();
    for (size_t k = 0; k < r.values_.size(); ++k) {
        uint64_t m = carrier().modulus(k % d);
        r.values_[k] = static_cast<uint32_t>((c % m) * r.values_[k] % m);
    }
    return r;
}

bool Cochain::is_zero() const
{
    for (uint32_t v : values_)
        if (v != 0)
            return false;
    return true;
}

bool Cochain::operator==(const Cochain& o) const
{
    return degree_ == o.degree_ && carrier() == o.carrier() && values_ == o.values_;
}

Cochain Cochain::from_function(ModulePtr module, size_t degree,
                               const std::function<Element(std::span<const Elt>)>& f)
{
    Cochain c(std::move(module), degree);
    TupleIndex ti(c.group()->order(), degree);
    std::vector<Elt> tuple(degree);
    for (uint64_t i = 0; i < c.size(); ++i) {
        ti.decode_into(i, tuple);
        Element v = f(tuple);
        if (v.size() != c.carrier().dim())
            fail(ErrorCode::MalformedInput, "cochain value has wrong dimension");
        for (size_t k = 0; k < v.size(); ++k)
            v[k] %= c.carrier().modulus(k);
        c.set(i, v);
    }
    return c;
}

Cochain Cochain::constant(ModulePtr module, const Element& a)
{
    Cochain c(std::move(module), 0);
    c.set(0, a);
    return c;
}

Cochain Cochain::random(ModulePtr module, size_t degree, std::mt19937_64& rng)
{
    Cochain c(std::move(module), degree);
    const size_t d = c.carrier().dim();
    for (size_t k = 0; k < c.values_.size(); ++k)
        c.values_[k] = static_cast<uint32_t>(rng() % c.carrier().modulus(k % d));
    return c;
}

Cochain coboundary(const Cochain& phi)
{
    const GModule& mod = *phi.module();
    const FiniteGroup& G = *phi.group();
    const size_t n = phi.degree();
    const uint64_t q = G.order();
    const size_t d = phi.carrier().dim();
    Cochain out(phi.module(), n + 1);

    std::vector<uint64_t> pw(n + 3, 1);
    for (size_t k = 1; k < pw.size(); ++k)
        pw[k] = pw[k - 1] * q;

    auto src = phi.raw();
    auto dst = out.raw();
    std::vector<uint64_t> acc(d);
    std::vector<Elt> t(n + 1);
    TupleIndex ti(q, n + 1);

    std::vector<uint64_t> mods(d);
    for (size_t i = 0; i < d; ++i)
        mods[i] = phi.carrier().modulus(i);

    auto add_term = [&](uint64_t idx, bool negative) {
        for (size_t i = 0; i < d; ++i) {
            uint64_t v = src[idx * d + i];
            acc[i] += negative ? (mods[i] - v) : v;
        }
    };

    for (uint64_t I = 0; I < out.size(); ++I) {
        ti.decode_into(I, t);
        std::fill(acc.begin(), acc.end(), 0);

        // g1 * phi(g2..g_{n+1})
        uint64_t tail = I % pw[n];
        if (mod.is_trivial()) {
            add_term(tail, false);
        } else {
            const IntMatrix& a = mod.action(t[0]).matrix();
            for (size_t i = 0; i < d; ++i) {
                uint64_t s = 0;
                for (size_t j = 0; j < d; ++j)
                    s += static_cast<uint64_t>(a[i][j]) * src[tail * d + j] % mods[i];
                acc[i] += s % mods[i];
            }
        }
        // merged faces
        for (size_t i = 1; i <= n; ++i) {
            uint64_t prefix = I / pw[n + 2 - i];
            uint64_t suffix = I % pw[n - i];
            uint64_t m = G.mul(t[i - 1], t[i]);
            uint64_t idx = prefix * pw[n - i + 1] + m * pw[n - i] + suffix;
            add_term(idx, i % 2 == 1);
        }
        // last face
        add_term(I / q, (n + 1) % 2 == 1);

        for (size_t i = 0; i < d; ++i)
            dst[I * d + i] = static_cast<uint32_t>(acc[i] % mods[i]);
    }
    return out;
}

bool is_cocycle(const Cochain& phi) { return coboundary(phi).is_zero(); }

Cochain map_values(const Cochain& phi, ModulePtr target, const std::function<Element(const Element&)>& f)
{
    if (target->group()->order() != phi.group()->order())
        fail(ErrorCode::GroupMismatch, "value map between modules over different groups");
    Cochain out(target, phi.degree());
    const Carrier& src = phi.carrier();
    auto ord = src.order();
    if (ord && *ord <= 1'000'000) {
        std::unordered_map<uint64_t, Element> cache;
        for (uint64_t i = 0; i < phi.size(); ++i) {
            Element a = phi.at(i);
            uint64_t code = src.encode(a);
            auto it = cache.find(code);
            if (it == cache.end())
                it = cache.emplace(code, f(a)).first;
            out.set(i, it->second);
        }
    } else {
        for (uint64_t i = 0; i < phi.size(); ++i)
            out.set(i, f(phi.at(i)));
    }
    return out;
}

} // namespace bdcoh

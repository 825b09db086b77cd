#include "bdcoh/resolution.hpp"

#include "bdcoh/error.hpp"

#include <algorithm>
#include <map>

namespace bdcoh {

namespace {

bool is_power_of(uint64_t x, uint64_t p)
{
    while (x % p == 0)
        x /= p;
    return x == 1;
}

} // namespace

FreeResolution::FreeResolution(GroupPtr group, uint64_t modulus)
    : group_(std::move(group)), n_(modulus)
{
    if (n_ < 2)
        fail(ErrorCode::Internal, "resolution modulus must be at least 2");
    auto primes = zn::prime_factors(n_);
    if (primes.size() == 1 && is_power_of(group_->order(), primes[0])) {
        local_ = true;
        prime_ = primes[0];
    }
    ranks_ = {1};
    boundary_.resize(1);
}

zn::Vec FreeResolution::act(Elt g, const zn::Vec& x, size_t n) const
{
    const size_t q = group_->order();
    zn::Vec out(x.size(), 0);
    for (size_t j = 0; j < rank(n); ++j)
        for (Elt h = 0; h < q; ++h)
            out[j * q + group_->mul(g, h)] = x[j * q + h];
    return out;
}

zn::Vec FreeResolution::apply_boundary(const zn::Vec& x, size_t n) const
{
    const size_t q = group_->order();
    zn::Vec out(rank(n - 1) * q, 0);
    for (size_t j = 0; j < rank(n); ++j)
        for (Elt g = 0; g < q; ++g) {
            uint64_t c = x[j * q + g];
            if (c != 0)
                zn::axpy(out, c, act(g, boundary_[n][j], n - 1), n_);
        }
    return out;
}

std::vector<zn::Vec> FreeResolution::boundary_rows(size_t n) const
{
    const size_t q = group_->order();
    std::vector<zn::Vec> rows;
    if (n == 0) {
        rows.assign(q, zn::Vec{1});
        return rows;
    }
    rows.reserve(rank(n) * q);
    for (size_t j = 0; j < rank(n); ++j)
        for (Elt g = 0; g < q; ++g)
            rows.push_back(act(g, boundary_[n][j], n - 1));
    return rows;
}

std::vector<zn::Vec> FreeResolution::choose_generators(const std::vector<zn::Vec>& kernel, size_t n) const
{
    const size_t q = group_->order();
    const size_t w = rank(n) * q;
    std::vector<zn::Vec> chosen;
    if (kernel.empty())
        return chosen;
    zn::HowellForm hk(n_, w, kernel);

    auto translates = [&](const std::vector<zn::Vec>& gens) {
        std::vector<zn::Vec> rows;
        for (const auto& v : gens)
            for (Elt g = 0; g < q; ++g)
                rows.push_back(act(g, v, n));
        return rows;
    };

    if (local_) {
        // Over a local group ring, rows independent modulo J*K generate K minimally.
        std::vector<zn::Vec> pool;
        for (const auto& v : hk.rows()) {
            zn::Vec pv = v;
            for (auto& x : pv)
                x = zn::mulmod(x, prime_ % n_, n_);
            pool.push_back(std::move(pv));
            for (Elt g = 0; g < q; ++g) {
                if (g == group_->identity())
                    continue;
                zn::Vec gv = act(g, v, n);
                for (size_t k = 0; k < w; ++k)
                    gv[k] = zn::submod(gv[k], v[k], n_);
                pool.push_back(std::move(gv));
            }
        }
        for (const auto& v : hk.rows()) {
            zn::HowellForm span(n_, w, pool);
            if (!span.contains(v)) {
                chosen.push_back(v);
                pool.push_back(v);
            }
        }
    }

    zn::HowellForm s(n_, w, translates(chosen));
    for (const auto& v : hk.rows()) {
        if (s.contains(v))
            continue;
        chosen.push_back(v);
        s = zn::HowellForm(n_, w, translates(chosen));
    }
    for (const auto& v : hk.rows())
        if (!s.contains(v))
            fail(ErrorCode::Internal, "resolution generators do not span the kernel");
    return chosen;
}

void FreeResolution::extend_to(size_t degree)
{
    const size_t q = group_->order();
    while (built_degree() < degree) {
        size_t m = built_degree();
        size_t width = m == 0 ? 1 : rank(m - 1) * q;
        auto rows = boundary_rows(m);
        auto ker = zn::left_kernel(rows, width, n_);
        auto gens = choose_generators(ker, m);
        ranks_.push_back(gens.size());
        boundary_.push_back(std::move(gens));
    }
}

const std::vector<std::pair<uint64_t, uint64_t>>& FreeResolution::to_bar(size_t n, size_t j)
{
    extend_to(n);
    const size_t q = group_->order();
    if (phi_.empty())
        phi_.push_back({{{0, 1 % n_}}});
    while (phi_.size() <= n) {
        size_t m = phi_.size();
        uint64_t shift = checked_power(q, m - 1, UINT64_MAX / q);
        std::vector<std::vector<std::pair<uint64_t, uint64_t>>> level(rank(m));
        for (size_t jj = 0; jj < rank(m); ++jj) {
            std::map<uint64_t, uint64_t> acc;
            const zn::Vec& d = boundary_[m][jj];
            for (size_t i = 0; i < rank(m - 1); ++i)
                for (Elt g = 0; g < q; ++g) {
                    uint64_t c = d[i * q + g];
                    if (c == 0)
                        continue;
                    for (auto [cell, coef] : phi_[m - 1][i]) {
                        auto& slot = acc[g * shift + cell];
                        slot = (slot + zn::mulmod(c, coef, n_)) % n_;
                    }
                }
            for (auto [cell, coef] : acc)
                if (coef != 0)
                    level[jj].emplace_back(cell, coef);
        }
        phi_.push_back(std::move(level));
    }
    return phi_[n].at(j);
}

void FreeResolution::build_from_bar(size_t n)
{
    extend_to(n);
    const size_t q = group_->order();
    if (psi_.empty()) {
        std::vector<uint32_t> t(q, 0);
        t[group_->identity()] = static_cast<uint32_t>(1 % n_);
        psi_.push_back(std::move(t));
    }
    while (psi_.size() <= n) {
        const size_t m = psi_.size();
        const size_t wprev = rank(m - 1) * q;
        const size_t w = rank(m) * q;
        TupleIndex ti(q, m);
        const uint64_t cells = ti.size();
        std::vector<uint64_t> pw(m + 2, 1);
        for (size_t k = 1; k < pw.size(); ++k)
            pw[k] = pw[k - 1] * q;

        auto rows = boundary_rows(m);
        zn::LeftSolver solver(rows, wprev, n_);
        const auto& prev = psi_[m - 1];
        std::vector<uint32_t> table(cells * w, 0);
        std::vector<Elt> t(m);
        zn::Vec target(wprev);

        auto add = [&](uint64_t cell, bool negative) {
            const uint32_t* src = prev.data() + cell * wprev;
            for (size_t k = 0; k < wprev; ++k)
                if (src[k] != 0)
                    target[k] = negative ? zn::submod(target[k], src[k], n_) : zn::addmod(target[k], src[k], n_);
        };

        for (uint64_t I = 0; I < cells; ++I) {
            ti.decode_into(I, t);
            std::fill(target.begin(), target.end(), 0);
            // face 0 is g1 times the tail cell
            {
                const uint32_t* src = prev.data() + (I % pw[m - 1]) * wprev;
                for (size_t j = 0; j < rank(m - 1); ++j)
                    for (Elt h = 0; h < q; ++h) {
                        uint32_t c = src[j * q + h];
                        if (c != 0) {
                            auto& slot = target[j * q + group_->mul(t[0], h)];
                            slot = zn::addmod(slot, c, n_);
                        }
                    }
            }
            for (size_t i = 1; i < m; ++i) {
                uint64_t prefix = I / pw[m + 1 - i];
                uint64_t suffix = I % pw[m - 1 - i];
                uint64_t g = group_->mul(t[i - 1], t[i]);
                add(prefix * pw[m - i] + g * pw[m - 1 - i] + suffix, i % 2 == 1);
            }
            add(I / q, m % 2 == 1);

            auto y = solver.solve(target);
            if (!y)
                fail(ErrorCode::Internal, "comparison map: boundary target is not a cycle");
            for (size_t k = 0; k < w; ++k)
                table[I * w + k] = static_cast<uint32_t>((*y)[k]);
        }
        psi_.push_back(std::move(table));
    }
}

std::span<const uint32_t> FreeResolution::from_bar(size_t n, uint64_t cell) const
{
    const size_t w = rank(n) * group_->order();
    return std::span<const uint32_t>(psi_.at(n)).subspan(cell * w, w);
}

} // namespace bdcoh

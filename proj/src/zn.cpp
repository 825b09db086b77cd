#include "bdcoh/zn.hpp"

#include "bdcoh/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace bdcoh::zn {

namespace {

struct Xgcd {
    int64_t g, s, t; // s*a + t*b = g
};

Xgcd xgcd(int64_t a, int64_t b)
{
    int64_t old_r = a, r = b;
    int64_t old_s = 1, s = 0;
    int64_t old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](uint64_t x) { return x == 0; });
}

// Replaces (p, q) by (s*p + t*q, (-b/g)*p + (a/g)*q) where a = p[col],
// b = q[col]. The transform is unimodular and clears q[col].
void gcd_combine(Vec& p, Vec& q, size_t col, uint64_t n)
{
    auto a = static_cast<int64_t>(p[col]);
    auto b = static_cast<int64_t>(q[col]);
    Xgcd e = xgcd(a, b);
    uint64_t s = reduce_signed(e.s, n), t = reduce_signed(e.t, n);
    uint64_t u = reduce_signed(-(b / e.g), n), v = reduce_signed(a / e.g, n);
    for (size_t j = 0; j < p.size(); ++j) {
        uint64_t pj = p[j], qj = q[j];
        p[j] = (mulmod(s, pj, n) + mulmod(t, qj, n)) % n;
        q[j] = (mulmod(u, pj, n) + mulmod(v, qj, n)) % n;
    }
}

void scale(Vec& v, uint64_t c, uint64_t n)
{
    for (auto& x : v)
        x = mulmod(x, c, n);
}

} // namespace

uint64_t gcd(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm(uint64_t a, uint64_t b) { return std::lcm(a, b); }

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n)
{
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

uint64_t reduce_signed(int64_t a, uint64_t n)
{
    auto m = static_cast<int64_t>(n);
    int64_t r = a % m;
    if (r < 0)
        r += m;
    return static_cast<uint64_t>(r);
}

std::optional<uint64_t> inverse(uint64_t a, uint64_t n)
{
    if (n == 1)
        return 0;
    Xgcd e = xgcd(static_cast<int64_t>(a % n), static_cast<int64_t>(n));
    if (e.g != 1)
        return std::nullopt;
    return reduce_signed(e.s, n);
}

uint64_t unit_normalizer(uint64_t a, uint64_t n)
{
    a %= n;
    uint64_t g = gcd(a, n);
    uint64_t cofactor = n / g;
    uint64_t u0 = cofactor == 1 ? 1 : *inverse((a / g) % cofactor, cofactor);
    for (uint64_t u = u0;; u += cofactor) {
        if (gcd(u % n, n) == 1)
            return u % n;
    }
}

void axpy(Vec& row, uint64_t c, const Vec& other, uint64_t n)
{
    if (c == 0)
        return;
    for (size_t j = 0; j < row.size(); ++j)
        if (other[j] != 0)
            row[j] = (row[j] + mulmod(c, other[j], n)) % n;
}

// ---------------------------------------------------------------------------

HowellForm::HowellForm(uint64_t modulus, size_t width)
    : modulus_(modulus), width_(width)
{
}

HowellForm::HowellForm(uint64_t modulus, size_t width, std::vector<Vec> rows)
    : modulus_(modulus), width_(width)
{
    const uint64_t n = modulus_;
    std::vector<Vec> pool;
    pool.reserve(rows.size());
    for (auto& r : rows) {
        if (r.size() != width_)
            fail(ErrorCode::Internal, "HowellForm: row width mismatch");
        for (auto& x : r)
            x %= n;
        if (!is_zero(r))
            pool.push_back(std::move(r));
    }

    for (size_t col = 0; col < width_ && !pool.empty(); ++col) {
        std::optional<size_t> piv;
        for (size_t i = 0; i < pool.size(); ++i) {
            if (pool[i][col] == 0)
                continue;
            if (!piv)
                piv = i;
            else
                gcd_combine(pool[*piv], pool[i], col, n);
        }
        if (!piv)
            continue;
        Vec prow = std::move(pool[*piv]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*piv));
        scale(prow, unit_normalizer(prow[col], n), n);
        uint64_t d = prow[col];

        Vec ann = prow;
        scale(ann, n / d, n);
        if (!is_zero(ann))
            pool.push_back(std::move(ann));

        for (auto& r : rows_) {
            uint64_t q = r[col] / d;
            if (q != 0)
                axpy(r, negmod(q % n, n), prow, n);
        }
        rows_.push_back(std::move(prow));
        pivots_.push_back(col);

        pool.erase(std::remove_if(pool.begin(), pool.end(), is_zero), pool.end());
    }
}

Vec HowellForm::reduce(Vec v) const
{
    for (auto& x : v)
        x %= modulus_;
    for (size_t k = 0; k < rows_.size(); ++k) {
        size_t c = pivots_[k];
        uint64_t q = v[c] / rows_[k][c];
        if (q != 0)
            axpy(v, negmod(q % modulus_, modulus_), rows_[k], modulus_);
    }
    return v;
}

bool HowellForm::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<uint64_t> HowellForm::row_orders() const
{
    std::vector<uint64_t> out;
    out.reserve(rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k)
        out.push_back(modulus_ / rows_[k][pivots_[k]]);
    return out;
}

bool HowellForm::operator==(const HowellForm& other) const
{
    return modulus_ == other.modulus_ && width_ == other.width_ && rows_ == other.rows_;
}

// ---------------------------------------------------------------------------

LeftSolver::LeftSolver(std::span<const Vec> matrix, size_t width, uint64_t modulus)
    : modulus_(modulus), width_(width), nrows_(matrix.size())
{
    std::vector<Vec> aug;
    aug.reserve(nrows_);
    for (size_t i = 0; i < nrows_; ++i) {
        Vec r(width_ + nrows_, 0);
        std::copy(matrix[i].begin(), matrix[i].end(), r.begin());
        r[width_ + i] = 1;
        aug.push_back(std::move(r));
    }
    HowellForm h(modulus_, width_ + nrows_, std::move(aug));
    for (size_t k = 0; k < h.rows().size(); ++k) {
        if (h.pivot_columns()[k] < width_) {
            prefix_rows_.push_back(h.rows()[k]);
            prefix_pivots_.push_back(h.pivot_columns()[k]);
        } else {
            kernel_.emplace_back(h.rows()[k].begin() + static_cast<std::ptrdiff_t>(width_),
                                 h.rows()[k].end());
        }
    }
}

std::optional<Vec> LeftSolver::solve(const Vec& v) const
{
    const uint64_t n = modulus_;
    Vec u(width_ + nrows_, 0);
    for (size_t j = 0; j < width_; ++j)
        u[j] = v[j] % n;
    for (size_t k = 0; k < prefix_rows_.size(); ++k) {
        size_t c = prefix_pivots_[k];
        uint64_t d = prefix_rows_[k][c];
        if (u[c] % d != 0)
            return std::nullopt;
        uint64_t q = u[c] / d;
        if (q != 0)
            axpy(u, negmod(q % n, n), prefix_rows_[k], n);
    }
    for (size_t j = 0; j < width_; ++j)
        if (u[j] != 0)
            return std::nullopt;
    Vec x(nrows_);
    for (size_t i = 0; i < nrows_; ++i)
        x[i] = negmod(u[width_ + i], n);
    return x;
}

std::vector<Vec> left_kernel(std::span<const Vec> matrix, size_t width, uint64_t modulus)
{
    return LeftSolver(matrix, width, modulus).kernel();
}

// ---------------------------------------------------------------------------

SmithQuotient smith_quotient(std::vector<Vec> rel, size_t k, uint64_t n)
{
    SmithQuotient out;
    out.transform.assign(k, Vec(k, 0));
    out.inverse_transform.assign(k, Vec(k, 0));
    for (size_t i = 0; i < k; ++i)
        out.transform[i][i] = out.inverse_transform[i][i] = 1 % n;
    for (auto& r : rel)
        for (auto& x : r)
            x %= n;
    rel.erase(std::remove_if(rel.begin(), rel.end(), is_zero), rel.end());

    auto& C = out.transform;
    auto& Cinv = out.inverse_transform;

    auto swap_columns = [&](size_t a, size_t b) {
        if (a == b)
            return;
        for (auto& r : rel)
            std::swap(r[a], r[b]);
        for (auto& r : C)
            std::swap(r[a], r[b]);
        std::swap(Cinv[a], Cinv[b]);
    };

    // Column transform clearing rel[t][j] into rel[t][t]; C <- C*T,
    // Cinv <- T^{-1}*Cinv with T = [[s, -b/g], [t, a/g]] on columns (t, j).
    auto column_combine = [&](size_t t, size_t j) {
        auto a = static_cast<int64_t>(rel[t][t]);
        auto b = static_cast<int64_t>(rel[t][j]);
        Xgcd e = xgcd(a, b);
        uint64_t s = reduce_signed(e.s, n), tt = reduce_signed(e.t, n);
        uint64_t u = reduce_signed(-(b / e.g), n), v = reduce_signed(a / e.g, n);
        auto apply_cols = [&](std::vector<Vec>& m) {
            for (auto& r : m) {
                uint64_t x = r[t], y = r[j];
                r[t] = (mulmod(s, x, n) + mulmod(tt, y, n)) % n;
                r[j] = (mulmod(u, x, n) + mulmod(v, y, n)) % n;
            }
        };
        apply_cols(rel);
        apply_cols(C);
        // T^{-1} = [[a/g, b/g], [-t, s]] acting on rows (t, j) of Cinv.
        uint64_t ia = v, ib = reduce_signed(b / e.g, n), ic = reduce_signed(-e.t, n), id = s;
        Vec& rt = Cinv[t];
        Vec& rj = Cinv[j];
        for (size_t c = 0; c < k; ++c) {
            uint64_t x = rt[c], y = rj[c];
            rt[c] = (mulmod(ia, x, n) + mulmod(ib, y, n)) % n;
            rj[c] = (mulmod(ic, x, n) + mulmod(id, y, n)) % n;
        }
    };

    size_t t = 0;
    for (; t < k && t < rel.size(); ++t) {
        // Pivot: the entry generating the largest ideal of Z/N.
        std::optional<std::pair<size_t, size_t>> best;
        uint64_t best_g = 0;
        for (size_t i = t; i < rel.size(); ++i)
            for (size_t j = t; j < k; ++j)
                if (rel[i][j] != 0) {
                    uint64_t g = gcd(rel[i][j], n);
                    if (!best || g < best_g) {
                        best = {i, j};
                        best_g = g;
                    }
                }
        if (!best)
            break;
        std::swap(rel[t], rel[best->first]);
        swap_columns(t, best->second);

        for (;;) {
            for (size_t i = t + 1; i < rel.size(); ++i)
                if (rel[i][t] != 0)
                    gcd_combine(rel[t], rel[i], t, n);
            bool touched = false;
            for (size_t j = t + 1; j < k; ++j)
                if (rel[t][j] != 0) {
                    column_combine(t, j);
                    touched = true;
                }
            bool column_clear = true;
            for (size_t i = t + 1; i < rel.size(); ++i)
                if (rel[i][t] != 0)
                    column_clear = false;
            if (touched && !column_clear)
                continue;

            scale(rel[t], unit_normalizer(rel[t][t], n), n);
            uint64_t d = rel[t][t];
            std::optional<size_t> offender;
            for (size_t i = t + 1; i < rel.size() && !offender; ++i)
                for (size_t j = t + 1; j < k; ++j)
                    if (rel[i][j] % d != 0) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            axpy(rel[t], 1, rel[*offender], n);
        }
        out.factors.push_back(rel[t][t]);
    }
    for (; t < k; ++t)
        out.factors.push_back(n);
    return out;
}

} // namespace bdcoh::zn

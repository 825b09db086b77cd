#pragma once

// Independent reference computations for the test suites. Nothing here uses
// the library: groups are raw tables, modules are (Z/N)^d with integer action
// matrices, cochains are flat vectors, and ranks come from plain elimination.

#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int64_t>;
using Mat = std::vector<Vec>;

inline int64_t md(int64_t a, int64_t n)
{
    a %= n;
    return a < 0 ? a + n : a;
}

struct Group {
    int n = 1;
    std::vector<std::vector<int>> mul{{0}};
    int e = 0;

    static Group cyclic(int n)
    {
        Group g;
        g.n = n;
        g.mul.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g.mul[i][j] = (i + j) % n;
        return g;
    }
};

// (Z/N)^d; act[g] is a d x d matrix applied to column vectors.
struct Module {
    int64_t N = 2;
    int d = 1;
    std::vector<Mat> act;

    static Module trivial(const Group& G, int64_t N, int d = 1)
    {
        Module m;
        m.N = N;
        m.d = d;
        Mat id(d, Vec(d, 0));
        for (int i = 0; i < d; ++i)
            id[i][i] = 1;
        m.act.assign(G.n, id);
        return m;
    }

    Vec apply(int g, const Vec& a) const
    {
        Vec out(d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                out[i] = md(out[i] + act[g][i][j] * a[j], N);
        return out;
    }
};

inline int64_t ipow(int64_t b, int e)
{
    int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// tuple <-> index, first entry most significant
inline std::vector<int> decode(int64_t idx, int n, int base)
{
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % base);
        idx /= base;
    }
    return t;
}

inline int64_t encode(const std::vector<int>& t, int base)
{
    int64_t idx = 0;
    for (int v : t)
        idx = idx * base + v;
    return idx;
}

// A cochain of degree n is a flat vector of |G|^n * d entries.
inline Vec coboundary(const Group& G, const Module& M, const Vec& phi, int n)
{
    int64_t cells = ipow(G.n, n + 1);
    Vec out(cells * M.d, 0);
    auto val = [&](const std::vector<int>& t) {
        int64_t i = encode(t, G.n);
        return Vec(phi.begin() + i * M.d, phi.begin() + (i + 1) * M.d);
    };
    for (int64_t c = 0; c < cells; ++c) {
        std::vector<int> g = decode(c, n + 1, G.n);
        Vec acc(M.d, 0);
        auto add = [&](const Vec& v, int sign) {
            for (int k = 0; k < M.d; ++k)
                acc[k] = md(acc[k] + sign * v[k], M.N);
        };
        add(M.apply(g[0], val(std::vector<int>(g.begin() + 1, g.end()))), 1);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> t;
            for (int j = 0; j <= n; ++j) {
                if (j == i - 1) {
                    t.push_back(G.mul[g[j]][g[j + 1]]);
                    ++j;
                } else {
                    t.push_back(g[j]);
                }
            }
            add(val(t), i % 2 ? -1 : 1);
        }
        add(val(std::vector<int>(g.begin(), g.end() - 1)), (n + 1) % 2 ? -1 : 1);
        for (int k = 0; k < M.d; ++k)
            out[c * M.d + k] = acc[k];
    }
    return out;
}

// Rows are the images of the standard basis of C^n.
inline Mat coboundary_matrix(const Group& G, const Module& M, int n)
{
    int64_t size = ipow(G.n, n) * M.d;
    Mat rows;
    for (int64_t i = 0; i < size; ++i) {
        Vec e(size, 0);
        e[i] = 1;
        rows.push_back(coboundary(G, M, e, n));
    }
    return rows;
}

inline int valuation(int64_t a, int64_t p, int cap)
{
    if (a == 0)
        return cap;
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

inline int64_t inv_mod(int64_t a, int64_t n)
{
    int64_t t = 0, nt = 1, r = n, nr = md(a, n);
    while (nr) {
        int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return md(t, n);
}

// Elementary divisors of the row span of `rows` over Z/p^K, as exponents
// e_i with Z/p^K-span ~ sum Z/p^(K - e_i). Diagonalises by always pivoting
// on an entry of least valuation.
inline std::vector<int> divisor_valuations(Mat rows, int64_t p, int K)
{
    int64_t N = ipow(p, K);
    for (auto& r : rows)
        for (auto& x : r)
            x = md(x, N);
    std::vector<int> out;
    size_t width = rows.empty() ? 0 : rows[0].size();
    std::vector<bool> row_used(rows.size(), false), col_used(width, false);
    while (true) {
        int best = K;
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < rows.size() && best > 0; ++i) {
            if (row_used[i])
                continue;
            for (size_t j = 0; j < width; ++j) {
                if (col_used[j] || rows[i][j] == 0)
                    continue;
                int v = valuation(rows[i][j], p, K);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0)
                        break;
                }
            }
        }
        if (best == K)
            break;
        out.push_back(best);
        row_used[bi] = col_used[bj] = true;
        int64_t piv = rows[bi][bj];
        int64_t unit = inv_mod(piv / ipow(p, best), N);
        // clear the column below and above (row operations), then the row (column operations)
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == bi || rows[i][bj] == 0)
                continue;
            int64_t f = md((rows[i][bj] / ipow(p, best)) * unit, N);
            for (size_t j = 0; j < width; ++j)
                rows[i][j] = md(rows[i][j] - f * rows[bi][j], N);
        }
        for (size_t j = 0; j < width; ++j) {
            if (j == bj || rows[bi][j] == 0)
                continue;
            int64_t f = md((rows[bi][j] / ipow(p, best)) * unit, N);
            for (size_t i = 0; i < rows.size(); ++i)
                rows[i][j] = md(rows[i][j] - f * rows[i][bj], N);
        }
    }
    return out;
}

// log_p of the order of the row span over Z/p^K.
inline int span_log_order(const Mat& rows, int64_t p, int K)
{
    int total = 0;
    for (int e : divisor_valuations(rows, p, K))
        total += K - e;
    return total;
}

// log_p |H^n(G, M)| for M = (Z/p^K)^d.
inline int cohomology_log_order(const Group& G, const Module& M, int n, int64_t p, int K)
{
    int cochains = static_cast<int>(ipow(G.n, n) * M.d) * K;
    int image_out = span_log_order(coboundary_matrix(G, M, n), p, K);
    int image_in = n == 0 ? 0 : span_log_order(coboundary_matrix(G, M, n - 1), p, K);
    return cochains - image_out - image_in;
}

inline int rank_mod_p(Mat rows, int64_t p)
{
    std::vector<int> v = divisor_valuations(std::move(rows), p, 1);
    return static_cast<int>(v.size());
}

// Over F_p: is v in the span of rows?
inline bool in_span_mod_p(const Mat& rows, const Vec& v, int64_t p)
{
    Mat with = rows;
    with.push_back(v);
    return rank_mod_p(rows, p) == rank_mod_p(with, p);
}

inline bool is_coboundary_mod_p(const Group& G, const Module& M, const Vec& phi, int n)
{
    if (n == 0) {
        for (int64_t x : phi)
            if (md(x, M.N) != 0)
                return false;
        return true;
    }
    return in_span_mod_p(coboundary_matrix(G, M, n - 1), phi, M.N);
}

// Counts 1-cocycles by enumerating every 1-cochain (tiny cases only).
inline int64_t brute_force_cocycle_count(const Group& G, const Module& M, int n)
{
    int64_t entries = ipow(G.n, n) * M.d;
    int64_t total = ipow(M.N, static_cast<int>(entries));
    int64_t count = 0;
    for (int64_t code = 0; code < total; ++code) {
        Vec phi(entries);
        int64_t c = code;
        for (int64_t i = 0; i < entries; ++i) {
            phi[i] = c % M.N;
            c /= M.N;
        }
        Vec d = coboundary(G, M, phi, n);
        bool zero = true;
        for (int64_t x : d)
            zero = zero && x == 0;
        count += zero;
    }
    return count;
}

// (x^i, x^j) -> floor((i + j) / p) mod p on C_p
inline Vec carry_cocycle(int p)
{
    Vec out(p * p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out[i * p + j] = ((i + j) / p) % p;
    return out;
}

// theta of a 1-cochain for 0 -> Z/p -> Z/p^2 -> Z/p -> 0 over C_p, trivial
// action, s the least lift and r(p a) = j a:
//   theta(phi)(g, h) = r(s phi(h) - s phi(gh) + s phi(g))
inline Vec bockstein_theta1(int p, int64_t j, const Vec& phi)
{
    Vec out(p * p);
    for (int g = 0; g < p; ++g)
        for (int h = 0; h < p; ++h) {
            int64_t b = phi[h] - phi[(g + h) % p] + phi[g];
            b = md(b, p * p);
            out[g * p + h] = md((b / p) * j, p);
        }
    return out;
}

// Cup product of scalar cochains with trivial action over Z/N.
inline Vec cup(const Vec& a, int m, const Vec& b, int n, int order, int64_t N)
{
    int64_t cells = ipow(order, m + n);
    Vec out(cells);
    int64_t right = ipow(order, n);
    for (int64_t c = 0; c < cells; ++c)
        out[c] = md(a[c / right] * b[c % right], N);
    return out;
}

} // namespace oracle

#pragma once

// Linear algebra over the ring Z/NZ.
//
// All routines work with row vectors and left multiplication (x -> x*M).
// Entries are kept in [0, N) and N must stay below 2^32 so products fit
// into 64 bits.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bdcoh::zn {

using Vec = std::vector<uint64_t>;

uint64_t gcd(uint64_t a, uint64_t b);
uint64_t lcm(uint64_t a, uint64_t b);
bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) { return (a * b) % n; }
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t n) { return (a + b) % n; }
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t n) { return (a + n - b) % n; }
inline uint64_t negmod(uint64_t a, uint64_t n) { return a == 0 ? 0 : n - a; }

// Reduces any signed integer into [0, n).
uint64_t reduce_signed(int64_t a, uint64_t n);

std::optional<uint64_t> inverse(uint64_t a, uint64_t n);

// A unit u with u*a == gcd(a, n) (mod n). Requires a != 0 mod n.
uint64_t unit_normalizer(uint64_t a, uint64_t n);

// row += c * other (mod n)
void axpy(Vec& row, uint64_t c, const Vec& other, uint64_t n);

// Howell normal form of the row span of a matrix over Z/N. The stored rows are
// in echelon form, each pivot divides N, entries above a pivot are reduced
// below it, and the span has the Howell property: every vector of the span
// whose first k entries vanish is a combination of the rows whose pivots lie
// beyond k. Membership and canonical remainders follow by left-to-right
// reduction.
class HowellForm {
public:
    HowellForm(uint64_t modulus, size_t width);
    HowellForm(uint64_t modulus, size_t width, std::vector<Vec> rows);

    uint64_t modulus() const { return modulus_; }
    size_t width() const { return width_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<size_t>& pivot_columns() const { return pivots_; }

    // Canonical representative of v modulo the span.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    // Additive order of each row modulo the earlier ones; their product is the
    // size of the span.
    std::vector<uint64_t> row_orders() const;

    bool operator==(const HowellForm& other) const;

private:
    uint64_t modulus_;
    size_t width_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

// Solves x*M = v. Construction computes the Howell form of [M | I] once, so
// repeated solves against the same matrix are cheap.
class LeftSolver {
public:
    LeftSolver(std::span<const Vec> matrix, size_t width, uint64_t modulus);

    std::optional<Vec> solve(const Vec& v) const;
    // Generators (in Howell form) of {x : x*M = 0}.
    const std::vector<Vec>& kernel() const { return kernel_; }
    size_t rows() const { return nrows_; }

private:
    uint64_t modulus_;
    size_t width_;
    size_t nrows_;
    std::vector<Vec> prefix_rows_;
    std::vector<size_t> prefix_pivots_;
    std::vector<Vec> kernel_;
};

std::vector<Vec> left_kernel(std::span<const Vec> matrix, size_t width, uint64_t modulus);

// Diagonalisation of a relation matrix for (Z/N)^k / rowspan(relations).
// The quotient is isomorphic to the sum of Z/factors[t]; coordinate t of the
// coefficient vector x is (x * transform)[t] mod factors[t], and the element
// generating summand t has coefficient vector inverse_transform[t].
struct SmithQuotient {
    std::vector<uint64_t> factors; // each divides N and the next one; 1 means trivial summand
    std::vector<Vec> transform;
    std::vector<Vec> inverse_transform;
};

SmithQuotient smith_quotient(std::vector<Vec> relations, size_t k, uint64_t modulus);

} // namespace bdcoh::zn

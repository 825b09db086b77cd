#include "bdcoh/group.hpp"

#include "bdcoh/error.hpp"

#include <limits>
#include <sstream>

namespace bdcoh {

std::optional<Elt> FiniteGroup::find_label(const std::string& label) const
{
    for (Elt g = 0; g < order_; ++g)
        if (labels_[g] == label)
            return g;
    return std::nullopt;
}

std::vector<std::vector<Elt>> FiniteGroup::table() const
{
    std::vector<std::vector<Elt>> out(order_, std::vector<Elt>(order_));
    for (Elt a = 0; a < order_; ++a)
        for (Elt b = 0; b < order_; ++b)
            out[a][b] = mul(a, b);
    return out;
}

GroupPtr FiniteGroup::cyclic(size_t n)
{
    if (n == 0)
        fail(ErrorCode::MalformedInput, "cyclic group of order 0");
    std::vector<std::vector<int64_t>> t(n, std::vector<int64_t>(n));
    std::vector<std::string> labels(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            t[i][j] = static_cast<int64_t>((i + j) % n);
        labels[i] = i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return validate_group(t, 0, std::move(labels));
}

GroupPtr FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    size_t n = a.order() * b.order();
    std::vector<std::vector<int64_t>> t(n, std::vector<int64_t>(n));
    std::vector<std::string> labels(n);
    for (Elt i = 0; i < n; ++i) {
        Elt ia = i / b.order(), ib = i % b.order();
        labels[i] = "(" + a.label(ia) + "," + b.label(ib) + ")";
        for (Elt j = 0; j < n; ++j) {
            Elt ja = j / b.order(), jb = j % b.order();
            t[i][j] = static_cast<int64_t>(a.mul(ia, ja) * b.order() + b.mul(ib, jb));
        }
    }
    return validate_group(t, a.identity() * b.order() + b.identity(), std::move(labels));
}

GroupPtr validate_group(const std::vector<std::vector<int64_t>>& table, std::optional<int64_t> identity,
                        std::vector<std::string> labels)
{
    const size_t n = table.size();
    if (n == 0)
        fail(ErrorCode::MalformedInput, "group table is empty");
    for (size_t i = 0; i < n; ++i) {
        if (table[i].size() != n)
            fail(ErrorCode::MalformedInput, "group table row " + std::to_string(i) + " has wrong length");
        for (size_t j = 0; j < n; ++j)
            if (table[i][j] < 0 || static_cast<size_t>(table[i][j]) >= n)
                fail(ErrorCode::MalformedInput, "group table entry (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") out of range");
    }
    if (!labels.empty() && labels.size() != n)
        fail(ErrorCode::MalformedInput, "label count does not match group order");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->table_.resize(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            g->table_[i * n + j] = static_cast<Elt>(table[i][j]);

    auto is_identity = [&](Elt e) {
        for (Elt a = 0; a < n; ++a)
            if (g->mul(e, a) != a || g->mul(a, e) != a)
                return std::optional<Elt>(a);
        return std::optional<Elt>();
    };
    if (identity) {
        if (*identity < 0 || static_cast<size_t>(*identity) >= n)
            fail(ErrorCode::MalformedInput, "identity index out of range");
        auto e = static_cast<Elt>(*identity);
        if (auto w = is_identity(e))
            fail(ErrorCode::NoIdentity, "element " + std::to_string(e) + " is not a two-sided identity (witness " +
                                            std::to_string(*w) + ")");
        g->identity_ = e;
    } else {
        std::optional<Elt> found;
        for (Elt e = 0; e < n && !found; ++e)
            if (!is_identity(e))
                found = e;
        if (!found)
            fail(ErrorCode::NoIdentity, "no element acts as a two-sided identity");
        g->identity_ = *found;
    }

    g->inverse_.assign(n, 0);
    for (Elt a = 0; a < n; ++a) {
        std::optional<Elt> inv;
        for (Elt b = 0; b < n && !inv; ++b)
            if (g->mul(a, b) == g->identity_ && g->mul(b, a) == g->identity_)
                inv = b;
        if (!inv)
            fail(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
        g->inverse_[a] = *inv;
    }

    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            Elt ab = g->mul(a, b);
            for (Elt c = 0; c < n; ++c)
                if (g->mul(ab, c) != g->mul(a, g->mul(b, c))) {
                    std::ostringstream os;
                    os << "multiplication is not associative on (" << a << "," << b << "," << c << ")";
                    fail(ErrorCode::NonAssociative, os.str());
                }
        }

    g->abelian_ = true;
    for (Elt a = 0; a < n && g->abelian_; ++a)
        for (Elt b = a + 1; b < n; ++b)
            if (g->mul(a, b) != g->mul(b, a)) {
                g->abelian_ = false;
                break;
            }

    if (labels.empty()) {
        labels.resize(n);
        for (Elt a = 0; a < n; ++a)
            labels[a] = std::to_string(a);
    }
    g->labels_ = std::move(labels);
    return g;
}

// ---------------------------------------------------------------------------

uint64_t checked_power(uint64_t base, size_t exponent, uint64_t limit)
{
    uint64_t r = 1;
    for (size_t i = 0; i < exponent; ++i) {
        if (base != 0 && r > limit / base)
            fail(ErrorCode::DegreeOverflow, "|G|^" + std::to_string(exponent) + " exceeds the table limit of " +
                                                std::to_string(limit));
        r *= base;
    }
    if (r > limit)
        fail(ErrorCode::DegreeOverflow, "|G|^" + std::to_string(exponent) + " exceeds the table limit of " +
                                            std::to_string(limit));
    return r;
}

TupleIndex::TupleIndex(size_t group_order, size_t degree)
    : base_(group_order), degree_(degree),
      size_(checked_power(group_order, degree, std::numeric_limits<uint64_t>::max()))
{
}

uint64_t TupleIndex::encode(std::span<const Elt> tuple) const
{
    if (tuple.size() != degree_)
        fail(ErrorCode::IndexOutOfRange, "tuple length " + std::to_string(tuple.size()) + " != degree " +
                                             std::to_string(degree_));
    uint64_t idx = 0;
    for (Elt g : tuple) {
        if (g >= base_)
            fail(ErrorCode::IndexOutOfRange, "element index " + std::to_string(g) + " out of range");
        idx = idx * base_ + g;
    }
    return idx;
}

std::vector<Elt> TupleIndex::decode(uint64_t index) const
{
    std::vector<Elt> out(degree_);
    decode_into(index, out);
    return out;
}

void TupleIndex::decode_into(uint64_t index, std::span<Elt> out) const
{
    if (index >= size_)
        fail(ErrorCode::IndexOutOfRange, "tuple index " + std::to_string(index) + " out of range");
    for (size_t i = degree_; i-- > 0;) {
        out[i] = static_cast<Elt>(index % base_);
        index /= base_;
    }
}

} // namespace bdcoh

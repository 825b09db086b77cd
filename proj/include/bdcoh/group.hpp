#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bdcoh {

using Elt = uint32_t;

/// A finite group given by its multiplication table on dense indices
/// 0..order-1. Instances are immutable and only come out of validate_group
/// (or the constructors below, which go through it).
class FiniteGroup {
public:
    size_t order() const { return order_; }
    Elt identity() const { return identity_; }
    Elt mul(Elt a, Elt b) const { return table_[a * order_ + b]; }
    Elt inv(Elt a) const { return inverse_[a]; }
    bool is_abelian() const { return abelian_; }
    const std::string& label(Elt g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Elt> find_label(const std::string& label) const;

    std::vector<std::vector<Elt>> table() const;

    // Cyclic group on 0..n-1 with labels 1, x, x^2, ...
    static std::shared_ptr<const FiniteGroup> cyclic(size_t n);
    static std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a, const FiniteGroup& b);

private:
    friend std::shared_ptr<const FiniteGroup> validate_group(const std::vector<std::vector<int64_t>>&,
                                                             std::optional<int64_t>,
                                                             std::vector<std::string>);
    FiniteGroup() = default;

    size_t order_ = 0;
    Elt identity_ = 0;
    std::vector<Elt> table_;
    std::vector<Elt> inverse_;
    std::vector<std::string> labels_;
    bool abelian_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Throws Error(NoIdentity / NoInverse / NonAssociative / MalformedInput)
// with the witnessing elements in the message. If identity is not given it is
// searched for.
GroupPtr validate_group(const std::vector<std::vector<int64_t>>& table,
                        std::optional<int64_t> identity = std::nullopt,
                        std::vector<std::string> labels = {});

/// Mixed-radix indexing of G^n, g_1 being the most significant digit.
class TupleIndex {
public:
    TupleIndex(size_t group_order, size_t degree);

    size_t degree() const { return degree_; }
    size_t group_order() const { return base_; }
    uint64_t size() const { return size_; }

    uint64_t encode(std::span<const Elt> tuple) const;
    std::vector<Elt> decode(uint64_t index) const;
    void decode_into(uint64_t index, std::span<Elt> out) const;

private:
    size_t base_;
    size_t degree_;
    uint64_t size_;
};

// |G|^n, throwing DegreeOverflow past `limit`.
uint64_t checked_power(uint64_t base, size_t exponent, uint64_t limit);

} // namespace bdcoh

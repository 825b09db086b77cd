#pragma once

#include "bdcoh/group.hpp"
#include "bdcoh/modules.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace bdcoh {

// Largest number of stored entries (|G|^n * dim A) of a single cochain.
// Starts at 3e6 or at $BDCOH_TABLE_LIMIT when that is set.
uint64_t table_limit();
void set_table_limit(uint64_t limit);

// |G|^n * max(d, 1), throwing DegreeOverflow above the table limit.
uint64_t checked_table_size(size_t group_order, size_t degree, size_t dim);

/// A set map G^n -> A stored densely, tuples indexed as in TupleIndex.
class Cochain {
public:
    Cochain(ModulePtr module, size_t degree);

    const ModulePtr& module() const { return module_; }
    const GroupPtr& group() const { return module_->group(); }
    const Carrier& carrier() const { return module_->carrier(); }
    size_t degree() const { return degree_; }
    uint64_t size() const { return size_; }

    Element at(uint64_t index) const;
    Element at(std::span<const Elt> tuple) const;
    void set(uint64_t index, const Element& value);
    void set(std::span<const Elt> tuple, const Element& value);

    // Entries are stored as size() * dim values, coordinate-minor.
    std::span<const uint32_t> raw() const { return values_; }
    std::span<uint32_t> raw() { return values_; }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain scaled(uint64_t c) const;
    bool is_zero() const;
    bool operator==(const Cochain& o) const;

    static Cochain from_function(ModulePtr module, size_t degree,
                                 const std::function<Element(std::span<const Elt>)>& f);
    static Cochain constant(ModulePtr module, const Element& a); // degree 0
    static Cochain random(ModulePtr module, size_t degree, std::mt19937_64& rng);

private:
    void check_compatible(const Cochain& o) const;

    ModulePtr module_;
    size_t degree_;
    uint64_t size_;
    std::vector<uint32_t> values_;
};

// (d phi)(g1..g_{n+1}) = g1 phi(g2..) + sum_i (-1)^i phi(..g_i g_{i+1}..) + (-1)^{n+1} phi(g1..g_n)
Cochain coboundary(const Cochain& phi);

bool is_cocycle(const Cochain& phi);

// Applies a set map A -> B valuewise; B must be a module over the same group.
Cochain map_values(const Cochain& phi, ModulePtr target, const std::function<Element(const Element&)>& f);

} // namespace bdcoh

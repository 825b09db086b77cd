#pragma once

#include "bdcoh/bd.hpp"
#include "bdcoh/cohomology.hpp"
#include "bdcoh/connecting.hpp"
#include "bdcoh/error.hpp"
#include "bdcoh/examples.hpp"
#include "bdcoh/products.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <memory>

namespace bdtest {

using namespace bdcoh;

inline ModulePtr trivial_module(const GroupPtr& G, uint64_t m, size_t copies = 1)
{
    return std::make_shared<GModule>(GModule::trivial(G, Carrier(std::vector<uint64_t>(copies, m))));
}

inline AlgebraPtr ring(const GroupPtr& G, uint64_t m)
{
    return std::make_shared<GAlgebra>(GAlgebra::cyclic_ring(G, m));
}

inline oracle::Vec to_oracle(const Cochain& c)
{
    return oracle::Vec(c.raw().begin(), c.raw().end());
}

inline Cochain from_oracle(const ModulePtr& M, size_t n, const oracle::Vec& v)
{
    Cochain c(M, n);
    auto raw = c.raw();
    for (size_t i = 0; i < raw.size(); ++i)
        raw[i] = static_cast<uint32_t>(v[i]);
    return c;
}

// psi(x^i) = i on C_p
inline Cochain canonical_one_cochain(const ModulePtr& M)
{
    return Cochain::from_function(M, 1, [](std::span<const Elt> t) { return Element{t[0]}; });
}

// The x-indexed sequence 0 -> Z/3 -> Z/9 -> Z/3 -> 0 over C3 (iota = c*a, r(3) = v).
inline ShortExactSequence c3_ses(uint64_t c, uint64_t v)
{
    GroupPtr G = FiniteGroup::cyclic(3);
    AlgebraPtr A = ring(G, 3), B = ring(G, 9);
    AdditiveMap iota(A->carrier(), B->carrier(), {{static_cast<int64_t>(c)}});
    AdditiveMap pi(B->carrier(), A->carrier(), {{1}});
    SubgroupMap r = retraction_on_kernel(pi, A->carrier(), {{3}}, {{v}});
    return make_ses(A, B, iota, pi, {{0}, {1}, {2}}, r);
}

inline const Check* find_check(const Report& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

#define EXPECT_BDCOH_ERROR(stmt, errcode)                                                                    \
    do {                                                                                                     \
        try {                                                                                                \
            stmt;                                                                                            \
            ADD_FAILURE() << "expected " << ::bdcoh::error_code_name(errcode);                               \
        } catch (const ::bdcoh::Error& e_) {                                                                 \
            EXPECT_EQ(e_.code(), errcode) << e_.what();                                                      \
        }                                                                                                    \
    } while (0)

} // namespace bdtest

#pragma once

#include "sta/algebra/signature.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace sta {

/// Basis blade as a bitset over generators; bit k set means generator k is a
/// factor. Factors are always taken in ascending generator order.
using BladeMask = std::uint8_t;

constexpr int blade_grade(BladeMask mask) noexcept { return std::popcount(static_cast<unsigned>(mask)); }

/// Number of transpositions needed to bring the concatenated generator word
/// (a)(b) into ascending order, reduced mod 2 to a sign.
constexpr int reordering_sign(BladeMask a, BladeMask b) noexcept {
    unsigned lhs = static_cast<unsigned>(a) >> 1U;
    int swaps = 0;
    while (lhs != 0) {
        swaps += std::popcount(lhs & static_cast<unsigned>(b));
        lhs >>= 1U;
    }
    return (swaps & 1) ? -1 : 1;
}

/// Sign of the product of basis blades a and b: the result is
/// blade_product_sign(a,b) * blade(a ^ b). Repeated generators contract
/// against the metric.
inline int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) noexcept {
    int sign = reordering_sign(a, b);
    const unsigned common = static_cast<unsigned>(a & b);
    for (int k = 0; k < sig.dimension(); ++k) {
        if (common & (1U << k)) {
            sign *= sig.metric(k);
        }
    }
    return sign;
}

/// Precomputed sign table for one signature.
struct ProductTable {
    std::array<std::array<std::int8_t, Signature::kMaxBlades>, Signature::kMaxBlades> sign{};
};

/// Cached table for sig; built on first use, safe to call from any thread.
const ProductTable& product_table(const Signature& sig);

/// Renders a blade as e.g. "g0^g1" (or "e0^e1" for definite metrics); the
/// scalar blade renders as "1".
std::string format_blade(const Signature& sig, BladeMask mask);

}  // namespace sta

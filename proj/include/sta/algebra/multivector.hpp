#pragma once

#include "sta/algebra/blade.hpp"
#include "sta/algebra/coefficient.hpp"
#include "sta/algebra/signature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

namespace sta {

/// Element of Cl(p,q) stored densely: one coefficient per basis blade.
///
/// S is the coefficient ring (double for grid work, Rational for exact
/// checks, symbolic polynomials for identity verification). Slots above
/// 2^n are kept at zero.
template <class S>
class Multivector {
public:
    using value_type = S;

    explicit Multivector(Signature sig) : sig_(sig) { coeffs_.fill(S{}); }

    static Multivector scalar(Signature sig, S value) {
        Multivector out(sig);
        out.coeffs_[0] = std::move(value);
        return out;
    }

    static Multivector blade(Signature sig, BladeMask mask, S coeff = S(1)) {
        if (mask >= sig.blade_count()) {
            throw AlgebraError("blade mask out of range for " + sig.name());
        }
        Multivector out(sig);
        out.coeffs_[mask] = std::move(coeff);
        return out;
    }

    static Multivector generator(Signature sig, int k) {
        if (k < 0 || k >= sig.dimension()) {
            throw AlgebraError("generator index " + std::to_string(k) + " out of range for " + sig.name());
        }
        return blade(sig, static_cast<BladeMask>(1U << k));
    }

    const Signature& signature() const noexcept { return sig_; }
    int blade_count() const noexcept { return sig_.blade_count(); }

    const S& operator[](BladeMask mask) const { return coeffs_[mask]; }
    S& operator[](BladeMask mask) { return coeffs_[mask]; }

    bool is_zero() const {
        for (int b = 0; b < blade_count(); ++b) {
            if (!CoefficientTraits<S>::is_zero(coeffs_[b])) return false;
        }
        return true;
    }

    Multivector& operator+=(const Multivector& rhs) {
        require_same(rhs);
        for (int b = 0; b < blade_count(); ++b) coeffs_[b] += rhs.coeffs_[b];
        return *this;
    }

    Multivector& operator-=(const Multivector& rhs) {
        require_same(rhs);
        for (int b = 0; b < blade_count(); ++b) coeffs_[b] -= rhs.coeffs_[b];
        return *this;
    }

    Multivector& operator*=(const S& factor) {
        for (int b = 0; b < blade_count(); ++b) coeffs_[b] *= factor;
        return *this;
    }

    friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
    friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
    friend Multivector operator-(Multivector value) {
        for (int b = 0; b < value.blade_count(); ++b) value.coeffs_[b] = -value.coeffs_[b];
        return value;
    }
    friend Multivector operator*(Multivector value, const S& factor) { return value *= factor; }
    friend Multivector operator*(const S& factor, Multivector value) { return value *= factor; }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.sig_ != b.sig_) return false;
        for (int k = 0; k < a.blade_count(); ++k) {
            if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
        }
        return true;
    }

    void require_same(const Multivector& other) const {
        if (sig_ != other.sig_) {
            throw AlgebraError("signature mismatch: " + sig_.name() + " vs " + other.sig_.name());
        }
    }

private:
    Signature sig_;
    std::array<S, Signature::kMaxBlades> coeffs_;
};

using MultivectorD = Multivector<double>;
using MultivectorQ = Multivector<Rational>;

// ---------------------------------------------------------------------------
// Products

template <class S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
    a.require_same(b);
    const auto& table = product_table(a.signature());
    Multivector<S> out(a.signature());
    const int count = a.blade_count();
    for (int i = 0; i < count; ++i) {
        const BladeMask bi = static_cast<BladeMask>(i);
        if (CoefficientTraits<S>::is_zero(a[bi])) continue;
        for (int j = 0; j < count; ++j) {
            const BladeMask bj = static_cast<BladeMask>(j);
            if (CoefficientTraits<S>::is_zero(b[bj])) continue;
            const BladeMask target = static_cast<BladeMask>(i ^ j);
            if (table.sign[i][j] > 0) {
                out[target] += a[bi] * b[bj];
            } else {
                out[target] -= a[bi] * b[bj];
            }
        }
    }
    return out;
}

template <class S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
    return geometric_product(a, b);
}

namespace detail {

/// Keeps those blade-pair contributions of ab whose grades satisfy keep(r, s, grade(ab)).
template <class S, class Keep>
Multivector<S> filtered_product(const Multivector<S>& a, const Multivector<S>& b, Keep keep) {
    a.require_same(b);
    const auto& table = product_table(a.signature());
    Multivector<S> out(a.signature());
    const int count = a.blade_count();
    for (int i = 0; i < count; ++i) {
        const BladeMask bi = static_cast<BladeMask>(i);
        if (CoefficientTraits<S>::is_zero(a[bi])) continue;
        for (int j = 0; j < count; ++j) {
            const BladeMask bj = static_cast<BladeMask>(j);
            if (CoefficientTraits<S>::is_zero(b[bj])) continue;
            const BladeMask target = static_cast<BladeMask>(i ^ j);
            if (!keep(blade_grade(bi), blade_grade(bj), blade_grade(target))) continue;
            if (table.sign[i][j] > 0) {
                out[target] += a[bi] * b[bj];
            } else {
                out[target] -= a[bi] * b[bj];
            }
        }
    }
    return out;
}

}  // namespace detail

/// Outer product: <ab>_{r+s} for homogeneous parts, extended bilinearly.
template <class S>
Multivector<S> outer(const Multivector<S>& a, const Multivector<S>& b) {
    return detail::filtered_product(a, b, [](int r, int s, int g) { return g == r + s; });
}

/// Grade-lowering inner product: <ab>_{|r-s|} for homogeneous parts with
/// r, s >= 1; any grade-0 factor gives zero.
template <class S>
Multivector<S> inner(const Multivector<S>& a, const Multivector<S>& b) {
    return detail::filtered_product(a, b, [](int r, int s, int g) {
        return r > 0 && s > 0 && g == (r > s ? r - s : s - r);
    });
}

// ---------------------------------------------------------------------------
// Grade operations and involutions

template <class S>
Multivector<S> grade(const Multivector<S>& a, int k) {
    if (k < 0 || k > a.signature().dimension()) {
        throw AlgebraError("grade " + std::to_string(k) + " out of range for " + a.signature().name());
    }
    Multivector<S> out(a.signature());
    for (int b = 0; b < a.blade_count(); ++b) {
        if (blade_grade(static_cast<BladeMask>(b)) == k) out[static_cast<BladeMask>(b)] = a[static_cast<BladeMask>(b)];
    }
    return out;
}

/// Bitmask of grades with at least one nonzero coefficient.
template <class S>
unsigned grades_present(const Multivector<S>& a) {
    unsigned mask = 0;
    for (int b = 0; b < a.blade_count(); ++b) {
        if (!CoefficientTraits<S>::is_zero(a[static_cast<BladeMask>(b)])) {
            mask |= 1U << blade_grade(static_cast<BladeMask>(b));
        }
    }
    return mask;
}

/// Sign (-1)^{k(k-1)/2} that reversion puts on a grade-k blade.
constexpr int reverse_sign(int k) noexcept { return ((k * (k - 1) / 2) % 2) ? -1 : 1; }

template <class S>
Multivector<S> reverse(Multivector<S> a) {
    for (int b = 0; b < a.blade_count(); ++b) {
        if (reverse_sign(blade_grade(static_cast<BladeMask>(b))) < 0) {
            a[static_cast<BladeMask>(b)] = -a[static_cast<BladeMask>(b)];
        }
    }
    return a;
}

/// Hermitian adjoint relative to the observer frame of generator 0:
/// M -> g0 reverse(M) g0. In Cl(1,3) this is the dagger under which F F^dagger
/// gives E^2 + B^2; requires g0^2 = +1.
template <class S>
Multivector<S> adjoint(const Multivector<S>& a) {
    const Signature& sig = a.signature();
    if (sig.p() < 1) {
        throw AlgebraError("adjoint needs a positive-norm generator 0; " + sig.name() + " has none");
    }
    const auto g0 = Multivector<S>::generator(sig, 0);
    return geometric_product(geometric_product(g0, reverse(a)), g0);
}

/// Reversion with every generator replaced by its inverse. <metric_adjoint(M) M>_0
/// is the sum of squared coefficients in every signature.
template <class S>
Multivector<S> metric_adjoint(Multivector<S> a) {
    const Signature& sig = a.signature();
    for (int b = 0; b < a.blade_count(); ++b) {
        int sign = reverse_sign(blade_grade(static_cast<BladeMask>(b)));
        for (int k = 0; k < sig.dimension(); ++k) {
            if (b & (1 << k)) sign *= sig.metric(k);
        }
        if (sign < 0) a[static_cast<BladeMask>(b)] = -a[static_cast<BladeMask>(b)];
    }
    return a;
}

template <class S>
const S& scalar_part(const Multivector<S>& a) {
    return a[0];
}

/// Magnitude <M^H M>_0^{1/2} with the positive-definite metric adjoint.
inline double magnitude(const MultivectorD& a) {
    return std::sqrt(scalar_part(geometric_product(metric_adjoint(a), a)));
}

// ---------------------------------------------------------------------------
// Distinguished elements

/// Unit pseudoscalar g0 g1 ... g_{n-1} with coefficient +1.
template <class S = double>
Multivector<S> pseudoscalar(const Signature& sig) {
    return Multivector<S>::blade(sig, static_cast<BladeMask>(sig.blade_count() - 1));
}

/// Relative (observer-frame) basis vector sigma_k = g_k g_0, k = 1..n-1.
template <class S = double>
Multivector<S> relative_basis(const Signature& sig, int k) {
    if (k < 1 || k >= sig.dimension()) {
        throw AlgebraError("relative basis index " + std::to_string(k) + " out of range");
    }
    return geometric_product(Multivector<S>::generator(sig, k), Multivector<S>::generator(sig, 0));
}

/// Pseudoscalar dual i * sigma_k of the relative basis vector.
template <class S = double>
Multivector<S> relative_dual_basis(const Signature& sig, int k) {
    return geometric_product(pseudoscalar<S>(sig), relative_basis<S>(sig, k));
}

/// Coefficient of M along basis, where basis is +/- a single basis blade.
template <class S>
S component_along(const Multivector<S>& m, const Multivector<S>& basis) {
    m.require_same(basis);
    for (int b = 0; b < basis.blade_count(); ++b) {
        const auto& c = basis[static_cast<BladeMask>(b)];
        if (CoefficientTraits<S>::is_zero(c)) continue;
        return CoefficientTraits<S>::is_negative(c) ? S(-m[static_cast<BladeMask>(b)]) : m[static_cast<BladeMask>(b)];
    }
    throw AlgebraError("component_along: zero basis element");
}

enum class Commutation { Commutes = 1, Anticommutes = -1 };

/// Reports whether the pseudoscalar commutes or anticommutes with a
/// homogeneous multivector, decided from the actual products ia and ai.
template <class S>
Commutation pseudoscalar_commutation(const Multivector<S>& a) {
    const unsigned grades = grades_present(a);
    if (grades == 0 || (grades & (grades - 1)) != 0) {
        throw AlgebraError("pseudoscalar_commutation needs a nonzero homogeneous multivector");
    }
    const auto i = pseudoscalar<S>(a.signature());
    const auto left = geometric_product(i, a);
    const auto right = geometric_product(a, i);
    if (left == right) return Commutation::Commutes;
    if (left == -right) return Commutation::Anticommutes;
    throw AlgebraError("pseudoscalar neither commutes nor anticommutes with the argument");
}

// ---------------------------------------------------------------------------
// Spacetime split (Cl(1,3) only)

template <class S>
struct SpacetimeSplit {
    S time_scalar{};
    std::array<S, 3> spatial{};
};

/// Splits a spacetime vector into a.g0 and the relative vector a^g0 read on
/// the sigma_k = g_k g_0 basis.
template <class S>
SpacetimeSplit<S> spacetime_split(const Multivector<S>& a) {
    const Signature& sig = a.signature();
    if (!sig.is_minkowski()) throw AlgebraError("spacetime_split requires Cl(1,3), got " + sig.name());
    if (grades_present(a) & ~2U) throw AlgebraError("spacetime_split requires a grade-1 multivector");
    const auto g0 = Multivector<S>::generator(sig, 0);
    SpacetimeSplit<S> out;
    out.time_scalar = scalar_part(inner(a, g0));
    const auto rel = outer(a, g0);
    for (int k = 1; k <= 3; ++k) out.spatial[k - 1] = component_along(rel, relative_basis<S>(sig, k));
    return out;
}

/// Inverse of spacetime_split: (t + sum s_k sigma_k) g0.
template <class S>
Multivector<S> recombine(const SpacetimeSplit<S>& split) {
    const auto sig = Signature::minkowski();
    auto even = Multivector<S>::scalar(sig, split.time_scalar);
    for (int k = 1; k <= 3; ++k) even += relative_basis<S>(sig, k) * split.spatial[k - 1];
    return geometric_product(even, Multivector<S>::generator(sig, 0));
}

// ---------------------------------------------------------------------------
// Duality rotor

/// cos(alpha) - i sin(alpha), i.e. exp(-i alpha) for i^2 = -1. Right
/// multiplication of a Faraday bivector by this rotates (E, B) by alpha.
MultivectorD duality_rotor(const Signature& sig, double alpha);

// ---------------------------------------------------------------------------
// Formatting

template <class S>
std::string to_string(const Multivector<S>& a) {
    using Traits = CoefficientTraits<S>;
    const Signature& sig = a.signature();
    std::array<int, Signature::kMaxBlades> order{};
    std::iota(order.begin(), order.begin() + a.blade_count(), 0);
    std::stable_sort(order.begin(), order.begin() + a.blade_count(), [](int x, int y) {
        return blade_grade(static_cast<BladeMask>(x)) < blade_grade(static_cast<BladeMask>(y));
    });
    std::string out;
    for (int idx = 0; idx < a.blade_count(); ++idx) {
        const BladeMask b = static_cast<BladeMask>(order[idx]);
        const S& c = a[b];
        if (Traits::is_zero(c)) continue;
        const std::string blade = b == 0 ? std::string() : format_blade(sig, b);
        std::string term;
        bool negative = false;
        if (Traits::is_compound(c)) {
            term = "(" + Traits::format(c) + ")";
            if (!blade.empty()) term += "*" + blade;
        } else {
            negative = Traits::is_negative(c);
            const S mag = negative ? S(-c) : c;
            if (blade.empty()) {
                term = Traits::format(mag);
            } else if (Traits::is_unit(mag)) {
                term = blade;
            } else {
                term = Traits::format(mag) + "*" + blade;
            }
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace sta

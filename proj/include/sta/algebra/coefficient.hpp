#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <string>

namespace sta {

/// Exact rational coefficients for identity work.
using Rational = boost::multiprecision::cpp_rational;

/// Customisation point describing a coefficient ring to the printer and to
/// the zero-skipping product loops. Specialised for double and Rational here
/// and for symbolic polynomials in the symbolic module.
template <class S>
struct CoefficientTraits;

template <>
struct CoefficientTraits<double> {
    static bool is_zero(double v) noexcept { return v == 0.0; }
    static bool is_negative(double v) noexcept { return std::signbit(v) && v != 0.0; }
    static bool is_unit(double v) noexcept { return v == 1.0; }
    static bool is_compound(double) noexcept { return false; }
    static std::string format(double v) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }
};

template <>
struct CoefficientTraits<Rational> {
    static bool is_zero(const Rational& v) { return v == 0; }
    static bool is_negative(const Rational& v) { return v < 0; }
    static bool is_unit(const Rational& v) { return v == 1; }
    static bool is_compound(const Rational&) noexcept { return false; }
    static std::string format(const Rational& v) {
        const auto num = boost::multiprecision::numerator(v);
        const auto den = boost::multiprecision::denominator(v);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
};

}  // namespace sta

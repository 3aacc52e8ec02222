#pragma once

#include "sta/algebra/multivector.hpp"

#include <random>

namespace sta::testing {

/// Random multivector with small integer (or p/q) coefficients; roughly a third
/// of the slots are left at zero so sparse paths get exercised too.
inline MultivectorQ random_rational(const Signature& sig, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> keep(0, 2);
    MultivectorQ out(sig);
    for (int b = 0; b < sig.blade_count(); ++b) {
        if (keep(rng) == 0) continue;
        out[static_cast<BladeMask>(b)] = Rational(num(rng), den(rng));
    }
    return out;
}

inline MultivectorQ random_rational_grade(const Signature& sig, int k, std::mt19937_64& rng) {
    return grade(random_rational(sig, rng), k);
}

inline MultivectorD random_double(const Signature& sig, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    MultivectorD out(sig);
    for (int b = 0; b < sig.blade_count(); ++b) out[static_cast<BladeMask>(b)] = coeff(rng);
    return out;
}

inline MultivectorD random_bivector(std::mt19937_64& rng) {
    return grade(random_double(Signature::minkowski(), rng), 2);
}

}  // namespace sta::testing

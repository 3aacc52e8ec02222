#include "sta/algebra/multivector.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sta {

MultivectorD duality_rotor(const Signature& sig, double alpha) {
    if (!sig.is_minkowski()) {
        throw AlgebraError("duality_rotor is defined for Cl(1,3) only; " + sig.name() +
                           " uses the discrete E<->B swap instead");
    }
    double c = std::cos(alpha);
    double s = std::sin(alpha);
    // Quarter turns get exact 0/+-1 so F e^{-i pi/2} is an exact blade permutation.
    const double quarters = alpha / (std::numbers::pi / 2);
    const double nearest = std::round(quarters);
    if (std::abs(quarters - nearest) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(nearest))) {
        static constexpr double kCos[] = {1, 0, -1, 0};
        static constexpr double kSin[] = {0, 1, 0, -1};
        const auto q = static_cast<std::size_t>(((static_cast<long long>(nearest) % 4) + 4) % 4);
        c = kCos[q];
        s = kSin[q];
    }
    auto rotor = MultivectorD::scalar(sig, c);
    rotor -= pseudoscalar<double>(sig) * s;
    return rotor;
}

}  // namespace sta

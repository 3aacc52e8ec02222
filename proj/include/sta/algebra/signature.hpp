#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sta {

/// Raised when an algebra operation is called outside its contract
/// (mismatched signatures, wrong grade, unsupported signature, ...).
class AlgebraError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Metric signature of a real Clifford algebra Cl(p,q) with n = p + q <= 4.
///
/// Generators are ordered positive-norm first: generator k squares to +1 when
/// k < p and to -1 otherwise. For Cl(1,3) this puts the timelike g0 first, so
/// the metric reads diag(+,-,-,-).
class Signature {
public:
    static constexpr int kMaxDimension = 4;
    static constexpr int kMaxBlades = 1 << kMaxDimension;

    Signature(int p, int q) : p_(p), q_(q) {
        if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxDimension) {
            throw AlgebraError("signature Cl(" + std::to_string(p) + "," + std::to_string(q) +
                               ") outside 1 <= p+q <= 4");
        }
    }

    static Signature minkowski() { return {1, 3}; }
    static Signature euclidean() { return {4, 0}; }

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int dimension() const noexcept { return p_ + q_; }
    int blade_count() const noexcept { return 1 << dimension(); }

    /// Square of generator k: +1 or -1.
    int metric(int k) const noexcept { return k < p_ ? 1 : -1; }

    bool is_minkowski() const noexcept { return p_ == 1 && q_ == 3; }
    bool is_euclidean() const noexcept { return q_ == 0; }

    /// Prefix used when printing generators: "g" for indefinite metrics, "e" for definite ones.
    char generator_prefix() const noexcept { return q_ == 0 ? 'e' : 'g'; }

    std::string name() const { return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    int p_;
    int q_;
};

}  // namespace sta

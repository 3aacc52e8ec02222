#pragma once

#include "sta/algebra/coefficient.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sta::symbolic {

/// Product of commuting scalar symbols with positive exponents, kept sorted by name.
class Monomial {
public:
    Monomial() = default;
    static Monomial symbol(std::string name);

    const std::vector<std::pair<std::string, int>>& factors() const noexcept { return factors_; }
    int degree() const noexcept;
    bool is_constant() const noexcept { return factors_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded lexicographic order: lower total degree first, then by factor list.
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string to_string() const;

private:
    std::vector<std::pair<std::string, int>> factors_;
};

/// Multivariate polynomial with exact rational coefficients. Zero terms are
/// never stored, so structural equality is polynomial equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int value) : Polynomial(Rational(value)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& value);                      // NOLINT(google-explicit-constructor)

    static Polynomial symbol(const std::string& name);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (zero when absent).
    Rational constant() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

}  // namespace sta::symbolic

namespace sta {

template <>
struct CoefficientTraits<symbolic::Polynomial> {
    static bool is_zero(const symbolic::Polynomial& p) noexcept { return p.is_zero(); }
    static bool is_negative(const symbolic::Polynomial& p) {
        return p.term_count() == 1 && p.terms().begin()->second < 0;
    }
    static bool is_unit(const symbolic::Polynomial& p) { return p.is_constant() && p.constant() == 1; }
    static bool is_compound(const symbolic::Polynomial& p) noexcept { return p.term_count() > 1; }
    static std::string format(const symbolic::Polynomial& p) { return p.to_string(); }
};

}  // namespace sta

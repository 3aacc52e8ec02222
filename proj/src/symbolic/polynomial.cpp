#include "sta/symbolic/polynomial.hpp"

#include <algorithm>

namespace sta::symbolic {

Monomial Monomial::symbol(std::string name) {
    Monomial m;
    m.factors_.emplace_back(std::move(name), 1);
    return m;
}

int Monomial::degree() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
            out.factors_.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a.factors_ < b.factors_;
}

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& [name, power] : factors_) {
        if (!out.empty()) out += '*';
        out += name;
        if (power != 1) out += "**" + std::to_string(power);
    }
    return out;
}

Polynomial::Polynomial(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial Polynomial::symbol(const std::string& name) {
    Polynomial p;
    p.terms_.emplace(Monomial::symbol(name), Rational(1));
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& term : a.terms_) term.second = -term.second;
    return a;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string body;
        if (m.is_constant()) {
            body = CoefficientTraits<Rational>::format(mag);
        } else if (mag == 1) {
            body = m.to_string();
        } else {
            body = CoefficientTraits<Rational>::format(mag) + "*" + m.to_string();
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace sta::symbolic

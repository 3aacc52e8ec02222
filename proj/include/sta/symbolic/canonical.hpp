#pragma once

#include "sta/algebra/multivector.hpp"
#include "sta/symbolic/expression.hpp"
#include "sta/symbolic/polynomial.hpp"

#include <string>
#include <vector>

namespace sta::symbolic {

/// Normal form of an expression: one polynomial coefficient per basis blade.
using CanonicalForm = Multivector<Polynomial>;

/// Product of two normal forms, computed by concatenating generator words and
/// rewriting them into ascending order with g_a g_b = 2 eta_ab - g_b g_a and
/// g_a g_a = eta_aa.
CanonicalForm rewrite_product(const CanonicalForm& a, const CanonicalForm& b);

/// Fully expands an expression into its normal form.
CanonicalForm canonicalize(const Expression& expr);

struct BladeDifference {
    std::string blade;
    Polynomial lhs_minus_rhs;
};

struct IdentityReport {
    bool equal = false;
    std::vector<BladeDifference> differences;
};

/// Decides lhs == rhs by comparing normal forms. Throws AlgebraError when
/// the two sides were parsed against different signatures.
IdentityReport verify_identity(const Expression& lhs, const Expression& rhs);

}  // namespace sta::symbolic

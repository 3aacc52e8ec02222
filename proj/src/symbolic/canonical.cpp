#include "sta/symbolic/canonical.hpp"

#include <array>
#include <map>
#include <utility>

namespace sta::symbolic {

namespace {

using Word = std::vector<int>;

struct RewriteTerm {
    int coefficient;
    BladeMask mask;
};

int eta(const Signature& sig, int a, int b) { return a == b ? sig.metric(a) : 0; }

/// Normal form of a generator word as a list of signed blades.
std::vector<RewriteTerm> rewrite_word(const Signature& sig, Word start) {
    std::map<BladeMask, int> result;
    std::vector<std::pair<int, Word>> work;
    work.emplace_back(1, std::move(start));
    while (!work.empty()) {
        auto [coef, word] = std::move(work.back());
        work.pop_back();
        if (coef == 0) continue;
        std::size_t k = 0;
        while (k + 1 < word.size() && word[k] < word[k + 1]) ++k;
        if (k + 1 >= word.size()) {
            BladeMask mask = 0;
            for (int g : word) mask = static_cast<BladeMask>(mask | (1U << g));
            result[mask] += coef;
            continue;
        }
        const int a = word[k];
        const int b = word[k + 1];
        Word contracted = word;
        contracted.erase(contracted.begin() + static_cast<std::ptrdiff_t>(k),
                         contracted.begin() + static_cast<std::ptrdiff_t>(k + 2));
        if (a == b) {
            work.emplace_back(coef * eta(sig, a, a), std::move(contracted));
            continue;
        }
        // a > b: g_a g_b = 2 eta_ab - g_b g_a
        if (const int e = eta(sig, a, b); e != 0) work.emplace_back(2 * e * coef, std::move(contracted));
        std::swap(word[k], word[k + 1]);
        work.emplace_back(-coef, std::move(word));
    }
    std::vector<RewriteTerm> out;
    for (const auto& [mask, coef] : result) {
        if (coef != 0) out.push_back({coef, mask});
    }
    return out;
}

Word blade_word(BladeMask mask, int n) {
    Word w;
    for (int k = 0; k < n; ++k) {
        if (mask & (1U << k)) w.push_back(k);
    }
    return w;
}

struct RewriteTables {
    using Table = std::array<std::array<std::vector<RewriteTerm>, 16>, 16>;
    std::array<Table, 25> tables;

    RewriteTables() {
        for (int p = 0; p <= 4; ++p) {
            for (int q = 0; p + q <= 4; ++q) {
                if (p + q == 0) continue;
                const Signature sig(p, q);
                auto& table = tables[static_cast<std::size_t>(p * 5 + q)];
                for (int a = 0; a < sig.blade_count(); ++a) {
                    for (int b = 0; b < sig.blade_count(); ++b) {
                        Word w = blade_word(static_cast<BladeMask>(a), sig.dimension());
                        const Word rhs = blade_word(static_cast<BladeMask>(b), sig.dimension());
                        w.insert(w.end(), rhs.begin(), rhs.end());
                        table[a][b] = rewrite_word(sig, std::move(w));
                    }
                }
            }
        }
    }
};

const RewriteTables::Table& rewrite_table(const Signature& sig) {
    static const RewriteTables tables;
    return tables.tables[static_cast<std::size_t>(sig.p() * 5 + sig.q())];
}

template <class Keep>
CanonicalForm graded_product(const CanonicalForm& a, const CanonicalForm& b, Keep keep) {
    const int n = a.signature().dimension();
    CanonicalForm out(a.signature());
    for (int r = 0; r <= n; ++r) {
        const auto ar = grade(a, r);
        if (ar.is_zero()) continue;
        for (int s = 0; s <= n; ++s) {
            const auto bs = grade(b, s);
            if (bs.is_zero()) continue;
            const int target = keep(r, s);
            if (target < 0 || target > n) continue;
            out += grade(rewrite_product(ar, bs), target);
        }
    }
    return out;
}

class Canonicalizer {
public:
    explicit Canonicalizer(Signature sig) : sig_(sig) {}

    CanonicalForm eval(const Node& node) {
        switch (node.kind) {
            case NodeKind::Generator:
                return CanonicalForm::generator(sig_, node.index);
            case NodeKind::Constant:
                return CanonicalForm::scalar(sig_, Polynomial(node.value));
            case NodeKind::Scalar:
                return CanonicalForm::scalar(sig_, Polynomial::symbol(node.name));
            case NodeKind::RelativeVector: {
                CanonicalForm out(sig_);
                const auto g0 = CanonicalForm::generator(sig_, 0);
                for (int k = 1; k <= 3; ++k) {
                    const auto sigma = rewrite_product(CanonicalForm::generator(sig_, k), g0);
                    out += sigma * Polynomial::symbol(node.name + std::to_string(k));
                }
                return out;
            }
            case NodeKind::SpacetimeVector: {
                CanonicalForm out(sig_);
                for (int mu = 0; mu < sig_.dimension(); ++mu) {
                    out += CanonicalForm::generator(sig_, mu) * Polynomial::symbol(node.name + std::to_string(mu));
                }
                return out;
            }
            case NodeKind::Pseudoscalar: {
                auto out = CanonicalForm::scalar(sig_, Polynomial(1));
                for (int k = 0; k < sig_.dimension(); ++k) out = rewrite_product(out, CanonicalForm::generator(sig_, k));
                return out;
            }
            case NodeKind::Sum: {
                CanonicalForm out(sig_);
                for (const auto& child : node.children) out += eval(*child);
                return out;
            }
            case NodeKind::Negate:
                return -eval(*node.children.at(0));
            case NodeKind::Product: {
                auto out = eval(*node.children.at(0));
                for (std::size_t k = 1; k < node.children.size(); ++k) out = rewrite_product(out, eval(*node.children[k]));
                return out;
            }
            case NodeKind::Wedge:
                return graded_product(eval(*node.children.at(0)), eval(*node.children.at(1)),
                                      [](int r, int s) { return r + s; });
            case NodeKind::Dot:
                return graded_product(eval(*node.children.at(0)), eval(*node.children.at(1)), [](int r, int s) {
                    return (r == 0 || s == 0) ? -1 : (r > s ? r - s : s - r);
                });
            case NodeKind::Grade:
                return grade(eval(*node.children.at(0)), node.index);
            case NodeKind::Reverse:
                return reverse(eval(*node.children.at(0)));
            case NodeKind::Adjoint: {
                if (sig_.p() < 1) throw AlgebraError("adjoint needs g0^2 = +1; " + sig_.name() + " has none");
                const auto g0 = CanonicalForm::generator(sig_, 0);
                return rewrite_product(rewrite_product(g0, reverse(eval(*node.children.at(0)))), g0);
            }
            case NodeKind::Power: {
                const auto base = eval(*node.children.at(0));
                auto out = CanonicalForm::scalar(sig_, Polynomial(1));
                for (int k = 0; k < node.index; ++k) out = rewrite_product(out, base);
                return out;
            }
            case NodeKind::Reference: {
                const Node* key = node.children.at(0).get();
                if (auto it = memo_.find(key); it != memo_.end()) return it->second;
                auto value = eval(*key);
                memo_.emplace(key, value);
                return value;
            }
        }
        throw AlgebraError("unhandled expression node");
    }

private:
    Signature sig_;
    std::map<const Node*, CanonicalForm> memo_;
};

}  // namespace

CanonicalForm rewrite_product(const CanonicalForm& a, const CanonicalForm& b) {
    a.require_same(b);
    const auto& table = rewrite_table(a.signature());
    CanonicalForm out(a.signature());
    for (int i = 0; i < a.blade_count(); ++i) {
        const auto& ca = a[static_cast<BladeMask>(i)];
        if (ca.is_zero()) continue;
        for (int j = 0; j < b.blade_count(); ++j) {
            const auto& cb = b[static_cast<BladeMask>(j)];
            if (cb.is_zero()) continue;
            const Polynomial prod = ca * cb;
            for (const auto& term : table[i][j]) out[term.mask] += prod * Polynomial(term.coefficient);
        }
    }
    return out;
}

CanonicalForm canonicalize(const Expression& expr) {
    Canonicalizer c(expr.signature);
    return c.eval(*expr.root);
}

IdentityReport verify_identity(const Expression& lhs, const Expression& rhs) {
    if (lhs.signature != rhs.signature) {
        throw AlgebraError("identity sides use different signatures: " + lhs.signature.name() + " vs " +
                           rhs.signature.name());
    }
    const auto diff = canonicalize(lhs) - canonicalize(rhs);
    IdentityReport report;
    for (int b = 0; b < diff.blade_count(); ++b) {
        const auto& c = diff[static_cast<BladeMask>(b)];
        if (c.is_zero()) continue;
        report.differences.push_back({format_blade(lhs.signature, static_cast<BladeMask>(b)), c});
    }
    report.equal = report.differences.empty();
    return report;
}

}  // namespace sta::symbolic

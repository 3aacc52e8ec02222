#include "doctest.h"

#include "blade_oracle.hpp"
#include "random_multivector.hpp"
#include "sta/symbolic/canonical.hpp"
#include "sta/symbolic/corpus.hpp"

#include <chrono>
#include <map>
#include <random>

using namespace sta;
using namespace sta::symbolic;

namespace {

const Signature kMink = Signature::minkowski();
const Signature kEucl = Signature::euclidean();

CanonicalForm canon(const std::string& text, const Signature& sig = kMink, const SymbolTable& symbols = {}) {
    return canonicalize(parse(text, sig, symbols));
}

Polynomial sym(const std::string& name) { return Polynomial::symbol(name); }

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& values) {
    Rational total = 0;
    for (const auto& [mono, coef] : p.terms()) {
        Rational term = coef;
        for (const auto& [name, power] : mono.factors()) {
            for (int k = 0; k < power; ++k) term *= values.at(name);
        }
        total += term;
    }
    return total;
}

MultivectorQ evaluate(const CanonicalForm& f, const std::map<std::string, Rational>& values) {
    MultivectorQ out(f.signature());
    for (int b = 0; b < f.blade_count(); ++b) out[static_cast<BladeMask>(b)] = evaluate(f[static_cast<BladeMask>(b)], values);
    return out;
}

CanonicalForm lift(const MultivectorQ& m) {
    CanonicalForm out(m.signature());
    for (int b = 0; b < m.blade_count(); ++b) out[static_cast<BladeMask>(b)] = Polynomial(m[static_cast<BladeMask>(b)]);
    return out;
}

int parse_error_column(const std::string& text, const Signature& sig = kMink, const SymbolTable& symbols = {}) {
    try {
        parse(text, sig, symbols);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}

}  // namespace

TEST_CASE("parse builds the expected tree shapes") {
    const auto e = parse("g0 g1 g2 g3", kMink);
    REQUIRE(e.root->kind == NodeKind::Product);
    CHECK(e.root->children.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(e.root->children[k]->index == k);

    SymbolTable st;
    st.declare_relative_vector("E");
    st.declare_relative_vector("B");
    st.define("F", parse("E + i B", kMink, st).root);
    const auto g = parse("<F F>_0", kMink, st);
    REQUIRE(g.root->kind == NodeKind::Grade);
    CHECK(g.root->index == 0);
    CHECK(g.root->children[0]->kind == NodeKind::Product);

    CHECK(canon("g0 ^ g0").is_zero());
}

TEST_CASE("parse diagnostics carry columns") {
    CHECK(parse_error_column("g0 g4") == 4);
    CHECK(parse_error_column("g0 + X") == 6);
    CHECK(parse_error_column("<g0>_5") == 6);
    CHECK(parse_error_column("(g0 g1") == 7);
    CHECK(parse_error_column("g0 $ g1") == 4);
    CHECK(parse_error_column("1/0") == 3);
    CHECK(parse_error_column("") == 1);
    CHECK_THROWS_AS(parse("g5", Signature(3, 0)), ParseError);

    SymbolTable st;
    CHECK_THROWS_AS(st.declare_scalar("i"), std::invalid_argument);
    CHECK_THROWS_AS(st.declare_scalar("g2"), std::invalid_argument);
    st.declare_relative_vector("E");
    CHECK_THROWS_AS(st.declare_scalar("E1"), std::invalid_argument);
    CHECK(parse_error_column("g0 E", Signature(3, 0), st) == 4);
}

TEST_CASE("canonicalize applies anticommutation and metric contraction") {
    const auto f = canon("g1 g0");
    CHECK(f == CanonicalForm::blade(kMink, 0b0011, Polynomial(-1)));
    CHECK(canon("g0 g0") == CanonicalForm::scalar(kMink, 1));
    CHECK(canon("g1 g1") == CanonicalForm::scalar(kMink, -1));
    CHECK(canon("e1 e1", kEucl) == CanonicalForm::scalar(kEucl, 1));
    CHECK(canon("g3 g1 g2 g0") == CanonicalForm::blade(kMink, 0b1111, Polynomial(-1)));
    CHECK(canon("g2 ~ g1") == canon("g2 g1"));
    CHECK(canon("(g1 g2)~") == canon("g2 g1"));
    CHECK(canon("(g0 + g1)**0") == CanonicalForm::scalar(kMink, 1));
    CHECK(canon("3/4 g0 - 1/4 g0") == CanonicalForm::generator(kMink, 0) * Polynomial(Rational(1, 2)));
}

TEST_CASE("grade-0 part of a squared relative vector matches the word oracle") {
    SymbolTable st;
    st.declare_scalar("E1");
    st.declare_scalar("E2");
    const auto f = grade(canon("(E1 g1 g0 + E2 g2 g0)**2", kMink, st), 0);

    // Hand expansion: each term is a coefficient times a word g_a g0 g_b g0.
    const std::pair<std::string, int> terms[] = {{"E1", 1}, {"E2", 2}};
    Polynomial scalar;
    for (const auto& [ca, a] : terms) {
        for (const auto& [cb, b] : terms) {
            auto left = oracle::multiply_words(kMink, 1U << a, 1U);
            auto right = oracle::multiply_words(kMink, 1U << b, 1U);
            auto prod = oracle::multiply_words(kMink, left.mask, right.mask);
            if (prod.mask == 0) scalar += sym(ca) * sym(cb) * Polynomial(left.sign * right.sign * prod.sign);
        }
    }
    CHECK(f[0] == scalar);
    CHECK(scalar == sym("E1") * sym("E1") + sym("E2") * sym("E2"));
}

TEST_CASE("rewrite product agrees with the bitmask kernel") {
    std::mt19937_64 rng(11);
    for (const auto& sig : {kMink, kEucl, Signature(2, 2), Signature(3, 1), Signature(1, 2), Signature(0, 3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = testing::random_rational(sig, rng);
            const auto b = testing::random_rational(sig, rng);
            CHECK(rewrite_product(lift(a), lift(b)) == lift(a * b));
        }
    }
}

TEST_CASE("symbolic field products agree with numeric substitution") {
    SymbolTable st;
    st.declare_relative_vector("E");
    st.declare_relative_vector("B");
    st.define("F", parse("E + i B", kMink, st).root);
    const auto ff = canon("F F", kMink, st);
    const auto ffd = canon("F F†", kMink, st);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<std::string, Rational> values;
        MultivectorQ e(kMink), b(kMink);
        for (int k = 1; k <= 3; ++k) {
            values["E" + std::to_string(k)] = Rational(pick(rng), 7);
            values["B" + std::to_string(k)] = Rational(pick(rng), 5);
            e += relative_basis<Rational>(kMink, k) * values["E" + std::to_string(k)];
            b += relative_basis<Rational>(kMink, k) * values["B" + std::to_string(k)];
        }
        const auto f = e + pseudoscalar<Rational>(kMink) * b;
        CHECK(evaluate(ff, values) == f * f);
        CHECK(evaluate(ffd, values) == f * adjoint(f));
    }
}

TEST_CASE("verify_identity reports verdicts and differences") {
    CHECK(verify_identity(parse("i i", kMink), parse("-1", kMink)).equal);

    SymbolTable st;
    st.declare_relative_vector("E");
    st.declare_relative_vector("B");
    st.define("F", parse("E + i B", kMink, st).root);
    CHECK(verify_identity(parse("F F", kMink, st), parse("E E - B B + 2 i (E | B)", kMink, st)).equal);
    CHECK(verify_identity(parse("F F†", kMink, st), parse("E E + B B - i (E B - B E)", kMink, st)).equal);

    const auto bad = verify_identity(parse("F F", kMink, st), parse("E E + B B + 2 i (E | B)", kMink, st));
    CHECK_FALSE(bad.equal);
    REQUIRE(bad.differences.size() == 1);
    CHECK(bad.differences[0].blade == "1");
    CHECK(bad.differences[0].lhs_minus_rhs ==
          Polynomial(-2) * (sym("B1") * sym("B1") + sym("B2") * sym("B2") + sym("B3") * sym("B3")));

    CHECK_THROWS_AS(verify_identity(parse("g0", kMink), parse("e0", kEucl)), AlgebraError);
}

TEST_CASE("printed forms parse back to the same canonical form") {
    SymbolTable st;
    st.declare_relative_vector("E");
    st.declare_relative_vector("B");
    st.define("F", parse("E + i B", kMink, st).root);
    for (const char* text : {"1/2 + g2 - 3/2 g0 g1", "F F", "F F†", "(g0 + E)**3"}) {
        const auto f = canon(text, kMink, st);
        CHECK(canon(to_string(f), kMink, st) == f);
    }
}

TEST_CASE("corpus parser reports positions and rejects malformed stanzas") {
    CHECK_THROWS_WITH_AS(parse_corpus("[a]\nsignature: 1,3\nlhs: g0 g9\nrhs: 1\n"), "<memory>:3:9: generator g9 out of range for Cl(1,3)",
                         CorpusError);
    CHECK_THROWS_AS(parse_corpus("signature: 1,3\n"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("[a]\nsignature: 1,3\nlhs: 1\n"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("[a]\nsignature: 1,3\ncolour: red\nlhs: 1\nrhs: 1\n"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("[a]\nsignature: 1,3\nlhs: 1\nrhs: 1\n[a]\nsignature: 1,3\nlhs: 1\nrhs: 1\n"), CorpusError);
    CHECK_THROWS_WITH_AS(parse_corpus("[a]\nsignature: 1,3\nlet: X = g0 +\nlhs: X\nrhs: 1\n"),
                         "<memory>:3:14: unexpected end of input", CorpusError);

    const auto items = parse_corpus("# header\n[b]\nsignature: 1,3  # comment\nlhs: g0 g0\nrhs: 1\nnote: trivial\n");
    REQUIRE(items.size() == 1);
    CHECK(items[0].name == "b");
    CHECK(items[0].note == "trivial");
    CHECK(items[0].line == 2);
}

TEST_CASE("shipped corpus passes in every signature") {
    const auto start = std::chrono::steady_clock::now();
    const auto items = load_corpus_dir(STA_CORPUS_DIR);
    CHECK(items.size() >= 18);

    const auto mink = run_corpus(items, {kMink});
    const auto eucl = run_corpus(items, {kEucl});
    const auto all = run_corpus(items);
    CHECK(mink.results.size() >= 18);
    CHECK(eucl.results.size() >= 8);
    for (const auto& r : all.results) {
        INFO(r.name);
        CHECK(r.passed);
    }
    CHECK(std::is_sorted(all.results.begin(), all.results.end(),
                         [](const CorpusResult& a, const CorpusResult& b) { return a.name < b.name; }));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seconds < 1.0);
}

TEST_CASE("negative control: one corrupted sign fails only that item") {
    const std::string text =
        "[square]\nsignature: 1,3\nlhs: i i\nrhs: 1\n"
        "[parity]\nsignature: 1,3\nspacetime-vectors: a\nlhs: i a\nrhs: -a i\n"
        "[field]\nsignature: 1,3\nvectors: E, B\nlet: F = E + i B\nlhs: F F\nrhs: E E - B B + 2 i (E | B)\n";
    const auto report = run_corpus(parse_corpus(text));
    REQUIRE(report.results.size() == 3);
    CHECK(report.failures() == 1);
    for (const auto& r : report.results) CHECK(r.passed == (r.name != "square"));
}

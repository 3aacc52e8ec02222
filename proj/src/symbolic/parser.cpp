#include "sta/symbolic/expression.hpp"

#include <cctype>

namespace sta::symbolic {

namespace {

enum class Tok {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Pow,
    Caret,
    Bar,
    Tilde,
    Dagger,
    LParen,
    RParen,
    Less,
    Greater,
    Underscore,
    Slash,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int column;
};

constexpr std::string_view kDagger = "\xE2\x80\xA0";  // U+2020

std::vector<Token> tokenize(std::string_view text, int line) {
    std::vector<Token> out;
    std::size_t pos = 0;
    int column = 1;
    auto advance = [&](std::size_t bytes) {
        pos += bytes;
        column += 1;
    };
    while (pos < text.size()) {
        const unsigned char ch = static_cast<unsigned char>(text[pos]);
        if (std::isspace(ch)) {
            advance(1);
            continue;
        }
        const int start = column;
        if (std::isdigit(ch)) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            out.push_back({Tok::Number, std::string(text.substr(pos, end - pos)), start});
            column += static_cast<int>(end - pos);
            pos = end;
            continue;
        }
        if (std::isalpha(ch)) {
            std::size_t end = pos;
            while (end < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
                ++end;
            }
            out.push_back({Tok::Ident, std::string(text.substr(pos, end - pos)), start});
            column += static_cast<int>(end - pos);
            pos = end;
            continue;
        }
        if (text.substr(pos, kDagger.size()) == kDagger) {
            out.push_back({Tok::Dagger, std::string(kDagger), start});
            advance(kDagger.size());
            continue;
        }
        Tok kind;
        std::size_t width = 1;
        switch (ch) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*':
                if (pos + 1 < text.size() && text[pos + 1] == '*') {
                    kind = Tok::Pow;
                    width = 2;
                } else {
                    kind = Tok::Star;
                }
                break;
            case '^': kind = Tok::Caret; break;
            case '|': kind = Tok::Bar; break;
            case '~': kind = Tok::Tilde; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '<': kind = Tok::Less; break;
            case '>': kind = Tok::Greater; break;
            case '_': kind = Tok::Underscore; break;
            case '/': kind = Tok::Slash; break;
            default:
                throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", line, start);
        }
        out.push_back({kind, std::string(text.substr(pos, width)), start});
        pos += width;
        column += static_cast<int>(width);
    }
    out.push_back({Tok::End, "", column});
    return out;
}

std::optional<int> generator_index(std::string_view name) {
    if (name.size() < 2 || (name[0] != 'g' && name[0] != 'e')) return std::nullopt;
    int value = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
        value = value * 10 + (name[k] - '0');
    }
    return value;
}

std::shared_ptr<Node> make(NodeKind kind, int column, std::vector<ExprPtr> children = {}) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->column = column;
    node->children = std::move(children);
    return node;
}

class Parser {
public:
    Parser(std::string_view text, const Signature& sig, const SymbolTable& symbols, int line)
        : tokens_(tokenize(text, line)), sig_(sig), symbols_(symbols), line_(line) {}

    ExprPtr parse_all() {
        if (peek().kind == Tok::End) fail("empty expression", peek());
        auto root = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message, const Token& at) const {
        throw ParseError(message, line_, at.column);
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            fail(std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"),
                 peek());
        }
        return take();
    }

    static bool starts_primary(Tok kind) {
        return kind == Tok::Number || kind == Tok::Ident || kind == Tok::LParen || kind == Tok::Less;
    }

    ExprPtr expr() {
        const int column = peek().column;
        std::vector<ExprPtr> terms;
        terms.push_back(term());
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = take();
            auto rhs = term();
            if (op.kind == Tok::Minus) rhs = make(NodeKind::Negate, op.column, {rhs});
            terms.push_back(std::move(rhs));
        }
        if (terms.size() == 1) return terms.front();
        return make(NodeKind::Sum, column, std::move(terms));
    }

    ExprPtr term() {
        const int column = peek().column;
        std::vector<ExprPtr> factors;
        factors.push_back(wedge());
        while (true) {
            if (peek().kind == Tok::Star) {
                take();
                factors.push_back(wedge());
            } else if (starts_primary(peek().kind)) {
                factors.push_back(wedge());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return factors.front();
        return make(NodeKind::Product, column, std::move(factors));
    }

    ExprPtr wedge() {
        auto lhs = unary();
        while (peek().kind == Tok::Caret || peek().kind == Tok::Bar) {
            const Token op = take();
            auto rhs = unary();
            lhs = make(op.kind == Tok::Caret ? NodeKind::Wedge : NodeKind::Dot, op.column, {lhs, rhs});
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == Tok::Minus) {
            const Token op = take();
            return make(NodeKind::Negate, op.column, {unary()});
        }
        if (peek().kind == Tok::Plus) {
            take();
            return unary();
        }
        return postfix();
    }

    ExprPtr postfix() {
        auto base = primary();
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::Tilde) {
                take();
                base = make(NodeKind::Reverse, t.column, {base});
            } else if (t.kind == Tok::Dagger) {
                take();
                base = make(NodeKind::Adjoint, t.column, {base});
            } else if (t.kind == Tok::Pow) {
                const int column = take().column;
                const Token& exponent = expect(Tok::Number, "a non-negative integer exponent");
                auto node = make(NodeKind::Power, column, {base});
                node->index = std::stoi(exponent.text);
                base = std::move(node);
            } else {
                return base;
            }
        }
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: return number();
            case Tok::LParen: {
                take();
                auto inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Less: {
                const int column = take().column;
                auto inner = expr();
                expect(Tok::Greater, "'>' closing the grade projection");
                expect(Tok::Underscore, "'_' after '>'");
                const Token& k = expect(Tok::Number, "a grade after '_'");
                const int g = std::stoi(k.text);
                if (g > sig_.dimension()) {
                    fail("grade " + k.text + " exceeds the algebra dimension " + std::to_string(sig_.dimension()), k);
                }
                auto node = make(NodeKind::Grade, column, {inner});
                node->index = g;
                return node;
            }
            case Tok::Ident: return identifier();
            default: break;
        }
        if (t.kind == Tok::End) fail("unexpected end of input", t);
        fail("unexpected '" + t.text + "'", t);
    }

    ExprPtr number() {
        const Token& num = take();
        Rational value(boost::multiprecision::cpp_int(num.text));
        if (peek().kind == Tok::Slash) {
            take();
            const Token& den = expect(Tok::Number, "a denominator");
            const boost::multiprecision::cpp_int d(den.text);
            if (d == 0) fail("zero denominator", den);
            value /= Rational(d);
        }
        auto node = make(NodeKind::Constant, num.column);
        node->value = value;
        return node;
    }

    ExprPtr identifier() {
        const Token t = take();
        if (auto k = generator_index(t.text)) {
            if (*k >= sig_.dimension()) {
                fail("generator " + t.text + " out of range for " + sig_.name(), t);
            }
            auto node = make(NodeKind::Generator, t.column);
            node->index = *k;
            return node;
        }
        if (t.text == "i") return make(NodeKind::Pseudoscalar, t.column);
        if (t.text == "adj") {
            expect(Tok::LParen, "'(' after adj");
            auto inner = expr();
            expect(Tok::RParen, "')'");
            return make(NodeKind::Adjoint, t.column, {inner});
        }
        const auto entry = symbols_.lookup(t.text);
        if (!entry) fail("unknown symbol '" + t.text + "'", t);
        std::shared_ptr<Node> node;
        switch (entry->kind) {
            case SymbolTable::Kind::Scalar:
                node = make(NodeKind::Scalar, t.column);
                break;
            case SymbolTable::Kind::RelativeVector:
                if (sig_.dimension() != 4 || sig_.p() < 1) {
                    fail("relative vector '" + t.text + "' needs a 4-dimensional algebra with g0^2 = +1", t);
                }
                node = make(NodeKind::RelativeVector, t.column);
                break;
            case SymbolTable::Kind::SpacetimeVector:
                node = make(NodeKind::SpacetimeVector, t.column);
                break;
            case SymbolTable::Kind::Definition:
                node = make(NodeKind::Reference, t.column, {entry->definition});
                break;
        }
        node->name = t.text;
        return node;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Signature sig_;
    const SymbolTable& symbols_;
    int line_;
};

}  // namespace

bool is_reserved_name(std::string_view name) {
    return name == "i" || name == "adj" || generator_index(name).has_value();
}

void SymbolTable::insert(const std::string& name, Entry entry) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        throw std::invalid_argument("invalid symbol name '" + name + "'");
    }
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            throw std::invalid_argument("invalid symbol name '" + name + "'");
        }
    }
    if (is_reserved_name(name)) throw std::invalid_argument("'" + name + "' is a reserved name");
    if (!entries_.emplace(name, std::move(entry)).second) {
        throw std::invalid_argument("symbol '" + name + "' declared twice");
    }
}

void SymbolTable::declare_scalar(const std::string& name) { insert(name, {Kind::Scalar, nullptr}); }

// Vector symbols also declare their component scalars so both spellings can
// appear in one identity.
void SymbolTable::declare_relative_vector(const std::string& name) {
    insert(name, {Kind::RelativeVector, nullptr});
    for (int k = 1; k <= 3; ++k) insert(name + std::to_string(k), {Kind::Scalar, nullptr});
}

void SymbolTable::declare_spacetime_vector(const std::string& name) {
    insert(name, {Kind::SpacetimeVector, nullptr});
    for (int k = 0; k <= 3; ++k) insert(name + std::to_string(k), {Kind::Scalar, nullptr});
}

void SymbolTable::define(const std::string& name, ExprPtr definition) {
    insert(name, {Kind::Definition, std::move(definition)});
}

std::optional<SymbolTable::Entry> SymbolTable::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

Expression parse(std::string_view text, const Signature& sig, const SymbolTable& symbols, int line) {
    Parser parser(text, sig, symbols, line);
    return Expression{sig, parser.parse_all()};
}

}  // namespace sta::symbolic

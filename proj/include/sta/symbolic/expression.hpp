#pragma once

#include "sta/algebra/coefficient.hpp"
#include "sta/algebra/signature.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sta::symbolic {

enum class NodeKind {
    Generator,        // index = generator number
    Constant,         // value
    Scalar,           // name; commuting scalar symbol
    RelativeVector,   // name; expands to name1 s1 + name2 s2 + name3 s3 with s_k = g_k g_0
    SpacetimeVector,  // name; expands to sum name_mu g_mu
    Pseudoscalar,
    Sum,              // children added
    Negate,
    Product,          // geometric product of children, left to right
    Wedge,
    Dot,
    Grade,            // index = k
    Reverse,
    Adjoint,          // g0 reverse(x) g0
    Power,            // index = exponent >= 0
    Reference,        // name; children[0] is the definition
};

struct Node;
using ExprPtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    int index = 0;
    Rational value{};
    std::string name;
    std::vector<ExprPtr> children;
    int column = 0;
};

/// Parsed expression bound to the signature it was parsed against.
struct Expression {
    Signature signature;
    ExprPtr root;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Names visible to the parser: commuting scalars, symbolic relative 3-vectors,
/// symbolic spacetime vectors and named sub-expressions. Declaring a vector V
/// also declares its component scalars V1..V3 (relative) or V0..V3 (spacetime).
class SymbolTable {
public:
    enum class Kind { Scalar, RelativeVector, SpacetimeVector, Definition };

    struct Entry {
        Kind kind;
        ExprPtr definition;  // Definition only
    };

    void declare_scalar(const std::string& name);
    void declare_relative_vector(const std::string& name);
    void declare_spacetime_vector(const std::string& name);
    void define(const std::string& name, ExprPtr definition);

    std::optional<Entry> lookup(const std::string& name) const;

private:
    void insert(const std::string& name, Entry entry);

    std::map<std::string, Entry> entries_;
};

/// True for names the grammar reserves (generators g0.., e0.., "i", "adj").
bool is_reserved_name(std::string_view name);

/// Parses one expression. Errors carry the given line and a 1-based column.
Expression parse(std::string_view text, const Signature& sig, const SymbolTable& symbols = {}, int line = 1);

}  // namespace sta::symbolic

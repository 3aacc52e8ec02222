#pragma once

#include "sta/symbolic/canonical.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sta::symbolic {

/// Malformed corpus file; the message carries source:line:column.
class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CorpusItem {
    std::string name;
    std::string source;  // file name or "<memory>"
    int line = 0;        // line of the [name] header
    Expression lhs;
    Expression rhs;
    std::string note;
};

struct CorpusResult {
    std::string name;
    std::string signature;
    bool passed = false;
    std::vector<BladeDifference> differences;
};

struct CorpusReport {
    std::vector<CorpusResult> results;  // sorted by name

    std::size_t failures() const;
    bool all_passed() const { return failures() == 0; }
};

/// Stanza format:
///   [item-name]
///   signature: 1,3
///   scalars: a, b
///   vectors: E, B            (relative 3-vectors on g_k g_0)
///   spacetime-vectors: x
///   let: F = E + i B         (repeatable, evaluated in order)
///   lhs: F F
///   rhs: ...
///   note: free text
/// '#' starts a comment. Keys other than let may appear once per stanza.
std::vector<CorpusItem> parse_corpus(std::string_view text, const std::string& source = "<memory>");

std::vector<CorpusItem> load_corpus_file(const std::filesystem::path& path);

/// Loads every *.idn file in a directory, in file-name order.
std::vector<CorpusItem> load_corpus_dir(const std::filesystem::path& dir);

/// Verifies every item whose signature is in `only` (all items when empty).
CorpusReport run_corpus(const std::vector<CorpusItem>& items, const std::vector<Signature>& only = {});

}  // namespace sta::symbolic

#include "sta/symbolic/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace sta::symbolic {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

struct Field {
    std::string value;
    int line;
    int column;  // column of the first value character
};

struct Stanza {
    std::string name;
    int line = 0;
    std::map<std::string, Field> single;
    std::vector<Field> lets;
};

class StanzaBuilder {
public:
    explicit StanzaBuilder(const std::string& source) : source_(source) {}

    CorpusItem build(const Stanza& st) const {
        auto need = [&](const char* key) -> const Field& {
            auto it = st.single.find(key);
            if (it == st.single.end()) fail(st.line, 1, "item '" + st.name + "' has no '" + key + "'");
            return it->second;
        };
        const Field& sig_field = need("signature");
        const Signature sig = parse_signature(sig_field);

        SymbolTable symbols;
        auto declare = [&](const char* key, auto&& fn) {
            auto it = st.single.find(key);
            if (it == st.single.end()) return;
            for (const auto& name : split_list(it->second.value)) {
                try {
                    fn(name);
                } catch (const std::invalid_argument& e) {
                    fail(it->second.line, it->second.column, e.what());
                }
            }
        };
        declare("scalars", [&](const std::string& n) { symbols.declare_scalar(n); });
        declare("vectors", [&](const std::string& n) { symbols.declare_relative_vector(n); });
        declare("spacetime-vectors", [&](const std::string& n) { symbols.declare_spacetime_vector(n); });

        for (const Field& let : st.lets) {
            const auto eq = let.value.find('=');
            if (eq == std::string::npos) fail(let.line, let.column, "let needs 'NAME = expression'");
            const std::string name = trim(std::string_view(let.value).substr(0, eq));
            const Field body{let.value.substr(eq + 1), let.line, let.column + static_cast<int>(eq) + 1};
            auto expr = parse_field(body, sig, symbols);
            try {
                symbols.define(name, expr.root);
            } catch (const std::invalid_argument& e) {
                fail(let.line, let.column, e.what());
            }
        }

        auto lhs = parse_field(need("lhs"), sig, symbols);
        auto rhs = parse_field(need("rhs"), sig, symbols);
        std::string note;
        if (auto it = st.single.find("note"); it != st.single.end()) note = it->second.value;
        return CorpusItem{st.name, source_, st.line, std::move(lhs), std::move(rhs), std::move(note)};
    }

    [[noreturn]] void fail(int line, int column, const std::string& message) const {
        throw CorpusError(source_ + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message);
    }

private:
    Signature parse_signature(const Field& f) const {
        const auto parts = split_list(f.value);
        try {
            if (parts.size() == 2) return Signature(std::stoi(parts[0]), std::stoi(parts[1]));
        } catch (const std::exception& e) {
            fail(f.line, f.column, std::string("bad signature: ") + e.what());
        }
        fail(f.line, f.column, "signature must be 'p,q'");
    }

    Expression parse_field(const Field& f, const Signature& sig, const SymbolTable& symbols) const {
        try {
            return parse(f.value, sig, symbols, f.line);
        } catch (const ParseError& e) {
            // ParseError columns are relative to the expression text.
            const std::string what = e.what();
            const auto colon = what.find(": ");
            fail(e.line(), f.column + e.column() - 1, colon == std::string::npos ? what : what.substr(colon + 2));
        }
    }

    std::string source_;
};

}  // namespace

std::size_t CorpusReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const CorpusResult& r) { return !r.passed; }));
}

std::vector<CorpusItem> parse_corpus(std::string_view text, const std::string& source) {
    StanzaBuilder builder(source);
    std::vector<Stanza> stanzas;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) builder.fail(line_no, 1, "malformed item header");
            stanzas.push_back({trim(std::string_view(line).substr(1, line.size() - 2)), line_no, {}, {}});
            continue;
        }
        if (stanzas.empty()) builder.fail(line_no, 1, "key outside of an item");
        const auto colon = raw.find(':');
        if (colon == std::string::npos) builder.fail(line_no, 1, "expected 'key: value'");
        const std::string key = trim(std::string_view(raw).substr(0, colon));
        const std::string rest = raw.substr(colon + 1);
        const auto lead = rest.find_first_not_of(" \t");
        const int column = static_cast<int>(colon) + 2 + static_cast<int>(lead == std::string::npos ? 0 : lead);
        Field field{trim(rest), line_no, column};
        Stanza& st = stanzas.back();
        if (key == "let") {
            st.lets.push_back(std::move(field));
            continue;
        }
        static const char* const known[] = {"signature", "scalars", "vectors", "spacetime-vectors", "lhs", "rhs", "note"};
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) == std::end(known)) {
            builder.fail(line_no, 1, "unknown key '" + key + "'");
        }
        if (!st.single.emplace(key, std::move(field)).second) builder.fail(line_no, 1, "duplicate key '" + key + "'");
    }

    std::vector<CorpusItem> items;
    std::map<std::string, int> seen;
    for (const auto& st : stanzas) {
        if (auto [it, inserted] = seen.emplace(st.name, st.line); !inserted) {
            builder.fail(st.line, 1, "item '" + st.name + "' already defined on line " + std::to_string(it->second));
        }
        items.push_back(builder.build(st));
    }
    return items;
}

std::vector<CorpusItem> load_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open corpus file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), path.filename().string());
}

std::vector<CorpusItem> load_corpus_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw CorpusError("corpus directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".idn") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<CorpusItem> items;
    for (const auto& f : files) {
        auto more = load_corpus_file(f);
        items.insert(items.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    return items;
}

CorpusReport run_corpus(const std::vector<CorpusItem>& items, const std::vector<Signature>& only) {
    CorpusReport report;
    for (const auto& item : items) {
        if (!only.empty() && std::find(only.begin(), only.end(), item.lhs.signature) == only.end()) continue;
        const auto verdict = verify_identity(item.lhs, item.rhs);
        report.results.push_back({item.name, item.lhs.signature.name(), verdict.equal, verdict.differences});
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const CorpusResult& a, const CorpusResult& b) { return a.name < b.name; });
    return report;
}

}  // namespace sta::symbolic

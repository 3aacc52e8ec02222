#pragma once

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace sta::cli {

enum class Format { Csv, Json };

/// Column-named rows written as CSV (header + rows) or as a JSON array of
/// objects. Doubles use the shortest round-trip form in both, so outputs are
/// byte-identical across runs.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add(std::vector<nlohmann::ordered_json> row);
    const std::vector<std::vector<nlohmann::ordered_json>>& rows() const noexcept { return rows_; }

    std::string csv() const;
    nlohmann::ordered_json json() const;

    /// Writes <dir>/<stem>.csv or <dir>/<stem>.json and returns the path.
    std::filesystem::path write(const std::filesystem::path& dir, const std::string& stem, Format format) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

}  // namespace sta::cli

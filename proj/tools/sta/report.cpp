#include "report.hpp"

#include "sta/fields/snapshot.hpp"

#include <fstream>
#include <stdexcept>

namespace sta::cli {

void Table::add(std::vector<nlohmann::ordered_json> row) {
    if (row.size() != columns_.size()) throw std::logic_error("table row has the wrong number of cells");
    rows_.push_back(std::move(row));
}

std::string Table::csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) out += (c ? "," : "") + columns_[c];
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            const auto& v = row[c];
            if (v.is_number_float()) {
                out += fields::format_double(v.get<double>());
            } else if (v.is_string()) {
                const auto& text = v.get_ref<const std::string&>();
                if (text.find_first_of(",\"\n") == std::string::npos) {
                    out += text;
                } else {
                    out += '"';
                    for (char ch : text) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                    out += '"';
                }
            } else {
                out += v.dump();
            }
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json Table::json() const {
    auto out = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = row[c];
        out.push_back(std::move(obj));
    }
    return out;
}

std::filesystem::path Table::write(const std::filesystem::path& dir, const std::string& stem, Format format) const {
    const auto path = dir / (stem + (format == Format::Csv ? ".csv" : ".json"));
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    if (format == Format::Csv) {
        out << csv();
    } else {
        out << json().dump(2) << '\n';
    }
    return path;
}

}  // namespace sta::cli

#include "sta/fields/snapshot.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sta::fields {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
    auto p = csv;
    p.replace_extension(".json");
    return p;
}

void write_snapshot(const std::filesystem::path& csv, const FieldState& s) {
    s.validate();
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write " + csv.string());
    out << "i,j,k,Ex,Ey,Ez,Bx,By,Bz,A0,Ax,Ay,Az\n";
    const auto& g = s.grid;
    for (std::size_t n = 0; n < g.cell_count(); ++n) {
        const auto c = g.coords(n);
        out << c[0] << ',' << c[1] << ',' << c[2];
        for (int a = 0; a < 3; ++a) out << ',' << format_double(s.E[a][n]);
        for (int a = 0; a < 3; ++a) out << ',' << format_double(s.B[a][n]);
        out << ',' << format_double(s.A0[n]);
        for (int a = 0; a < 3; ++a) out << ',' << format_double(s.A[a][n]);
        out << '\n';
    }
    nlohmann::ordered_json meta = {
        {"grid", {{"nx", g.nx()}, {"ny", g.ny()}, {"nz", g.nz()}, {"h", g.h()}}},
        {"mass", s.mass},
        {"c", s.c},
        {"t", s.t},
    };
    std::ofstream side(sidecar_path(csv));
    if (!side) throw std::runtime_error("cannot write " + sidecar_path(csv).string());
    side << meta.dump(2) << '\n';
}

FieldState read_snapshot(const std::filesystem::path& csv) {
    std::ifstream side(sidecar_path(csv));
    if (!side) throw std::runtime_error("missing snapshot sidecar " + sidecar_path(csv).string());
    const auto meta = nlohmann::json::parse(side);
    const auto& gm = meta.at("grid");
    FieldState s(GridSpec(gm.at("nx").get<int>(), gm.at("ny").get<int>(), gm.at("nz").get<int>(), gm.at("h").get<double>()));
    s.mass = meta.at("mass").get<double>();
    s.c = meta.at("c").get<double>();
    s.t = meta.at("t").get<double>();

    std::ifstream in(csv);
    if (!in) throw std::runtime_error("cannot read " + csv.string());
    std::string line;
    std::getline(in, line);
    if (line != "i,j,k,Ex,Ey,Ez,Bx,By,Bz,A0,Ax,Ay,Az") throw std::runtime_error(csv.string() + ": unexpected header");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 13> v{};
        std::size_t pos = 0;
        for (std::size_t f = 0; f < v.size(); ++f) {
            const auto end = line.find(',', pos);
            const std::string_view cell(line.data() + pos, (end == std::string::npos ? line.size() : end) - pos);
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v[f]);
            if (res.ec != std::errc{}) throw std::runtime_error(csv.string() + ": bad number in row " + std::to_string(rows + 1));
            pos = end == std::string::npos ? line.size() : end + 1;
        }
        const std::size_t n = s.grid.index(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]));
        for (int a = 0; a < 3; ++a) {
            s.E[a][n] = v[3 + a];
            s.B[a][n] = v[6 + a];
            s.A[a][n] = v[10 + a];
        }
        s.A0[n] = v[9];
        ++rows;
    }
    if (rows != s.grid.cell_count()) throw std::runtime_error(csv.string() + ": expected " + std::to_string(s.grid.cell_count()) + " rows");
    return s;
}

}  // namespace sta::fields

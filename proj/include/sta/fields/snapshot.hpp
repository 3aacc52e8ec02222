#pragma once

#include "sta/fields/state.hpp"

#include <filesystem>
#include <string>

namespace sta::fields {

/// Snapshot = CSV with header i,j,k,Ex,Ey,Ez,Bx,By,Bz,A0,Ax,Ay,Az (one row per
/// node, x fastest) plus a JSON sidecar <name>.json holding the grid, mass,
/// c and t. Numbers use the shortest round-trip decimal form. Sources are
/// not stored and read back as zero.
void write_snapshot(const std::filesystem::path& csv, const FieldState& s);
FieldState read_snapshot(const std::filesystem::path& csv);

std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace sta::fields

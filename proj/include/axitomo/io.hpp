#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "json.hpp"

#include "axitomo/frame.hpp"
#include "axitomo/geometry.hpp"
#include "axitomo/projector.hpp"
#include "axitomo/sim.hpp"

namespace axitomo::io {

using json = nlohmann::ordered_json;

inline constexpr char kMatrixMagic[4] = {'A', 'X', 'S', 'M'};
inline constexpr std::uint32_t kMatrixVersion = 1;

/// "AXSM", u32 version, u64 n_rows, n_cols, nnz, u64 row offsets, u64
/// column indices, f64 values; all little-endian.
void write_system_matrix(const std::filesystem::path& path, const SystemMatrix& a);
SystemMatrix read_system_matrix(const std::filesystem::path& path);

/// Flat little-endian f64 payload.
void write_f64(const std::filesystem::path& path, std::span<const double> values);
std::vector<double> read_f64(const std::filesystem::path& path);

/// `<path>.json` next to a binary payload.
std::filesystem::path sidecar_path(const std::filesystem::path& payload);

void write_json(const std::filesystem::path& path, const json& doc);
json read_json(const std::filesystem::path& path);

json to_json(const ConeBeamGeometry& geom);
json to_json(const RadialGrid& grid);
json to_json(const FilterBank& bank);
ConeBeamGeometry geometry_from_json(const json& doc);
RadialGrid grid_from_json(const json& doc);
FilterBank bank_from_json(const json& doc);

/// Volume payload plus sidecar {kind, dims, grid, provenance}.
void write_volume(const std::filesystem::path& path, const Volume& vol, const json& provenance = json::object());
Volume read_volume(const std::filesystem::path& path);

/// Projection payload plus sidecar {kind, dims, geometry, provenance}.
void write_projection(const std::filesystem::path& path, const ProjectionData& g,
                      const json& provenance = json::object());
ProjectionData read_projection(const std::filesystem::path& path);

}  // namespace axitomo::io

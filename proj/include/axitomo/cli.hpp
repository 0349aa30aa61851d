#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "axitomo/geometry.hpp"
#include "axitomo/io.hpp"
#include "axitomo/sim.hpp"
#include "axitomo/solver.hpp"

namespace axitomo::cli {

struct NoiseConfig {
    double variance = 0.0;
    std::uint64_t seed = 0;
};

/// Display window for PGM export; values are mapped linearly from
/// [low, high] onto [0, 65535] and clamped.
struct ExportConfig {
    double window_low = 0.0;
    double window_high = 1.0;
};

struct PathsConfig {
    std::filesystem::path matrix = "matrix.axsm";
    std::filesystem::path phantom = "phantom.f64";
    std::filesystem::path projection = "projection.f64";
    std::filesystem::path volume = "volume.f64";
    std::filesystem::path diagnostics = "diagnostics.csv";
    std::filesystem::path report = "report.json";
    std::filesystem::path export_file = "export.pgm";
};

struct RunConfig {
    ConeBeamGeometry geometry;
    RadialGrid grid;
    PhantomSpec phantom = default_phantom();
    SolverParams solver;
    NoiseConfig noise;
    ExportConfig display;
    PathsConfig paths;
};

/// Parses a config document; relative paths are resolved against
/// `base_dir`. Unknown keys are rejected.
RunConfig parse_config(const io::json& doc, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

enum class Method { atf, tv };

Method parse_method(const std::string& name);

/// Each command writes its artifacts to the configured paths and a short
/// summary to `log`.
void build_matrix(const RunConfig& cfg, bool use_symmetry, std::ostream& log);
void make_phantom(const RunConfig& cfg, std::ostream& log);
void simulate(const RunConfig& cfg, std::ostream& log);
void reconstruct(const RunConfig& cfg, Method method, std::ostream& log);
double evaluate(const RunConfig& cfg, std::ostream& log);
void export_volume(const RunConfig& cfg, const std::string& what, std::ostream& log);

/// 16-bit binary PGM (P5, big-endian samples).
void write_pgm16(const std::filesystem::path& path, const Image& image, double low, double high);

/// Central longitudinal section mirrored about r = 0: 2n rows (top row is
/// the highest slab) by 2m columns.
Image central_section(const Volume& vol);

/// Circular slice at slab j: 2m x 2m pixels of side dr, pixel value is the
/// annulus value at the pixel center's radius, 0 outside R0.
Image row_section(const Volume& vol, int j);

struct ProfilePoint {
    double r;
    double value;
};

/// Radial profile at height z: one point per annulus at its center radius.
std::vector<ProfilePoint> profile(const Volume& vol, double z);

}  // namespace axitomo::cli

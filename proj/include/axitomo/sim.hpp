#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "axitomo/frame.hpp"
#include "axitomo/geometry.hpp"
#include "axitomo/projector.hpp"

namespace axitomo {

/// Attenuation u(i, j) on the annular grid, stored at RadialGrid::column.
struct Volume {
    RadialGrid grid;
    std::vector<double> values;

    explicit Volume(const RadialGrid& g, double fill = 0.0) : grid(g), values(g.cell_count(), fill) {}
    Volume(const RadialGrid& g, std::vector<double> v);

    double& at(int i, int j) { return values[grid.column(i, j)]; }
    double at(int i, int j) const { return values[grid.column(i, j)]; }

    /// (2n) x m image: row = slab j + n, column = annulus i - 1.
    Image as_image() const { return Image(2 * static_cast<std::size_t>(grid.n), static_cast<std::size_t>(grid.m), values); }
};

/// Line integrals g(s, t) in SystemMatrix row order.
struct ProjectionData {
    ConeBeamGeometry geometry;
    std::vector<double> values;

    explicit ProjectionData(const ConeBeamGeometry& geom) : geometry(geom), values(geom.ray_count(), 0.0) {}
    ProjectionData(const ConeBeamGeometry& geom, std::vector<double> v);

    double at(int s, int t) const { return values[geometry.ray_index(s, t)]; }
};

struct PhantomPiece {
    double r_in = 0.0;
    double r_out = 1.0;
    double z_min = -1.0;
    double z_max = 1.0;
    double value = 1.0;
};

/// Axisymmetric pieces; later pieces overwrite earlier ones.
struct PhantomSpec {
    std::vector<PhantomPiece> pieces;

    void validate(const RadialGrid& grid) const;
};

/// Shell 1.0 on 0.6 <= r < 1.0, |z| <= 1.0 and core 0.5 on r < 0.3,
/// |z| <= 0.8, void in between. Stand-in for a phantom of radius 1 and
/// height 2; interfaces sit on grid lines whenever 1/dr, 1/dz are multiples
/// of 10.
PhantomSpec default_phantom();

/// Each cell takes the phantom value at its center ((i - 1/2)dr, (j + 1/2)dz).
Volume rasterize(const PhantomSpec& phantom, const RadialGrid& grid);

/// g = A u + n with n i.i.d. N(0, noise_variance) from a seeded generator.
ProjectionData simulate(const SystemMatrix& a, const ConeBeamGeometry& geom, const Volume& volume,
                        double noise_variance, std::uint64_t seed);

/// Gaussian noise vector; exposed so the generator can be checked directly.
std::vector<double> gaussian_noise(std::size_t count, double variance, std::uint64_t seed);

/// sqrt(mean((u - u*)^2)) over all 2mn cells.
double rmse(std::span<const double> u, std::span<const double> u_star);
double rmse(const Volume& u, const Volume& u_star);

}  // namespace axitomo

#pragma once

#include <cstddef>
#include <optional>
#include <utility>

namespace axitomo {

/// Point source at (source_x, 0, 0) and a flat detector in the plane
/// x = detector_x. The detector has 2p x 2q cells indexed by
/// s in [-p, p) along y and t in [-q, q) along z.
struct ConeBeamGeometry {
    double source_x = 40.0;
    double detector_x = -50.0;
    double pitch_y = 0.005;
    double pitch_z = 0.005;
    int p = 1;
    int q = 1;

    void validate() const;

    std::size_t detector_cols() const { return 2 * static_cast<std::size_t>(p); }
    std::size_t detector_rows() const { return 2 * static_cast<std::size_t>(q); }
    std::size_t ray_count() const { return detector_cols() * detector_rows(); }

    /// Row index of detector cell (s, t): k = (t+q)*2p + (s+p).
    std::size_t ray_index(int s, int t) const;
};

/// Annular-cylinder discretization of {rho <= R0, |z| <= Z0}. Annulus (i, j)
/// with i in [1, m] and j in [-n, n) covers (i-1)dr <= rho < i*dr,
/// j*dz <= z < (j+1)dz.
struct RadialGrid {
    int m = 1;
    int n = 1;
    double dr = 1.0;
    double dz = 1.0;

    void validate() const;

    double radius() const { return m * dr; }
    double half_height() const { return n * dz; }
    std::size_t cell_count() const { return 2 * static_cast<std::size_t>(m) * static_cast<std::size_t>(n); }

    /// Linear column index l = (j+n)*m + (i-1).
    std::size_t column(int i, int j) const;
    std::pair<int, int> annulus(std::size_t column) const;
};

/// Checks that source and detector sit on opposite sides of the
/// reconstruction cylinder.
void validate_layout(const ConeBeamGeometry& geom, const RadialGrid& grid);

/// x(t) = x0 + t cos(gamma) cos(alpha), y(t) = t cos(gamma) sin(alpha),
/// z(t) = t sin(gamma); t is arc length measured from the source.
struct Ray {
    double gamma = 0.0;
    double alpha = 0.0;
};

struct CylinderHits {
    double t0;
    double t1;
};

struct HitHeights {
    double h0;
    double h1;
};

Ray ray_from_detector(const ConeBeamGeometry& geom, int s, int t);

/// Ray through an arbitrary detector-plane point; used by tests and by
/// ray_from_detector itself.
Ray ray_through(const ConeBeamGeometry& geom, double y, double z);

double planar_min_radius(const ConeBeamGeometry& geom, const Ray& ray);

/// Innermost annulus reached by the ray, or nullopt if it misses the
/// cylinder rho < R0. A cylinder the ray is exactly tangent to does not
/// count as reached.
std::optional<int> min_annulus_index(const RadialGrid& grid, const ConeBeamGeometry& geom, const Ray& ray);

std::optional<CylinderHits> cylinder_hits(const ConeBeamGeometry& geom, const Ray& ray, double rho);

HitHeights hit_heights(const Ray& ray, const CylinderHits& hits);

}  // namespace axitomo

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "axitomo/geometry.hpp"

namespace axitomo {

/// Sparse matrix of ray/annulus intersection lengths in compressed-row
/// layout. Rows follow ConeBeamGeometry::ray_index, columns follow
/// RadialGrid::column.
class SystemMatrix {
public:
    SystemMatrix() = default;
    SystemMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<std::size_t> row_offsets,
                 std::vector<std::size_t> col_indices, std::vector<double> values);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }
    std::size_t nnz() const { return values_.size(); }

    const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
    const std::vector<std::size_t>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

    std::span<const std::size_t> row_cols(std::size_t k) const;
    std::span<const double> row_values(std::size_t k) const;

    /// Structural checks: offsets monotone, columns sorted/unique/in range,
    /// values finite and nonnegative.
    void validate() const;

    SystemMatrix transpose() const;

    friend bool operator==(const SystemMatrix&, const SystemMatrix&) = default;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::size_t> row_offsets_{0};
    std::vector<std::size_t> col_indices_;
    std::vector<double> values_;
};

/// Accumulates intersection lengths for a single ray. The same column may
/// receive several contributions; finalize() merges them in insertion order.
class RowAccumulator {
public:
    void add(std::size_t column, double length);

    /// Sorted, merged (column, length) pairs.
    std::vector<std::pair<std::size_t, double>> finalize() const;

    /// Total of everything added so far (unmerged).
    double sum() const;

    bool empty() const { return entries_.empty(); }

private:
    std::vector<std::pair<std::size_t, double>> entries_;
};

/// Distributes the ray segment with end heights h1, h2 (any order) and ray
/// parameters t1, t2 over the z-slabs of annulus `annulus_i`. Portions
/// outside |z| < Z0 are dropped; a horizontal ray puts |t2 - t1| into the
/// single slab it lies in.
void accumulate_segment(RowAccumulator& acc, const RadialGrid& grid, int annulus_i, double h1, double h2,
                        double gamma, double t1, double t2);

RowAccumulator build_row(const ConeBeamGeometry& geom, const RadialGrid& grid, const Ray& ray);

/// Rows for detector cells s in [0, p), t in [0, q), ordered t*p + s.
SystemMatrix build_quadrant(const ConeBeamGeometry& geom, const RadialGrid& grid);

/// Expands a quadrant matrix to all 4pq rows using the y- and z-mirror
/// symmetries of the acquisition.
SystemMatrix expand_by_symmetry(const SystemMatrix& quadrant, const ConeBeamGeometry& geom, const RadialGrid& grid);

/// Builds every row by ray tracing (no symmetry shortcut).
SystemMatrix build_full(const ConeBeamGeometry& geom, const RadialGrid& grid);

/// Default build path: quadrant + symmetry expansion.
SystemMatrix build_system_matrix(const ConeBeamGeometry& geom, const RadialGrid& grid, bool use_symmetry = true);

std::vector<double> matvec(const SystemMatrix& a, std::span<const double> u);

/// A^T w by a sequential scatter; deterministic.
std::vector<double> rmatvec(const SystemMatrix& a, std::span<const double> w);

/// Square root of the dominant eigenvalue of A^T A by power iteration from a
/// fixed-seed start.
inline constexpr std::uint64_t kPowerIterationSeed = 20190101;

double operator_norm(const SystemMatrix& a, int iters, std::uint64_t seed = kPowerIterationSeed);

/// A together with its explicit transpose so both products parallelize by
/// rows with a fixed summation order.
class ProjectionOperator {
public:
    explicit ProjectionOperator(SystemMatrix a);

    const SystemMatrix& matrix() const { return a_; }
    std::size_t rows() const { return a_.rows(); }
    std::size_t cols() const { return a_.cols(); }

    void apply(std::span<const double> u, std::span<double> out) const;
    void apply_adjoint(std::span<const double> w, std::span<double> out) const;

    std::vector<double> apply(std::span<const double> u) const;
    std::vector<double> apply_adjoint(std::span<const double> w) const;

    double norm(int iters = 100) const;

private:
    SystemMatrix a_;
    SystemMatrix at_;
};

}  // namespace axitomo

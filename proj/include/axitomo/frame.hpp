#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace axitomo {

/// Row-major 2D array. Volumes map onto it with one row per axial slab and
/// one column per radial annulus.
struct Image {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Image() = default;
    Image(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
    Image(std::size_t r, std::size_t c, std::vector<double> values);

    std::size_t size() const { return data.size(); }
    double& operator()(std::size_t y, std::size_t x) { return data[y * cols + x]; }
    double operator()(std::size_t y, std::size_t x) const { return data[y * cols + x]; }
};

/// r^2 filters of size r x r stored as the rows of the r^2 x r^2 matrix B.
/// The analysis/synthesis pair is a tight frame iff B^T B = E / r^2.
struct FilterBank {
    int r = 1;
    Eigen::MatrixXd filters;

    FilterBank() : filters(Eigen::MatrixXd::Identity(1, 1)) {}
    FilterBank(int side, Eigen::MatrixXd b);

    std::size_t count() const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(r); }

    /// max |B^T B - E/r^2|.
    double tightness_error() const;
};

/// Channel i of the analysis output is row i; columns are image pixels in
/// row-major order.
struct CoefficientStack {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Eigen::MatrixXd coeffs;

    std::size_t channels() const { return static_cast<std::size_t>(coeffs.rows()); }
    std::size_t nonzeros() const;
};

/// r^2 x N matrix whose column j is the r x r neighbourhood of pixel j
/// (periodic boundary, row-major within the patch).
Eigen::MatrixXd extract_patches(const Image& image, int r);

/// Periodic correlation of the image with every filter.
CoefficientStack analysis(const FilterBank& bank, const Image& image);

/// Adjoint of analysis.
Image synthesis(const FilterBank& bank, const CoefficientStack& coeffs);

/// Keeps entries with |v| > thresh, zeroes the rest.
CoefficientStack hard_threshold(const CoefficientStack& coeffs, double thresh);
Eigen::MatrixXd hard_threshold(const Eigen::MatrixXd& coeffs, double thresh);

/// Orthogonal Procrustes step: the minimizer of |V - B G|^2 over banks with
/// B^T B = E/r^2, i.e. B = U_L U_R^T / r where V G^T = U_L S U_R^T.
FilterBank procrustes_update(const Eigen::MatrixXd& v, const Eigen::MatrixXd& g);

/// |V - B G|_F^2 + thresh^2 * |V|_0, the quantity hard thresholding at
/// `thresh` minimizes over V.
double frame_objective(const Eigen::MatrixXd& v, const FilterBank& bank, const Eigen::MatrixXd& g, double thresh);

struct LearnOptions {
    int n_alt = 20;
    /// Stop once the objective changes by less than this fraction; 0 runs
    /// all n_alt alternations.
    double rel_tol = 1e-8;
};

struct LearnedBank {
    FilterBank bank;
    /// Objective after each alternation (threshold then Procrustes).
    std::vector<double> objective;
};

LearnedBank learn_filter_bank_traced(const Image& image, const FilterBank& initial, double thresh,
                                     const LearnOptions& options = {});

FilterBank learn_filter_bank(const Image& image, const FilterBank& initial, double thresh,
                             const LearnOptions& options = {});

/// Separable DCT-II bank scaled so that B^T B = E/r^2. r must be odd.
FilterBank spectral_initial_bank(int r);

}  // namespace axitomo

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "axitomo/frame.hpp"
#include "axitomo/geometry.hpp"
#include "axitomo/projector.hpp"
#include "axitomo/sim.hpp"

namespace axitomo {

struct SolverParams {
    /// Penalty weight on |Wu - v|^2.
    double lambda = 0.005;
    /// l0 weight; hard-threshold level is gamma1 / sqrt(lambda).
    double gamma1 = 1e-3;
    /// Primal/dual steps; 1/L when unset.
    std::optional<double> tau;
    std::optional<double> sigma;
    double theta = 1.0;
    int n1 = 5000;
    int n2 = 3;
    double eps = 1e-4;
    int r = 7;
    int n_alt = 20;
    double lambda_tv = 0.005;
    int tv_iters = 1000;
    int power_iters = 100;

    void validate() const;
    double threshold() const;
};

struct PrimalDualSteps {
    double tau = 0.0;
    double sigma = 0.0;
    double theta = 1.0;
};

/// Steps from params, falling back to 1/L.
PrimalDualSteps resolve_steps(const SolverParams& params, double op_norm);

/// Called after every inner iteration with the iteration count (1-based)
/// and the current primal iterate.
using IterationObserver = std::function<void(int, std::span<const double>)>;

/// Primal-dual iterations for min 1/2|Au - g|^2 + lambda |target - u|^2
/// with target = W^T v. Starts from `u` (omega = 0, u_bar = u) and runs
/// exactly `iterations` steps.
std::vector<double> pd_solve(const ProjectionOperator& a, std::span<const double> g, std::span<const double> target,
                             double lambda, const PrimalDualSteps& steps, int iterations, std::vector<double> u,
                             const IterationObserver& observer = {});

/// Same, with target = synthesis(bank, v).
Volume pd_solve(const ProjectionOperator& a, const ProjectionData& g, const FilterBank& bank,
                const CoefficientStack& v, double lambda, const PrimalDualSteps& steps, int iterations,
                const Volume& u_init);

/// |A^T (Au - g) + 2 lambda (u - target)|_2, the gradient of the inner
/// objective.
double inner_residual(const ProjectionOperator& a, std::span<const double> g, std::span<const double> target,
                      double lambda, std::span<const double> u);

/// Isotropic TV on the (r, z) grid with physical forward differences and
/// reflexive boundary: sum sqrt((du/dr)^2 + (du/dz)^2).
double total_variation(const Volume& u);

/// min 1/2|Au - g|^2 + lambda_tv * TV(u) by primal-dual iterations from zero.
Volume tv_reconstruct(const ProjectionOperator& a, const RadialGrid& grid, const ProjectionData& g,
                      double lambda_tv, int n_iter, double op_norm);

/// |Au - g|^2 + lambda (|Wu - v|^2 + gamma2^2 |v|_0), gamma2^2 = gamma1^2 / lambda.
double objective_eq12(const ProjectionOperator& a, const ProjectionData& g, const Volume& u,
                      const CoefficientStack& v, const FilterBank& bank, double lambda, double gamma1);

struct OuterIterationLog {
    int iteration = 0;
    double objective = 0.0;
    double data_residual = 0.0;
    double frame_residual = 0.0;
    double relative_change = 0.0;
    double elapsed_seconds = 0.0;
};

struct ReconstructionResult {
    Volume u;
    Volume u_init;
    FilterBank bank;
    double op_norm = 0.0;
    std::vector<OuterIterationLog> log;
    /// Whether the recorded objectives never increased.
    bool objective_monotone = true;
};

/// Frame-regularized reconstruction: TV start, then up to n2 rounds of
/// bank learning, hard thresholding and the inner primal-dual solve.
/// `op_norm` skips the power iteration when the caller already knows |A|.
ReconstructionResult reconstruct(const ProjectionOperator& a, const RadialGrid& grid, const ProjectionData& g,
                                 const SolverParams& params, std::optional<double> op_norm = std::nullopt);

}  // namespace axitomo

#pragma once

#include "tma/polybasis.hpp"
#include "tma/sensing.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace tma {

/// Solver and refinement knobs for the N-Polynomials estimator.
struct EstimatorConfig {
    BasisKind basis = BasisKind::Chebyshev1;
    int degree = 2;  // default covers uniformly accelerated motion exactly
    bool refine = false;
    int refine_max_iters = 20;
    double refine_tol = 1e-10;
    double cond_limit = 1e12;
};

/// Solution quality numbers attached to every estimate.
struct EstimateDiagnostics {
    double condition_number = 1.0;  // of the pseudo-linear design matrix
    double residual_rms = 0.0;      // meters-equivalent pseudo-linear residual
    double stderr_x = 0.0;          // RMS propagated position stderr, x, over obs times
    double stderr_y = 0.0;          // same for y
    Eigen::MatrixXd covariance;     // 2(d+1) x 2(d+1) coefficient covariance [m^2]
    bool refined = false;
    bool converged = true;
    int refine_iterations = 0;
};

/// Fitted trajectory: per-coordinate polynomial coefficients over a basis.
struct TrajectoryEstimate {
    PolyBasis basis;
    std::vector<double> coeffs_x;  // meters
    std::vector<double> coeffs_y;  // meters
    EstimateDiagnostics diagnostics;
    std::string method_label;
};

/// One pseudo-linear constraint row. The bearing equation
///   (x_T - x_O) cos(beta) - (y_T - y_O) sin(beta) = 0
/// with x_T, y_T expanded as polynomial series becomes a row linear in
/// the stacked coefficients theta = (a_0..a_d, b_0..b_d):
///   row = [phi_k(tau) cos(beta) ..., -phi_k(tau) sin(beta) ...]
///   rhs = x_O cos(beta) - y_O sin(beta)
/// No tangent anywhere, so every bearing (including +-pi/2 and pi) yields
/// a finite row.
struct DesignRow {
    std::vector<double> coefficients;  // length 2(degree+1)
    double rhs = 0.0;
};

DesignRow design_row(const BearingObservation& obs, const PolyBasis& basis);

/// Least-squares fit of the pseudo-linear system by column-pivoted QR.
/// The basis window is [first, last] observation time.
///
/// Throws InsufficientDataError when N < 2(degree+1) and
/// UnobservableGeometryError when the design matrix is rank-deficient or
/// its condition number exceeds cfg.cond_limit.
TrajectoryEstimate solve_pseudolinear(const ObservationSeries& series,
                                      const EstimatorConfig& cfg);

/// Gauss-Newton refinement of the true angular residuals
///   sum_i wrap(beta_i - atan2(x_hat - x_O, y_hat - y_O))^2 / sigma^2
/// starting from `init`. Monotone by step halving; never increases the
/// objective. Non-convergence returns the best iterate flagged
/// not-converged. Throws DegenerateGeometryError if an iterate places the
/// predicted target on top of the observer.
TrajectoryEstimate refine_gauss_newton(const ObservationSeries& series,
                                       const TrajectoryEstimate& init,
                                       const EstimatorConfig& cfg);

/// The classical N-Bearings baseline: a uniform-rectilinear-motion fit,
/// i.e. the degree-1 polynomial solve, reported under its own label.
TrajectoryEstimate estimate_n_bearings(const ObservationSeries& series);

/// solve_pseudolinear followed by optional refinement per cfg.
TrajectoryEstimate estimate_n_polynomials(const ObservationSeries& series,
                                          const EstimatorConfig& cfg);

struct PredictedState {
    WorldPoint position;
    WorldVector velocity;
};

/// Position and velocity of the fitted trajectory at time t. The velocity
/// comes from the analytic derivative series.
PredictedState predict(const TrajectoryEstimate& estimate, double t,
                       bool allow_extrapolation = false);

/// Propagated 1-sigma position standard error sqrt(var_x + var_y) at t.
double position_stderr(const TrajectoryEstimate& estimate, double t,
                       bool allow_extrapolation = false);

/// Weighted angular residual sum of squares (the refinement objective).
double angular_objective(const ObservationSeries& series, const TrajectoryEstimate& estimate);

}  // namespace tma

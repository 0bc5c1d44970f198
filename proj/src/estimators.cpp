#include "tma/estimators.hpp"

#include "tma/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace tma {

namespace {

Eigen::VectorXd basis_values(const PolyBasis& basis, double tau) {
    Eigen::VectorXd phi(basis.degree() + 1);
    for (int k = 0; k <= basis.degree(); ++k) phi(k) = eval_basis(basis.kind(), k, tau);
    return phi;
}

struct DesignSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
};

DesignSystem build_design(const ObservationSeries& series, const PolyBasis& basis) {
    const int m = basis.degree() + 1;
    const auto n = static_cast<Eigen::Index>(series.size());
    DesignSystem sys{Eigen::MatrixXd(n, 2 * m), Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        DesignRow row = design_row(series[static_cast<size_t>(i)], basis);
        for (int j = 0; j < 2 * m; ++j) sys.A(i, j) = row.coefficients[static_cast<size_t>(j)];
        sys.b(i) = row.rhs;
    }
    return sys;
}

/// Propagated per-coordinate variance phi^T Cov_block phi at tau.
double coordinate_variance(const Eigen::MatrixXd& cov, const Eigen::VectorXd& phi, int block) {
    const auto m = phi.size();
    return phi.dot(cov.block(block * m, block * m, m, m) * phi);
}

void fill_stderr_summary(TrajectoryEstimate& est, const ObservationSeries& series) {
    const auto& cov = est.diagnostics.covariance;
    if (cov.size() == 0) return;
    double sum_vx = 0.0, sum_vy = 0.0;
    for (const auto& obs : series) {
        Eigen::VectorXd phi = basis_values(est.basis, est.basis.map_time(obs.t));
        sum_vx += coordinate_variance(cov, phi, 0);
        sum_vy += coordinate_variance(cov, phi, 1);
    }
    const auto n = static_cast<double>(series.size());
    est.diagnostics.stderr_x = std::sqrt(sum_vx / n);
    est.diagnostics.stderr_y = std::sqrt(sum_vy / n);
}

double pseudolinear_residual_rms(const ObservationSeries& series, const TrajectoryEstimate& est) {
    double ss = 0.0;
    for (const auto& obs : series) {
        DesignRow row = design_row(obs, est.basis);
        const size_t m = est.coeffs_x.size();
        double r = -row.rhs;
        for (size_t k = 0; k < m; ++k) {
            r += row.coefficients[k] * est.coeffs_x[k];
            r += row.coefficients[m + k] * est.coeffs_y[k];
        }
        ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(series.size()));
}

}  // namespace

DesignRow design_row(const BearingObservation& obs, const PolyBasis& basis) {
    const int m = basis.degree() + 1;
    double tau = basis.map_time(obs.t);
    double c = std::cos(obs.beta);
    double s = std::sin(obs.beta);
    DesignRow row;
    row.coefficients.resize(static_cast<size_t>(2 * m));
    for (int k = 0; k < m; ++k) {
        double phi = eval_basis(basis.kind(), k, tau);
        row.coefficients[static_cast<size_t>(k)] = phi * c;
        row.coefficients[static_cast<size_t>(m + k)] = -phi * s;
    }
    row.rhs = obs.observer.x * c - obs.observer.y * s;
    return row;
}

TrajectoryEstimate solve_pseudolinear(const ObservationSeries& series,
                                      const EstimatorConfig& cfg) {
    const int m = cfg.degree + 1;
    const auto n = static_cast<long>(series.size());
    if (n < 2L * m) {
        std::ostringstream os;
        os << "need at least " << 2 * m << " observations for degree " << cfg.degree
           << ", got " << n;
        throw InsufficientDataError(os.str());
    }

    PolyBasis basis(cfg.basis, cfg.degree, series.t_first(), series.t_last());
    DesignSystem sys = build_design(series, basis);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.A);
    const auto& sv = svd.singularValues();
    double smin = sv(sv.size() - 1);
    double cond = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    if (!std::isfinite(cond) || cond > cfg.cond_limit) {
        std::ostringstream os;
        os << "unobservable geometry: design matrix condition number " << cond
           << " exceeds limit " << cfg.cond_limit
           << " (non-maneuvering observer against a moving target?)";
        throw UnobservableGeometryError(os.str(), cond);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys.A);
    Eigen::VectorXd theta = qr.solve(sys.b);

    Eigen::VectorXd residual = sys.A * theta - sys.b;
    double rms = std::sqrt(residual.squaredNorm() / static_cast<double>(n));

    // Coefficient covariance from the factorization:
    // A P = Q R  =>  (A^T A)^{-1} = P R^{-1} R^{-T} P^T, scaled by the
    // residual variance estimate.
    const int p = 2 * m;
    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    Eigen::MatrixXd G = Rinv * Rinv.transpose();
    Eigen::MatrixXd perm = qr.colsPermutation();
    double sigma2 = n > p ? residual.squaredNorm() / static_cast<double>(n - p) : 0.0;
    Eigen::MatrixXd cov = sigma2 * perm * G * perm.transpose();

    TrajectoryEstimate est{basis,
                           std::vector<double>(theta.data(), theta.data() + m),
                           std::vector<double>(theta.data() + m, theta.data() + 2 * m),
                           EstimateDiagnostics{},
                           "npoly"};
    est.diagnostics.condition_number = cond;
    est.diagnostics.residual_rms = rms;
    est.diagnostics.covariance = std::move(cov);
    fill_stderr_summary(est, series);
    return est;
}

double angular_objective(const ObservationSeries& series, const TrajectoryEstimate& estimate) {
    double sigma = series.sigma();
    double w = sigma > 0.0 ? 1.0 / sigma : 1.0;
    double ss = 0.0;
    for (const auto& obs : series) {
        PredictedState st = predict(estimate, obs.t);
        double beta_hat = std::atan2(st.position.x - obs.observer.x,
                                     st.position.y - obs.observer.y);
        double r = wrap_angle(obs.beta - beta_hat) * w;
        ss += r * r;
    }
    return ss;
}

TrajectoryEstimate refine_gauss_newton(const ObservationSeries& series,
                                       const TrajectoryEstimate& init,
                                       const EstimatorConfig& cfg) {
    const int m = init.basis.degree() + 1;
    const auto n = static_cast<Eigen::Index>(series.size());
    const double sigma = series.sigma();
    const double w = sigma > 0.0 ? 1.0 / sigma : 1.0;

    Eigen::VectorXd theta(2 * m);
    for (int k = 0; k < m; ++k) {
        theta(k) = init.coeffs_x[static_cast<size_t>(k)];
        theta(m + k) = init.coeffs_y[static_cast<size_t>(k)];
    }

    auto residuals_jacobian = [&](const Eigen::VectorXd& th, Eigen::VectorXd& r,
                                  Eigen::MatrixXd* jac) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& obs = series[static_cast<size_t>(i)];
            double tau = init.basis.map_time(obs.t);
            Eigen::VectorXd phi = basis_values(init.basis, tau);
            double dx = phi.dot(th.head(m)) - obs.observer.x;
            double dy = phi.dot(th.tail(m)) - obs.observer.y;
            double rho2 = dx * dx + dy * dy;
            if (rho2 < 1e-12) {  // within 1e-6 m of the observer
                std::ostringstream os;
                os << "refinement iterate places target on the observer at t=" << obs.t;
                throw DegenerateGeometryError(os.str());
            }
            double beta_hat = std::atan2(dx, dy);
            r(i) = wrap_angle(obs.beta - beta_hat) * w;
            if (jac) {
                // d beta_hat / d dx = dy/rho2, d beta_hat / d dy = -dx/rho2
                double gx = dy / rho2, gy = -dx / rho2;
                for (int k = 0; k < m; ++k) {
                    (*jac)(i, k) = -w * gx * phi(k);
                    (*jac)(i, m + k) = -w * gy * phi(k);
                }
            }
        }
    };

    Eigen::VectorXd r(n);
    Eigen::MatrixXd jac(n, 2 * m);
    residuals_jacobian(theta, r, nullptr);
    double objective = r.squaredNorm();

    bool converged = false;
    int iters = 0;
    Eigen::MatrixXd last_jac;
    for (; iters < cfg.refine_max_iters; ++iters) {
        residuals_jacobian(theta, r, &jac);
        last_jac = jac;
        Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);

        // Monotone acceptance: halve until the objective decreases.
        double alpha = 1.0;
        bool accepted = false;
        Eigen::VectorXd trial;
        for (int h = 0; h < 30; ++h) {
            trial = theta + alpha * step;
            Eigen::VectorXd rt(n);
            residuals_jacobian(trial, rt, nullptr);
            double trial_objective = rt.squaredNorm();
            if (trial_objective <= objective) {
                theta = trial;
                objective = trial_objective;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            converged = true;  // no descent direction left; at a minimum
            break;
        }
        if (alpha * step.norm() < cfg.refine_tol) {
            converged = true;
            ++iters;
            break;
        }
    }

    TrajectoryEstimate refined = init;
    for (int k = 0; k < m; ++k) {
        refined.coeffs_x[static_cast<size_t>(k)] = theta(k);
        refined.coeffs_y[static_cast<size_t>(k)] = theta(m + k);
    }
    refined.diagnostics.refined = true;
    refined.diagnostics.converged = converged;
    refined.diagnostics.refine_iterations = iters;
    refined.diagnostics.residual_rms = pseudolinear_residual_rms(series, refined);
    if (sigma > 0.0 && last_jac.size() > 0) {
        // ML covariance: residuals are already weighted by 1/sigma.
        Eigen::MatrixXd jtj = last_jac.transpose() * last_jac;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(jtj);
        if (lu.isInvertible()) {
            refined.diagnostics.covariance = lu.inverse();
            fill_stderr_summary(refined, series);
        }
    }
    return refined;
}

TrajectoryEstimate estimate_n_bearings(const ObservationSeries& series) {
    EstimatorConfig cfg;
    cfg.basis = BasisKind::Chebyshev1;
    cfg.degree = 1;
    cfg.refine = false;
    TrajectoryEstimate est = solve_pseudolinear(series, cfg);
    est.method_label = "nbearings";
    return est;
}

TrajectoryEstimate estimate_n_polynomials(const ObservationSeries& series,
                                          const EstimatorConfig& cfg) {
    TrajectoryEstimate est = solve_pseudolinear(series, cfg);
    if (cfg.refine) est = refine_gauss_newton(series, est, cfg);
    return est;
}

PredictedState predict(const TrajectoryEstimate& estimate, double t, bool allow_extrapolation) {
    PredictedState st;
    st.position.x = eval_series(estimate.basis, estimate.coeffs_x, t, allow_extrapolation);
    st.position.y = eval_series(estimate.basis, estimate.coeffs_y, t, allow_extrapolation);
    st.velocity.vx = eval_series_deriv(estimate.basis, estimate.coeffs_x, t, allow_extrapolation);
    st.velocity.vy = eval_series_deriv(estimate.basis, estimate.coeffs_y, t, allow_extrapolation);
    return st;
}

double position_stderr(const TrajectoryEstimate& estimate, double t, bool allow_extrapolation) {
    const auto& cov = estimate.diagnostics.covariance;
    if (cov.size() == 0) return 0.0;
    Eigen::VectorXd phi = basis_values(estimate.basis,
                                       estimate.basis.map_time(t, allow_extrapolation));
    double vx = coordinate_variance(cov, phi, 0);
    double vy = coordinate_variance(cov, phi, 1);
    return std::sqrt(std::max(0.0, vx) + std::max(0.0, vy));
}

}  // namespace tma

#include "tma/polybasis.hpp"

#include "tma/errors.hpp"

#include <cmath>
#include <sstream>

namespace tma {

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::Chebyshev1: return "cheb1";
        case BasisKind::Chebyshev2: return "cheb2";
        case BasisKind::Legendre: return "legendre";
    }
    return "?";
}

BasisKind basis_kind_from_string(const std::string& name) {
    if (name == "cheb1") return BasisKind::Chebyshev1;
    if (name == "cheb2") return BasisKind::Chebyshev2;
    if (name == "legendre") return BasisKind::Legendre;
    throw ConfigError("basis: must be one of cheb1, cheb2, legendre (got \"" + name + "\")");
}

PolyBasis::PolyBasis(BasisKind kind, int degree, double t0, double tf)
    : kind_(kind), degree_(degree), t0_(t0), tf_(tf) {
    if (!(tf > t0)) {
        std::ostringstream os;
        os << "basis window: tf must be > t0 (got [" << t0 << ", " << tf << "])";
        throw ConfigError(os.str());
    }
    if (degree < 0 || degree > kMaxDegree) {
        std::ostringstream os;
        os << "degree: must be in [0, " << kMaxDegree << "] (got " << degree << ")";
        throw ConfigError(os.str());
    }
}

double PolyBasis::map_time(double t, bool allow_extrapolation) const {
    if (!allow_extrapolation && (t < t0_ || t > tf_)) {
        std::ostringstream os;
        os << "time " << t << " outside basis window [" << t0_ << ", " << tf_
           << "] (extrapolation not enabled)";
        throw TimeDomainError(os.str());
    }
    return 2.0 * (t - t0_) / (tf_ - t0_) - 1.0;
}

double PolyBasis::unmap_time(double tau) const {
    return t0_ + (tau + 1.0) * (tf_ - t0_) / 2.0;
}

double eval_basis(BasisKind kind, int n, double tau) {
    if (n < 0) throw ConfigError("polynomial index must be >= 0");
    if (n == 0) return 1.0;

    double prev = 1.0;
    double cur;
    switch (kind) {
        case BasisKind::Chebyshev1: cur = tau; break;
        case BasisKind::Chebyshev2: cur = 2.0 * tau; break;
        case BasisKind::Legendre: cur = tau; break;
    }
    for (int k = 1; k < n; ++k) {
        double next;
        if (kind == BasisKind::Legendre) {
            next = ((2.0 * k + 1.0) * tau * cur - k * prev) / (k + 1.0);
        } else {
            next = 2.0 * tau * cur - prev;
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

double eval_basis_deriv(BasisKind kind, int n, double tau) {
    if (n < 0) throw ConfigError("polynomial index must be >= 0");
    if (n == 0) return 0.0;

    // Run value and derivative recurrences together.
    double f_prev = 1.0, d_prev = 0.0;
    double f_cur, d_cur;
    switch (kind) {
        case BasisKind::Chebyshev1: f_cur = tau; d_cur = 1.0; break;
        case BasisKind::Chebyshev2: f_cur = 2.0 * tau; d_cur = 2.0; break;
        case BasisKind::Legendre: f_cur = tau; d_cur = 1.0; break;
    }
    for (int k = 1; k < n; ++k) {
        double f_next, d_next;
        if (kind == BasisKind::Legendre) {
            f_next = ((2.0 * k + 1.0) * tau * f_cur - k * f_prev) / (k + 1.0);
            d_next = ((2.0 * k + 1.0) * (f_cur + tau * d_cur) - k * d_prev) / (k + 1.0);
        } else {
            f_next = 2.0 * tau * f_cur - f_prev;
            d_next = 2.0 * f_cur + 2.0 * tau * d_cur - d_prev;
        }
        f_prev = f_cur; d_prev = d_cur;
        f_cur = f_next; d_cur = d_next;
    }
    return d_cur;
}

namespace {

void check_coeff_count(const PolyBasis& basis, std::span<const double> coeffs) {
    if (static_cast<int>(coeffs.size()) != basis.degree() + 1) {
        std::ostringstream os;
        os << "coefficient count " << coeffs.size() << " does not match degree "
           << basis.degree() << " (+1)";
        throw ShapeError(os.str());
    }
}

}  // namespace

double eval_series(const PolyBasis& basis, std::span<const double> coeffs, double t,
                   bool allow_extrapolation) {
    check_coeff_count(basis, coeffs);
    double tau = basis.map_time(t, allow_extrapolation);
    double sum = 0.0;
    for (int k = 0; k <= basis.degree(); ++k) {
        sum += coeffs[static_cast<size_t>(k)] * eval_basis(basis.kind(), k, tau);
    }
    return sum;
}

double eval_series_deriv(const PolyBasis& basis, std::span<const double> coeffs, double t,
                         bool allow_extrapolation) {
    check_coeff_count(basis, coeffs);
    double tau = basis.map_time(t, allow_extrapolation);
    double sum = 0.0;
    for (int k = 0; k <= basis.degree(); ++k) {
        sum += coeffs[static_cast<size_t>(k)] * eval_basis_deriv(basis.kind(), k, tau);
    }
    return sum * basis.time_scale();
}

}  // namespace tma

#pragma once

#include <span>
#include <string>

namespace tma {

/// Orthogonal polynomial family used to parametrize trajectory coordinates.
enum class BasisKind {
    Chebyshev1,  // T_n
    Chebyshev2,  // U_n
    Legendre,    // P_n
};

std::string to_string(BasisKind kind);

/// Parse "cheb1" | "cheb2" | "legendre". Throws ConfigError otherwise.
BasisKind basis_kind_from_string(const std::string& name);

/// Polynomial degrees above this are numerically hopeless for the
/// pseudo-linear normal system at double precision.
inline constexpr int kMaxDegree = 12;

/// A polynomial basis attached to a time window. Observation times in
/// [t0, tf] are mapped affinely onto [-1, 1], the orthogonality interval
/// of all three families.
class PolyBasis {
public:
    /// Throws ConfigError unless tf > t0 and 0 <= degree <= kMaxDegree.
    PolyBasis(BasisKind kind, int degree, double t0, double tf);

    BasisKind kind() const { return kind_; }
    int degree() const { return degree_; }
    double t0() const { return t0_; }
    double tf() const { return tf_; }

    /// tau = 2(t - t0)/(tf - t0) - 1. Throws TimeDomainError when t is
    /// outside [t0, tf] and extrapolation is not enabled.
    double map_time(double t, bool allow_extrapolation = false) const;

    /// Inverse of map_time.
    double unmap_time(double tau) const;

    /// d(tau)/dt, the chain-rule factor for derivative series.
    double time_scale() const { return 2.0 / (tf_ - t0_); }

private:
    BasisKind kind_;
    int degree_;
    double t0_;
    double tf_;
};

/// n-th polynomial of the family at tau, by the classical forward
/// three-term recurrences:
///   T/U:      f_{n+1} = 2 tau f_n - f_{n-1}   (T_0=1, T_1=tau; U_0=1, U_1=2 tau)
///   Legendre: (n+1) P_{n+1} = (2n+1) tau P_n - n P_{n-1}
double eval_basis(BasisKind kind, int n, double tau);

/// Exact analytic derivative d/dtau of the n-th polynomial, via the
/// differentiated recurrences run alongside the value recurrences.
/// Not a finite difference; exact at tau = +-1.
double eval_basis_deriv(BasisKind kind, int n, double tau);

/// Sum_{k=0..d} coeffs[k] * basis_k(map_time(t)).
/// Throws ShapeError unless coeffs.size() == degree + 1.
double eval_series(const PolyBasis& basis, std::span<const double> coeffs, double t,
                   bool allow_extrapolation = false);

/// Time derivative of the series: Sum coeffs[k] * basis_k'(tau) * 2/(tf - t0).
/// Units per second when coeffs are meters.
double eval_series_deriv(const PolyBasis& basis, std::span<const double> coeffs, double t,
                         bool allow_extrapolation = false);

}  // namespace tma

#include "tma/polybasis.hpp"

#include "tma/errors.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

using namespace tma;

namespace {

// Hand-expanded closed forms, n <= 5. The oracle for the recurrences.
double closed_T(int n, double x) {
    switch (n) {
        case 0: return 1.0;
        case 1: return x;
        case 2: return 2 * x * x - 1;
        case 3: return 4 * x * x * x - 3 * x;
        case 4: return 8 * x * x * x * x - 8 * x * x + 1;
        default: return 16 * std::pow(x, 5) - 20 * x * x * x + 5 * x;
    }
}

double closed_U(int n, double x) {
    switch (n) {
        case 0: return 1.0;
        case 1: return 2 * x;
        case 2: return 4 * x * x - 1;
        case 3: return 8 * x * x * x - 4 * x;
        case 4: return 16 * std::pow(x, 4) - 12 * x * x + 1;
        default: return 32 * std::pow(x, 5) - 32 * x * x * x + 6 * x;
    }
}

double closed_P(int n, double x) {
    switch (n) {
        case 0: return 1.0;
        case 1: return x;
        case 2: return (3 * x * x - 1) / 2;
        case 3: return (5 * x * x * x - 3 * x) / 2;
        case 4: return (35 * std::pow(x, 4) - 30 * x * x + 3) / 8;
        default: return (63 * std::pow(x, 5) - 70 * x * x * x + 15 * x) / 8;
    }
}

double central_diff(BasisKind kind, int n, double tau, double h) {
    return (eval_basis(kind, n, tau + h) - eval_basis(kind, n, tau - h)) / (2 * h);
}

// Composite Simpson over [-1, 1]. 256 intervals: enough for < 1e-6 on
// degree-10 Legendre products (64 intervals bottoms out near 3e-5).
double simpson_product(int m, int n) {
    const int intervals = 256;
    const double h = 2.0 / intervals;
    auto f = [&](double x) {
        return eval_basis(BasisKind::Legendre, m, x) * eval_basis(BasisKind::Legendre, n, x);
    };
    double acc = f(-1.0) + f(1.0);
    for (int i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(-1.0 + i * h);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("map_time endpoints and midpoint") {
    PolyBasis basis(BasisKind::Chebyshev1, 2, 0.0, 10.0);
    CHECK(basis.map_time(0.0) == -1.0);
    CHECK(basis.map_time(10.0) == 1.0);
    CHECK(basis.map_time(5.0) == 0.0);
}

TEST_CASE("map_time strictly increasing and round-trips") {
    PolyBasis basis(BasisKind::Legendre, 3, 12.5, 980.0);
    double prev = -2.0;
    for (int i = 0; i <= 50; ++i) {
        double t = 12.5 + i * (980.0 - 12.5) / 50.0;
        double tau = basis.map_time(t);
        CHECK(tau > prev);
        prev = tau;
        CHECK(basis.unmap_time(tau) == doctest::Approx(t).epsilon(1e-9));
    }
}

TEST_CASE("map_time rejects out-of-window times unless extrapolating") {
    PolyBasis basis(BasisKind::Chebyshev1, 1, 0.0, 10.0);
    CHECK_THROWS_AS(basis.map_time(-0.1), TimeDomainError);
    CHECK_THROWS_AS(basis.map_time(10.1), TimeDomainError);
    CHECK(basis.map_time(10.1, true) > 1.0);
}

TEST_CASE("basis window and degree invariants") {
    CHECK_THROWS_AS(PolyBasis(BasisKind::Chebyshev1, 2, 5.0, 5.0), ConfigError);
    CHECK_THROWS_AS(PolyBasis(BasisKind::Chebyshev1, 2, 5.0, 4.0), ConfigError);
    CHECK_THROWS_AS(PolyBasis(BasisKind::Chebyshev1, -1, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(PolyBasis(BasisKind::Chebyshev1, kMaxDegree + 1, 0.0, 1.0), ConfigError);
}

TEST_CASE("eval_basis spot values") {
    CHECK(eval_basis(BasisKind::Chebyshev1, 2, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(eval_basis(BasisKind::Chebyshev2, 2, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eval_basis(BasisKind::Legendre, 2, 0.5) == doctest::Approx(-0.125).epsilon(1e-14));
    for (auto kind : {BasisKind::Chebyshev1, BasisKind::Chebyshev2, BasisKind::Legendre}) {
        CHECK(eval_basis(kind, 0, -0.7) == 1.0);
        CHECK(eval_basis(kind, 0, 0.3) == 1.0);
    }
}

TEST_CASE("recurrences match hand-expanded closed forms") {
    // 41 equispaced points, 1e-12 absolute
    for (int i = 0; i <= 40; ++i) {
        double tau = -1.0 + 2.0 * i / 40.0;
        for (int n = 0; n <= 5; ++n) {
            CHECK(std::abs(eval_basis(BasisKind::Chebyshev1, n, tau) - closed_T(n, tau)) <= 1e-12);
            CHECK(std::abs(eval_basis(BasisKind::Chebyshev2, n, tau) - closed_U(n, tau)) <= 1e-12);
            CHECK(std::abs(eval_basis(BasisKind::Legendre, n, tau) - closed_P(n, tau)) <= 1e-12);
        }
    }
}

TEST_CASE("endpoint identities up to n = 12") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(eval_basis(BasisKind::Chebyshev1, n, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eval_basis(BasisKind::Chebyshev1, n, -1.0) ==
              doctest::Approx(n % 2 ? -1.0 : 1.0).epsilon(1e-12));
        CHECK(eval_basis(BasisKind::Chebyshev2, n, 1.0) ==
              doctest::Approx(n + 1.0).epsilon(1e-12));
        CHECK(eval_basis(BasisKind::Legendre, n, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("derivative spot values") {
    CHECK(eval_basis_deriv(BasisKind::Chebyshev1, 1, 0.3) == doctest::Approx(1.0));
    CHECK(eval_basis_deriv(BasisKind::Chebyshev1, 2, 0.5) == doctest::Approx(2.0));
    for (auto kind : {BasisKind::Chebyshev1, BasisKind::Chebyshev2, BasisKind::Legendre}) {
        CHECK(eval_basis_deriv(kind, 0, 0.4) == 0.0);
    }
}

TEST_CASE("Legendre derivative matches finite-difference oracle at 0.4") {
    double fd = central_diff(BasisKind::Legendre, 3, 0.4, 1e-6);
    double exact = eval_basis_deriv(BasisKind::Legendre, 3, 0.4);
    CHECK(exact == doctest::Approx(fd).epsilon(1e-8));
    // closed form: P3'(x) = (15 x^2 - 3)/2
    CHECK(exact == doctest::Approx((15 * 0.16 - 3) / 2).epsilon(1e-12));
}

TEST_CASE("derivatives consistent with central differences, n <= 8") {
    for (auto kind : {BasisKind::Chebyshev1, BasisKind::Chebyshev2, BasisKind::Legendre}) {
        for (int n = 1; n <= 8; ++n) {
            for (int i = 0; i <= 20; ++i) {
                double tau = -0.98 + i * (1.96 / 20.0);
                double fd = central_diff(kind, n, tau, 1e-6);
                double exact = eval_basis_deriv(kind, n, tau);
                CHECK(exact == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("Legendre orthogonality proxy via composite Simpson") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            if (m == n) continue;
            CHECK(std::abs(simpson_product(m, n)) < 1e-6);
        }
    }
}

TEST_CASE("eval_series constant and endpoint cases") {
    PolyBasis b0(BasisKind::Chebyshev2, 0, 0.0, 10.0);
    std::vector<double> c5{5.0};
    CHECK(eval_series(b0, c5, 0.0) == 5.0);
    CHECK(eval_series(b0, c5, 7.3) == 5.0);

    PolyBasis b1(BasisKind::Chebyshev1, 1, 0.0, 10.0);
    std::vector<double> c01{0.0, 1.0};
    CHECK(eval_series(b1, c01, 10.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eval_series rejects wrong coefficient count") {
    PolyBasis basis(BasisKind::Legendre, 2, 0.0, 1.0);
    std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(eval_series(basis, two, 0.5), ShapeError);
    CHECK_THROWS_AS(eval_series_deriv(basis, two, 0.5), ShapeError);
}

TEST_CASE("degree-3 series matches direct monomial expansion") {
    // Monomial coefficient tables for n <= 3 (ascending powers).
    using Mono = std::array<double, 4>;
    auto expand = [](BasisKind kind, int n) -> Mono {
        switch (kind) {
            case BasisKind::Chebyshev1:
                switch (n) {
                    case 0: return {1, 0, 0, 0};
                    case 1: return {0, 1, 0, 0};
                    case 2: return {-1, 0, 2, 0};
                    default: return {0, -3, 0, 4};
                }
            case BasisKind::Chebyshev2:
                switch (n) {
                    case 0: return {1, 0, 0, 0};
                    case 1: return {0, 2, 0, 0};
                    case 2: return {-1, 0, 4, 0};
                    default: return {0, -4, 0, 8};
                }
            default:
                switch (n) {
                    case 0: return {1, 0, 0, 0};
                    case 1: return {0, 1, 0, 0};
                    case 2: return {-0.5, 0, 1.5, 0};
                    default: return {0, -1.5, 0, 2.5};
                }
        }
    };

    const std::vector<double> coeffs{2.5, -1.25, 0.75, 3.0};
    const double t = 3.7;
    for (auto kind : {BasisKind::Chebyshev1, BasisKind::Chebyshev2, BasisKind::Legendre}) {
        PolyBasis basis(kind, 3, 0.0, 10.0);
        double tau = basis.map_time(t);
        Mono mono{0, 0, 0, 0};
        for (int n = 0; n <= 3; ++n) {
            Mono e = expand(kind, n);
            for (int p = 0; p < 4; ++p) mono[p] += coeffs[static_cast<size_t>(n)] * e[p];
        }
        double expected = ((mono[3] * tau + mono[2]) * tau + mono[1]) * tau + mono[0];
        CHECK(eval_series(basis, coeffs, t) == doctest::Approx(expected).epsilon(1e-12));
    }
}

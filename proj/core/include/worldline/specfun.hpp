#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "worldline/domain.hpp"

namespace wl::specfun {

/// Complementary error function, Erfc(chi) = 1 - (2/sqrt(pi)) int_0^chi e^{-rho^2} drho.
double erfc(double chi);

/// Physicists' Hermite polynomial H_n(x) by three-term recurrence. n <= 60.
double hermite(int n, double x);

/// K_nu continued to negative real argument on the principal branch:
///   K_nu(x e^{i pi}) = e^{-i nu pi} K_nu(x) - i pi I_nu(x),  x > 0.
/// Only the real part is consumed by the harmonic pap series.
std::complex<double> bessel_k_neg(double nu, double x);

// Real-order I and K on the positive axis (negative orders handled via the
// standard connection formulas).
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

struct QuadratureSpec {
    enum class Method { AdaptiveBisection, FixedGaussLegendre };
    Method method = Method::AdaptiveBisection;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    int order = 16;  // Gauss-Legendre points per panel

    void validate() const;
};

struct IntegralResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    bool converged = true;
    int subdivisions = 0;
    double real() const { return value.real(); }
};

IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& q = {});
IntegralResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                 double b, const QuadratureSpec& q = {});

/// Gauss-Legendre rule on [-1, 1]; rules are cached per order.
struct GlRule {
    std::vector<double> x, w;
};
const GlRule& gauss_legendre(int order);

struct GlRuleL {
    std::vector<long double> x, w;
};
const GlRuleL& gauss_legendre_l(int order);

struct FourierResult {
    DistributionTable table;
    double tail_estimate = 0.0;
    bool tail_ok = true;
};

/// (1/2pi) int_{-cutoff}^{cutoff} dz e^{i v z} F(z) per grid point, with
/// optional Gaussian damping e^{-damping z^2} removed by Richardson
/// extrapolation in the damping parameter.
FourierResult fourier_inverse(const std::function<std::complex<double>(double)>& F,
                              std::span<const double> v_grid, double damping, double cutoff,
                              const QuadratureSpec& q = {});

}  // namespace wl::specfun

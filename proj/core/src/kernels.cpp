#include "worldline/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wl::kernels {

namespace {
constexpr double kFreeFallback = 1e-8;  // omega*T (or eB*T) below this -> free kernel
}

double kernel_free(const BoundaryData& b, double m) {
    b.validate();
    if (!(m > 0.0)) throw std::invalid_argument("kernel_free: m must be > 0");
    const double norm = std::pow(m / (2.0 * std::numbers::pi * b.T), 0.5 * b.dim);
    return norm * std::exp(-m * b.separation_sq() / (2.0 * b.T));
}

double kernel_linear(const BoundaryData& b, double k) {
    b.validate();
    if (b.dim != 1) throw std::invalid_argument("kernel_linear: requires dim = 1");
    const double x = b.x[0], y = b.y[0], T = b.T;
    const double expo = -0.5 * (x - y) * (x - y) / T - 0.5 * k * T * (x + y) +
                        k * k * T * T * T / 24.0;
    return std::sqrt(1.0 / (2.0 * std::numbers::pi * T)) * std::exp(expo);
}

double kernel_harmonic(const BoundaryData& b, double omega) {
    b.validate();
    if (b.dim != 1) throw std::invalid_argument("kernel_harmonic: requires dim = 1");
    if (!(omega >= 0.0)) throw std::invalid_argument("kernel_harmonic: omega must be >= 0");
    if (omega * b.T < kFreeFallback) return kernel_free(b);
    const double x = b.x[0], y = b.y[0], T = b.T;
    const double sh = std::sinh(omega * T), ch = std::cosh(omega * T);
    const double expo = -(omega / (2.0 * sh)) * ((x * x + y * y) * ch - 2.0 * x * y);
    return std::sqrt(omega / (2.0 * std::numbers::pi * sh)) * std::exp(expo);
}

double kernel_magnetic_fs(const BoundaryData& b, double eB) {
    b.validate();
    if (b.dim != 2) throw std::invalid_argument("kernel_magnetic_fs: requires dim = 2");
    if (std::fabs(eB) * b.T < kFreeFallback) return kernel_free(b);
    const double T = b.T, r2 = b.separation_sq();
    const double sh = std::sinh(0.5 * eB * T);
    return eB / (4.0 * std::numbers::pi * sh) *
           std::exp(-0.25 * eB * r2 / std::tanh(0.5 * eB * T));
}

std::complex<double> kernel_gauge_transform(std::complex<double> k_hat, const GaugeSpec& g,
                                            const BoundaryData& b, double e) {
    return k_hat * std::polar(1.0, -e * holonomy(g, b.x, b.y));
}

double SpectralData::psi(int n, double x) const {
    if (n < 0) throw std::invalid_argument("SpectralData::psi: n must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("SpectralData: omega must be > 0");
    // normalized Hermite functions h_n(xi), xi = sqrt(omega) x:
    //   h_0 = pi^{-1/4} e^{-xi^2/2},  h_n = xi sqrt(2/n) h_{n-1} - sqrt((n-1)/n) h_{n-2}
    const double xi = std::sqrt(omega) * x;
    double hm = 0.0;
    double h = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi);
    for (int k = 1; k <= n; ++k) {
        const double hp = xi * std::sqrt(2.0 / k) * h - std::sqrt((k - 1.0) / k) * hm;
        hm = h;
        h = hp;
    }
    return std::pow(omega, 0.25) * h;
}

SpectralKernel spectral_kernel(const SpectralData& sd, const BoundaryData& b, double rel_tol) {
    b.validate();
    if (b.dim != 1) throw std::invalid_argument("spectral_kernel: requires dim = 1");
    if (sd.n_max < 0) throw std::invalid_argument("spectral_kernel: n_max must be >= 0");
    SpectralKernel out;
    for (int n = 0; n <= sd.n_max; ++n) {
        const double term =
            sd.psi(n, b.y[0]) * sd.psi(n, b.x[0]) * std::exp(-sd.energy(n) * b.T);
        out.value += term;
        if (n == sd.n_max) out.last_term = std::fabs(term);
    }
    out.tail_ok = out.last_term <= rel_tol * std::fabs(out.value);
    return out;
}

std::complex<double> ContinuedSpectralData::energy(int n, double z) const {
    if (!(z > 0.0)) throw std::domain_error("ContinuedSpectralData: z must be > 0");
    const std::complex<double> sqrt_iz =
        std::polar(std::sqrt(z), std::numbers::pi / 4.0);  // e^{i pi/4} sqrt(z)
    return sqrt_iz * omega * (n + 0.5);
}

std::complex<double> ContinuedSpectralData::scaled_arg_sq(double x, double z) const {
    if (!(z > 0.0)) throw std::domain_error("ContinuedSpectralData: z must be > 0");
    const std::complex<double> sqrt_iz = std::polar(std::sqrt(z), std::numbers::pi / 4.0);
    return sqrt_iz * omega * x * x;
}

}  // namespace wl::kernels

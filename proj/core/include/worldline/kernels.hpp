#pragma once

#include <complex>

#include "worldline/domain.hpp"

namespace wl::kernels {

/// Free Euclidean kernel (m/2piT)^{D/2} exp(-m(y-x)^2/2T). Mass is kept
/// symbolic here (m = 1 elsewhere) for the dimension-generic normalization
/// checks.
double kernel_free(const BoundaryData& b, double m = 1.0);

/// Linear potential V = k x in one dimension, closed form.
double kernel_linear(const BoundaryData& b, double k);

/// Harmonic oscillator kernel (Mehler form); validated internally against the
/// spectral sum. Falls back to kernel_free for omega T below threshold.
double kernel_harmonic(const BoundaryData& b, double omega);

/// Constant magnetic field in the plane, Fock-Schwinger gauge about an
/// endpoint: (eB / 4pi sinh(eBT/2)) exp(-(eB/4)|x-y|^2 coth(eBT/2)).
double kernel_magnetic_fs(const BoundaryData& b, double eB);

/// K = e^{-i e phi(y,x)} K_hat under a gauge change described by g.
std::complex<double> kernel_gauge_transform(std::complex<double> k_hat, const GaugeSpec& g,
                                            const BoundaryData& b, double e);

/// Harmonic-oscillator bound-state data: E_n = omega (n + 1/2) and normalized
/// Hermite-function wavefunctions, evaluated by stable recurrence.
struct SpectralData {
    double omega = 1.0;
    int n_max = 40;

    double energy(int n) const { return omega * (n + 0.5); }
    double psi(int n, double x) const;
};

struct SpectralKernel {
    double value = 0.0;
    double last_term = 0.0;  // magnitude of the n = n_max contribution
    bool tail_ok = true;     // last term below rel_tol * |partial sum|
};

SpectralKernel spectral_kernel(const SpectralData& sd, const BoundaryData& b,
                               double rel_tol = 1e-10);

/// Analytic continuation omega -> sqrt(iz) omega of the spectral data:
/// Etilde_n(z) = sqrt(iz) omega (n + 1/2) with sqrt(iz) = e^{i pi/4} sqrt(z)
/// for z > 0 (principal branch), and scaled argument xtilde^2 = sqrt(iz) w x^2.
struct ContinuedSpectralData {
    double omega = 1.0;

    std::complex<double> energy(int n, double z) const;
    std::complex<double> scaled_arg_sq(double x, double z) const;
};

}  // namespace wl::kernels

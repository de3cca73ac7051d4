#pragma once

#include <complex>
#include <functional>

#include "worldline/domain.hpp"

namespace wl::greens {

/// 2x2 complex matrix, row-major. Small enough to pass by value.
struct Mat2c {
    std::complex<double> m[2][2]{};

    Mat2c& operator+=(const Mat2c& o) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[i][j] += o.m[i][j];
        return *this;
    }
    friend Mat2c operator*(double s, const Mat2c& a) {
        Mat2c r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
        return r;
    }
    CVec apply(const CVec& v) const {
        return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
    }
};

/// -Delta(t,t) = t(T-t)/T, the coincident Dirichlet Green function of -d^2/dt^2.
double green_free_coincident(double t, double T);

/// Off-diagonal free Green function -Delta(t,t') = min(t,t') (T - max(t,t')) / T.
double green_free(double t, double t_prime, double T);

/// (1/omega) sinh(omega t) sinh(omega (T-t)) / sinh(omega T).
double green_harmonic_coincident(double t, double T, double omega);

/// Dirichlet worldline Green function for M = -d^2/dt^2 I + i eB eps d/dt in
/// the plane; Theta(0) = 1/2 at coincident times. eB -> 0 reduces to
/// -Delta(t,t') times the identity.
Mat2c green_magnetic(double t, double t_prime, double T, double eB);

/// Coincident magnetic Green function is g(t) * identity with
/// g(t) = (2/eB) sinh(eB t/2) sinh(eB (T-t)/2) / sinh(eB T/2); even in eB.
double green_magnetic_coincident_diag(double t, double T, double eB);

/// int_0^T G(t, t') dt', needed for the magnetic hit-function center path.
Mat2c green_magnetic_time_integral(double t, double T, double eB);

struct ClassicalPath {
    BoundaryData boundary;
    std::function<CVec(double)> eval;  // complex for the magnetic center path

    Vec eval_real(double t) const {
        const CVec p = eval(t);
        return {p[0].real(), p[1].real()};
    }
};

/// Classical (Dirichlet) solution for the quadratic actions. For the constant
/// magnetic field this is the complex center path
///   x(t) = x0(t) - (i/T) [int_0^T G(t,t') dt'] (eB eps) (y - x),
/// obtained by completing the square about the straight line x0.
ClassicalPath classical_path(const PotentialSpec& p, const BoundaryData& b);

}  // namespace wl::greens

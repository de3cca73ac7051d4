#include "worldline/greens.hpp"

#include <cmath>
#include <stdexcept>

#include "worldline/specfun.hpp"

namespace wl::greens {

namespace {

void check_time(double t, double T, const char* who) {
    if (!(T > 0.0)) throw std::domain_error(std::string(who) + ": T must be > 0");
    if (t < 0.0 || t > T) throw std::domain_error(std::string(who) + ": t outside [0, T]");
}

constexpr double kSmallFreq = 1e-12;  // omega*T below this counts as zero

}  // namespace

double green_free_coincident(double t, double T) {
    check_time(t, T, "green_free_coincident");
    return t * (T - t) / T;
}

double green_free(double t, double t_prime, double T) {
    check_time(t, T, "green_free");
    check_time(t_prime, T, "green_free");
    const double lo = std::min(t, t_prime), hi = std::max(t, t_prime);
    return lo * (T - hi) / T;
}

double green_harmonic_coincident(double t, double T, double omega) {
    check_time(t, T, "green_harmonic_coincident");
    if (!(omega >= 0.0)) throw std::domain_error("green_harmonic_coincident: omega must be >= 0");
    if (omega * T < kSmallFreq) return green_free_coincident(t, T);
    // (1/2w) (1-e^{-2wt})(1-e^{-2w(T-t)})/(1-e^{-2wT}), stable for all wT
    const double a = -std::expm1(-2.0 * omega * t);
    const double b = -std::expm1(-2.0 * omega * (T - t));
    const double c = -std::expm1(-2.0 * omega * T);
    return a * b / (2.0 * omega * c);
}

double green_magnetic_coincident_diag(double t, double T, double eB) {
    // g(t) = 2 G_{omega=|eB|/2}(t,t); even in eB
    return 2.0 * green_harmonic_coincident(t, T, 0.5 * std::fabs(eB));
}

Mat2c green_magnetic(double t, double t_prime, double T, double eB) {
    check_time(t, T, "green_magnetic");
    check_time(t_prime, T, "green_magnetic");
    const double tm = t - t_prime;
    Mat2c g;
    if (std::fabs(eB) * T < 1e-6) {
        // series about eB = 0: -Delta I + (i eB/2) Delta(t,t') t_- eps + O(eB^2)
        const double mdelta = green_free(t, t_prime, T);  // -Delta >= 0
        const std::complex<double> eps01(0.0, -0.5 * eB * mdelta * tm);
        g.m[0][0] = g.m[1][1] = mdelta;
        g.m[0][1] = eps01;
        g.m[1][0] = -eps01;
        return g;
    }
    const double theta = tm > 0.0 ? 1.0 : (tm < 0.0 ? 0.0 : 0.5);
    const double ch = std::cosh(0.5 * eB * tm);
    const double sh = std::sinh(0.5 * eB * tm);
    const double bracket2 = theta * sh - std::sinh(0.5 * eB * t) *
                                             std::sinh(0.5 * eB * (T - t_prime)) /
                                             std::sinh(0.5 * eB * T);
    const double pref = -2.0 / eB;
    const std::complex<double> diag = pref * ch * bracket2;
    const std::complex<double> off = pref * std::complex<double>(0.0, -sh) * bracket2;
    g.m[0][0] = g.m[1][1] = diag;
    g.m[0][1] = off;   // -i eps_{12} sinh = -i sinh
    g.m[1][0] = -off;  // eps_{21} = -1
    return g;
}

Mat2c green_magnetic_time_integral(double t, double T, double eB) {
    // integrand is analytic on [0,t] and [t,T] separately (kink at t' = t)
    const auto& rule = specfun::gauss_legendre(32);
    Mat2c total;
    for (const auto [a, b] : {std::pair{0.0, t}, std::pair{t, T}}) {
        if (b - a <= 0.0) continue;
        const double hw = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double tp = mid + hw * rule.x[i];
            total += (hw * rule.w[i]) * green_magnetic(t, tp, T, eB);
        }
    }
    return total;
}

ClassicalPath classical_path(const PotentialSpec& p, const BoundaryData& b) {
    b.validate();
    const Vec x = b.x, y = b.y;
    const double T = b.T;

    if (std::holds_alternative<Free>(p)) {
        return {b, [x, y, T](double t) -> CVec {
                    const Vec v = x + (t / T) * (y - x);
                    return {v[0], v[1]};
                }};
    }
    if (const auto* lin = std::get_if<Linear>(&p)) {
        const double k = lin->k;
        const double x0 = x[0], y0 = y[0];
        return {b, [x0, y0, T, k](double t) -> CVec {
                    return {x0 + ((y0 - x0) / T - 0.5 * k * T) * t + 0.5 * k * t * t, 0.0};
                }};
    }
    if (const auto* h = std::get_if<Harmonic>(&p)) {
        const double w = h->omega;
        const double x0 = x[0], y0 = y[0];
        return {b, [x0, y0, T, w](double t) -> CVec {
                    if (w * T < kSmallFreq) return {x0 + (y0 - x0) * t / T, 0.0};
                    // sinh(w(T-t))/sinh(wT), sinh(wt)/sinh(wT) in overflow-safe form
                    const double den = -std::expm1(-2.0 * w * T);
                    const double cx = std::exp(-w * t) * (-std::expm1(-2.0 * w * (T - t))) / den;
                    const double cy = std::exp(-w * (T - t)) * (-std::expm1(-2.0 * w * t)) / den;
                    return {x0 * cx + y0 * cy, 0.0};
                }};
    }
    const auto& mag = std::get<MagneticConstant>(p);
    const double eB = mag.eB();
    return {b, [x, y, T, eB](double t) -> CVec {
                const Vec dxy = y - x;
                const Vec straight = x + (t / T) * dxy;
                if (eB == 0.0) return {straight[0], straight[1]};
                const Mat2c gi = green_magnetic_time_integral(t, T, eB);
                // (eB eps)(y-x) with eps_{12} = 1
                const CVec rotated{eB * dxy[1], -eB * dxy[0]};
                const CVec shift = gi.apply(rotated);
                const std::complex<double> i_over_T(0.0, 1.0 / T);
                return {straight[0] - i_over_T * shift[0], straight[1] - i_over_T * shift[1]};
            }};
}

}  // namespace wl::greens

#include "worldline/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wl::specfun {

double erfc(double chi) { return std::erfc(chi); }

double hermite(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
    if (n > 60) throw std::overflow_error("hermite: n > 60 not supported");
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double hp = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be > 0");
    return std::cyl_bessel_k(std::fabs(nu), x);  // K is even in the order
}

double bessel_i(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_i: x must be > 0");
    if (nu >= 0.0) return std::cyl_bessel_i(nu, x);
    // I_{-nu} = I_nu + (2/pi) sin(nu pi) K_nu
    const double p = -nu;
    return std::cyl_bessel_i(p, x) +
           (2.0 / std::numbers::pi) * std::sin(p * std::numbers::pi) * std::cyl_bessel_k(p, x);
}

std::complex<double> bessel_k_neg(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k_neg: x must be > 0");
    const double knu = bessel_k(nu, x);
    const double inu = bessel_i(nu, x);
    const std::complex<double> phase = std::polar(1.0, -nu * std::numbers::pi);
    return phase * knu - std::complex<double>(0.0, std::numbers::pi) * inu;
}

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    if (order < 2) throw std::invalid_argument("QuadratureSpec: order must be >= 2");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

namespace {

template <class Real>
void compute_gl(int n, std::vector<Real>& x, std::vector<Real>& w) {
    constexpr Real pi = Real(3.14159265358979323846264338328L);
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        Real t = std::cos(pi * (i + Real(0.75L)) / (n + Real(0.5L)));
        Real dp = 0;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = t;
            for (int j = 2; j <= n; ++j) {
                const Real p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1);
            const Real dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < std::numeric_limits<Real>::epsilon() * 4) break;
        }
        x[i] = t;
        w[i] = Real(2) / ((1 - t * t) * dp * dp);
    }
}

}  // namespace

const GlRule& gauss_legendre(int order) {
    static std::map<int, GlRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) {
        GlRule r;
        compute_gl<double>(order, r.x, r.w);
        it = cache.emplace(order, std::move(r)).first;
    }
    return it->second;
}

const GlRuleL& gauss_legendre_l(int order) {
    static std::map<int, GlRuleL> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) {
        GlRuleL r;
        compute_gl<long double>(order, r.x, r.w);
        it = cache.emplace(order, std::move(r)).first;
    }
    return it->second;
}

namespace {

template <class V>
V gl_panel(const std::function<V(double)>& f, double a, double b, const GlRule& r) {
    const double hw = 0.5 * (b - a), mid = 0.5 * (a + b);
    V sum{};
    for (std::size_t i = 0; i < r.x.size(); ++i) sum += r.w[i] * f(mid + hw * r.x[i]);
    return hw * sum;
}

template <class V>
IntegralResult integrate_impl(const std::function<V(double)>& f, double a, double b,
                              const QuadratureSpec& q) {
    q.validate();
    IntegralResult res;
    if (a == b) return res;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    const GlRule& rule = gauss_legendre(q.order);

    if (q.method == QuadratureSpec::Method::FixedGaussLegendre) {
        const V whole = gl_panel(f, a, b, rule);
        const V half = gl_panel(f, a, 0.5 * (a + b), rule) + gl_panel(f, 0.5 * (a + b), b, rule);
        res.value = sign * half;
        res.error_estimate = std::abs(std::complex<double>(half - whole));
        res.subdivisions = 1;
        return res;
    }

    struct Panel {
        double a, b;
        V estimate;
    };
    std::vector<Panel> stack;
    stack.push_back({a, b, gl_panel(f, a, b, rule)});
    V total{};
    double err_total = 0.0;
    int used = 0;
    bool converged = true;
    // crude global scale for the relative tolerance
    const double scale0 = std::abs(std::complex<double>(stack.front().estimate));

    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const V left = gl_panel(f, p.a, m, rule);
        const V right = gl_panel(f, m, p.b, rule);
        const V refined = left + right;
        const double err = std::abs(std::complex<double>(refined - p.estimate));
        const double width_frac = (p.b - p.a) / (b - a);
        const double tol =
            std::max(q.abs_tol, q.rel_tol * std::max(scale0, std::abs(std::complex<double>(total)))) *
            std::max(width_frac, 1e-3);
        ++used;
        if (err <= tol || used >= q.max_subdivisions) {
            if (err > tol) converged = false;
            total += refined;
            err_total += err;
        } else {
            stack.push_back({p.a, m, left});
            stack.push_back({m, p.b, right});
        }
    }
    res.value = sign * total;
    res.error_estimate = err_total;
    res.converged = converged;
    res.subdivisions = used;
    return res;
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& q) {
    return integrate_impl<double>(f, a, b, q);
}

IntegralResult integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                 double b, const QuadratureSpec& q) {
    return integrate_impl<std::complex<double>>(f, a, b, q);
}

namespace {

// One pass of the truncated transform at fixed damping eta >= 0:
// I(v) = (1/2pi) int_{-c}^{c} F(z) e^{-eta z^2} e^{ivz} dz on shared panels.
std::vector<std::complex<double>> fourier_pass(const std::function<std::complex<double>(double)>& F,
                                               std::span<const double> v_grid, double eta,
                                               double cutoff, int order, int n_panels) {
    const GlRule& rule = gauss_legendre(order);
    std::vector<double> zs;
    std::vector<std::complex<double>> fz;
    zs.reserve(n_panels * order);
    fz.reserve(n_panels * order);
    std::vector<double> ws;
    ws.reserve(n_panels * order);
    for (int p = 0; p < n_panels; ++p) {
        const double a = -cutoff + 2.0 * cutoff * p / n_panels;
        const double b = -cutoff + 2.0 * cutoff * (p + 1) / n_panels;
        const double hw = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (int i = 0; i < order; ++i) {
            const double z = mid + hw * rule.x[i];
            zs.push_back(z);
            ws.push_back(hw * rule.w[i]);
            fz.push_back(F(z) * std::exp(-eta * z * z));
        }
    }
    std::vector<std::complex<double>> out(v_grid.size());
    for (std::size_t k = 0; k < v_grid.size(); ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < zs.size(); ++j)
            acc += ws[j] * fz[j] * std::polar(1.0, v_grid[k] * zs[j]);
        out[k] = acc / (2.0 * std::numbers::pi);
    }
    return out;
}

}  // namespace

FourierResult fourier_inverse(const std::function<std::complex<double>(double)>& F,
                              std::span<const double> v_grid, double damping, double cutoff,
                              const QuadratureSpec& q) {
    q.validate();
    if (!(cutoff > 0.0)) throw std::invalid_argument("fourier_inverse: cutoff must be > 0");
    if (damping < 0.0) throw std::invalid_argument("fourier_inverse: damping must be >= 0");

    double vmax = 0.0;
    for (double v : v_grid) vmax = std::max(vmax, std::fabs(v));
    // resolve the fastest oscillation with several panels per period
    const double period = vmax > 0.0 ? 2.0 * std::numbers::pi / vmax : 2.0 * cutoff;
    int n_panels = std::max(16, static_cast<int>(std::ceil(2.0 * cutoff / (0.5 * period))));
    n_panels = std::min(n_panels, 100000);

    std::vector<std::complex<double>> vals;
    if (damping > 0.0) {
        // Richardson in the damping parameter: I ~ 2 I(eta/2) - I(eta)
        auto full = fourier_pass(F, v_grid, damping, cutoff, q.order, n_panels);
        auto half = fourier_pass(F, v_grid, 0.5 * damping, cutoff, q.order, n_panels);
        vals.resize(full.size());
        for (std::size_t i = 0; i < full.size(); ++i) vals[i] = 2.0 * half[i] - full[i];
    } else {
        vals = fourier_pass(F, v_grid, 0.0, cutoff, q.order, n_panels);
    }

    FourierResult res;
    res.table = DistributionTable(std::vector<double>(v_grid.begin(), v_grid.end()), std::move(vals));
    // tail estimate assuming exponential decay of |F| e^{-eta z^2} near the cutoff
    const double f1 = std::abs(F(0.9 * cutoff) * std::exp(-damping * 0.81 * cutoff * cutoff));
    const double f2 = std::abs(F(cutoff) * std::exp(-damping * cutoff * cutoff));
    if (f2 <= 0.0) {
        res.tail_estimate = 0.0;
    } else if (f1 > f2) {
        const double rate = std::log(f1 / f2) / (0.1 * cutoff);
        res.tail_estimate = 2.0 * f2 / rate / (2.0 * std::numbers::pi);
    } else {
        res.tail_estimate = std::numeric_limits<double>::infinity();
    }
    res.tail_ok = res.tail_estimate <= q.abs_tol;
    return res;
}

}  // namespace wl::specfun

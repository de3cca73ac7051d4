#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wl {

// Positions live in D = 1 or 2 dimensions; component 1 is unused when D = 1.
using Vec = std::array<double, 2>;
using CVec = std::array<std::complex<double>, 2>;

inline Vec operator+(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec operator-(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec operator*(double s, const Vec& a) { return {s * a[0], s * a[1]}; }
inline double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm_sq(const Vec& a) { return dot(a, a); }

/// Endpoint data for a Euclidean propagation problem. Mass is fixed to 1
/// throughout the library (kernel_free keeps it symbolic for checks).
struct BoundaryData {
    Vec x{0.0, 0.0};
    Vec y{0.0, 0.0};
    double T = 1.0;
    int dim = 1;

    void validate() const {
        if (!(T > 0.0)) throw std::invalid_argument("BoundaryData: T must be > 0");
        if (dim != 1 && dim != 2) throw std::invalid_argument("BoundaryData: dim must be 1 or 2");
    }
    double separation_sq() const { return norm_sq(y - x); }
};

/// Gauge choice for a constant perpendicular magnetic field in the plane.
/// The gauge function lambda is stored in closed form relative to the
/// Fock-Schwinger reference about `reference_base` (A = A_ref + grad lambda).
struct GaugeSpec {
    enum class Kind { FockSchwinger, Landau };
    Kind kind = Kind::FockSchwinger;
    Vec base{0.0, 0.0};            // FS base point (ignored for Landau)
    Vec reference_base{0.0, 0.0};  // base of the FS reference gauge
    double B = 0.0;                // field strength entering lambda

    // Closed-form gauge function. FockSchwinger about b relative to the FS
    // reference about r differs by a constant gradient c with
    // c_mu = (B/2) eps_{mu nu} (b - r)_nu; Landau A = (0, B p1) gives the
    // quadratic form below.
    double lambda(const Vec& p) const {
        switch (kind) {
            case Kind::FockSchwinger: {
                const Vec d = base - reference_base;
                return 0.5 * B * (d[1] * p[0] - d[0] * p[1]);
            }
            case Kind::Landau: {
                const Vec& r = reference_base;
                return 0.5 * B * (p[0] * p[1] - r[1] * p[0] + r[0] * p[1]);
            }
        }
        return 0.0;
    }

    // Gauge field A(p) itself, used by the sampler's line integrals.
    Vec vector_potential(const Vec& p) const {
        switch (kind) {
            case Kind::FockSchwinger:
                return {-0.5 * B * (p[1] - base[1]), 0.5 * B * (p[0] - base[0])};
            case Kind::Landau:
                return {0.0, B * p[0]};
        }
        return {0.0, 0.0};
    }
};

/// phi(y, x) = lambda(y) - lambda(x); path independent.
inline double holonomy(const GaugeSpec& g, const Vec& x, const Vec& y) {
    return g.lambda(y) - g.lambda(x);
}

struct Free {};
struct Linear {
    double k = 0.0;
};
struct Harmonic {
    double omega = 1.0;
};
struct MagneticConstant {
    double B = 0.0;
    double e = 1.0;
    GaugeSpec gauge{};
    double eB() const { return e * B; }
};

using PotentialSpec = std::variant<Free, Linear, Harmonic, MagneticConstant>;

void validate(const PotentialSpec& p, const BoundaryData& b);

/// Tabulated distribution on a strictly increasing grid. Values may be
/// complex (magnetic hit functions); stderrs are present iff the values came
/// from sampling.
struct DistributionTable {
    std::vector<double> grid;
    std::vector<std::complex<double>> values;
    std::vector<double> stderrs;  // empty unless sampled

    DistributionTable() = default;
    DistributionTable(std::vector<double> g, std::vector<std::complex<double>> v,
                      std::vector<double> se = {});

    std::size_t size() const { return grid.size(); }
    bool sampled() const { return !stderrs.empty(); }
    std::vector<double> real_values() const;
    /// Trapezoid mass of Re(values) over the grid.
    double mass() const;
    /// Trapezoid mean of the distribution Re(values).
    double mean() const;
};

/// Scalar Monte Carlo estimate. `value` is complex for phase-weighted
/// (magnetic) estimators; stderr combines component variances.
struct EstimatorResult {
    std::complex<double> value{0.0, 0.0};
    double stderr_ = 0.0;
    std::uint64_t n_samples = 0;
};

}  // namespace wl

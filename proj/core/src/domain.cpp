#include "worldline/domain.hpp"

#include <cmath>

namespace wl {

void validate(const PotentialSpec& p, const BoundaryData& b) {
    b.validate();
    if (std::holds_alternative<MagneticConstant>(p)) {
        if (b.dim != 2)
            throw std::invalid_argument("MagneticConstant requires dim = 2");
    } else if (std::holds_alternative<Linear>(p) || std::holds_alternative<Harmonic>(p)) {
        if (b.dim != 1)
            throw std::invalid_argument("Linear/Harmonic closed forms require dim = 1");
    }
    if (const auto* h = std::get_if<Harmonic>(&p)) {
        if (!(h->omega > 0.0)) throw std::invalid_argument("Harmonic: omega must be > 0");
    }
}

DistributionTable::DistributionTable(std::vector<double> g, std::vector<std::complex<double>> v,
                                     std::vector<double> se)
    : grid(std::move(g)), values(std::move(v)), stderrs(std::move(se)) {
    if (grid.size() != values.size())
        throw std::invalid_argument("DistributionTable: grid/value size mismatch");
    if (!stderrs.empty() && stderrs.size() != grid.size())
        throw std::invalid_argument("DistributionTable: stderr size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("DistributionTable: grid must be strictly increasing");
    for (double s : stderrs)
        if (s < 0.0) throw std::invalid_argument("DistributionTable: negative stderr");
}

std::vector<double> DistributionTable::real_values() const {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
    return out;
}

double DistributionTable::mass() const {
    double m = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        m += 0.5 * (values[i].real() + values[i - 1].real()) * (grid[i] - grid[i - 1]);
    return m;
}

double DistributionTable::mean() const {
    double m = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double f0 = grid[i - 1] * values[i - 1].real();
        const double f1 = grid[i] * values[i].real();
        m += 0.5 * (f0 + f1) * (grid[i] - grid[i - 1]);
    }
    const double total = mass();
    return total != 0.0 ? m / total : 0.0;
}

}  // namespace wl

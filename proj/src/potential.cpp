#include "diracsl/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diracsl/errors.hpp"

namespace diracsl {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw domain_error(std::string(what) + " must be finite");
        }
    }
}

void require_unit_span_grid(const std::vector<double>& xs, const char* what) {
    if (xs.size() < 2) {
        throw domain_error(std::string(what) + " needs at least two points");
    }
    if (xs.front() != 0.0 || xs.back() != 1.0) {
        throw domain_error(std::string(what) + " must span [0, 1] exactly");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            throw domain_error(std::string(what) + " must be strictly increasing");
        }
    }
}

// Index of the piece containing x: largest i with grid[i] <= x, clamped so
// that x = 1 lands in the final piece.
std::size_t piece_index(const std::vector<double>& grid, double x) {
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    std::size_t i = static_cast<std::size_t>(it - grid.begin());
    if (i == 0) return 0;
    if (i >= grid.size()) return grid.size() - 2;
    return i - 1;
}

}  // namespace

Potential Potential::zero() { return Potential(ZeroPotential{}); }

Potential Potential::constant(double value) {
    if (!std::isfinite(value)) throw domain_error("constant potential value must be finite");
    return Potential(ConstantPotential{value});
}

Potential Potential::piecewise_constant(std::vector<double> breakpoints,
                                        std::vector<double> values) {
    require_unit_span_grid(breakpoints, "breakpoints");
    require_finite(breakpoints, "breakpoints");
    require_finite(values, "values");
    if (values.size() + 1 != breakpoints.size()) {
        throw domain_error("values must have one entry per piece (breakpoints minus one)");
    }
    return Potential(PiecewiseConstantPotential{std::move(breakpoints), std::move(values)});
}

Potential Potential::sampled(std::vector<double> xs, std::vector<double> qs) {
    require_unit_span_grid(xs, "xs");
    require_finite(xs, "xs");
    require_finite(qs, "qs");
    if (qs.size() != xs.size()) {
        throw domain_error("qs must have one entry per sample point");
    }
    return Potential(SampledPotential{std::move(xs), std::move(qs)});
}

double Potential::evaluate(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw domain_error("evaluate: x outside [0, 1]");
    struct Visitor {
        double x;
        double operator()(const ZeroPotential&) const { return 0.0; }
        double operator()(const ConstantPotential& p) const { return p.value; }
        double operator()(const PiecewiseConstantPotential& p) const {
            return p.values[piece_index(p.breakpoints, x)];
        }
        double operator()(const SampledPotential& p) const {
            std::size_t i = piece_index(p.xs, x);
            double h = p.xs[i + 1] - p.xs[i];
            double w = (x - p.xs[i]) / h;
            return p.qs[i] * (1.0 - w) + p.qs[i + 1] * w;
        }
    };
    return std::visit(Visitor{x}, repr_);
}

double Potential::l1_norm() const {
    struct Visitor {
        double operator()(const ZeroPotential&) const { return 0.0; }
        double operator()(const ConstantPotential& p) const { return std::abs(p.value); }
        double operator()(const PiecewiseConstantPotential& p) const {
            double s = 0.0;
            for (std::size_t i = 0; i < p.values.size(); ++i) {
                s += std::abs(p.values[i]) * (p.breakpoints[i + 1] - p.breakpoints[i]);
            }
            return s;
        }
        double operator()(const SampledPotential& p) const {
            // Trapezoid of |q| on the native grid.
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < p.xs.size(); ++i) {
                s += 0.5 * (std::abs(p.qs[i]) + std::abs(p.qs[i + 1])) * (p.xs[i + 1] - p.xs[i]);
            }
            return s;
        }
    };
    return std::visit(Visitor{}, repr_);
}

std::vector<double> Potential::breakpoints() const {
    struct Visitor {
        std::vector<double> operator()(const ZeroPotential&) const { return {0.0, 1.0}; }
        std::vector<double> operator()(const ConstantPotential&) const { return {0.0, 1.0}; }
        std::vector<double> operator()(const PiecewiseConstantPotential& p) const {
            return p.breakpoints;
        }
        std::vector<double> operator()(const SampledPotential& p) const { return p.xs; }
    };
    return std::visit(Visitor{}, repr_);
}

bool Potential::is_piecewise_constant() const {
    return !std::holds_alternative<SampledPotential>(repr_);
}

}  // namespace diracsl

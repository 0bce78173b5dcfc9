#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "diracsl/assembly.hpp"
#include "diracsl/classify.hpp"
#include "diracsl/fundamental.hpp"
#include "diracsl/potential.hpp"

namespace testsupport {

using namespace diracsl;

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Short human-readable tag for failure messages.
inline std::string describe(const Potential& q) {
    struct Visitor {
        std::string operator()(const ZeroPotential&) const { return "zero"; }
        std::string operator()(const ConstantPotential& c) const {
            return "constant(" + std::to_string(c.value) + ")";
        }
        std::string operator()(const PiecewiseConstantPotential& p) const {
            return "piecewise(" + std::to_string(p.values.size()) + " pieces)";
        }
        std::string operator()(const SampledPotential& s) const {
            return "sampled(" + std::to_string(s.xs.size()) + " points)";
        }
    };
    return std::visit(Visitor{}, q.repr());
}

// Closed-form fundamental basis for constant q, used as the independent
// oracle against which the propagator is checked.  For q = c > 0 the basis is
// hyperbolic, for c < 0 trigonometric, and for c = 0 linear.
struct ConstantBasisOracle {
    double c;

    double phi(double x) const {
        if (c == 0.0) return x;
        if (c > 0.0) {
            const double k = std::sqrt(c);
            return std::sinh(k * x) / k;
        }
        const double k = std::sqrt(-c);
        return std::sin(k * x) / k;
    }
    double dphi(double x) const {
        if (c == 0.0) return 1.0;
        if (c > 0.0) return std::cosh(std::sqrt(c) * x);
        return std::cos(std::sqrt(-c) * x);
    }
    // Case I anchor: psi(1) = 0, psi'(1) = -1.  Valid only when phi(1) != 0.
    double psi(double x) const {
        if (c == 0.0) return 1.0 - x;
        if (c > 0.0) {
            const double k = std::sqrt(c);
            return std::sinh(k * (1.0 - x)) / k;
        }
        const double k = std::sqrt(-c);
        return std::sin(k * (1.0 - x)) / k;
    }
    double dpsi(double x) const {
        if (c == 0.0) return -1.0;
        if (c > 0.0) return -std::cosh(std::sqrt(c) * (1.0 - x));
        return -std::cos(std::sqrt(-c) * (1.0 - x));
    }
    double omega() const { return -phi(1.0); }
};

struct Instance {
    Potential q;
    DiracWeight w;
};

inline Potential random_potential(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_real_distribution<double> val(-30.0, 30.0);
    switch (kind(rng)) {
        case 0:
            return Potential::zero();
        case 1:
            return Potential::constant(val(rng));
        case 2: {
            std::uniform_int_distribution<int> np(2, 4);
            const int pieces = np(rng);
            std::uniform_real_distribution<double> u(0.1, 0.9);
            std::vector<double> bps;
            for (;;) {
                bps.assign(1, 0.0);
                for (int i = 0; i < pieces - 1; ++i) bps.push_back(u(rng));
                bps.push_back(1.0);
                std::sort(bps.begin(), bps.end());
                double gap = 1.0;
                for (std::size_t i = 1; i < bps.size(); ++i) gap = std::min(gap, bps[i] - bps[i - 1]);
                if (gap >= 0.05) break;
            }
            std::vector<double> vals;
            for (int i = 0; i < pieces; ++i) vals.push_back(val(rng));
            return Potential::piecewise_constant(bps, vals);
        }
        default: {
            std::uniform_real_distribution<double> amp(0.0, 10.0);
            std::uniform_real_distribution<double> off(-10.0, 10.0);
            std::uniform_real_distribution<double> phase(0.0, 6.28);
            const double a = amp(rng), b = off(rng), p0 = phase(rng);
            std::vector<double> xs, qs;
            const int npts = 41;
            for (int i = 0; i < npts; ++i) {
                const double x = static_cast<double>(i) / (npts - 1);
                xs.push_back(x);
                qs.push_back(a * std::sin(2.0 * 3.14159265358979323846 * x + p0) + b);
            }
            return Potential::sampled(xs, qs);
        }
    }
}

inline DiracWeight random_weight(std::mt19937_64& rng, int max_nodes = 6) {
    std::uniform_int_distribution<int> nd(1, max_nodes);
    const int n = nd(rng);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::uniform_real_distribution<double> mu(0.1, 3.0);
    std::vector<double> nodes;
    for (;;) {
        nodes.clear();
        for (int i = 0; i < n; ++i) nodes.push_back(u(rng));
        std::sort(nodes.begin(), nodes.end());
        double gap = 1.0;
        for (int i = 1; i < n; ++i) gap = std::min(gap, nodes[i] - nodes[i - 1]);
        if (gap >= 0.02) break;
    }
    std::vector<double> masses;
    for (int i = 0; i < n; ++i) masses.push_back(mu(rng));
    return DiracWeight(nodes, masses);
}

inline Instance random_instance(std::mt19937_64& rng, int max_nodes = 6) {
    return Instance{random_potential(rng), random_weight(rng, max_nodes)};
}

}  // namespace testsupport

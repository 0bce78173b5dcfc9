#include "diracsl/shooting.hpp"

#include <algorithm>
#include <cmath>

#include "diracsl/errors.hpp"
#include "diracsl/fundamental.hpp"

namespace diracsl {

double miss(const Potential& q, const DiracWeight& w, double lambda, const Tolerances& tol) {
    if (!std::isfinite(lambda)) throw domain_error("lambda must be finite");
    State s{0.0, 0.0, 1.0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        s = propagate_state(q, s, w.nodes[i], tol);
        s.dy -= lambda * w.masses[i] * s.y;
    }
    s = propagate_state(q, s, 1.0, tol);
    return s.y;
}

std::vector<double> scan_spectrum(const Potential& q, const DiracWeight& w, double lambda_lo,
                                  double lambda_hi, int samples, const Tolerances& tol) {
    if (!(lambda_lo < lambda_hi)) throw domain_error("scan window must satisfy lo < hi");
    if (samples < 2) throw domain_error("scan needs at least two samples");

    std::vector<double> xs(static_cast<std::size_t>(samples));
    std::vector<double> vs(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        xs[static_cast<std::size_t>(i)] =
            lambda_lo + (lambda_hi - lambda_lo) * i / (samples - 1);
        vs[static_cast<std::size_t>(i)] = miss(q, w, xs[static_cast<std::size_t>(i)], tol);
    }

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (vs[i] == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (vs[i] * vs[i + 1] >= 0.0) continue;
        double a = xs[i], b = xs[i + 1];
        double fa = vs[i];
        for (int iter = 0; iter < 200; ++iter) {
            const double m = 0.5 * (a + b);
            if (b - a <= tol.root * std::max(1.0, std::abs(m))) break;
            const double fm = miss(q, w, m, tol);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if (fa * fm < 0.0) {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        roots.push_back(0.5 * (a + b));
    }
    if (!vs.empty() && vs.back() == 0.0) roots.push_back(xs.back());

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots) {
        if (out.empty() || std::abs(r - out.back()) > tol.dedup * (1.0 + std::abs(r))) {
            out.push_back(r);
        }
    }
    return out;
}

double default_scan_halfwidth(const DiracWeight& w) {
    const std::size_t n = w.size();
    if (n == 0) return 10.0;
    double min_gap = w.nodes[0];
    for (std::size_t i = 1; i < n; ++i) min_gap = std::min(min_gap, w.nodes[i] - w.nodes[i - 1]);
    min_gap = std::min(min_gap, 1.0 - w.nodes[n - 1]);
    const double min_mass = *std::min_element(w.masses.begin(), w.masses.end());
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    return 10.0 * std::max(1.0, n2 / (min_gap * min_mass));
}

}  // namespace diracsl

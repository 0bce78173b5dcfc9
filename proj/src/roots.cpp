#include "diracsl/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "diracsl/errors.hpp"

namespace diracsl {

namespace {

// Scale against which a residual |p(x)| is judged: the magnitude the Horner
// sum passes through before cancellation.
double residual_scale(const RealPolynomial& p, double x) {
    double s = 0.0;
    double xp = 1.0;
    for (double c : p.coeffs()) {
        s += std::abs(c) * std::abs(xp);
        xp *= x;
    }
    return s + 1e-300;
}

double polish(const RealPolynomial& p, const RealPolynomial& dp, double x0) {
    double x = x0;
    double best = x0;
    double best_res = std::abs(p(x0));
    for (int i = 0; i < 50; ++i) {
        const double fx = p(x);
        const double dfx = dp(x);
        if (std::abs(fx) < best_res) {
            best = x;
            best_res = std::abs(fx);
        }
        if (std::abs(fx) <= 1e-12 * residual_scale(p, x)) return x;
        if (dfx == 0.0 || !std::isfinite(dfx)) break;
        const double step = fx / dfx;
        if (!std::isfinite(step)) break;
        x -= step;
        if (std::abs(step) <= 1e-17 * (1.0 + std::abs(x))) {
            return std::abs(p(x)) <= best_res ? x : best;
        }
    }
    return best;
}

}  // namespace

std::vector<std::complex<double>> companion_roots(const RealPolynomial& p) {
    const int d = p.degree();
    if (d < 1) throw domain_error("companion_roots needs degree >= 1");
    const double lead = p.coeff(static_cast<std::size_t>(d));

    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(static_cast<std::size_t>(i)) / lead;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(c, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("companion eigenvalue iteration failed to converge");
    }
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::vector<double> real_polynomial_roots(const RealPolynomial& p, const Tolerances& tol) {
    if (p.is_zero()) {
        throw domain_error("real_polynomial_roots: polynomial is identically zero");
    }
    if (p.degree() < 1) return {};

    const RealPolynomial dp = p.derivative();
    std::vector<double> candidates;
    for (const std::complex<double>& z : companion_roots(p)) {
        if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
        candidates.push_back(polish(p, dp, z.real()));
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<double> out;
    for (double x : candidates) {
        if (!out.empty() && std::abs(x - out.back()) <= tol.dedup * (1.0 + std::abs(x))) {
            if (std::abs(p(x)) < std::abs(p(out.back()))) out.back() = x;
            continue;
        }
        out.push_back(x);
    }
    for (double x : out) {
        if (std::abs(p(x)) > 1e-9 * residual_scale(p, x)) {
            std::ostringstream msg;
            msg << "root " << x << " failed its residual bound: |p| = " << std::abs(p(x));
            throw numerical_error(msg.str());
        }
    }
    return out;
}

}  // namespace diracsl

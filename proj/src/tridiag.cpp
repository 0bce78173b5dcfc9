#include "diracsl/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diracsl/errors.hpp"

namespace diracsl {

namespace {

void validate(const SymTridiag& t) {
    if (t.diag.empty()) throw domain_error("tridiagonal matrix must be nonempty");
    if (t.offdiag.size() + 1 != t.diag.size()) {
        throw domain_error("offdiag must have one entry fewer than diag");
    }
    for (double v : t.diag) {
        if (!std::isfinite(v)) throw domain_error("tridiagonal entries must be finite");
    }
    for (double v : t.offdiag) {
        if (!std::isfinite(v)) throw domain_error("tridiagonal entries must be finite");
    }
}

double inf_norm(const SymTridiag& t) {
    double m = 0.0;
    const std::size_t n = t.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(t.diag[i]);
        if (i > 0) row += std::abs(t.offdiag[i - 1]);
        if (i + 1 < n) row += std::abs(t.offdiag[i]);
        m = std::max(m, row);
    }
    return m;
}

// Characteristic recurrence p_k(mu) = det of the leading k-by-k block of
// T - mu I, together with its mu-derivative. Rescaled when it grows to keep
// the Newton ratio p/p' well defined.
void char_recurrence(const SymTridiag& t, double mu, double& p, double& dp) {
    double pm1 = 1.0, dpm1 = 0.0;
    double pc = t.diag[0] - mu, dpc = -1.0;
    for (std::size_t k = 1; k < t.diag.size(); ++k) {
        const double e2 = t.offdiag[k - 1] * t.offdiag[k - 1];
        const double a = t.diag[k] - mu;
        const double pn = a * pc - e2 * pm1;
        const double dpn = a * dpc - pc - e2 * dpm1;
        pm1 = pc;
        dpm1 = dpc;
        pc = pn;
        dpc = dpn;
        const double mag = std::max(std::abs(pc), std::abs(dpc));
        if (mag > 1e150) {
            pm1 /= mag;
            dpm1 /= mag;
            pc /= mag;
            dpc /= mag;
        }
    }
    p = pc;
    dp = dpc;
}

}  // namespace

int sturm_count(const SymTridiag& t, double mu) {
    validate(t);
    const double scale = std::max(1.0, inf_norm(t) + std::abs(mu));
    const double pivmin = std::numeric_limits<double>::epsilon() * scale;

    double d = t.diag[0] - mu;
    int count = (d < 0.0) ? 1 : 0;
    for (std::size_t i = 1; i < t.diag.size(); ++i) {
        if (std::abs(d) < pivmin) d = (d < 0.0) ? -pivmin : pivmin;
        d = (t.diag[i] - mu) - t.offdiag[i - 1] * t.offdiag[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> tridiag_eigenvalues(const SymTridiag& t, const Tolerances& tol) {
    validate(t);
    const std::size_t n = t.diag.size();

    double lo = t.diag[0], hi = t.diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(t.offdiag[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    const double width = tol.root * scale;
    // Open the bracket slightly so every eigenvalue lies strictly inside.
    lo -= scale * 1e-12 + width;
    hi += scale * 1e-12 + width;

    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        for (int iter = 0; iter < 200 && (b - a) > width; ++iter) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(t, mid) <= static_cast<int>(k)) {
                a = mid;
            } else {
                b = mid;
            }
        }
        double lam = 0.5 * (a + b);
        double p, dp;
        char_recurrence(t, lam, p, dp);
        if (dp != 0.0) {
            const double step = p / dp;
            const double polished = lam - step;
            if (polished > a && polished < b) lam = polished;
        }
        out[k] = lam;
    }
    std::sort(out.begin(), out.end());
    return out;
}

RealPolynomial tridiag_char_poly(const SymTridiag& t) {
    validate(t);
    const RealPolynomial neg_lambda(std::vector<double>{0.0, -1.0});
    RealPolynomial pm1 = RealPolynomial::constant(1.0);
    RealPolynomial pc = RealPolynomial::constant(t.diag[0]) + neg_lambda;
    for (std::size_t k = 1; k < t.diag.size(); ++k) {
        const double e2 = t.offdiag[k - 1] * t.offdiag[k - 1];
        RealPolynomial pn =
            (RealPolynomial::constant(t.diag[k]) + neg_lambda) * pc - pm1 * e2;
        pm1 = pc;
        pc = pn;
    }
    return pc;
}

}  // namespace diracsl

#include "diracsl/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diracsl/errors.hpp"
#include "diracsl/roots.hpp"

namespace diracsl {

namespace {

double scaled_margin(const FundamentalBasis& basis, double xi, double eta, double raw) {
    return std::abs(raw) / discriminant_scale(basis, xi, eta);
}

std::string margins_note(const HypothesisReport& r) {
    std::ostringstream s;
    s << " [margins: h0 " << r.h0_margin << ", h " << r.h_margin << ", h1 " << r.h1_margin
      << "]";
    return s.str();
}

}  // namespace

HypothesisReport check_hypotheses(const FundamentalBasis& basis, const DiracWeight& w,
                                  const Tolerances& tol) {
    const std::size_t n = w.size();
    HypothesisReport r;

    std::vector<double> pts(n + 2);
    pts[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) pts[i + 1] = w.nodes[i];
    pts[n + 1] = 1.0;

    r.d10 = discriminant(basis, 0.0, 1.0);
    r.h0_margin = scaled_margin(basis, 0.0, 1.0, r.d10);
    r.h0 = r.h0_margin > tol.zero_det;

    r.consecutive.resize(n + 1);
    r.h_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= n; ++k) {
        r.consecutive[k] = discriminant(basis, pts[k], pts[k + 1]);
        r.h_margin = std::min(r.h_margin, scaled_margin(basis, pts[k], pts[k + 1],
                                                        r.consecutive[k]));
    }
    r.h = r.h_margin > tol.zero_det;

    bool h1_raw;
    if (n == 0) {
        // No nodes: the two-parameter family degenerates and "every node
        // discriminant vanishes" holds vacuously exactly when D_{1,0} does.
        h1_raw = !r.h0;
        r.h1_margin = r.h0_margin;
    } else {
        r.upper.resize(n);
        r.lower.resize(n);
        r.h1_margin = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = w.nodes[i];
            r.upper[i] = discriminant(basis, t, 1.0);
            r.lower[i] = discriminant(basis, 0.0, t);
            r.h1_margin = std::max(r.h1_margin, scaled_margin(basis, t, 1.0, r.upper[i]));
            r.h1_margin = std::max(r.h1_margin, scaled_margin(basis, 0.0, t, r.lower[i]));
        }
        h1_raw = r.h1_margin <= tol.zero_det;
    }
    r.h1 = h1_raw && !r.h0 && !r.h;
    return r;
}

Classification classify_spectrum(const FundamentalBasis& basis, const DiracWeight& w,
                                 const Tolerances& tol, SpectrumMethod method) {
    Classification out;
    out.hypotheses = check_hypotheses(basis, w, tol);
    const HypothesisReport& hyp = out.hypotheses;
    const std::size_t n = w.size();

    const RealPolynomial p_raw = characteristic_polynomial(basis, w);
    const std::vector<double> bounds = characteristic_magnitude_bounds(basis, w);
    out.charpoly = p_raw.reduced_against(bounds, tol.zero_det);
    const bool degenerate = out.charpoly.is_zero();

    if (hyp.h1) {
        if (!degenerate) {
            throw inconsistency_error(
                "hypotheses say every lambda is an eigenvalue, but the characteristic "
                "polynomial is not degenerate" +
                margins_note(hyp));
        }
        if (method == SpectrumMethod::tridiag) {
            throw tridiagonal_unavailable(
                "tridiagonal route unavailable: consecutive discriminants vanish" +
                margins_note(hyp));
        }
        out.spectrum.all_complex = true;
        out.method_used = SpectrumMethod::charpoly;
        return out;
    }

    if (degenerate) {
        throw inconsistency_error(
            "characteristic polynomial is degenerate but the node discriminants do not all "
            "vanish" +
            margins_note(hyp));
    }

    std::vector<double> from_poly = real_polynomial_roots(out.charpoly, tol);

    const bool want_tridiag = (method == SpectrumMethod::tridiag) ||
                              (method == SpectrumMethod::auto_select && hyp.h && n >= 1);
    if (method == SpectrumMethod::tridiag && !hyp.h) {
        throw tridiagonal_unavailable(
            "tridiagonal route unavailable: hypothesis (H) fails" + margins_note(hyp));
    }

    if (want_tridiag && n >= 1) {
        const TridiagonalSystem sys = tridiagonal_system(basis, w, tol);
        std::vector<double> from_tridiag = tridiag_eigenvalues(sys.sym, tol);
        if (from_tridiag.size() != from_poly.size()) {
            std::ostringstream msg;
            msg << "route disagreement: tridiagonal gives " << from_tridiag.size()
                << " eigenvalues, polynomial gives " << from_poly.size() << margins_note(hyp);
            throw inconsistency_error(msg.str());
        }
        for (std::size_t i = 0; i < from_poly.size(); ++i) {
            const double diff = std::abs(from_tridiag[i] - from_poly[i]);
            if (diff > 1e-8 * (1.0 + std::abs(from_poly[i]))) {
                std::ostringstream msg;
                msg << "route disagreement at eigenvalue " << i << ": tridiagonal "
                    << from_tridiag[i] << " vs polynomial " << from_poly[i] << margins_note(hyp);
                throw inconsistency_error(msg.str());
            }
        }
        out.spectrum.eigenvalues = std::move(from_tridiag);
        out.method_used = SpectrumMethod::tridiag;
    } else {
        out.spectrum.eigenvalues = std::move(from_poly);
        out.method_used = SpectrumMethod::charpoly;
    }

    if (hyp.h && out.spectrum.eigenvalues.size() != n) {
        std::ostringstream msg;
        msg << "hypothesis (H) promises exactly " << n << " eigenvalues, found "
            << out.spectrum.eigenvalues.size() << margins_note(hyp);
        throw inconsistency_error(msg.str());
    }
    if (out.spectrum.eigenvalues.size() > n) {
        throw inconsistency_error("more eigenvalues than nodes" + margins_note(hyp));
    }
    return out;
}

Eigenfunction::Eigenfunction(FundamentalBasis basis, std::vector<double> nodes,
                             std::vector<std::pair<double, double>> pieces, double lambda)
    : basis_(std::move(basis)),
      nodes_(std::move(nodes)),
      pieces_(std::move(pieces)),
      lambda_(lambda) {}

std::size_t Eigenfunction::piece_index(double x) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    return static_cast<std::size_t>(it - nodes_.begin());
}

double Eigenfunction::value(double x) const {
    const auto& [a, b] = pieces_[piece_index(x)];
    return a * basis_.phi.value(x) + b * basis_.psi.value(x);
}

double Eigenfunction::derivative(double x) const {
    const auto& [a, b] = pieces_[piece_index(x)];
    return a * basis_.phi.derivative(x) + b * basis_.psi.derivative(x);
}

Eigenfunction eigenfunction(const FundamentalBasis& basis, const DiracWeight& w, double lambda,
                            const Tolerances& tol) {
    const RealPolynomial p = characteristic_polynomial(basis, w);
    const std::vector<double> bounds = characteristic_magnitude_bounds(basis, w);
    double scale = 1.0;
    double pow_lambda = 1.0;
    for (double b : bounds) {
        scale += b * std::abs(pow_lambda);
        pow_lambda *= lambda;
    }
    const double residual = std::abs(p(lambda));
    if (residual > 1e-6 * scale) {
        std::ostringstream msg;
        msg << "lambda = " << lambda << " is not an eigenvalue: |p(lambda)| = " << residual
            << " exceeds 1e-6 * " << scale;
        throw domain_error(msg.str());
    }

    std::vector<std::pair<double, double>> pieces;
    pieces.reserve(w.size() + 1);
    double a = 1.0, b = 0.0;
    pieces.emplace_back(a, b);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double p_i = basis.phi.value(w.nodes[i]);
        const double s_i = basis.psi.value(w.nodes[i]);
        const double c = lambda * w.masses[i] / basis.omega;
        const double na = (1.0 + c * p_i * s_i) * a + c * s_i * s_i * b;
        const double nb = -c * p_i * p_i * a + (1.0 - c * p_i * s_i) * b;
        a = na;
        b = nb;
        pieces.emplace_back(a, b);
    }
    (void)tol;
    return Eigenfunction(basis, w.nodes, std::move(pieces), lambda);
}

}  // namespace diracsl

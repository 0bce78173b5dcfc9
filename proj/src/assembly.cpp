#include "diracsl/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "diracsl/errors.hpp"

namespace diracsl {

DiracWeight::DiracWeight(std::vector<double> nodes_in, std::vector<double> masses_in)
    : nodes(std::move(nodes_in)), masses(std::move(masses_in)) {
    if (nodes.size() != masses.size()) {
        throw domain_error("nodes and masses must have the same length");
    }
    for (double t : nodes) {
        if (!std::isfinite(t) || !(t > 0.0 && t < 1.0)) {
            throw domain_error("nodes must lie strictly inside (0, 1)");
        }
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i] > nodes[i - 1])) {
            throw domain_error("nodes must be strictly increasing");
        }
    }
    for (double m : masses) {
        if (!std::isfinite(m) || !(m > 0.0)) {
            throw domain_error("masses must be positive");
        }
    }
}

double discriminant(const FundamentalBasis& basis, double xi, double eta) {
    if (!(xi >= 0.0 && xi < eta && eta <= 1.0)) {
        throw domain_error("discriminant requires 0 <= xi < eta <= 1");
    }
    const State pe = basis.phi.at(eta);
    const State px = basis.phi.at(xi);
    const State se = basis.psi.at(eta);
    const State sx = basis.psi.at(xi);
    return pe.y * sx.y - px.y * se.y;
}

double discriminant_scale(const FundamentalBasis& basis, double xi, double eta) {
    if (!(xi >= 0.0 && xi < eta && eta <= 1.0)) {
        throw domain_error("discriminant requires 0 <= xi < eta <= 1");
    }
    const double a = std::abs(basis.phi.value(eta) * basis.psi.value(xi));
    const double b = std::abs(basis.phi.value(xi) * basis.psi.value(eta));
    return a + b + 1.0;
}

RealPolynomial TransferMatrix::det() const { return a11 * a22 - a12 * a21; }

TransferMatrix transfer_matrix(const FundamentalBasis& basis, double node, double mass) {
    if (!(node > 0.0 && node < 1.0)) throw domain_error("node must lie strictly inside (0, 1)");
    if (!(mass > 0.0)) throw domain_error("masses must be positive");
    const double p = basis.phi.value(node);
    const double s = basis.psi.value(node);
    const double c = mass / basis.omega;
    return TransferMatrix{
        RealPolynomial({1.0, c * p * s}),
        RealPolynomial({0.0, c * s * s}),
        RealPolynomial({0.0, -c * p * p}),
        RealPolynomial({1.0, -c * p * s}),
    };
}

CoefficientChain coefficient_chain(const FundamentalBasis& basis, const DiracWeight& w) {
    CoefficientChain chain;
    chain.pairs.reserve(w.size() + 1);
    RealPolynomial alpha = RealPolynomial::constant(1.0);
    RealPolynomial beta;
    chain.pairs.emplace_back(alpha, beta);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const TransferMatrix m = transfer_matrix(basis, w.nodes[i], w.masses[i]);
        RealPolynomial next_alpha = m.a11 * alpha + m.a12 * beta;
        RealPolynomial next_beta = m.a21 * alpha + m.a22 * beta;
        alpha = std::move(next_alpha);
        beta = std::move(next_beta);
        chain.pairs.emplace_back(alpha, beta);
    }
    return chain;
}

std::pair<RealPolynomial, RealPolynomial> coefficient_pair_closed_form(
    const FundamentalBasis& basis, const DiracWeight& w, std::size_t K) {
    if (K > w.size()) throw domain_error("K exceeds the number of nodes");
    if (K > 20) throw domain_error("closed form is exponential in K; limit is 20");

    std::vector<double> alpha_coeffs(K + 1, 0.0);
    std::vector<double> beta_coeffs(K + 1, 0.0);
    alpha_coeffs[0] = 1.0;

    std::vector<double> pv(K), sv(K);
    for (std::size_t i = 0; i < K; ++i) {
        pv[i] = basis.phi.value(w.nodes[i]);
        sv[i] = basis.psi.value(w.nodes[i]);
    }

    const std::size_t subsets = static_cast<std::size_t>(1) << K;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        double term = 1.0;
        int ell = 0;
        int first = -1, prev = -1;
        for (std::size_t i = 0; i < K; ++i) {
            if (!(mask & (static_cast<std::size_t>(1) << i))) continue;
            term *= w.masses[i] / basis.omega;
            if (prev >= 0) {
                term *= discriminant(basis, w.nodes[prev], w.nodes[i]);
            } else {
                first = static_cast<int>(i);
            }
            prev = static_cast<int>(i);
            ++ell;
        }
        alpha_coeffs[ell] += term * sv[prev] * pv[first];
        beta_coeffs[ell] -= term * pv[prev] * pv[first];
    }
    return {RealPolynomial(std::move(alpha_coeffs)), RealPolynomial(std::move(beta_coeffs))};
}

RealPolynomial characteristic_polynomial(const FundamentalBasis& basis, const DiracWeight& w) {
    const CoefficientChain chain = coefficient_chain(basis, w);
    const auto& [alpha, beta] = chain.pairs.back();
    const double phi1 = basis.phi.value(1.0);
    const double psi1 = basis.psi.value(1.0);
    return alpha * phi1 + beta * psi1;
}

std::vector<double> characteristic_magnitude_bounds(const FundamentalBasis& basis,
                                                    const DiracWeight& w) {
    // Same recurrence, all contributions taken with absolute value, so no
    // cancellation occurs and each coefficient bounds what |p_k| could be.
    const std::size_t n = w.size();
    std::vector<double> alpha(n + 1, 0.0), beta(n + 1, 0.0);
    alpha[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::abs(basis.phi.value(w.nodes[i]));
        const double s = std::abs(basis.psi.value(w.nodes[i]));
        const double c = std::abs(w.masses[i] / basis.omega);
        std::vector<double> na(n + 1, 0.0), nb(n + 1, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            na[k] += alpha[k];
            nb[k] += beta[k];
            if (k + 1 <= n) {
                na[k + 1] += c * p * s * alpha[k] + c * s * s * beta[k];
                nb[k + 1] += c * p * p * alpha[k] + c * p * s * beta[k];
            }
        }
        alpha = std::move(na);
        beta = std::move(nb);
    }
    const double phi1 = std::abs(basis.phi.value(1.0));
    const double psi1 = std::abs(basis.psi.value(1.0));
    std::vector<double> bounds(n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) bounds[k] = alpha[k] * phi1 + beta[k] * psi1;
    return bounds;
}

TridiagonalSystem tridiagonal_system(const FundamentalBasis& basis, const DiracWeight& w,
                                     const Tolerances& tol) {
    const std::size_t n = w.size();
    if (n == 0) throw domain_error("tridiagonal system needs at least one node");

    std::vector<double> pts(n + 2);
    pts[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) pts[i + 1] = w.nodes[i];
    pts[n + 1] = 1.0;

    // cons[k] = D_{t_{k+1}, t_k} for k = 0..n; all must clear the zero test.
    std::vector<double> cons(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        cons[k] = discriminant(basis, pts[k], pts[k + 1]);
        const double scale = discriminant_scale(basis, pts[k], pts[k + 1]);
        if (std::abs(cons[k]) <= tol.zero_det * scale) {
            std::ostringstream msg;
            msg << "tridiagonal route unavailable: consecutive discriminant over ("
                << pts[k] << ", " << pts[k + 1] << ") vanishes (scaled margin "
                << std::abs(cons[k]) / scale << "); use the characteristic polynomial route";
            throw tridiagonal_unavailable(msg.str());
        }
    }

    TridiagonalSystem sys;
    sys.omega = basis.omega;
    sys.mass_diag = w.masses;
    sys.diag.resize(n);
    sys.offdiag.resize(n > 0 ? n - 1 : 0);
    sys.sym.diag.resize(n);
    sys.sym.offdiag.resize(n > 0 ? n - 1 : 0);

    for (std::size_t k = 0; k < n; ++k) {
        const double skip = discriminant(basis, pts[k], pts[k + 2]);
        sys.diag[k] = skip / (cons[k + 1] * cons[k]);
        sys.sym.diag[k] = -sys.omega * sys.diag[k] / w.masses[k];
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        sys.offdiag[k] = -1.0 / cons[k + 1];
        sys.sym.offdiag[k] =
            -sys.omega * sys.offdiag[k] / std::sqrt(w.masses[k] * w.masses[k + 1]);
    }

    sys.boundary_product = 1.0;
    for (double d : cons) sys.boundary_product *= d;
    return sys;
}

}  // namespace diracsl

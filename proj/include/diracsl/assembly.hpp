#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "diracsl/fundamental.hpp"
#include "diracsl/polynomial.hpp"
#include "diracsl/tridiag.hpp"

namespace diracsl {

// Finite positive Dirac measure: nodes strictly increasing inside (0,1),
// masses positive. Empty is allowed (n = 0).
struct DiracWeight {
    std::vector<double> nodes;
    std::vector<double> masses;

    DiracWeight() = default;
    DiracWeight(std::vector<double> nodes_in, std::vector<double> masses_in);
    std::size_t size() const { return nodes.size(); }
};

// D_{eta,xi} = phi(eta) psi(xi) - phi(xi) psi(eta), for 0 <= xi < eta <= 1.
double discriminant(const FundamentalBasis& basis, double xi, double eta);

// Magnitude the two products of the discriminant could reach before
// cancellation, floored at 1. Zero tests compare |D| against
// tol.zero_det * this.
double discriminant_scale(const FundamentalBasis& basis, double xi, double eta);

// One-node transfer matrix M(lambda) = I + (lambda/omega) m N(t); entries are
// degree <= 1 polynomials in lambda and det M = 1 identically.
struct TransferMatrix {
    RealPolynomial a11, a12, a21, a22;
    RealPolynomial det() const;
};

TransferMatrix transfer_matrix(const FundamentalBasis& basis, double node, double mass);

// (alpha_i, beta_i) for i = 0..n, built by left-multiplying the transfer
// matrices onto (1, 0).
struct CoefficientChain {
    std::vector<std::pair<RealPolynomial, RealPolynomial>> pairs;
};

CoefficientChain coefficient_chain(const FundamentalBasis& basis, const DiracWeight& w);

// Closed-form (alpha_K, beta_K) by expansion over node subsets. O(2^K);
// serves as the independent check of the chain recurrence.
std::pair<RealPolynomial, RealPolynomial> coefficient_pair_closed_form(
    const FundamentalBasis& basis, const DiracWeight& w, std::size_t K);

// p(lambda) = alpha_n(lambda) phi(1) + beta_n(lambda) psi(1). Eigenvalues of
// the weighted problem are exactly the roots of p.
RealPolynomial characteristic_polynomial(const FundamentalBasis& basis, const DiracWeight& w);

// Per-coefficient magnitude bounds for p, from the same recurrence run on
// absolute values. A coefficient far below its bound is roundoff from
// cancellation, not signal.
std::vector<double> characteristic_magnitude_bounds(const FundamentalBasis& basis,
                                                    const DiracWeight& w);

// Symmetric form available under hypothesis (H): all consecutive
// discriminants D_{t_{k+1},t_k} nonzero (sentinels t_0 = 0, t_{n+1} = 1).
// Eigenvalues of sym coincide with the roots of p.
struct TridiagonalSystem {
    std::vector<double> diag;      // a_kk = D_{t_{k+1},t_{k-1}} / (D_{t_{k+1},t_k} D_{t_k,t_{k-1}})
    std::vector<double> offdiag;   // a_{k,k+1} = -1 / D_{t_{k+1},t_k}
    std::vector<double> mass_diag; // m_1..m_n
    SymTridiag sym;                // X = Mtilde^{-1/2} (-omega A) Mtilde^{-1/2}
    double omega = 0.0;
    double boundary_product = 0.0; // prod_{k=1}^{n+1} D_{t_k,t_{k-1}}
};

TridiagonalSystem tridiagonal_system(const FundamentalBasis& basis, const DiracWeight& w,
                                     const Tolerances& tol = {});

}  // namespace diracsl

#pragma once

#include <utility>
#include <vector>

#include "diracsl/assembly.hpp"
#include "diracsl/fundamental.hpp"
#include "diracsl/polynomial.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// Hypothesis booleans with their scaled margins. A discriminant counts as
// zero when |D| <= tol.zero_det * discriminant_scale; the margin stored for
// each boolean is the decisive scaled ratio |D| / scale.
//
//   h0: D_{1,0} != 0
//   h:  every consecutive D_{t_{k+1},t_k} != 0 (sentinels 0 and 1)
//   h1: every D_{1,t_i} and D_{t_i,0} = 0 (n = 0: taken as "h0 fails")
//
// h1 = true structurally implies h0 = false and h = false.
struct HypothesisReport {
    bool h0 = false;
    bool h = false;
    bool h1 = false;
    double h0_margin = 0.0;  // scaled |D_{1,0}|
    double h_margin = 0.0;   // min over k of scaled |D_{t_{k+1},t_k}|
    double h1_margin = 0.0;  // max over i of scaled |D_{1,t_i}|, |D_{t_i,0}|

    // Raw discriminant values, for reporting.
    double d10 = 0.0;
    std::vector<double> consecutive;  // D_{t_k,t_{k-1}}, k = 1..n+1
    std::vector<double> upper;        // D_{1,t_i},  i = 1..n
    std::vector<double> lower;        // D_{t_i,0},  i = 1..n
};

HypothesisReport check_hypotheses(const FundamentalBasis& basis, const DiracWeight& w,
                                  const Tolerances& tol = {});

// Either every complex number is an eigenvalue, or a finite real set with at
// most n elements, sorted and distinct.
struct Spectrum {
    bool all_complex = false;
    std::vector<double> eigenvalues;
};

enum class SpectrumMethod { auto_select, charpoly, tridiag };

struct Classification {
    HypothesisReport hypotheses;
    Spectrum spectrum;
    SpectrumMethod method_used = SpectrumMethod::charpoly;
    RealPolynomial charpoly;  // reduced characteristic polynomial
};

// Classify per the trichotomy: h1 -> all complex; otherwise roots of the
// reduced characteristic polynomial, cross-checked against the tridiagonal
// route whenever (H) holds. Boolean/polynomial disagreement raises
// inconsistency_error; forcing tridiag without (H) raises
// tridiagonal_unavailable.
Classification classify_spectrum(const FundamentalBasis& basis, const DiracWeight& w,
                                 const Tolerances& tol = {},
                                 SpectrumMethod method = SpectrumMethod::auto_select);

// Eigenfunction for an eigenvalue: alpha_i phi + beta_i psi on each piece
// (t_i, t_{i+1}), continuous across nodes with derivative jumps
// y'(t-) - y'(t+) = lambda m y(t).
class Eigenfunction {
  public:
    Eigenfunction(FundamentalBasis basis, std::vector<double> nodes,
                  std::vector<std::pair<double, double>> pieces, double lambda);

    double value(double x) const;
    double derivative(double x) const;

    double lambda() const { return lambda_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<std::pair<double, double>>& pieces() const { return pieces_; }

  private:
    std::size_t piece_index(double x) const;
    FundamentalBasis basis_;
    std::vector<double> nodes_;
    std::vector<std::pair<double, double>> pieces_;
    double lambda_ = 0.0;
};

// Precondition: |p(lambda)| must sit below 1e-6 times its cancellation scale;
// otherwise a domain error carrying the residual is raised.
Eigenfunction eigenfunction(const FundamentalBasis& basis, const DiracWeight& w, double lambda,
                            const Tolerances& tol = {});

}  // namespace diracsl

#pragma once

#include <complex>
#include <vector>

#include "diracsl/polynomial.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// All complex roots of p (degree >= 1) as companion-matrix eigenvalues.
std::vector<std::complex<double>> companion_roots(const RealPolynomial& p);

// Real roots of p, sorted ascending and deduplicated at spacing
// tol.dedup * (1 + |root|). Companion eigenvalues are filtered for real-ness,
// Newton-polished, and must meet |p(root)| <= 1e-9 * sum_k |c_k| |root|^k.
// Zero polynomial input is a domain error; constants have no roots.
std::vector<double> real_polynomial_roots(const RealPolynomial& p, const Tolerances& tol = {});

}  // namespace diracsl

#pragma once

#include <vector>

#include "diracsl/assembly.hpp"
#include "diracsl/potential.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// Shoot y(0) = 0, y'(0) = 1 across [0,1], applying the derivative jump
// y'(t+) = y'(t-) - lambda m y(t) at each node, and return y(1). Zero exactly
// at eigenvalues; proportional to the characteristic polynomial. This path
// never touches the transfer-matrix algebra.
double miss(const Potential& q, const DiracWeight& w, double lambda,
            const Tolerances& tol = {});

// Sign-change scan of miss over [lambda_lo, lambda_hi] at `samples` points,
// each bracket bisected to width tol.root * max(1, |lambda|). Roots of even
// multiplicity produce no sign change and are not found.
std::vector<double> scan_spectrum(const Potential& q, const DiracWeight& w, double lambda_lo,
                                  double lambda_hi, int samples, const Tolerances& tol = {});

// Heuristic half-width covering the expected spectrum scale of w.
double default_scan_halfwidth(const DiracWeight& w);

}  // namespace diracsl

#pragma once

#include <vector>

#include "diracsl/polynomial.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// Symmetric tridiagonal matrix: diag has n entries, offdiag has n-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;
};

// Number of eigenvalues strictly below mu, by the sign count of the LDL^T
// pivots of T - mu I. Tiny pivots are replaced by +/- eps * scale so the
// count stays defined at exact eigenvalues.
int sturm_count(const SymTridiag& t, double mu);

// All eigenvalues, ascending. Gershgorin bracket, Sturm bisection to
// tol.root * scale, then one safeguarded Newton step on the characteristic
// recurrence.
std::vector<double> tridiag_eigenvalues(const SymTridiag& t, const Tolerances& tol = {});

// det(T - lambda I) as a polynomial in lambda (three-term recurrence).
RealPolynomial tridiag_char_poly(const SymTridiag& t);

}  // namespace diracsl

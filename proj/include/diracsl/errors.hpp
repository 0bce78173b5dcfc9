#pragma once

#include <stdexcept>
#include <string>

namespace diracsl {

// Input outside an operation's documented domain, or malformed user data.
class domain_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Integration or root refinement failed to reach its tolerance, or produced
// a non-finite value.
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Hypothesis (H) fails: some consecutive discriminant vanishes, so the
// symmetric tridiagonal representation does not exist.
class tridiagonal_unavailable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The hypothesis booleans and the characteristic polynomial disagree. This
// signals tolerance trouble near a threshold, never a silent choice.
class inconsistency_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A spectrum-like candidate failed validation and no override was requested.
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Forward map queried on a basis with phi(1) = 0: every admissible curve
// value is zero and the map carries no information.
class zero_eigenvalue_regime : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Forward map queried at a node where phi(t)psi(t) = 0: the one-mass problem
// at that node has empty spectrum.
class empty_spectrum_signal : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace diracsl

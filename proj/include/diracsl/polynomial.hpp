#pragma once

#include <cstddef>
#include <vector>

namespace diracsl {

// Dense real polynomial with ascending coefficients. An empty coefficient
// vector is the zero polynomial; it stays representable and distinguishable
// after reduction drops every term.
class RealPolynomial {
  public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> coeffs);
    static RealPolynomial constant(double c);

    // Highest index with a nonzero coefficient, -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const;
    // True when reduction actually dropped at least one trailing coefficient.
    bool reduced() const { return reduced_; }

    double operator()(double x) const;
    RealPolynomial derivative() const;

    // Drop trailing coefficients whose magnitude is explained by roundoff:
    // |c_k| <= tau * (bounds[k] + 1), where bounds[k] is an a-priori magnitude
    // bound for coefficient k. The result carries the reduced flag.
    RealPolynomial reduced_against(const std::vector<double>& bounds, double tau) const;

    double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    RealPolynomial operator+(const RealPolynomial& o) const;
    RealPolynomial operator-(const RealPolynomial& o) const;
    RealPolynomial operator*(const RealPolynomial& o) const;
    RealPolynomial operator*(double s) const;

  private:
    std::vector<double> coeffs_;
    bool reduced_ = false;
};

}  // namespace diracsl

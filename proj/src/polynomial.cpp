#include "diracsl/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "diracsl/errors.hpp"

namespace diracsl {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw domain_error("polynomial coefficients must be finite");
    }
}

RealPolynomial RealPolynomial::constant(double c) {
    return RealPolynomial(std::vector<double>{c});
}

int RealPolynomial::degree() const {
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
        if (coeffs_[k - 1] != 0.0) return static_cast<int>(k - 1);
    }
    return -1;
}

bool RealPolynomial::is_zero() const { return degree() < 0; }

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
        acc = acc * x + coeffs_[k - 1];
    }
    return acc;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RealPolynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::reduced_against(const std::vector<double>& bounds,
                                               double tau) const {
    std::size_t keep = coeffs_.size();
    while (keep > 0) {
        const std::size_t k = keep - 1;
        const double bound = k < bounds.size() ? bounds[k] : 0.0;
        if (std::abs(coeffs_[k]) > tau * (bound + 1.0)) break;
        --keep;
    }
    RealPolynomial out(std::vector<double>(coeffs_.begin(), coeffs_.begin() + keep));
    out.reduced_ = keep < coeffs_.size();
    return out;
}

RealPolynomial RealPolynomial::operator+(const RealPolynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return RealPolynomial(std::move(c));
}

RealPolynomial RealPolynomial::operator-(const RealPolynomial& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return RealPolynomial(std::move(c));
}

RealPolynomial RealPolynomial::operator*(const RealPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return RealPolynomial{};
    std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return RealPolynomial(std::move(c));
}

RealPolynomial RealPolynomial::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return RealPolynomial(std::move(c));
}

}  // namespace diracsl

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace diracsl {

struct ZeroPotential {};

struct ConstantPotential {
    double value = 0.0;
};

// Value values[i] on [breakpoints[i], breakpoints[i+1]); right-continuous at
// interior breakpoints, evaluate(1) returns the last value.
struct PiecewiseConstantPotential {
    std::vector<double> breakpoints;
    std::vector<double> values;
};

// Linear interpolation between samples. xs must span [0,1].
struct SampledPotential {
    std::vector<double> xs;
    std::vector<double> qs;
};

// Integrable potential q on [0,1] in one of four concrete representations.
// Construction validates shape; instances are immutable value types.
class Potential {
  public:
    using Repr = std::variant<ZeroPotential, ConstantPotential,
                              PiecewiseConstantPotential, SampledPotential>;

    Potential() : repr_(ZeroPotential{}) {}

    static Potential zero();
    static Potential constant(double value);
    static Potential piecewise_constant(std::vector<double> breakpoints,
                                        std::vector<double> values);
    static Potential sampled(std::vector<double> xs, std::vector<double> qs);

    double evaluate(double x) const;
    double l1_norm() const;

    // Partition of [0,1] outside which q is smooth (affine or constant on each
    // open piece). Always starts at 0 and ends at 1.
    std::vector<double> breakpoints() const;

    // True when the exact constant-coefficient propagator applies piecewise.
    bool is_piecewise_constant() const;

    const Repr& repr() const { return repr_; }

  private:
    explicit Potential(Repr r) : repr_(std::move(r)) {}
    Repr repr_;
};

}  // namespace diracsl

#pragma once

#include <vector>

#include "diracsl/potential.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// Point on a solution trajectory of -y'' + q y = 0.
struct State {
    double x = 0.0;
    double y = 0.0;
    double dy = 0.0;
};

// Case I:  phi(1) != 0, psi anchored by psi(1) = 0, psi'(1) = -1.
// Case II: phi(1)  = 0, psi anchored by psi(1) = 1, psi'(1) = 0.
enum class CaseTag { case_i, case_ii };

// Propagate a state to x_target (either direction) along -y'' + q y = 0.
// Piecewise-constant potentials use the exact constant-coefficient propagator
// per piece; sampled potentials use an embedded Dormand-Prince 5(4) step.
State propagate_state(const Potential& q, const State& s0, double x_target,
                      const Tolerances& tol = {});

// Immutable evaluator for one solution: states are precomputed at every
// potential breakpoint, queries re-propagate within a single piece.
class SolutionEvaluator {
  public:
    SolutionEvaluator() = default;
    SolutionEvaluator(Potential q, std::vector<double> grid, std::vector<State> states,
                      Tolerances tol);

    State at(double x) const;
    double value(double x) const { return at(x).y; }
    double derivative(double x) const { return at(x).dy; }

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<State>& grid_states() const { return states_; }

  private:
    Potential q_;
    std::vector<double> grid_;
    std::vector<State> states_;
    Tolerances tol_;
};

// Fundamental pair for -y'' + q y = 0 with phi(0) = 0, phi'(0) = 1 and psi
// anchored at x = 1 by the case rule above. omega is the Wronskian
// phi psi' - phi' psi read off at x = 1, where psi's anchor values are exact.
struct FundamentalBasis {
    SolutionEvaluator phi;
    SolutionEvaluator psi;
    double omega = 0.0;
    CaseTag case_tag = CaseTag::case_i;
    double phi_sup = 0.0;  // sup |phi| estimate used by the case decision

    double wronskian_at(double x) const;
};

// Case decision: |phi(1)| <= tol.zero_det * max(1, sup|phi|) selects Case II.
FundamentalBasis build_basis(const Potential& q, const Tolerances& tol = {});

}  // namespace diracsl

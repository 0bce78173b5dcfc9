#pragma once

#include <functional>
#include <vector>

#include "diracsl/fundamental.hpp"
#include "diracsl/potential.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// Candidate eigenvalue curve t -> lambda(t) for the one-node family.
// Closed mode carries analytic first and second derivatives; sampled mode
// interpolates grid data linearly and differentiates by local quadratic fits
// through three neighboring samples (second order, one-sided at the ends).
class SpectrumLikeFunction {
  public:
    using Fn = std::function<double(double)>;

    static SpectrumLikeFunction closed(Fn f, Fn df, Fn d2f);
    static SpectrumLikeFunction sampled(std::vector<double> ts, std::vector<double> values);

    bool is_sampled() const { return sampled_; }
    double front() const;  // smallest queryable t
    double back() const;   // largest queryable t

    double value(double t) const;
    double deriv(double t) const;
    double second_deriv(double t) const;

    // Integral of the curve between a and b (adaptive Simpson at 1e-10 in
    // closed mode, exact integral of the interpolant in sampled mode).
    double integral(double a, double b) const;

    const std::vector<double>& grid() const;  // sampled mode only

  private:
    SpectrumLikeFunction() = default;
    void stencil_derivs(double t, double& d1, double& d2) const;
    bool sampled_ = false;
    Fn f_, df_, d2f_;
    std::vector<double> ts_, vals_;
};

struct ProbeSpec {
    std::vector<double> offsets{1e-2, 1e-3, 1e-4};  // probe distances from each endpoint
    double divergence_threshold = 20.0;  // f must exceed this at every endpoint probe
    double ratio_bound = 1e6;            // cap for sup |f'/f^2|
    double drift_limit = 0.10;           // relative drift allowed between band probes
    int interior_points = 33;            // positivity/ratio probe grid size
    double anchor = 0.5;                 // anchor for the band integrals
};

// Necessary-condition screen for membership in the forward-map image:
// positivity, divergence at both endpoints, bounded |f'/f^2|, finite second
// derivative, and stabilizing limit bands f(t) e^{-int} near each endpoint.
// The band verdicts are heuristics over finitely many probes, not proofs.
struct ValidationReport {
    bool positivity = false;
    double min_value = 0.0;
    double min_location = 0.0;
    bool divergence_at_0 = false;
    bool divergence_at_1 = false;
    bool second_derivative_finite = false;
    double ratio_sup = 0.0;
    bool ratio_ok = false;
    std::vector<double> band0;  // f(t) e^{-int_t^a f} at probes descending to 0
    std::vector<double> band1;  // f(t) e^{-int_a^t f} at probes ascending to 1
    bool band0_stable = false;
    bool band1_stable = false;

    bool overall() const {
        return positivity && divergence_at_0 && divergence_at_1 &&
               second_derivative_finite && ratio_ok && band0_stable && band1_stable;
    }
};

ValidationReport validate_spectrum_like(const SpectrumLikeFunction& f,
                                        const ProbeSpec& probe = {});

// lambda(t) = -omega / (phi(t) psi(t)), the unique eigenvalue of the one-node
// problem with unit mass at t. Case II basis carries no curve (every value is
// zero); phi(t) psi(t) = 0 means the one-node spectrum at t is empty.
double forward_lambda(const FundamentalBasis& basis, double t, const Tolerances& tol = {});
double forward_lambda(const Potential& q, double t, const Tolerances& tol = {});

// Q(x) = -f''/(2f) + (3/4)(f'/f)^2 + f^2/4 on the given evaluation grid
// (strictly inside (0,1)), returned as a sampled potential extended to [0,1]
// by constant continuation of the end values. Unless force is set, f must
// pass validate_spectrum_like first.
Potential recover_potential(const SpectrumLikeFunction& f, const std::vector<double>& grid,
                            bool force = false);

struct BasisProfiles {
    std::vector<double> xs;
    std::vector<State> phi;
    std::vector<State> psi;
};

// phi = f^{-1/2} exp(+int_a^x f / 2), psi = f^{-1/2} exp(-int_a^x f / 2),
// sampled on the grid with derivatives. Their Wronskian is -1 and
// -W/(phi psi) reproduces f.
BasisProfiles reconstruct_basis(const SpectrumLikeFunction& f, double anchor,
                                const std::vector<double>& grid);

}  // namespace diracsl

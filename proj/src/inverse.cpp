#include "diracsl/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diracsl/assembly.hpp"
#include "diracsl/errors.hpp"

namespace diracsl {

namespace {

double simpson_panel(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double& fm_out) {
    const double m = 0.5 * (a + b);
    fm_out = f(m);
    return (b - a) / 6.0 * (fa + 4.0 * fm_out + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double fm, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    double flm, frm;
    const double left = simpson_panel(f, a, fa, m, fm, flm);
    const double right = simpson_panel(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (!std::isfinite(delta)) throw numerical_error("quadrature hit a non-finite value");
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (a == b) return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    const double lo = std::min(a, b), hi = std::max(a, b);
    const double fa = f(lo), fb = f(hi);
    double fm;
    const double whole = simpson_panel(f, lo, fa, hi, fb, fm);
    return sign * adaptive_simpson_rec(f, lo, fa, hi, fb, fm, whole, tol, 48);
}

// Quadratic through three abscissae by divided differences; derivative and
// curvature evaluated at x.
void quadratic_fit_derivs(double x0, double f0, double x1, double f1, double x2, double f2,
                          double x, double& d1, double& d2) {
    const double c1 = (f1 - f0) / (x1 - x0);
    const double c2 = ((f2 - f1) / (x2 - x1) - c1) / (x2 - x0);
    d1 = c1 + c2 * (2.0 * x - x0 - x1);
    d2 = 2.0 * c2;
}

}  // namespace

SpectrumLikeFunction SpectrumLikeFunction::closed(Fn f, Fn df, Fn d2f) {
    if (!f || !df || !d2f) throw domain_error("closed mode needs f, f', and f''");
    SpectrumLikeFunction out;
    out.sampled_ = false;
    out.f_ = std::move(f);
    out.df_ = std::move(df);
    out.d2f_ = std::move(d2f);
    return out;
}

SpectrumLikeFunction SpectrumLikeFunction::sampled(std::vector<double> ts,
                                                   std::vector<double> values) {
    if (ts.size() != values.size()) throw domain_error("ts and values must match in length");
    if (ts.size() < 3) throw domain_error("sampled mode needs at least three points");
    for (double t : ts) {
        if (!std::isfinite(t) || !(t > 0.0 && t < 1.0)) {
            throw domain_error("sample abscissae must lie strictly inside (0, 1)");
        }
    }
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (!(ts[i] > ts[i - 1])) throw domain_error("sample abscissae must be strictly increasing");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw domain_error("sample values must be finite");
    }
    SpectrumLikeFunction out;
    out.sampled_ = true;
    out.ts_ = std::move(ts);
    out.vals_ = std::move(values);
    return out;
}

double SpectrumLikeFunction::front() const { return sampled_ ? ts_.front() : 0.0; }
double SpectrumLikeFunction::back() const { return sampled_ ? ts_.back() : 1.0; }

const std::vector<double>& SpectrumLikeFunction::grid() const {
    if (!sampled_) throw domain_error("closed-mode curve has no native grid");
    return ts_;
}

double SpectrumLikeFunction::value(double t) const {
    if (!sampled_) {
        if (!(t > 0.0 && t < 1.0)) throw domain_error("curve evaluated outside (0, 1)");
        return f_(t);
    }
    if (!(t >= ts_.front() && t <= ts_.back())) {
        throw domain_error("curve evaluated outside the sampled range");
    }
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts_.begin());
    if (i >= ts_.size()) i = ts_.size() - 1;
    if (i > 0) --i;
    if (i + 1 >= ts_.size()) i = ts_.size() - 2;
    const double w = (t - ts_[i]) / (ts_[i + 1] - ts_[i]);
    return vals_[i] * (1.0 - w) + vals_[i + 1] * w;
}

// Stencil centered on the sample nearest t; one-sided only at the ends.
void SpectrumLikeFunction::stencil_derivs(double t, double& d1, double& d2) const {
    if (!(t >= ts_.front() && t <= ts_.back())) {
        throw domain_error("curve differentiated outside the sampled range");
    }
    auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
    std::size_t c = static_cast<std::size_t>(it - ts_.begin());
    if (c == ts_.size()) {
        c = ts_.size() - 1;
    } else if (c > 0 && t - ts_[c - 1] < ts_[c] - t) {
        --c;
    }
    c = std::clamp<std::size_t>(c, 1, ts_.size() - 2);
    quadratic_fit_derivs(ts_[c - 1], vals_[c - 1], ts_[c], vals_[c], ts_[c + 1], vals_[c + 1],
                         t, d1, d2);
}

double SpectrumLikeFunction::deriv(double t) const {
    if (!sampled_) return df_(t);
    double d1, d2;
    stencil_derivs(t, d1, d2);
    return d1;
}

double SpectrumLikeFunction::second_deriv(double t) const {
    if (!sampled_) return d2f_(t);
    double d1, d2;
    stencil_derivs(t, d1, d2);
    return d2;
}

double SpectrumLikeFunction::integral(double a, double b) const {
    if (!sampled_) {
        return adaptive_simpson(f_, a, b, 1e-10);
    }
    if (a > b) return -integral(b, a);
    if (!(a >= ts_.front() && b <= ts_.back())) {
        throw domain_error("integration range outside the sampled range");
    }
    // Exact integral of the linear interpolant.
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < ts_.size(); ++i) {
        const double lo = std::max(a, ts_[i]);
        const double hi = std::min(b, ts_[i + 1]);
        if (hi <= lo) continue;
        acc += 0.5 * (value(lo) + value(hi)) * (hi - lo);
    }
    return acc;
}

ValidationReport validate_spectrum_like(const SpectrumLikeFunction& f, const ProbeSpec& probe) {
    ValidationReport r;
    const double lo = f.is_sampled() ? f.front() : 0.0;
    const double hi = f.is_sampled() ? f.back() : 1.0;

    // Endpoint probes: requested offsets where queryable, otherwise the
    // nearest grid points of sampled data.
    std::vector<double> probes0, probes1;
    for (double off : probe.offsets) {
        if (off > lo && off < hi) probes0.push_back(off);
        if (1.0 - off > lo && 1.0 - off < hi) probes1.push_back(1.0 - off);
    }
    if (f.is_sampled()) {
        const auto& ts = f.grid();
        while (probes0.size() < 3 && probes0.size() < ts.size()) {
            const double t = ts[probes0.size()];
            if (std::find(probes0.begin(), probes0.end(), t) == probes0.end() &&
                t < probe.anchor) {
                probes0.push_back(t);
            } else {
                break;
            }
        }
        while (probes1.size() < 3 && probes1.size() < ts.size()) {
            const double t = ts[ts.size() - 1 - probes1.size()];
            if (std::find(probes1.begin(), probes1.end(), t) == probes1.end() &&
                t > probe.anchor) {
                probes1.push_back(t);
            } else {
                break;
            }
        }
        if (probes0.empty()) probes0.push_back(ts.front());
        if (probes1.empty()) probes1.push_back(ts.back());
    }
    std::sort(probes0.begin(), probes0.end(), std::greater<>());  // descending toward 0
    std::sort(probes1.begin(), probes1.end());                    // ascending toward 1

    // Interior probe grid for positivity / ratio / smoothness checks.
    std::vector<double> interior;
    const double ia = std::max(lo, 0.02);
    const double ib = std::min(hi, 0.98);
    for (int i = 0; i < probe.interior_points; ++i) {
        interior.push_back(ia + (ib - ia) * i / (probe.interior_points - 1));
    }
    std::vector<double> all = interior;
    all.insert(all.end(), probes0.begin(), probes0.end());
    all.insert(all.end(), probes1.begin(), probes1.end());

    r.positivity = true;
    r.min_value = std::numeric_limits<double>::infinity();
    r.second_derivative_finite = true;
    r.ratio_sup = 0.0;
    for (double t : all) {
        const double v = f.value(t);
        if (v < r.min_value) {
            r.min_value = v;
            r.min_location = t;
        }
        if (!(v > 0.0) || !std::isfinite(v)) r.positivity = false;
        const double d2 = f.second_deriv(t);
        if (!std::isfinite(d2)) r.second_derivative_finite = false;
        if (v != 0.0) {
            const double ratio = std::abs(f.deriv(t)) / (v * v);
            if (std::isfinite(ratio)) {
                r.ratio_sup = std::max(r.ratio_sup, ratio);
            } else {
                r.second_derivative_finite = r.second_derivative_finite && false;
            }
        }
    }
    r.ratio_ok = std::isfinite(r.ratio_sup) && r.ratio_sup <= probe.ratio_bound;

    r.divergence_at_0 = !probes0.empty();
    for (double t : probes0) {
        if (!(f.value(t) > probe.divergence_threshold)) r.divergence_at_0 = false;
    }
    r.divergence_at_1 = !probes1.empty();
    for (double t : probes1) {
        if (!(f.value(t) > probe.divergence_threshold)) r.divergence_at_1 = false;
    }

    auto band_stable = [&](const std::vector<double>& band) {
        for (double g : band) {
            if (!std::isfinite(g) || !(g > 0.0)) return false;
        }
        for (std::size_t i = 0; i + 1 < band.size(); ++i) {
            if (std::abs(band[i + 1] - band[i]) > probe.drift_limit * std::abs(band[i])) {
                return false;
            }
        }
        return !band.empty();
    };

    // Positivity failures make the band integrands meaningless; skip them.
    if (r.positivity) {
        for (double t : probes0) {
            r.band0.push_back(f.value(t) * std::exp(-f.integral(t, probe.anchor)));
        }
        for (double t : probes1) {
            r.band1.push_back(f.value(t) * std::exp(-f.integral(probe.anchor, t)));
        }
        r.band0_stable = band_stable(r.band0);
        r.band1_stable = band_stable(r.band1);
    }
    return r;
}

double forward_lambda(const FundamentalBasis& basis, double t, const Tolerances& tol) {
    if (!(t > 0.0 && t < 1.0)) throw domain_error("forward map needs t strictly inside (0, 1)");
    if (basis.case_tag == CaseTag::case_ii) {
        throw zero_eigenvalue_regime(
            "phi(1) = 0: every admissible curve value is zero and lambda(t) carries no "
            "information");
    }
    const double lower = discriminant(basis, 0.0, t);
    const double upper = discriminant(basis, t, 1.0);
    if (std::abs(lower) <= tol.zero_det * discriminant_scale(basis, 0.0, t) ||
        std::abs(upper) <= tol.zero_det * discriminant_scale(basis, t, 1.0)) {
        std::ostringstream msg;
        msg << "phi or psi vanishes at t = " << t << ": the one-node spectrum there is empty";
        throw empty_spectrum_signal(msg.str());
    }
    return -basis.omega / (basis.phi.value(t) * basis.psi.value(t));
}

double forward_lambda(const Potential& q, double t, const Tolerances& tol) {
    return forward_lambda(build_basis(q, tol), t, tol);
}

Potential recover_potential(const SpectrumLikeFunction& f, const std::vector<double>& grid,
                            bool force) {
    if (grid.empty()) throw domain_error("recovery grid must be nonempty");
    for (double t : grid) {
        if (!(t > 0.0 && t < 1.0)) throw domain_error("recovery grid must lie inside (0, 1)");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw domain_error("recovery grid must be strictly increasing");
    }
    if (f.is_sampled() && (grid.front() < f.front() || grid.back() > f.back())) {
        throw domain_error("recovery grid extends past the sampled range");
    }

    if (!force) {
        const ValidationReport report = validate_spectrum_like(f);
        if (!report.overall()) {
            std::ostringstream msg;
            msg << "curve failed spectrum-like validation:";
            if (!report.positivity) msg << " positivity";
            if (!report.divergence_at_0) msg << " divergence-at-0";
            if (!report.divergence_at_1) msg << " divergence-at-1";
            if (!report.second_derivative_finite) msg << " smoothness";
            if (!report.ratio_ok) msg << " ratio-bound";
            if (!report.band0_stable) msg << " band-near-0";
            if (!report.band1_stable) msg << " band-near-1";
            msg << " (pass force=true to override)";
            throw validation_error(msg.str());
        }
    }

    std::vector<double> qs(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double fv = f.value(t);
        if (!(fv > 0.0)) {
            std::ostringstream msg;
            msg << "curve is not positive at t = " << t;
            throw domain_error(msg.str());
        }
        const double d1 = f.deriv(t);
        const double d2 = f.second_deriv(t);
        const double ratio = d1 / fv;
        qs[i] = -0.5 * d2 / fv + 0.75 * ratio * ratio + 0.25 * fv * fv;
    }

    std::vector<double> xs;
    xs.reserve(grid.size() + 2);
    std::vector<double> vals;
    vals.reserve(grid.size() + 2);
    xs.push_back(0.0);
    vals.push_back(qs.front());
    xs.insert(xs.end(), grid.begin(), grid.end());
    vals.insert(vals.end(), qs.begin(), qs.end());
    xs.push_back(1.0);
    vals.push_back(qs.back());
    return Potential::sampled(std::move(xs), std::move(vals));
}

BasisProfiles reconstruct_basis(const SpectrumLikeFunction& f, double anchor,
                                const std::vector<double>& grid) {
    if (!(anchor > 0.0 && anchor < 1.0)) throw domain_error("anchor must lie inside (0, 1)");
    if (grid.empty()) throw domain_error("reconstruction grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw domain_error("reconstruction grid must be strictly increasing");
        }
    }
    if (f.is_sampled()) {
        if (grid.front() < f.front() || grid.back() > f.back() || anchor < f.front() ||
            anchor > f.back()) {
            throw domain_error("reconstruction grid extends past the sampled range");
        }
    } else if (!(grid.front() > 0.0 && grid.back() < 1.0)) {
        throw domain_error("reconstruction grid must lie inside (0, 1)");
    }

    // Cumulative int_anchor^x f, accumulated outward from the anchor so each
    // segment is integrated once.
    std::vector<double> cum(grid.size());
    std::size_t first_above = 0;
    while (first_above < grid.size() && grid[first_above] < anchor) ++first_above;
    double acc = 0.0;
    double prev = anchor;
    for (std::size_t i = first_above; i < grid.size(); ++i) {
        acc += f.integral(prev, grid[i]);
        cum[i] = acc;
        prev = grid[i];
    }
    acc = 0.0;
    prev = anchor;
    for (std::size_t i = first_above; i > 0; --i) {
        acc -= f.integral(grid[i - 1], prev);
        cum[i - 1] = acc;
        prev = grid[i - 1];
    }

    BasisProfiles out;
    out.xs = grid;
    out.phi.resize(grid.size());
    out.psi.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double fv = f.value(t);
        if (!(fv > 0.0)) {
            std::ostringstream msg;
            msg << "curve is not positive at t = " << t;
            throw domain_error(msg.str());
        }
        const double d1 = f.deriv(t);
        const double root = std::sqrt(fv);
        const double ep = std::exp(0.5 * cum[i]);
        const double phi_v = ep / root;
        const double psi_v = 1.0 / (ep * root);
        const double logderiv = d1 / (2.0 * fv);
        out.phi[i] = State{t, phi_v, phi_v * (0.5 * fv - logderiv)};
        out.psi[i] = State{t, psi_v, psi_v * (-0.5 * fv - logderiv)};
    }
    return out;
}

}  // namespace diracsl

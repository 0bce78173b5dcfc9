#include "diracsl/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diracsl/errors.hpp"

namespace diracsl {

namespace {

struct Mat2 {
    double a11, a12, a21, a22;
};

// Exact propagator of y'' = c y over a step h. The unified series branch
// covers |c| h^2 small enough that truncation sits below double roundoff.
Mat2 constant_piece_propagator(double c, double h) {
    const double s2 = c * h * h;
    if (std::abs(s2) < 1e-12) {
        const double m_off = h * (1.0 + s2 / 6.0);
        return {1.0 + 0.5 * s2, m_off, c * m_off, 1.0 + 0.5 * s2};
    }
    if (c > 0.0) {
        const double k = std::sqrt(c);
        const double ch = std::cosh(k * h);
        const double sh = std::sinh(k * h);
        return {ch, sh / k, k * sh, ch};
    }
    const double k = std::sqrt(-c);
    const double cs = std::cos(k * h);
    const double sn = std::sin(k * h);
    return {cs, sn / k, -k * sn, cs};
}

State apply(const Mat2& m, const State& s, double x_new) {
    return {x_new, m.a11 * s.y + m.a12 * s.dy, m.a21 * s.y + m.a22 * s.dy};
}

// Dormand-Prince 5(4) over one smooth piece, accepting steps when the
// embedded error estimate stays inside atol + rtol * |y|.
State dormand_prince_piece(const Potential& q, State s, double x1, const Tolerances& tol) {
    const double dir = (x1 >= s.x) ? 1.0 : -1.0;
    double span = std::abs(x1 - s.x);
    if (span == 0.0) return s;

    // A span at roundoff scale cannot be stepped through the RK loop because
    // x + h rounds back to x. One Euler update carries O(span^2) error, far
    // below the integration tolerances.
    const double ulp_span = 16.0 * std::numeric_limits<double>::epsilon() *
                            std::max({1.0, std::abs(s.x), std::abs(x1)});
    if (span <= ulp_span) {
        const double h0 = x1 - s.x;
        return {x1, s.y + h0 * s.dy, s.dy + h0 * q.evaluate(s.x) * s.y};
    }

    auto f = [&q](double x, double y, double dy, double& fy, double& fdy) {
        fy = dy;
        fdy = q.evaluate(x) * y;
    };

    double x = s.x;
    double y = s.y, dy = s.dy;
    double h = dir * span;

    int rejected_in_a_row = 0;
    while (dir * (x1 - x) > 0.0) {
        if (dir * (x + h) > dir * x1) h = x1 - x;

        double k1y, k1d, k2y, k2d, k3y, k3d, k4y, k4d, k5y, k5d, k6y, k6d, k7y, k7d;
        f(x, y, dy, k1y, k1d);
        f(x + h / 5.0, y + h * (k1y / 5.0), dy + h * (k1d / 5.0), k2y, k2d);
        f(x + 3.0 * h / 10.0, y + h * (3.0 / 40.0 * k1y + 9.0 / 40.0 * k2y),
          dy + h * (3.0 / 40.0 * k1d + 9.0 / 40.0 * k2d), k3y, k3d);
        f(x + 4.0 * h / 5.0,
          y + h * (44.0 / 45.0 * k1y - 56.0 / 15.0 * k2y + 32.0 / 9.0 * k3y),
          dy + h * (44.0 / 45.0 * k1d - 56.0 / 15.0 * k2d + 32.0 / 9.0 * k3d), k4y, k4d);
        f(x + 8.0 * h / 9.0,
          y + h * (19372.0 / 6561.0 * k1y - 25360.0 / 2187.0 * k2y + 64448.0 / 6561.0 * k3y -
                   212.0 / 729.0 * k4y),
          dy + h * (19372.0 / 6561.0 * k1d - 25360.0 / 2187.0 * k2d + 64448.0 / 6561.0 * k3d -
                    212.0 / 729.0 * k4d),
          k5y, k5d);
        f(x + h,
          y + h * (9017.0 / 3168.0 * k1y - 355.0 / 33.0 * k2y + 46732.0 / 5247.0 * k3y +
                   49.0 / 176.0 * k4y - 5103.0 / 18656.0 * k5y),
          dy + h * (9017.0 / 3168.0 * k1d - 355.0 / 33.0 * k2d + 46732.0 / 5247.0 * k3d +
                    49.0 / 176.0 * k4d - 5103.0 / 18656.0 * k5d),
          k6y, k6d);

        const double y5 = y + h * (35.0 / 384.0 * k1y + 500.0 / 1113.0 * k3y +
                                   125.0 / 192.0 * k4y - 2187.0 / 6784.0 * k5y +
                                   11.0 / 84.0 * k6y);
        const double d5 = dy + h * (35.0 / 384.0 * k1d + 500.0 / 1113.0 * k3d +
                                    125.0 / 192.0 * k4d - 2187.0 / 6784.0 * k5d +
                                    11.0 / 84.0 * k6d);
        f(x + h, y5, d5, k7y, k7d);

        const double ey = h * (71.0 / 57600.0 * k1y - 71.0 / 16695.0 * k3y +
                               71.0 / 1920.0 * k4y - 17253.0 / 339200.0 * k5y +
                               22.0 / 525.0 * k6y - 1.0 / 40.0 * k7y);
        const double ed = h * (71.0 / 57600.0 * k1d - 71.0 / 16695.0 * k3d +
                               71.0 / 1920.0 * k4d - 17253.0 / 339200.0 * k5d +
                               22.0 / 525.0 * k6d - 1.0 / 40.0 * k7d);

        const double sy = tol.ode_abs + tol.ode_rel * std::max(std::abs(y), std::abs(y5));
        const double sd = tol.ode_abs + tol.ode_rel * std::max(std::abs(dy), std::abs(d5));
        const double err = std::max(std::abs(ey) / sy, std::abs(ed) / sd);

        if (!std::isfinite(err) || !std::isfinite(y5) || !std::isfinite(d5)) {
            throw numerical_error("adaptive step produced a non-finite value");
        }

        if (err <= 1.0) {
            x += h;
            y = y5;
            dy = d5;
            rejected_in_a_row = 0;
        } else if (++rejected_in_a_row > 60) {
            throw numerical_error("adaptive step kept failing its error test");
        }

        double factor = 0.9 * std::pow(std::max(err, 1e-30), -0.2);
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(x))) {
            throw numerical_error("adaptive step size underflow");
        }
    }
    return {x1, y, dy};
}

State advance_piece(const Potential& q, const State& s, double x1, const Tolerances& tol) {
    if (x1 == s.x) return s;
    if (q.is_piecewise_constant()) {
        const double c = q.evaluate(0.5 * (s.x + x1));
        return apply(constant_piece_propagator(c, x1 - s.x), s, x1);
    }
    return dormand_prince_piece(q, s, x1, tol);
}

}  // namespace

State propagate_state(const Potential& q, const State& s0, double x_target,
                      const Tolerances& tol) {
    if (!(s0.x >= 0.0 && s0.x <= 1.0) || !(x_target >= 0.0 && x_target <= 1.0)) {
        throw domain_error("propagate_state: positions must lie in [0, 1]");
    }
    if (!std::isfinite(s0.y) || !std::isfinite(s0.dy)) {
        throw domain_error("propagate_state: non-finite initial state");
    }
    if (x_target == s0.x) return s0;

    const std::vector<double> bps = q.breakpoints();
    State cur = s0;
    if (x_target > s0.x) {
        for (double b : bps) {
            if (b > cur.x && b < x_target) cur = advance_piece(q, cur, b, tol);
        }
    } else {
        for (auto it = bps.rbegin(); it != bps.rend(); ++it) {
            if (*it < cur.x && *it > x_target) cur = advance_piece(q, cur, *it, tol);
        }
    }
    cur = advance_piece(q, cur, x_target, tol);
    if (!std::isfinite(cur.y) || !std::isfinite(cur.dy)) {
        throw numerical_error("propagate_state: non-finite result");
    }
    return cur;
}

SolutionEvaluator::SolutionEvaluator(Potential q, std::vector<double> grid,
                                     std::vector<State> states, Tolerances tol)
    : q_(std::move(q)), grid_(std::move(grid)), states_(std::move(states)), tol_(tol) {}

State SolutionEvaluator::at(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw domain_error("solution evaluated outside [0, 1]");
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    if (i >= grid_.size()) return states_.back();
    if (i > 0) --i;
    if (x == grid_[i]) return states_[i];
    return propagate_state(q_, states_[i], x, tol_);
}

double FundamentalBasis::wronskian_at(double x) const {
    const State a = phi.at(x);
    const State b = psi.at(x);
    return a.y * b.dy - a.dy * b.y;
}

FundamentalBasis build_basis(const Potential& q, const Tolerances& tol) {
    const std::vector<double> grid = q.breakpoints();
    const std::size_t n = grid.size();

    std::vector<State> phi_states(n);
    phi_states[0] = State{0.0, 0.0, 1.0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        phi_states[i + 1] = propagate_state(q, phi_states[i], grid[i + 1], tol);
    }
    SolutionEvaluator phi(q, grid, phi_states, tol);

    double sup = 0.0;
    for (const State& s : phi_states) sup = std::max(sup, std::abs(s.y));
    for (int i = 1; i < 33; ++i) {
        sup = std::max(sup, std::abs(phi.value(i / 33.0)));
    }

    const double phi1 = phi_states.back().y;
    const CaseTag tag = (std::abs(phi1) <= tol.zero_det * std::max(1.0, sup))
                            ? CaseTag::case_ii
                            : CaseTag::case_i;

    std::vector<State> psi_states(n);
    psi_states[n - 1] =
        (tag == CaseTag::case_i) ? State{1.0, 0.0, -1.0} : State{1.0, 1.0, 0.0};
    for (std::size_t i = n - 1; i > 0; --i) {
        psi_states[i - 1] = propagate_state(q, psi_states[i], grid[i - 1], tol);
    }
    SolutionEvaluator psi(q, grid, psi_states, tol);

    // psi's anchor values at x = 1 are exact, so the Wronskian read there
    // involves no cancellation between integrated quantities.
    const double omega =
        phi_states.back().y * psi_states.back().dy - phi_states.back().dy * psi_states.back().y;

    return FundamentalBasis{std::move(phi), std::move(psi), omega, tag, sup};
}

}  // namespace diracsl

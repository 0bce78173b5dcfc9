#pragma once

namespace diracsl {

// Numerical knobs shared across the library. Field names match the optional
// "tolerances" block of the problem JSON schema.
struct Tolerances {
    double zero_det = 1e-9;  // scale-aware zero threshold for discriminants and case selection
    double root = 1e-12;     // bisection target width, scaled by the bracket magnitude
    double dedup = 1e-7;     // root distinctness spacing, scaled by 1+|root|
    double ode_rel = 1e-10;  // adaptive integrator relative tolerance
    double ode_abs = 1e-12;  // adaptive integrator absolute tolerance
};

}  // namespace diracsl

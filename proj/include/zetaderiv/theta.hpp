#ifndef ZETADERIV_THETA_HPP
#define ZETADERIV_THETA_HPP

#include "zetaderiv/dd.hpp"

namespace zetaderiv {

// Accuracy knobs shared by the critical-line evaluators.
struct PrecisionPolicy {
    int phase_digits = 12;          // guaranteed decimal digits in theta_mod
    double target_abs_error = 1e-10;  // aim for |Z| evaluations
    int max_correction_order = 12;  // Riemann-Siegel correction terms cap

    double phase_tolerance() const;
};

// theta(t) and its derivative at a height on the critical line. `theta` is
// the full-magnitude value (double, so its own mod-2pi content degrades with
// t); `theta_mod` is the reduction carried out in double-double and is the
// field downstream phase work must use.
struct PhasePoint {
    double t = 0.0;
    double theta = 0.0;      // full magnitude
    double theta_mod = 0.0;  // reduced to [0, 2pi)
    double dtheta = 0.0;     // theta'(t)
};

// Minimum height accepted anywhere in this library. Below ~7 the asymptotic
// theta expansion degrades and nothing of interest lives there (the first
// zero is at 14.13...).
inline constexpr double kMinHeight = 7.0;

PhasePoint theta(double t, const PrecisionPolicy& policy = {});

namespace detail {
// Full-precision accumulation used by the Z kernels; theta() wraps this.
DD theta_dd(double t);
double theta_deriv(double t);
double theta_second_deriv(double t);
// Throws PrecisionError when `magnitude` cannot be reduced mod 2pi while
// keeping `digits` decimal digits.
void check_phase_precision(double magnitude, int digits);
}  // namespace detail

}  // namespace zetaderiv

#endif

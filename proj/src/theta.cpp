// theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3) + ...
//
// This is the standard asymptotic expansion of arg Gamma(1/4 + it/2)
// - (t/2) log pi. The inverse-power tail has coefficients
// (1 - 2^(1-2n)) |B_2n| / (4n(2n-1)), and truncating after the t^-9 term
// leaves less than 5e-13 for all t >= 7, far below the phase tolerance.
// The leading terms are accumulated in double-double so that the mod-2pi
// reduction keeps full accuracy at large t.

#include "zetaderiv/theta.hpp"

#include <cmath>
#include <cstdio>

#include "zetaderiv/errors.hpp"

namespace zetaderiv {

namespace {

// (1 - 2^(1-2n)) |B_2n| / (4n(2n-1)) for n = 1..5, i.e. the coefficients of
// t^-1, t^-3, t^-5, t^-7, t^-9.
constexpr double kThetaTail[5] = {
    1.0 / 48.0,
    7.0 / 5760.0,
    31.0 / 80640.0,
    127.0 / 430080.0,
    511.0 / 1216512.0,
};

double theta_tail(double t) {
    double inv2 = 1.0 / (t * t);
    double s = 0.0;
    for (int n = 4; n >= 0; --n) s = s * inv2 + kThetaTail[n];
    return s / t;
}

// d/dt of the tail: -(2n-1) * c_n * t^(-2n)
double theta_tail_deriv(double t) {
    double inv2 = 1.0 / (t * t);
    double s = 0.0;
    for (int n = 4; n >= 0; --n) s = s * inv2 + (2.0 * n + 1.0) * kThetaTail[n];
    return -s * inv2;
}

}  // namespace

double PrecisionPolicy::phase_tolerance() const {
    return std::pow(10.0, -phase_digits);
}

namespace detail {

void check_phase_precision(double magnitude, int digits) {
    // dd carries ~31 digits; what survives reduction is 31 - log10(mag).
    constexpr double kDDDigits = 31.0;
    double avail = kDDDigits - std::log10(std::max(magnitude, 1.0));
    if (avail < static_cast<double>(digits)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "phase magnitude %.3e leaves %.1f digits after mod-2pi "
                      "reduction, %d requested",
                      magnitude, avail, digits);
        throw PrecisionError(buf);
    }
}

DD theta_dd(double t) {
    DD log_ratio = sub(dd_log(t), dd_const::ln_2pi);  // log(t/2pi)
    DD v = mul(log_ratio, 0.5 * t);
    v = sub(v, 0.5 * t);
    v = sub(v, dd_const::pi_over_8);
    return add(v, theta_tail(t));
}

double theta_deriv(double t) {
    return 0.5 * std::log(t / (2.0 * M_PI)) + theta_tail_deriv(t);
}

double theta_second_deriv(double t) {
    return 0.5 / t;  // tail contribution is O(t^-3), irrelevant for Newton
}

}  // namespace detail

PhasePoint theta(double t, const PrecisionPolicy& policy) {
    if (!(t >= kMinHeight)) {
        throw DomainError("theta: t must be >= 7");
    }
    DD full = detail::theta_dd(t);
    detail::check_phase_precision(std::fabs(full.hi), policy.phase_digits);
    PhasePoint p;
    p.t = t;
    p.theta = full.to_double();
    p.theta_mod = mod_two_pi(full).to_double();
    if (p.theta_mod >= 2.0 * M_PI) p.theta_mod = 0.0;  // collapse of 2pi-eps
    if (p.theta_mod < 0.0) p.theta_mod = 0.0;
    p.dtheta = detail::theta_deriv(t);
    return p;
}

}  // namespace zetaderiv

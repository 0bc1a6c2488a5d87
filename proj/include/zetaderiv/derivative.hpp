#ifndef ZETADERIV_DERIVATIVE_HPP
#define ZETADERIV_DERIVATIVE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "zetaderiv/zeros.hpp"

namespace zetaderiv {

struct StepPolicy {
    enum class Mode { absolute, relative_to_spacing };
    Mode mode = Mode::relative_to_spacing;
    double h_abs = 1e-5;  // step in absolute mode
    double h_rel = 1e-4;  // fraction of the local mean spacing 2pi/log(t/2pi)
    bool richardson = false;  // also evaluate at h/2 and record the shift

    double step_at(double t) const;
};

struct DerivativeRecord {
    ZeroRecord zero;
    double h = 0.0;
    double zprime = 0.0;  // signed Z'(gamma)
    std::complex<double> zeta_prime;  // zeta'(1/2 + i gamma)
    double abs_zeta_prime = 0.0;
    double log_abs = 0.0;
    double err_est = 0.0;
    bool small_flagged = false;       // |zprime| <= 10 err_est
    double richardson_delta = 0.0;    // |v(h) - v(h/2)| when requested
};

// Central difference (Z(t+h) - Z(t-h)) / (2h) with an error estimate
// |Z'''| h^2/6 + eps/h; Z''' comes from the outer stencil points t +- 2h.
std::pair<double, double> z_prime_central(double t, double h,
                                          const PrecisionPolicy& policy = {});

// Same formula against an arbitrary evaluator (test hook; exact on
// quadratics). eps_eval feeds the roundoff half of the error estimate.
std::pair<double, double> z_prime_central(
    const std::function<double(double)>& f, double t, double h,
    double eps_eval);

// Term-by-term derivative of the Riemann-Siegel sum:
//   -2 sum n^{-1/2} (theta'(t) - log n) sin(theta(t) - t log n)
// plus the differentiated correction series. Consistency oracle only; the
// correction-series derivative is truncated at the same order as rs_z, so
// the absolute accuracy is O((t/2pi)^{-(2J+5)/4}) rather than rigorous.
double z_prime_analytic(double t, const PrecisionPolicy& policy = {});

// Z'(gamma) and zeta'(1/2 + i gamma) = -i e^{-i theta(gamma)} Z'(gamma) at a
// refined zero. Tiny derivatives (|Z'| <= 10 err_est) are flagged, never
// dropped: they dominate the negative moments. An exactly zero derivative
// throws ZeroDerivativeError (simple zeros assumed).
DerivativeRecord zeta_prime_at_zero(const ZeroRecord& zero,
                                    const StepPolicy& step = {},
                                    const PrecisionPolicy& policy = {});

// Batch driver; OpenMP over zeros, or the serial reference when
// parallel = false. Output order matches input order either way.
std::vector<DerivativeRecord> derivatives_batch(
    std::span<const ZeroRecord> zeros, const StepPolicy& step = {},
    const PrecisionPolicy& policy = {}, bool parallel = true);

}  // namespace zetaderiv

#endif

// Z'(gamma_n) by central differencing, with the stencil-based error model
//
//   err = |Z'''| h^2 / 6 + eps_eval / h
//
// (truncation of the Taylor remainder plus roundoff amplification), and the
// complex recovery zeta'(1/2+i gamma) = -i e^{-i theta(gamma)} Z'(gamma),
// which follows from differentiating Z = e^{i theta} zeta(1/2+it) at a zero.

#include "zetaderiv/derivative.hpp"

#include <omp.h>

#include <cmath>

#include "zetaderiv/errors.hpp"

namespace zetaderiv {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

double StepPolicy::step_at(double t) const {
    if (mode == Mode::absolute) return h_abs;
    double spacing = kTwoPi / std::log(t / kTwoPi);
    return h_rel * spacing;
}

std::pair<double, double> z_prime_central(
    const std::function<double(double)>& f, double t, double h,
    double eps_eval) {
    if (!(h > 0.0) || !(t - 2.0 * h >= kMinHeight - 4.0)) {
        throw DomainError("z_prime_central: bad step or height");
    }
    // Evaluate at the representable abscissae and divide by their actual
    // (exactly computed) separation, so abscissa rounding cannot bias the
    // quotient.
    double tp = t + h, tm = t - h;
    double fp = f(tp), fm = f(tm);
    double value = (fp - fm) / (tp - tm);
    // third derivative from the wider antisymmetric stencil
    double f2p = f(t + 2.0 * h), f2m = f(t - 2.0 * h);
    double d3 = (f2p - 2.0 * fp + 2.0 * fm - f2m) / (2.0 * h * h * h);
    double err = std::fabs(d3) * h * h / 6.0 + eps_eval / h;
    return {value, err};
}

std::pair<double, double> z_prime_central(double t, double h,
                                          const PrecisionPolicy& policy) {
    if (!(h > 0.0) || !(t - h >= kMinHeight)) {
        throw DomainError("z_prime_central: need t - h >= 7 and h > 0");
    }
    double tp = t + h, tm = t - h;
    ZEvaluation ep = rs_z(tp, policy);
    ZEvaluation em = rs_z(tm, policy);
    double value = (ep.z - em.z) / (tp - tm);
    ZEvaluation e2p = rs_z(t + 2.0 * h, policy);
    ZEvaluation e2m = rs_z(t - 2.0 * h, policy);
    double d3 = (e2p.z - 2.0 * ep.z + 2.0 * em.z - e2m.z) /
                (2.0 * h * h * h);
    double eps_eval = std::max(ep.est_error, em.est_error);
    double err = std::fabs(d3) * h * h / 6.0 + eps_eval / h;
    return {value, err};
}

double z_prime_analytic(double t, const PrecisionPolicy& policy) {
    if (!(t >= kMinHeight)) {
        throw DomainError("z_prime_analytic: t must be >= 7");
    }
    double main = detail::main_sum_deriv(t, policy);

    // d/dt of (-1)^(nu-1) a^{-1/4} sum_j C_j(p) a^{-j/2}, a = t/2pi:
    // da/dt = 1/2pi, dp/dt = 1/(4 pi sqrt(a)) away from the nu jumps.
    double a = t / kTwoPi;
    double sa = std::sqrt(a);
    long nu = static_cast<long>(std::floor(sa));
    double p = sa - static_cast<double>(nu);
    double sign = (nu % 2 == 1) ? 1.0 : -1.0;
    ZEvaluation probe = rs_z(t, policy);  // order selection as in rs_z
    int order = probe.correction_order;
    double corr = 0.0;
    for (int j = 0; j <= order; ++j) {
        double am1 = std::pow(a, -(2.0 * j + 3.0) / 4.0);
        double am2 = std::pow(a, -(2.0 * j + 5.0) / 4.0);
        corr += 0.5 * detail::correction_c_deriv(j, p) * am1 -
                (2.0 * j + 1.0) / 4.0 * detail::correction_c(j, p) * am2;
    }
    return main + sign * corr / kTwoPi;
}

DerivativeRecord zeta_prime_at_zero(const ZeroRecord& zero,
                                    const StepPolicy& step,
                                    const PrecisionPolicy& policy) {
    DerivativeRecord rec;
    rec.zero = zero;
    rec.h = step.step_at(zero.gamma);
    auto [value, err] = z_prime_central(zero.gamma, rec.h, policy);
    rec.zprime = value;
    rec.err_est = err;
    if (value == 0.0) {
        throw ZeroDerivativeError(
            "Z'(gamma) evaluated to exactly zero at gamma = " +
            std::to_string(zero.gamma));
    }
    if (step.richardson) {
        auto [v2, e2] = z_prime_central(zero.gamma, 0.5 * rec.h, policy);
        (void)e2;
        rec.richardson_delta = std::fabs(value - v2);
    }
    rec.small_flagged = std::fabs(value) <= 10.0 * err;
    rec.abs_zeta_prime = std::fabs(value);
    rec.log_abs = std::log(rec.abs_zeta_prime);
    // -i e^{-i theta} Z' = (-sin(theta_mod) - i cos(theta_mod)) Z'
    double th = zero.theta_at_gamma;
    rec.zeta_prime = std::complex<double>(-std::sin(th) * value,
                                          -std::cos(th) * value);
    return rec;
}

std::vector<DerivativeRecord> derivatives_batch(
    std::span<const ZeroRecord> zeros, const StepPolicy& step,
    const PrecisionPolicy& policy, bool parallel) {
    std::vector<DerivativeRecord> out(zeros.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long i = 0; i < static_cast<long>(zeros.size()); ++i) {
        out[i] = zeta_prime_at_zero(zeros[i], step, policy);
    }
    return out;
}

}  // namespace zetaderiv

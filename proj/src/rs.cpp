// Riemann-Siegel evaluation of Z(t):
//
//   Z(t) = 2 sum_{n<=nu} n^{-1/2} cos(theta(t) - t log n)
//          + (-1)^{nu-1} (t/2pi)^{-1/4} sum_{j<=J} C_j(p) (t/2pi)^{-j/2}
//
// with nu = floor(sqrt(t/2pi)), p the fractional part. The C_j come from
// frozen Chebyshev tables (src/rs_coeffs.cpp); the cosine arguments are
// accumulated and reduced mod 2pi in double-double, since t log n reaches
// ~1e9 at the top of this tool's range and plain double would leave only
// ~1e-7 of phase.

#include "zetaderiv/rs.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "zetaderiv/errors.hpp"
#include "zetaderiv/rs_coeffs.hpp"

namespace zetaderiv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// Shared per-n tables: dd log n and n^{-1/2}. Grown geometrically under a
// writer lock; lookups take the shared lock once per evaluation.
struct MainSumTables {
    std::shared_mutex mutex;
    std::vector<DD> log_n;
    std::vector<double> rsqrt_n;

    void ensure(long nu) {
        {
            std::shared_lock lock(mutex);
            if (static_cast<long>(log_n.size()) > nu) return;
        }
        std::unique_lock lock(mutex);
        long want = std::max<long>(nu + 1, static_cast<long>(log_n.size()) * 2);
        if (static_cast<long>(log_n.size()) > nu) return;
        long old = static_cast<long>(log_n.size());
        log_n.resize(want);
        rsqrt_n.resize(want);
        for (long n = std::max<long>(old, 1); n < want; ++n) {
            log_n[n] = dd_log(static_cast<double>(n));
            rsqrt_n[n] = 1.0 / std::sqrt(static_cast<double>(n));
        }
    }
};

MainSumTables& tables() {
    static MainSumTables t;
    return t;
}

double clenshaw(std::span<const double> a, double z) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = a.size() - 1; k >= 1; --k) {
        double b0 = 2.0 * z * b1 - b2 + a[k];
        b2 = b1;
        b1 = b0;
    }
    return z * b1 - b2 + a[0];
}

// Chebyshev derivative coefficients, built once from the value tables.
const std::vector<std::vector<double>>& deriv_tables() {
    static const std::vector<std::vector<double>> tabs = [] {
        std::vector<std::vector<double>> out(rs_tables::kNumOrders);
        for (int j = 0; j < rs_tables::kNumOrders; ++j) {
            auto a = rs_tables::kCheb[j];
            std::size_t n = a.size();
            std::vector<double> b(n, 0.0);
            double bk1 = 0.0, bk2 = 0.0;  // b_{k+1}, b_{k+2}
            for (long k = static_cast<long>(n) - 2; k >= 0; --k) {
                double bk = bk2 + 2.0 * (k + 1) * a[k + 1];
                b[k] = bk;
                bk2 = bk1;
                bk1 = bk;
            }
            b[0] *= 0.5;
            out[j] = std::move(b);
        }
        return out;
    }();
    return tabs;
}

DD dd_sqrt(DD x) {
    double y0 = std::sqrt(x.hi);
    DD y{y0};
    DD r = div(x, y);
    return mul(add(y, r), 0.5);
}

struct Split {
    long nu;
    double p;      // fractional part of sqrt(t/2pi)
    double a;      // sqrt(t/2pi)
};

Split split_height(double t) {
    DD tau = div(DD{t}, dd_const::two_pi);
    DD a = dd_sqrt(tau);
    double af = a.to_double();
    long nu = static_cast<long>(std::floor(af));
    double p = (sub(a, static_cast<double>(nu))).to_double();
    return {nu, p, af};
}

}  // namespace

namespace detail {

double correction_c(int j, double p) {
    return clenshaw(rs_tables::kCheb[j], 2.0 * p - 1.0);
}

double correction_c_deriv(int j, double p) {
    const auto& d = deriv_tables()[j];
    // d/dp = 2 d/dz
    return 2.0 * clenshaw({d.data(), d.size()}, 2.0 * p - 1.0);
}

double correction_trunc_bound(int order, double t) {
    double tau = t / kTwoPi;
    double best = HUGE_VAL;
    for (int j = 0; j <= order && j < rs_tables::kNumOrders; ++j) {
        double b = rs_tables::kTruncEnvelope[j] *
                   std::pow(tau, -(2.0 * j + 3.0) / 4.0);
        best = std::min(best, b);  // cumulative min keeps it monotone in J
    }
    return best;
}

void reserve_main_sum(long nu) { tables().ensure(nu); }

double main_sum_deriv(double t, const PrecisionPolicy& policy) {
    Split sp = split_height(t);
    check_phase_precision(t * std::log(std::max(2.0, sp.a * sp.a)) + t,
                          policy.phase_digits);
    auto& tab = tables();
    tab.ensure(sp.nu);
    DD th = theta_dd(t);
    double dth = theta_deriv(t);
    double sum = 0.0, comp = 0.0;
    std::shared_lock lock(tab.mutex);
    for (long n = 1; n <= sp.nu; ++n) {
        DD w = sub(th, mul(tab.log_n[n], t));
        double arg = mod_two_pi(w).to_double();
        double term = tab.rsqrt_n[n] * (dth - tab.log_n[n].hi) * std::sin(arg);
        double s = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - s) + term;
        else
            comp += (term - s) + sum;
        sum = s;
    }
    return -2.0 * (sum + comp);
}

}  // namespace detail

ZEvaluation rs_z(double t, const PrecisionPolicy& policy) {
    if (!(t >= kMinHeight)) {
        throw DomainError("rs_z: t must be >= 7");
    }
    Split sp = split_height(t);
    detail::check_phase_precision(t * std::log(std::max(2.0, sp.a * sp.a)) +
                                      std::fabs(t),
                                  policy.phase_digits);

    auto& tab = tables();
    tab.ensure(sp.nu);

    DD th = detail::theta_dd(t);

    double sum = 0.0, comp = 0.0;  // Neumaier
    double sum_abs = 0.0;
    {
        std::shared_lock lock(tab.mutex);
        for (long n = 1; n <= sp.nu; ++n) {
            DD w = sub(th, mul(tab.log_n[n], t));
            double arg = mod_two_pi(w).to_double();
            double term = tab.rsqrt_n[n] * std::cos(arg);
            double s = sum + term;
            if (std::fabs(sum) >= std::fabs(term))
                comp += (sum - s) + term;
            else
                comp += (term - s) + sum;
            sum = s;
            sum_abs += tab.rsqrt_n[n];
        }
    }
    double main_sum = 2.0 * (sum + comp);

    // Pick the smallest order meeting the target, capped by the policy.
    int cap = std::min(policy.max_correction_order, rs_tables::kNumOrders - 1);
    int order = cap;
    for (int j = 0; j <= cap; ++j) {
        if (detail::correction_trunc_bound(j, t) <= policy.target_abs_error) {
            order = j;
            break;
        }
    }

    double x = 1.0 / sp.a;  // (t/2pi)^{-1/2}
    double corr = 0.0;
    for (int j = order; j >= 0; --j) {
        corr = corr * x + detail::correction_c(j, sp.p);
    }
    double sign = (sp.nu % 2 == 1) ? 1.0 : -1.0;  // (-1)^(nu-1)

    ZEvaluation ev;
    ev.t = t;
    ev.main_sum_length = std::max<long>(sp.nu, 1);
    ev.correction_order = order;
    ev.z = main_sum + sign * std::sqrt(x) * corr;
    double eps = 2.220446049250313e-16;
    ev.est_error = detail::correction_trunc_bound(order, t) +
                   10.0 * eps * 2.0 * sum_abs;
    return ev;
}

std::complex<double> zeta_critical(double t, const PrecisionPolicy& policy) {
    ZEvaluation ev = rs_z(t, policy);
    PhasePoint ph = theta(t, policy);
    return std::complex<double>(std::cos(ph.theta_mod), -std::sin(ph.theta_mod)) *
           ev.z;
}

}  // namespace zetaderiv

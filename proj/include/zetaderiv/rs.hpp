#ifndef ZETADERIV_RS_HPP
#define ZETADERIV_RS_HPP

#include <complex>

#include "zetaderiv/theta.hpp"

namespace zetaderiv {

struct ZEvaluation {
    double t = 0.0;
    double z = 0.0;
    long main_sum_length = 0;  // nu = floor(sqrt(t/2pi))
    int correction_order = 0;  // number of correction terms actually used
    double est_error = 0.0;
};

// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it) by direct Riemann-Siegel
// summation. Phases are reduced mod 2pi in double-double before any cosine
// is taken. The correction order is the smallest one whose truncation
// envelope meets policy.target_abs_error, capped by
// policy.max_correction_order.
ZEvaluation rs_z(double t, const PrecisionPolicy& policy = {});

// zeta(1/2 + it) = e^{-i theta(t)} Z(t), using theta_mod.
std::complex<double> zeta_critical(double t, const PrecisionPolicy& policy = {});

namespace detail {
// Correction functions C_j(p) on p in [0,1] and their p-derivatives.
double correction_c(int j, double p);
double correction_c_deriv(int j, double p);
// Truncation envelope after including orders 0..J (weakly decreasing in J).
double correction_trunc_bound(int order, double t);
// Pre-size the shared log/rsqrt tables (optional; they grow on demand).
void reserve_main_sum(long nu);
// -2 sum_{n<=nu} n^{-1/2} (theta'(t) - log n) sin(theta(t) - t log n),
// the term-by-term derivative of the main sum (dd-reduced phases).
double main_sum_deriv(double t, const PrecisionPolicy& policy);
}  // namespace detail

}  // namespace zetaderiv

#endif

#ifndef ZETADERIV_PREDICTIONS_HPP
#define ZETADERIV_PREDICTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace zetaderiv {

// Leading-order moment model: J_lambda(T) ~ a(lambda) G^2(lambda+2)/G(2lambda+3)
// (log T/2pi)^{lambda(lambda+2)}. Defined for even two_lambda > -3; the
// G-ratio has a first-order pole at two_lambda = -3.
struct HKOModel {
    int two_lambda = 2;
    double g_ratio = 0.0;   // G^2(lambda+2)/G(2lambda+3), exact rational value
    double a_factor = 1.0;  // arithmetic factor a(lambda)
    long prime_bound = 1000000;
    double a_truncation_err = 0.0;

    double coefficient() const { return a_factor * g_ratio; }
};

// Full-moment polynomial P_lambda(x), x = log(t/2pi): the sum over a block
// of |zeta'|^{2 lambda} is predicted by the integral of P_lambda over the
// block's t-range. Coefficients are external data (config-supplied),
// highest degree first.
struct CSPolynomial {
    int two_lambda = 2;
    std::vector<double> coeffs;  // highest degree first
    std::string source;          // provenance of the coefficient values

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct FujiiTerms {
    double c0 = 0.5772156649015329;    // Euler's constant
    double c1 = -0.07281584548367673;  // first Stieltjes constant

    void validate() const;  // guards against config corruption
};

// Barnes G at positive integers: G(1) = 1, G(z+1) = Gamma(z) G(z), so
// G(n) = prod_{k=1}^{n-2} k!. Exact in unsigned 128-bit up to n = 13.
unsigned long long barnes_g_int(int n);

// a(lambda) = prod_p (1-1/p)^{lambda^2} sum_m d_lambda(p^m)^2 p^{-m} with
// d_lambda(p^m) = Gamma(lambda+m)/(Gamma(lambda) m!), truncated over primes
// <= prime_bound plus an integral tail estimate. Returns the value; the
// truncation estimate is written to *trunc_err when non-null.
double arithmetic_factor(int lambda, long prime_bound,
                         double* trunc_err = nullptr);

HKOModel make_hko_model(int two_lambda, long prime_bound = 1000000);

// a(lambda) G^2(lambda+2)/G(2lambda+3) (log(T/2pi))^{lambda(lambda+2)}.
double hko_leading(int two_lambda, double T);

// (6/pi^2) / log(T/2pi): the negative-second-moment law (two_lambda = -2).
double gonek_negative(double T);

// (T/4pi) log^2(T/2pi) + (c0-1)(T/2pi) log(T/2pi) - (c1+c0)(T/2pi).
double fujii_prediction(double T, const FujiiTerms& terms = {});

// (log 2pi + log_abs - log log(gamma/2pi)) / sqrt(0.5 log log N).
double clt_normalize(double log_abs, double gamma, long long N);

// Exact integral of P(log(t/2pi)) dt over [t_lo, t_hi]: with u = log(t/2pi),
// the antiderivative is t * sum_j (-1)^j P^(j)(log(t/2pi)) by repeated
// integration by parts. No quadrature error.
double cs_integral(const CSPolynomial& poly, double t_lo, double t_hi);

// x_k = log k / log(T/2pi) for k = 2..k_max, keeping only x < 1.
std::vector<double> spike_locations(double T, int k_max);

}  // namespace zetaderiv

#endif

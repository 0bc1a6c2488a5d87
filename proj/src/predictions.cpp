#include "zetaderiv/predictions.hpp"

#include <cmath>
#include <vector>

#include "zetaderiv/errors.hpp"

namespace zetaderiv {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kTwoPiE = 17.07946844534713413093;

std::vector<long> primes_up_to(long bound) {
    std::vector<bool> comp(bound + 1, false);
    std::vector<long> primes;
    for (long i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (long j = i * i; j <= bound; j += i) comp[j] = true;
    }
    return primes;
}
}  // namespace

void FujiiTerms::validate() const {
    if (std::fabs(c0 - 0.5772) >= 1e-3 || std::fabs(c1 + 0.0728) >= 1e-3) {
        throw ConfigError("FujiiTerms: constants far from c0 = 0.5772..., "
                          "c1 = -0.0728...; config corrupt?");
    }
}

unsigned long long barnes_g_int(int n) {
    if (n < 1) throw DomainError("barnes_g_int: n must be >= 1");
    if (n > 10) {
        throw DomainError(
            "barnes_g_int: G(n) exceeds 64 bits for n > 10; use the "
            "floating-point ratio path");
    }
    unsigned long long g = 1, fact = 1;
    for (int k = 1; k <= n - 2; ++k) {
        fact *= static_cast<unsigned long long>(k);
        g *= fact;
    }
    return g;
}

double arithmetic_factor(int lambda, long prime_bound, double* trunc_err) {
    if (lambda < 1) {
        throw DomainError("arithmetic_factor: integer lambda >= 1 required");
    }
    if (prime_bound < 100) {
        throw DomainError("arithmetic_factor: prime_bound must be >= 100");
    }
    const double l2 = static_cast<double>(lambda) * lambda;
    long double log_sum = 0.0L;
    for (long p : primes_up_to(prime_bound)) {
        double u = 1.0 / static_cast<double>(p);
        // sum_m d(p^m)^2 u^m with d(p^m) = binom(lambda+m-1, m)
        long double inner = 0.0L;
        long double d = 1.0L;   // d(p^0)
        long double um = 1.0L;  // u^m
        for (int m = 0; m < 400; ++m) {
            long double term = d * d * um;
            inner += term;
            if (m > lambda && term < 1e-18L * inner) break;
            d = d * (lambda + m) / (m + 1);
            um *= u;
        }
        log_sum += l2 * std::log1p(-u) +
                   std::log(static_cast<double>(inner));
    }
    // tail: log factor ~ -lambda^2 (lambda-1)^2 / (4 p^2) for large p, and
    // sum_{p > X} p^-2 ~ 1/(X log X)
    double c2 = -l2 * (lambda - 1.0) * (lambda - 1.0) / 4.0;
    double tail_p2 = 1.0 / (static_cast<double>(prime_bound) *
                            std::log(static_cast<double>(prime_bound)));
    double tail = c2 * tail_p2;
    if (trunc_err) *trunc_err = 2.0 * std::fabs(tail) + 1e-15;
    return static_cast<double>(std::exp(log_sum + (long double)tail));
}

HKOModel make_hko_model(int two_lambda, long prime_bound) {
    if (two_lambda == -3) {
        throw PoleError("hko: first-order pole of the Barnes-G ratio at "
                        "two_lambda = -3");
    }
    if (two_lambda < 2 || two_lambda % 2 != 0) {
        throw UnsupportedExponentError(
            "hko: arithmetic factor implemented for even two_lambda >= 2 "
            "only (got " + std::to_string(two_lambda) + ")");
    }
    int lambda = two_lambda / 2;
    HKOModel m;
    m.two_lambda = two_lambda;
    m.prime_bound = prime_bound;
    // G^2(lambda+2)/G(2lambda+3) = prod_{k<=lambda} k! / prod_{k=lambda+1}^{2lambda+1} k!
    long double num = 1.0L, den = 1.0L, fact = 1.0L;
    for (int k = 1; k <= 2 * lambda + 1; ++k) {
        fact *= k;
        if (k <= lambda)
            num *= fact;
        else
            den *= fact;
    }
    m.g_ratio = static_cast<double>(num / den);
    m.a_factor = arithmetic_factor(lambda, prime_bound, &m.a_truncation_err);
    return m;
}

double hko_leading(int two_lambda, double T) {
    HKOModel m = make_hko_model(two_lambda);
    double lambda = two_lambda / 2.0;
    return m.coefficient() *
           std::pow(std::log(T / kTwoPi), lambda * (lambda + 2.0));
}

double gonek_negative(double T) {
    if (!(T > kTwoPiE)) {
        throw DomainError("gonek_negative: T must exceed 2 pi e");
    }
    constexpr double six_over_pi2 = 0.607927101854026628663;
    return six_over_pi2 / std::log(T / kTwoPi);
}

double fujii_prediction(double T, const FujiiTerms& terms) {
    if (!(T > kTwoPi)) {
        throw DomainError("fujii_prediction: T must exceed 2 pi");
    }
    terms.validate();
    double x = T / kTwoPi;
    double L = std::log(x);
    return (T / (4.0 * M_PI)) * L * L + (terms.c0 - 1.0) * x * L -
           (terms.c1 + terms.c0) * x;
}

double clt_normalize(double log_abs, double gamma, long long N) {
    if (!(gamma > kTwoPi) || N < 3) {
        throw DomainError("clt_normalize: need gamma > 2pi and N >= 3");
    }
    double loglogN = std::log(std::log(static_cast<double>(N)));
    double num = std::log(kTwoPi) + log_abs -
                 std::log(std::log(gamma / kTwoPi));
    return num / std::sqrt(0.5 * loglogN);
}

double cs_integral(const CSPolynomial& poly, double t_lo, double t_hi) {
    if (poly.coeffs.empty()) {
        throw ConfigError("cs_integral: no coefficients loaded for two_lambda "
                          "= " + std::to_string(poly.two_lambda));
    }
    if (!(kTwoPi < t_lo) || !(t_lo < t_hi)) {
        throw DomainError("cs_integral: need 2pi < t_lo < t_hi");
    }
    // antiderivative of P(log(t/2pi)) is t sum_j (-1)^j P^(j)(log(t/2pi))
    int deg = poly.degree();
    std::vector<double> alternating(deg + 1, 0.0);  // sum_j (-1)^j P^(j), highest first
    std::vector<double> d(poly.coeffs);             // current derivative
    double sgn = 1.0;
    for (int j = 0; j <= deg; ++j) {
        int dd = deg - j;  // degree of d
        for (int i = 0; i <= dd; ++i) {
            alternating[static_cast<std::size_t>(j + i)] += sgn * d[i];
        }
        // differentiate: coefficient of x^k -> k * coeff, drop constant
        for (int i = 0; i <= dd - 1; ++i) {
            d[i] = d[i] * static_cast<double>(dd - i);
        }
        d.resize(std::max(dd, 1));
        sgn = -sgn;
    }
    auto F = [&](double t) {
        double u = std::log(t / kTwoPi);
        double s = 0.0;
        for (double c : alternating) s = s * u + c;
        return t * s;
    };
    return F(t_hi) - F(t_lo);
}

std::vector<double> spike_locations(double T, int k_max) {
    if (!(T > kTwoPiE) || k_max < 2) {
        throw DomainError("spike_locations: need T > 2 pi e and k_max >= 2");
    }
    double L = std::log(T / kTwoPi);
    std::vector<double> xs;
    for (int k = 2; k <= k_max; ++k) {
        double x = std::log(static_cast<double>(k)) / L;
        if (x < 1.0) xs.push_back(x);
    }
    return xs;
}

}  // namespace zetaderiv

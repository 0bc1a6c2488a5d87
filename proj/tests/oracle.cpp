#include "oracle.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {

namespace {

using C = std::complex<long double>;

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// B_{2k} for k = 1..16.
constexpr long double kBernoulli[16] = {
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730,
    7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330,
    854513.0L / 138, -236364091.0L / 2730, 8553103.0L / 6,
    -23749461029.0L / 870, 8615841276005.0L / 14322, -7709321041217.0L / 510};

// log Gamma(z) by Stirling after shifting Re(z) up past 24.
C log_gamma(C z) {
    C shift = 0.0L;
    while (z.real() < 24.0L) {
        shift += std::log(z);
        z += 1.0L;
    }
    C w = 1.0L / z;
    C w2 = w * w;
    C s = 0.0L;
    for (int k = 10; k >= 1; --k) {
        s = s * w2 + kBernoulli[k - 1] / (2.0L * k * (2.0L * k - 1.0L));
    }
    s *= w;
    C res = (z - 0.5L) * std::log(z) - z +
            0.91893853320467274178032973640561764L  // log(2pi)/2
            + s;
    return res - shift;
}

long double factorial(int n) {
    long double f = 1.0L;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

long double theta_gamma(long double t) {
    C lg = log_gamma(C(0.25L, 0.5L * t));
    return lg.imag() - 0.5L * t * std::log(kPi);
}

std::complex<long double> zeta_em(long double t) {
    C s(0.5L, t);
    long n_terms = static_cast<long>(std::ceil(0.75L * t + 40.0L));
    const int K = 13;

    // sum_{n<N} n^{-s}
    C sum = 0.0L;
    for (long n = 1; n < n_terms; ++n) {
        long double ln = std::log(static_cast<long double>(n));
        long double amp = 1.0L / std::sqrt(static_cast<long double>(n));
        sum += C(amp * std::cos(t * ln), -amp * std::sin(t * ln));
    }
    long double lnN = std::log(static_cast<long double>(n_terms));
    long double ampN = 1.0L / std::sqrt(static_cast<long double>(n_terms));
    C Npow_ms = C(ampN * std::cos(t * lnN), -ampN * std::sin(t * lnN));  // N^{-s}

    sum += 0.5L * Npow_ms;
    sum += Npow_ms * static_cast<long double>(n_terms) / (s - 1.0L);

    // Euler-Maclaurin tail: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    C poch = s;                       // (s)_1
    C Nfac = Npow_ms * static_cast<long double>(n_terms);  // N^{-s+1}
    long double N2 = static_cast<long double>(n_terms) * n_terms;
    for (int k = 1; k <= K; ++k) {
        Nfac /= N2;                   // N^{-s-2k+1}
        C term = kBernoulli[k - 1] / factorial(2 * k) * poch * Nfac;
        sum += term;
        poch *= (s + C(2.0L * k - 1.0L)) * (s + C(2.0L * k));
    }
    return sum;
}

std::pair<long double, long double> z_em(long double t) {
    C z = zeta_em(t);
    long double th = theta_gamma(t);
    C rot(std::cos(th), std::sin(th));
    C v = rot * z;
    return {v.real(), v.imag()};
}

double z_oracle(double t) { return static_cast<double>(z_em(t).first); }

double refine_zero_oracle(double lo, double hi) {
    double flo = z_oracle(lo);
    double fhi = z_oracle(hi);
    if (!(flo * fhi < 0.0)) std::abort();
    for (int i = 0; i < 30 && hi - lo > 1e-13 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        // alternate bisection and secant for robustness + speed
        if (i % 2 == 1) {
            double sec = lo - flo * (hi - lo) / (fhi - flo);
            if (sec > lo && sec < hi) mid = sec;
        }
        double fm = z_oracle(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

int count_sign_changes(double lo, double hi, double step) {
    int count = 0;
    double prev = z_oracle(lo);
    for (double t = lo + step; t < hi + step * 0.5; t += step) {
        double cur = z_oracle(std::min(t, hi));
        if (prev * cur < 0.0) ++count;
        prev = cur;
    }
    return count;
}

}  // namespace oracle

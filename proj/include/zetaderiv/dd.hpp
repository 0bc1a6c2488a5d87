#ifndef ZETADERIV_DD_HPP
#define ZETADERIV_DD_HPP

// Double-double arithmetic for phase accumulation and mod-2pi reduction.
//
// The oscillatory kernels need arguments like t*log(n) and theta(t), which
// reach ~1e9 at the heights this tool covers, reduced mod 2pi with ~1e-12
// absolute accuracy or better. Plain doubles lose the phase to roundoff at
// magnitude/eps ~ 1e-7, so the accumulation is carried in an unevaluated
// hi+lo pair (~32 significant digits) and collapsed to double only after
// reduction. Error-free transforms are the classic Dekker/Knuth ones;
// two_prod uses fma.

#include <array>
#include <cmath>

namespace zetaderiv {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

// |a| >= |b| required.
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD add(DD a, double b) {
    DD s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD sub(DD a, DD b) { return add(a, DD{-b.hi, -b.lo}); }
inline DD sub(DD a, double b) { return add(a, -b); }
inline DD negate(DD a) { return {-a.hi, -a.lo}; }

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul(double a, DD b) { return mul(b, a); }

inline DD div(DD a, DD b) {
    double q0 = a.hi / b.hi;
    DD r = sub(a, mul(b, q0));
    double q1 = r.hi / b.hi;
    r = sub(r, mul(b, q1));
    double q2 = r.hi / b.hi;
    DD q = quick_two_sum(q0, q1);
    return add(q, q2);
}

inline DD div(DD a, double b) { return div(a, DD{b}); }

namespace dd_const {
inline constexpr DD two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DD pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DD pi_over_8{0.39269908169872414, 1.5308084989341915e-17};
inline constexpr DD ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DD ln_2pi{1.8378770664093456, -7.756588316134483e-17};
inline constexpr double inv_two_pi = 0.15915494309189535;
}  // namespace dd_const

// x mod 2pi, result in [0, 2pi). Valid while the integer quotient stays
// below 2^52 (i.e. |x| < ~2.8e16).
inline DD mod_two_pi(DD x) {
    double k = std::nearbyint(x.hi * dd_const::inv_two_pi);
    DD r = sub(x, mul(dd_const::two_pi, k));
    while (r.hi < 0.0) r = add(r, dd_const::two_pi);
    while (r.hi >= dd_const::two_pi.hi) r = sub(r, dd_const::two_pi);
    return r;
}

// log(x) for finite x > 0. Splits x = m * 2^e with m in [2/3, 4/3), then
// log(m) = 2*atanh((m-1)/(m+1)) with |arg| <= 1/5, so the odd series gains
// ~1.4 digits per term and 24 terms reach the dd noise floor. The series
// coefficients 1/(2k+1) are themselves dd; double-rounded ones would cap
// the result near 1e-20 relative, which t*log(n) at t ~ 1e8 can expose.
inline DD dd_log(double x) {
    static const auto coeff = [] {
        std::array<DD, 24> c{};
        for (int k = 0; k < 24; ++k) c[k] = div(DD{1.0}, DD{2.0 * k + 1.0});
        return c;
    }();
    int e = 0;
    double m = std::frexp(x, &e);  // m in [0.5, 1)
    if (m < 2.0 / 3.0) {
        m *= 2.0;
        --e;
    }
    DD u = div(DD{m - 1.0}, DD{m + 1.0});
    DD u2 = mul(u, u);
    DD s{0.0};
    for (int k = 23; k >= 1; --k) {
        s = add(mul(s, u2), coeff[k]);
    }
    s = mul(s, u2);
    s = add(s, 1.0);
    s = mul(s, u);
    s = mul(s, 2.0);
    return add(s, mul(dd_const::ln2, static_cast<double>(e)));
}

}  // namespace zetaderiv

#endif

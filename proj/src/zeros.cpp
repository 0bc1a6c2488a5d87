// Zero location: Gram-point walk, sign-change counting with adaptive
// subdivision, Brent refinement, and a completeness audit.
//
// Counting is anchored at "good" Gram points g_m, where (-1)^m Z(g_m) is
// positive and comfortably above the evaluation error; at such points
// N(g_m) = m + 1. Between two anchors the zero count is therefore known
// exactly, and the scan subdivides (and, failing that, re-anchors outward)
// until the sign changes account for every expected zero. Failures are loud:
// a MissingZeroError names the offending span. This audits completeness
// without Turing's method; close pairs hide from coarse sampling, not from
// the count.

#include "zetaderiv/zeros.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zetaderiv/errors.hpp"

namespace zetaderiv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kPi = 3.14159265358979323846264338;

double z_at(double t, const PrecisionPolicy& policy) {
    return rs_z(t, policy).z;
}

// Good Gram point: sign matches (-1)^m with margin over evaluation noise.
bool is_good_gram(const GramPoint& g, const PrecisionPolicy& policy) {
    ZEvaluation ev = rs_z(g.t, policy);
    double signed_z = (g.index % 2 == 0) ? ev.z : -ev.z;
    return signed_z > std::max(1e-8, 64.0 * ev.est_error);
}

// Smallest good Gram index >= m (deterministic; used as chunk separator).
GramPoint anchor_at_or_after(long m, const PrecisionPolicy& policy) {
    for (long k = m; k < m + 64; ++k) {
        GramPoint g = gram_point(k, policy);
        if (is_good_gram(g, policy)) return g;
    }
    throw ConvergenceError("no good Gram point within 64 indices of " +
                           std::to_string(m));
}

GramPoint anchor_at_or_before(long m, const PrecisionPolicy& policy) {
    for (long k = m; k >= 0 && k > m - 64; --k) {
        GramPoint g = gram_point(k, policy);
        if (is_good_gram(g, policy)) return g;
    }
    throw ConvergenceError("no good Gram point within 64 indices below " +
                           std::to_string(m));
}

// One Gram interval with an adaptively refined sample grid.
struct Interval {
    double lo, hi;
    std::vector<double> ts;  // sample abscissae, ascending, endpoints included
    std::vector<double> zs;
    int depth = 0;

    int sign_changes() const {
        int c = 0;
        for (std::size_t i = 1; i < zs.size(); ++i)
            if (zs[i - 1] * zs[i] < 0.0) ++c;
        return c;
    }

    void deepen(const PrecisionPolicy& policy) {
        std::vector<double> nts, nzs;
        nts.reserve(ts.size() * 2 - 1);
        nzs.reserve(ts.size() * 2 - 1);
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            double mid = 0.5 * (ts[i] + ts[i + 1]);
            nts.push_back(ts[i]);
            nzs.push_back(zs[i]);
            nts.push_back(mid);
            nzs.push_back(z_at(mid, policy));
        }
        nts.push_back(ts.back());
        nzs.push_back(zs.back());
        ts = std::move(nts);
        zs = std::move(nzs);
        ++depth;
    }
};

// Scan the span between two verified anchors. Returns refined zeros in
// ascending order; their global indices start at anchors.first.index + 2.
std::vector<ZeroRecord> scan_anchor_span(const GramPoint& alo,
                                         const GramPoint& ahi,
                                         const ScanOptions& opt) {
    const PrecisionPolicy& pol = opt.precision;
    long long expected = ahi.index - alo.index;
    if (expected <= 0) return {};

    long n_int = ahi.index - alo.index;
    std::vector<Interval> ivs(n_int);
    std::vector<double> gram_t(n_int + 1);
    gram_t[0] = alo.t;
    gram_t[n_int] = ahi.t;
    for (long k = 1; k < n_int; ++k)
        gram_t[k] = gram_point(alo.index + k, pol).t;
    for (long k = 0; k < n_int; ++k) {
        auto& iv = ivs[k];
        iv.lo = gram_t[k];
        iv.hi = gram_t[k + 1];
        iv.ts = {iv.lo, iv.hi};
        iv.zs = {z_at(iv.lo, pol), z_at(iv.hi, pol)};
    }

    auto total = [&] {
        long long c = 0;
        for (auto& iv : ivs) c += iv.sign_changes();
        return c;
    };

    long long found = total();
    // Round 1..3: deepen only intervals that show no sign change (the common
    // Gram-law violation puts a 0/2 pair in neighbours). Afterwards deepen
    // everything: a missed close pair can hide behind an existing change.
    for (int round = 1; found < expected && round <= opt.max_subdivision_depth;
         ++round) {
        for (auto& iv : ivs) {
            bool suspicious = (round <= 3) ? iv.sign_changes() == 0 : true;
            if (suspicious && iv.depth < opt.max_subdivision_depth)
                iv.deepen(pol);
        }
        found = total();
    }
    if (found != expected) {
        throw MissingZeroError(
            "zero count mismatch in (" + std::to_string(alo.t) + ", " +
                std::to_string(ahi.t) + "): found " + std::to_string(found) +
                ", expected " + std::to_string(expected),
            alo.t, ahi.t, found, expected);
    }

    // Collect brackets, then refine (parallel; list is fixed beforehand so
    // the result does not depend on the schedule).
    std::vector<std::pair<double, double>> brackets;
    for (auto& iv : ivs)
        for (std::size_t i = 1; i < iv.zs.size(); ++i)
            if (iv.zs[i - 1] * iv.zs[i] < 0.0)
                brackets.emplace_back(iv.ts[i - 1], iv.ts[i]);

    std::vector<ZeroRecord> zeros(brackets.size());
#pragma omp parallel for schedule(dynamic, 16) if (opt.parallel)
    for (long i = 0; i < static_cast<long>(brackets.size()); ++i) {
        zeros[i] = refine_zero(brackets[i].first, brackets[i].second, opt);
        zeros[i].index = alo.index + 2 + i;
    }
    return zeros;
}

}  // namespace

GramPoint gram_point(long n, const PrecisionPolicy& policy) {
    if (n < 0) throw DomainError("gram_point: n must be >= 0");
    double target = static_cast<double>(n) * kPi;

    // Seed by fixed point of t = 2pi (n + 1/8) / log(t/(2pi e)); degenerate
    // near n = 0 where the log vanishes, so clamp and let Newton finish.
    double t = std::max(18.0, kTwoPi * (n + 1.125));
    for (int i = 0; i < 8; ++i) {
        double l = std::log(t / (kTwoPi * M_E));
        if (l < 0.05) break;
        t = kTwoPi * (n + 0.125) / l;
    }
    t = std::max(t, 10.0);

    double tol = policy.phase_tolerance();
    for (int i = 0; i < 64; ++i) {
        DD th = detail::theta_dd(t);
        double resid = add(th, -target).to_double();
        double slope = detail::theta_deriv(t);
        double limit = 8.0 * 2.22e-16 * std::fabs(t) * std::max(slope, 0.05);
        if (std::fabs(resid) <= std::max(tol, limit)) {
            GramPoint g;
            g.index = n;
            g.t = t;
            return g;
        }
        double step = resid / std::max(slope, 1e-3);
        // theta is concave-increasing here; plain Newton with a floor guard
        t = std::max(7.5, t - step);
    }
    throw ConvergenceError("gram_point: Newton failed for n = " +
                           std::to_string(n));
}

double expected_count(double t, const PrecisionPolicy& policy) {
    PhasePoint p = theta(t, policy);
    return p.theta / kPi + 1.0;
}

ZeroRecord refine_zero(double bracket_lo, double bracket_hi,
                       const ScanOptions& opt) {
    const PrecisionPolicy& pol = opt.precision;
    double a = bracket_lo, b = bracket_hi;
    double fa = z_at(a, pol), fb = z_at(b, pol);
    if (!(fa * fb < 0.0)) {
        throw BracketError("refine_zero: Z does not change sign on [" +
                           std::to_string(bracket_lo) + ", " +
                           std::to_string(bracket_hi) + "]");
    }
    // Brent: inverse quadratic / secant with bisection fallback.
    double c = b, fc = fb, d = 0.0, e = 0.0;
    double tol_abs = opt.zero_rel_tol * std::fabs(b);
    for (int iter = 0; iter < 128; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * 2.22e-16 * std::fabs(b) + 0.5 * tol_abs;
        double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) break;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q),
                                   std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = z_at(b, pol);
    }
    ZeroRecord rec;
    rec.gamma = b;
    rec.refine_residual = std::fabs(fb);
    rec.theta_at_gamma = theta(b, pol).theta_mod;
    return rec;
}

std::pair<std::vector<ZeroRecord>, BlockCount> scan_zeros(
    double t_lo, double t_hi, const ScanOptions& opt) {
    if (!(t_lo >= kMinHeight) || !(t_hi > t_lo)) {
        throw RangeError("scan_zeros: need 7 <= t_lo < t_hi");
    }
    const PrecisionPolicy& pol = opt.precision;

    GramPoint g0 = gram_point(0, pol);
    GramPoint alo;
    bool floor_anchor = t_lo <= g0.t;
    if (floor_anchor) {
        // N(7) = 0: treat the pre-g0 region as anchored at index -1.
        alo.index = -1;
        alo.t = kMinHeight;
        if (!is_good_gram(g0, pol))
            throw ConvergenceError("g0 unexpectedly not a good Gram point");
    } else {
        long m = static_cast<long>(
            std::floor(theta(t_lo, pol).theta / kPi));
        alo = anchor_at_or_before(std::max(0L, m), pol);
    }
    double th_hi = theta(t_hi, pol).theta;
    long m_hi = static_cast<long>(std::ceil(th_hi / kPi));
    GramPoint ahi = anchor_at_or_after(std::max(alo.index + 1, m_hi), pol);

    std::vector<ZeroRecord> all = scan_anchor_span(alo, ahi, opt);

    std::vector<ZeroRecord> in_range;
    for (auto& z : all)
        if (z.gamma >= t_lo && z.gamma <= t_hi) in_range.push_back(z);

    BlockCount count;
    count.t_lo = t_lo;
    count.t_hi = t_hi;
    count.found = static_cast<long long>(in_range.size());
    count.expected = count.found;  // audited exactly via the anchored span
    // Smooth-count sanity: the Riemann-von Mangoldt estimate may deviate by
    // the S(t) fluctuation, but more than +-2 means something is wrong.
    double smooth = expected_count(t_hi, pol) - expected_count(t_lo, pol);
    if (std::fabs(smooth - static_cast<double>(count.found)) > 2.5) {
        throw MissingZeroError(
            "smooth count disagrees with audited scan on (" +
                std::to_string(t_lo) + ", " + std::to_string(t_hi) + ")",
            t_lo, t_hi, count.found,
            static_cast<long long>(std::llround(smooth)));
    }
    return {std::move(in_range), count};
}

void scan_zeros_chunked(
    double t_lo, double t_hi, const ScanOptions& opt,
    const std::function<void(const std::vector<ZeroRecord>&)>& sink,
    long long first_done_index) {
    if (!(t_lo >= kMinHeight) || !(t_hi > t_lo)) {
        throw RangeError("scan_zeros_chunked: need 7 <= t_lo < t_hi");
    }
    const PrecisionPolicy& pol = opt.precision;
    constexpr long kChunkGramSpan = 2048;

    GramPoint g0 = gram_point(0, pol);
    GramPoint alo;
    if (t_lo <= g0.t) {
        alo.index = -1;
        alo.t = kMinHeight;
    } else {
        long m = static_cast<long>(std::floor(theta(t_lo, pol).theta / kPi));
        alo = anchor_at_or_before(std::max(0L, m), pol);
    }
    long m_hi = static_cast<long>(
        std::ceil(theta(t_hi, pol).theta / kPi));
    GramPoint ahi = anchor_at_or_after(std::max(alo.index + 1, m_hi), pol);

    // Fixed chunk boundaries in Gram index space, snapped to good points:
    // deterministic regardless of thread count.
    std::vector<GramPoint> bounds;
    bounds.push_back(alo);
    for (long b = alo.index + kChunkGramSpan; b < ahi.index;
         b += kChunkGramSpan) {
        GramPoint g = anchor_at_or_after(b, pol);
        if (g.index >= ahi.index) break;
        if (g.index > bounds.back().index) bounds.push_back(g);
    }
    bounds.push_back(ahi);

    long n_chunks = static_cast<long>(bounds.size()) - 1;
    // Ordered emission: chunks run in parallel, the sink sees them in order.
#pragma omp parallel for schedule(dynamic, 1) ordered if (opt.parallel)
    for (long c = 0; c < n_chunks; ++c) {
        const GramPoint& lo = bounds[c];
        const GramPoint& hi = bounds[c + 1];
        std::vector<ZeroRecord> zeros;
        // Last zero index in this chunk is hi.index + 1; skip if already done.
        if (hi.index + 1 > first_done_index) {
            ScanOptions chunk_opt = opt;
            chunk_opt.parallel = false;  // parallelism lives at chunk level
            zeros = scan_anchor_span(lo, hi, chunk_opt);
        }
#pragma omp ordered
        {
            std::vector<ZeroRecord> emit;
            for (auto& z : zeros) {
                if (z.index > first_done_index && z.gamma >= t_lo &&
                    z.gamma <= t_hi)
                    emit.push_back(z);
            }
            if (!emit.empty()) sink(emit);
        }
    }
}

}  // namespace zetaderiv

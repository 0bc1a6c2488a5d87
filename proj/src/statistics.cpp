// Block statistics over derivative records. Every fold is a fixed-chunk
// compensated sum: chunks of 65536 records are reduced independently
// (OpenMP across chunks) and merged in chunk order, so results are
// bit-identical for any thread count, and the serial reference is literally
// the same fold without the pragma.

#include "zetaderiv/statistics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zetaderiv/errors.hpp"

namespace zetaderiv {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr std::size_t kChunk = 65536;

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) {
        double s = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - s) + term;
        else
            comp += (term - s) + sum;
        sum = s;
    }
    double value() const { return sum + comp; }
};

// Deterministic chunked fold of term(i) for i in [0, n).
template <class Term>
double chunked_sum(std::size_t n, bool parallel, Term&& term) {
    std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks);
#pragma omp parallel for schedule(static) if (parallel)
    for (long c = 0; c < static_cast<long>(nchunks); ++c) {
        Neumaier acc;
        std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[static_cast<std::size_t>(c)] = acc.value();
    }
    Neumaier total;
    for (double p : partial) total.add(p);
    return total.value();
}

double gaussian_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
}

double gaussian_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

DerivBlock DerivBlock::from_records(std::span<const DerivativeRecord> recs) {
    DerivBlock b;
    b.index.reserve(recs.size());
    b.gamma.reserve(recs.size());
    b.zprime.reserve(recs.size());
    b.theta_mod.reserve(recs.size());
    b.err_est.reserve(recs.size());
    for (const auto& r : recs) {
        b.index.push_back(r.zero.index);
        b.gamma.push_back(r.zero.gamma);
        b.zprime.push_back(r.zprime);
        b.theta_mod.push_back(r.zero.theta_at_gamma);
        b.err_est.push_back(r.err_est);
    }
    return b;
}

SummaryStats summary_stats(const DerivBlock& b, const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (n < 2) throw EmptyInputError("summary_stats: need >= 2 records");
    auto log_abs = [&](std::size_t i) {
        return std::log(std::fabs(b.zprime[i]));
    };
    SummaryStats s;
    s.count = static_cast<long long>(n);
    double mn = log_abs(0), mx = log_abs(0);
#pragma omp parallel for schedule(static) reduction(min : mn) \
    reduction(max : mx) if (ex.parallel)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        double v = log_abs(static_cast<std::size_t>(i));
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    s.min = mn;
    s.max = mx;
    s.mean = chunked_sum(n, ex.parallel, log_abs) / static_cast<double>(n);
    double ss = chunked_sum(n, ex.parallel, [&](std::size_t i) {
        double d = log_abs(i) - s.mean;
        return d * d;
    });
    s.sd = std::sqrt(ss / static_cast<double>(n));
    return s;
}

MomentResult moment(const DerivBlock& b, int two_lambda, const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (n == 0) throw EmptyInputError("moment: empty block");
    MomentResult r;
    r.two_lambda = two_lambda;
    r.t_lo = b.t_lo();
    r.t_hi = b.t_hi();
    r.count = static_cast<long long>(n);
    if (two_lambda == 0) {
        r.raw = 1.0;
        return r;
    }
    double expo = static_cast<double>(two_lambda);
    if (two_lambda < 0) {
        // tiny |zeta'| values dominate; sum descending with compensation
        std::vector<double> terms(n);
#pragma omp parallel for schedule(static) if (ex.parallel)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            double az = std::fabs(b.zprime[static_cast<std::size_t>(i)]);
            if (az == 0.0) {
                terms[static_cast<std::size_t>(i)] = -1.0;  // marker
            } else {
                terms[static_cast<std::size_t>(i)] = std::pow(az, expo);
            }
        }
        for (double t : terms) {
            if (t < 0.0)
                throw ZeroDerivativeError(
                    "moment: |zeta'| = 0 with negative exponent");
        }
        std::sort(terms.begin(), terms.end(), std::greater<double>());
        r.raw = chunked_sum(n, ex.parallel, [&](std::size_t i) {
                    return terms[i];
                }) /
                static_cast<double>(n);
        return r;
    }
    r.raw = chunked_sum(n, ex.parallel, [&](std::size_t i) {
                return std::pow(std::fabs(b.zprime[i]), expo);
            }) /
            static_cast<double>(n);
    return r;
}

double hko_ratio(const DerivBlock& b, int two_lambda, double T,
                 const ExecPolicy& ex) {
    MomentResult m = moment(b, two_lambda, ex);
    return m.raw / hko_leading(two_lambda, T);
}

double cs_ratio(const DerivBlock& b, const CSPolynomial& poly,
                const ExecPolicy& ex) {
    MomentResult m = moment(b, poly.two_lambda, ex);
    double integral = cs_integral(poly, b.t_lo(), b.t_hi());
    return m.raw * static_cast<double>(m.count) / integral;
}

DensityReport normalized_density(const DerivBlock& b, double bin_width,
                                 const ExecPolicy& ex) {
    SummaryStats s = summary_stats(b, ex);
    if (!(s.sd > 0.0)) {
        throw DegenerateError("normalized_density: sd = 0, cannot normalise");
    }
    std::size_t n = b.size();
    double zlo = (s.min - s.mean) / s.sd;
    double zhi = (s.max - s.mean) / s.sd;
    long first_bin = static_cast<long>(std::floor(zlo / bin_width));
    long last_bin = static_cast<long>(std::floor(zhi / bin_width));
    std::size_t nbins = static_cast<std::size_t>(last_bin - first_bin + 1);

    std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<std::vector<long long>> counts(
        nchunks, std::vector<long long>(nbins, 0));
#pragma omp parallel for schedule(static) if (ex.parallel)
    for (long c = 0; c < static_cast<long>(nchunks); ++c) {
        auto& local = counts[static_cast<std::size_t>(c)];
        std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            double z = (std::log(std::fabs(b.zprime[i])) - s.mean) / s.sd;
            long bin = static_cast<long>(std::floor(z / bin_width)) - first_bin;
            bin = std::clamp(bin, 0L, static_cast<long>(nbins) - 1);
            ++local[static_cast<std::size_t>(bin)];
        }
    }
    DensityReport rep;
    rep.bin_width = bin_width;
    rep.mean = s.mean;
    rep.sd = s.sd;
    rep.bins.reserve(nbins);
    rep.diffs.reserve(nbins);
    for (std::size_t k = 0; k < nbins; ++k) {
        long long total = 0;
        for (std::size_t c = 0; c < nchunks; ++c) total += counts[c][k];
        double center = (static_cast<double>(first_bin + static_cast<long>(k)) +
                         0.5) *
                        bin_width;
        double density = static_cast<double>(total) /
                         (static_cast<double>(n) * bin_width);
        rep.bins.emplace_back(center, density);
        rep.diffs.emplace_back(center, density - gaussian_pdf(center));
    }
    return rep;
}

std::vector<std::pair<double, double>> gaussian_moments(const DerivBlock& b,
                                                        int k_max,
                                                        const ExecPolicy& ex) {
    if (k_max > 10 || k_max < 3) {
        throw DomainError("gaussian_moments: k_max must lie in [3, 10]");
    }
    SummaryStats s = summary_stats(b, ex);
    if (!(s.sd > 0.0)) throw DegenerateError("gaussian_moments: sd = 0");
    std::size_t n = b.size();
    std::vector<std::pair<double, double>> out;
    for (int k = 3; k <= k_max; ++k) {
        double mk = chunked_sum(n, ex.parallel, [&](std::size_t i) {
                        double z =
                            (std::log(std::fabs(b.zprime[i])) - s.mean) / s.sd;
                        return std::pow(z, k);
                    }) /
                    static_cast<double>(n);
        double gauss = 0.0;
        if (k % 2 == 0) {
            gauss = 1.0;
            for (int j = k - 1; j > 1; j -= 2) gauss *= j;  // (k-1)!!
        }
        out.emplace_back(mk, gauss);
    }
    return out;
}

std::vector<TailEntry> tail_report(
    const DerivBlock& b, std::span<const std::pair<char, double>> thresholds,
    double gamma_rep, long long N, const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (n == 0) throw EmptyInputError("tail_report: empty block");
    std::vector<TailEntry> out;
    for (auto [side, cutoff] : thresholds) {
        long long hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (ex.parallel)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            double az = std::fabs(b.zprime[static_cast<std::size_t>(i)]);
            if (side == '>' ? az > cutoff : az < cutoff) ++hits;
        }
        TailEntry e;
        e.side = side;
        e.cutoff = cutoff;
        e.empirical_pct =
            100.0 * static_cast<double>(hits) / static_cast<double>(n);
        double zstar = clt_normalize(std::log(cutoff), gamma_rep, N);
        e.predicted_pct = 100.0 * (side == '>' ? 1.0 - gaussian_cdf(zstar)
                                               : gaussian_cdf(zstar));
        out.push_back(e);
    }
    return out;
}

double shifted_moment(const DerivBlock& b, int two_lambda, long m,
                      const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (m < 0) throw DomainError("shifted_moment: m must be >= 0");
    if (static_cast<std::size_t>(m) >= n) {
        throw RangeError("shifted_moment: shift m exceeds block size");
    }
    double expo = static_cast<double>(two_lambda);
    std::size_t pairs = n - static_cast<std::size_t>(m);
    return chunked_sum(pairs, ex.parallel, [&](std::size_t i) {
        double prod = std::fabs(b.zprime[i] * b.zprime[i + m]);
        return std::pow(prod, expo);
    });
}

std::complex<double> fujii_empirical(const DerivBlock& b,
                                     const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (n == 0) throw EmptyInputError("fujii_empirical: empty block");
    double re = chunked_sum(n, ex.parallel, [&](std::size_t i) {
        return -std::sin(b.theta_mod[i]) * b.zprime[i];
    });
    double im = chunked_sum(n, ex.parallel, [&](std::size_t i) {
        return -std::cos(b.theta_mod[i]) * b.zprime[i];
    });
    return {re, im};
}

SpectrumSeries spectrum(const DerivBlock& b, double x_max, int grid_points,
                        SpectrumSeries::Variant variant, double T,
                        const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (n == 0) throw EmptyInputError("spectrum: empty block");
    if (grid_points < 2 || !(x_max > 0.0)) {
        throw RangeError("spectrum: need grid_points >= 2 and x_max > 0");
    }
    if (variant == SpectrumSeries::Variant::scaled && !(T > kTwoPi)) {
        throw RangeError("spectrum: scaled variant needs T > 2pi");
    }
    SpectrumSeries out;
    out.variant = variant;
    double dx = x_max / static_cast<double>(grid_points - 1);
    out.x_grid.resize(static_cast<std::size_t>(grid_points));
    for (int j = 0; j < grid_points; ++j) {
        out.x_grid[static_cast<std::size_t>(j)] = dx * j;
    }

    double scale = (variant == SpectrumSeries::Variant::scaled)
                       ? std::log(T / kTwoPi) / kTwoPi
                       : 0.0;

    // n-outer / grid-inner: for each record the grid phases advance by the
    // constant rotation e^{2pi i w dx}, so the inner loop is one complex
    // multiply-add against an accumulator that lives in L1. Fixed chunks in
    // n keep the merge order (and hence the bits) thread-count independent.
    std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::size_t G = static_cast<std::size_t>(grid_points);
    std::vector<std::vector<std::complex<double>>> acc(
        nchunks, std::vector<std::complex<double>>(G, {0.0, 0.0}));
#pragma omp parallel for schedule(dynamic, 1) if (ex.parallel)
    for (long c = 0; c < static_cast<long>(nchunks); ++c) {
        auto& local = acc[static_cast<std::size_t>(c)];
        std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            double w = (variant == SpectrumSeries::Variant::index)
                           ? static_cast<double>(b.index[i])
                           : b.gamma[i] * scale;
            double ang = kTwoPi * w * dx;
            // reduce the step angle; the per-step rotation must be exact-ish
            ang = std::remainder(ang, kTwoPi);
            std::complex<double> rot(std::cos(ang), std::sin(ang));
            std::complex<double> cur(1.0, 0.0);
            std::complex<double> cn = b.zeta_prime(i);
            for (std::size_t j = 0; j < G; ++j) {
                local[j] += cn * cur;
                cur *= rot;
            }
        }
    }
    out.values.assign(G, {0.0, 0.0});
    for (std::size_t c = 0; c < nchunks; ++c) {
        for (std::size_t j = 0; j < G; ++j) out.values[j] += acc[c][j];
    }
    return out;
}

std::vector<double> top_contributors(const DerivBlock& b, int two_lambda,
                                     int k, const ExecPolicy& ex) {
    std::size_t n = b.size();
    if (n == 0) throw EmptyInputError("top_contributors: empty block");
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw RangeError("top_contributors: k out of range");
    }
    std::vector<double> mags(n);
#pragma omp parallel for schedule(static) if (ex.parallel)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        mags[static_cast<std::size_t>(i)] =
            std::fabs(b.zprime[static_cast<std::size_t>(i)]);
    }
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    double expo = static_cast<double>(two_lambda);
    double total = chunked_sum(n, ex.parallel, [&](std::size_t i) {
        return std::pow(mags[i], expo);
    });
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    Neumaier cum;
    for (int i = 0; i < k; ++i) {
        cum.add(std::pow(mags[static_cast<std::size_t>(i)], expo));
        out.push_back(100.0 * cum.value() / total);
    }
    return out;
}

std::vector<GapEntry> min_gap_report(const DerivBlock& b, int k,
                                     const ExecPolicy& ex) {
    (void)ex;
    std::size_t n = b.size();
    if (n < 2) throw EmptyInputError("min_gap_report: need >= 2 records");
    for (std::size_t i = 1; i < n; ++i) {
        if (b.index[i] != b.index[i - 1] + 1) {
            throw NonConsecutiveError(
                "min_gap_report: zero indices have holes at position " +
                std::to_string(i));
        }
    }
    std::vector<std::size_t> order(n - 1);
    std::iota(order.begin(), order.end(), 0);
    auto gap = [&](std::size_t i) { return b.gamma[i + 1] - b.gamma[i]; };
    std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n - 1);
    std::partial_sort(order.begin(), order.begin() + static_cast<long>(kk),
                      order.end(), [&](std::size_t a, std::size_t c) {
                          return gap(a) < gap(c);
                      });
    std::vector<GapEntry> out;
    for (std::size_t r = 0; r < kk; ++r) {
        std::size_t i = order[r];
        GapEntry e;
        e.n = b.index[i];
        e.gamma_n = b.gamma[i];
        e.gap = gap(i);
        e.abs_zp_n = std::fabs(b.zprime[i]);
        e.abs_zp_next = std::fabs(b.zprime[i + 1]);
        double mean_spacing = kTwoPi / std::log(b.gamma[i] / kTwoPi);
        e.gap_over_mean = e.gap / mean_spacing;
        out.push_back(e);
    }
    return out;
}

}  // namespace zetaderiv

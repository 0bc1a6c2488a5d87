#ifndef ZETADERIV_STATISTICS_HPP
#define ZETADERIV_STATISTICS_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "zetaderiv/derivative.hpp"
#include "zetaderiv/predictions.hpp"

namespace zetaderiv {

// Column view of a batch of derivative records. Statistics stream over
// these arrays; for large runs they are loaded straight from cache files
// without materialising DerivativeRecord objects.
struct DerivBlock {
    std::vector<long long> index;
    std::vector<double> gamma;
    std::vector<double> zprime;     // signed Z'(gamma)
    std::vector<double> theta_mod;  // theta(gamma) mod 2pi
    std::vector<double> err_est;

    std::size_t size() const { return gamma.size(); }
    double t_lo() const { return gamma.empty() ? 0.0 : gamma.front(); }
    double t_hi() const { return gamma.empty() ? 0.0 : gamma.back(); }
    double t_mid() const { return 0.5 * (t_lo() + t_hi()); }
    std::complex<double> zeta_prime(std::size_t i) const {
        return {-std::sin(theta_mod[i]) * zprime[i],
                -std::cos(theta_mod[i]) * zprime[i]};
    }

    static DerivBlock from_records(std::span<const DerivativeRecord> recs);
};

struct ExecPolicy {
    bool parallel = true;  // serial reference path when false
};

struct SummaryStats {
    double min = 0.0, max = 0.0, mean = 0.0, sd = 0.0;
    long long count = 0;
};

struct MomentResult {
    int two_lambda = 0;
    double t_lo = 0.0, t_hi = 0.0;
    long long count = 0;
    double raw = 0.0;  // (1/|B|) sum |zeta'|^{2 lambda}
    std::optional<double> hko_ratio;
    std::optional<double> cs_ratio;
};

struct DensityReport {
    double bin_width = 0.0512;
    std::vector<std::pair<double, double>> bins;   // (center, density)
    std::vector<std::pair<double, double>> diffs;  // (center, emp - gauss)
    double mean = 0.0, sd = 0.0;  // pre-normalisation moments
};

struct SpectrumSeries {
    enum class Variant { index, scaled };
    Variant variant = Variant::index;
    std::vector<double> x_grid;
    std::vector<std::complex<double>> values;
};

struct TailEntry {
    char side = '>';  // '>' exceedance, '<' deficiency
    double cutoff = 0.0;
    double empirical_pct = 0.0;
    double predicted_pct = 0.0;
};

struct GapEntry {
    long long n = 0;
    double gamma_n = 0.0;
    double gap = 0.0;
    double abs_zp_n = 0.0;
    double abs_zp_next = 0.0;
    double gap_over_mean = 0.0;
};

// min/max/mean/sd of log|zeta'|, compensated streaming. Throws
// EmptyInputError for fewer than 2 records.
SummaryStats summary_stats(const DerivBlock& b, const ExecPolicy& ex = {});

// (1/|B|) sum |zeta'|^{2 lambda}. Negative exponents are summed in
// descending term order with compensation (a handful of tiny |zeta'| carry
// most of the sum). Throws ZeroDerivativeError on |zeta'| = 0 with a
// negative exponent.
MomentResult moment(const DerivBlock& b, int two_lambda,
                    const ExecPolicy& ex = {});

// moment / hko_leading(two_lambda, T); T defaults to the block midpoint.
double hko_ratio(const DerivBlock& b, int two_lambda, double T,
                 const ExecPolicy& ex = {});

// un-normalised block sum / integral of the CS polynomial over the block.
double cs_ratio(const DerivBlock& b, const CSPolynomial& poly,
                const ExecPolicy& ex = {});

// z-scored density of log|zeta'| (default bin width 0.0512) and its
// difference against the standard Gaussian at bin centres.
DensityReport normalized_density(const DerivBlock& b, double bin_width = 0.0512,
                                 const ExecPolicy& ex = {});

// k-th moments of the z-scores for k = 3..k_max, paired with the Gaussian
// values (0 odd, (k-1)!! even).
std::vector<std::pair<double, double>> gaussian_moments(
    const DerivBlock& b, int k_max, const ExecPolicy& ex = {});

// empirical vs CLT-predicted tail percentages of |zeta'| at the cutoffs.
std::vector<TailEntry> tail_report(
    const DerivBlock& b, std::span<const std::pair<char, double>> thresholds,
    double gamma_rep, long long N, const ExecPolicy& ex = {});

// S(m) = sum |zeta'(gamma_n) zeta'(gamma_{n+m})|^{two_lambda} over the block.
double shifted_moment(const DerivBlock& b, int two_lambda, long m,
                      const ExecPolicy& ex = {});

// sum of complex zeta'(1/2 + i gamma_n) over the block.
std::complex<double> fujii_empirical(const DerivBlock& b,
                                     const ExecPolicy& ex = {});

// f(x) = sum zeta'_n e^{2pi i w_n x} on a uniform grid, w_n = global index
// (index variant) or (gamma_n/2pi) log(T/2pi) (scaled variant).
SpectrumSeries spectrum(const DerivBlock& b, double x_max, int grid_points,
                        SpectrumSeries::Variant variant, double T,
                        const ExecPolicy& ex = {});

// cumulative share of the 2 lambda-moment sum carried by the k largest
// |zeta'| values, in percent.
std::vector<double> top_contributors(const DerivBlock& b, int two_lambda,
                                     int k, const ExecPolicy& ex = {});

// k smallest consecutive gaps with the neighbouring |zeta'| values and the
// ratio to the local mean spacing. Requires consecutive indices.
std::vector<GapEntry> min_gap_report(const DerivBlock& b, int k,
                                     const ExecPolicy& ex = {});

}  // namespace zetaderiv

#endif

#ifndef ZETADERIV_IO_HPP
#define ZETADERIV_IO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetaderiv/derivative.hpp"
#include "zetaderiv/statistics.hpp"

namespace zetaderiv {

// Line-oriented `key = value` configuration with [cs.2]/[cs.4] sections
// holding Conrey-Snaith-style polynomial coefficients plus a mandatory
// provenance string. Unknown keys are rejected.
struct RunConfig {
    PrecisionPolicy precision{};
    StepPolicy step{};
    ScanOptions scan{};
    FujiiTerms fujii{};
    long prime_bound = 1000000;
    double hist_bin = 0.0512;
    double xmax = 0.05;
    int grid = 4096;
    bool parallel = true;
    std::string out_dir = "out";
    std::map<int, CSPolynomial> cs;  // keyed by two_lambda

    static RunConfig load(const std::filesystem::path& file);
    static RunConfig parse(const std::string& text);
    // digest of everything that affects zero ordinates
    std::string zero_policy_digest() const;
    // digest of everything that affects derivative values
    std::string deriv_policy_digest() const;
};

// Validate CS coefficients against the moment-constant tie-in: the leading
// coefficient must equal a(lambda) G^2(lambda+2)/G(2lambda+3) / 2pi within
// 1e-6 (the density factor log(t/2pi)/2pi makes the polynomial one degree
// higher than the moment exponent lambda(lambda+2)).
void validate_cs(const CSPolynomial& poly, long prime_bound);

struct ZeroCacheHeader {
    int version = 1;
    double t_lo = 0.0, t_hi = 0.0;
    long long first_index = 0;
    long long count = 0;
    std::string policy_digest;
};

struct DerivCacheHeader {
    int version = 1;
    std::string zero_file;    // basename of the linked zero cache
    std::string zero_digest;  // content digest of the linked zero cache
    std::string h_digest;     // step + precision policy digest
    long long count = 0;
};

// 64-bit FNV-1a, hex-encoded; used for policy and content digests.
std::string fnv1a_hex(const std::string& data);

struct ZeroCache {
    ZeroCacheHeader header;
    std::vector<ZeroRecord> rows;

    static ZeroCache read(const std::filesystem::path& file);
    void write(const std::filesystem::path& file) const;
    // digest over the exact row strings (order-sensitive)
    std::string content_digest() const;
};

struct DerivCache {
    DerivCacheHeader header;
    DerivBlock block;

    static DerivCache read(const std::filesystem::path& file);
    void write(const std::filesystem::path& file) const;
};

// zeros subcommand: scan a range (or the first N zeros), checkpointed every
// 10^4 zeros, idempotent on rerun, loud on checkpoint corruption.
struct ZerosRequest {
    std::optional<std::pair<double, double>> range;
    std::optional<long long> first_n;
};
std::filesystem::path cmd_zeros(const ZerosRequest& req, const RunConfig& cfg);

// derivatives subcommand: one DerivativeRecord per cached zero; flagged rows
// listed in a `.audit` sidecar; skipped when up to date.
std::filesystem::path cmd_derivatives(const std::filesystem::path& zero_file,
                                      const RunConfig& cfg);

// report subcommand: one CSV per requested report.
std::vector<std::filesystem::path> cmd_report(
    const std::filesystem::path& deriv_file,
    const std::vector<std::string>& which, const std::vector<int>& two_lambdas,
    const RunConfig& cfg);

// verify subcommand: re-audit caches; returns a human-readable report and
// sets ok = false on any failure.
std::string cmd_verify(const std::filesystem::path& zero_file,
                       const std::optional<std::filesystem::path>& deriv_file,
                       const RunConfig& cfg, bool* ok);

// Height near which the n-th zero lives (smooth-count inversion).
double height_of_zero_index(long long n);

}  // namespace zetaderiv

#endif

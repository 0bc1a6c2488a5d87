#ifndef ZETADERIV_ZEROS_HPP
#define ZETADERIV_ZEROS_HPP

#include <functional>
#include <vector>

#include "zetaderiv/rs.hpp"

namespace zetaderiv {

struct GramPoint {
    long index = 0;
    double t = 0.0;  // theta(t) = index * pi
};

struct ZeroRecord {
    long long index = 0;       // global zero number, 1-based
    double gamma = 0.0;        // ordinate
    double theta_at_gamma = 0.0;  // theta(gamma) mod 2pi
    double refine_residual = 0.0; // |Z(gamma)| after refinement
};

struct BlockCount {
    double t_lo = 0.0;
    double t_hi = 0.0;
    long long found = 0;
    long long expected = 0;
};

struct ScanOptions {
    PrecisionPolicy precision{};
    // Bracket shrink target, relative to t. Chosen so ordinate error stays
    // well below both the differencing step and the oracle comparisons.
    double zero_rel_tol = 1e-13;
    int max_subdivision_depth = 15;
    bool parallel = true;  // serial reference path when false
};

// Solve theta(t) = n*pi by safeguarded Newton.
GramPoint gram_point(long n, const PrecisionPolicy& policy = {});

// Smooth Riemann-von Mangoldt count theta(t)/pi + 1.
double expected_count(double t, const PrecisionPolicy& policy = {});

// Refine a bracketed sign change of Z to a ZeroRecord (index unset).
ZeroRecord refine_zero(double bracket_lo, double bracket_hi,
                       const ScanOptions& opt = {});

// Locate every zero in [t_lo, t_hi]. Audits completeness against Gram-point
// anchored counts; throws MissingZeroError when subdivision and block
// extension cannot reconcile found vs expected.
std::pair<std::vector<ZeroRecord>, BlockCount> scan_zeros(
    double t_lo, double t_hi, const ScanOptions& opt = {});

// Chunked variant for long runs: emits consecutive blocks of records in
// ascending order through `sink` (called from one thread at a time, in
// order). Chunks are fixed-size in Gram indices, so results do not depend
// on thread count.
void scan_zeros_chunked(
    double t_lo, double t_hi, const ScanOptions& opt,
    const std::function<void(const std::vector<ZeroRecord>&)>& sink,
    long long first_done_index = 0);

}  // namespace zetaderiv

#endif

#ifndef ZETADERIV_ERRORS_HPP
#define ZETADERIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetaderiv {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested accuracy cannot be met at this height with the working precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A scan finished its subdivision budget with found != expected. Carries the
// offending sub-range so the caller can retry manually.
struct MissingZeroError : std::runtime_error {
    double t_lo;
    double t_hi;
    long long found;
    long long expected;
    MissingZeroError(const std::string& msg, double lo, double hi,
                     long long f, long long e)
        : std::runtime_error(msg), t_lo(lo), t_hi(hi), found(f), expected(e) {}
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedExponentError : std::domain_error {
    using std::domain_error::domain_error;
};

struct EmptyInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDerivativeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConsecutiveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zetaderiv

#endif

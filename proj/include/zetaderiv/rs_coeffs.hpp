#ifndef ZETADERIV_RS_COEFFS_HPP
#define ZETADERIV_RS_COEFFS_HPP

#include <span>

namespace zetaderiv::rs_tables {

inline constexpr int kNumOrders = 13;  // C_0 .. C_12

// Chebyshev coefficients of C_j on p in [0,1], argument z = 2p - 1.
extern const std::span<const double> kCheb[kNumOrders];

// Observed truncation envelope: |Z_J - Z| <= kTruncEnvelope[J] * (t/2pi)^(-(2J+3)/4).
extern const double kTruncEnvelope[kNumOrders];

}  // namespace zetaderiv::rs_tables

#endif

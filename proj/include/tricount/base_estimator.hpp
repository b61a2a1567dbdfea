#pragma once

#include "tricount/geom.hpp"

namespace tricount {

struct BaseEstimate {
    double base = 0.0;  // lambda^(1/n)
    double lower = 0.0; // base * 2^(-epsilon)
    double upper = 0.0; // base * 2^(+epsilon)
    double epsilon_used = 0.0;
    unsigned long n = 0;
};

/// n-th root of a triangulation count with a 2^epsilon bracket. Exact integer
/// root plus a logarithmic evaluation cross-check each other to at least 12
/// significant digits. Requires lambda >= 1, n >= 3, 0 < epsilon < 1/2.
BaseEstimate estimate_base(const BigInt& lambda, unsigned long n, double epsilon);

enum class BaseSanity { Ok, BelowKnownLower, AboveKnownUpper };

/// Flags bases outside the plausible [1, 30] envelope for triangulation
/// counts of planar point sets.
BaseSanity sanity_bounds(double base);

} // namespace tricount

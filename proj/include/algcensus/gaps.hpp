#pragma once

#include <vector>

#include "algcensus/bigint.hpp"

namespace algcensus {

// distance probe from a rational point to the nearest degree-n algebraic
// number of height <= q
struct GapProbe {
    int n = 0;
    long long q = 0;
    long long a = 0;  // probe point a/b, gcd(|a|, b) = 1
    long long b = 1;
    // exact rational lower bound on the distance, certified within a
    // 2^-20 relative margin of the true minimum (and always positive)
    Rat nearest_distance;
    double implied_constant = 0;  // nearest_distance * b^n * q
};

// scans the census and refines isolating intervals until the minimal
// distance is certified; for degree 1 the probe point itself is excluded
// when it belongs to the set
GapProbe nearest_algebraic(int n, long long Q, long long a, long long b);

// one probe per height bound, same point
std::vector<GapProbe> constant_sweep(int n, long long a, long long b,
                                     const std::vector<long long>& qs);

// true iff every member of the (n, Q) census lies strictly inside
// (-Q-1, Q+1)
bool outer_exclusion_check(int n, long long Q);

}  // namespace algcensus

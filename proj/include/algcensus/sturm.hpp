#pragma once

#include <vector>

#include "algcensus/ext_rational.hpp"
#include "algcensus/int_poly.hpp"

namespace algcensus {

// Sturm chain of a nonzero polynomial.  Each element is kept primitive
// (content divided out, sign preserved) so coefficient growth stays bounded.
struct SturmChain {
    std::vector<IntPoly> s;

    static SturmChain build(const IntPoly& p);

    // Number of sign changes in the chain at x, zeros skipped.  At a root of
    // p this equals the right-hand limit of the variation count.
    int sign_variations(const ExtRational& x) const;
};

// Exact number of distinct real roots of p in (lo, hi]: a root exactly at hi
// is counted, a root exactly at lo is not.  p must be nonzero.  For p with
// repeated roots the count of distinct roots is still exact as long as
// neither endpoint is a repeated root.
long long count_roots_in(const SturmChain& chain, const HalfOpenInterval& iv);
long long count_roots_in(const IntPoly& p, const HalfOpenInterval& iv);

long long count_real_roots(const IntPoly& p);

// Disjoint isolating intervals (one distinct real root each), ascending.
// Endpoints are dyadic rationals inside (-B, B] for a power-of-two Cauchy
// bound B.
std::vector<HalfOpenInterval> isolate_roots(const IntPoly& p);

// Shrink an isolating interval by bisection until hi - lo <= eps.  The
// interval must contain exactly one root of p.
HalfOpenInterval refine_root(const IntPoly& p, HalfOpenInterval iv, const Rat& eps);

// 1 + height/|lead| rounded up to the next power of two.
Rat cauchy_bound_pow2(const IntPoly& p);

}  // namespace algcensus

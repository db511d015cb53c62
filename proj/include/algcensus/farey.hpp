#pragma once

#include <utility>
#include <vector>

#include "algcensus/bigint.hpp"

namespace algcensus {

// reduced fraction in (0, 1]
struct Fraction {
    long long num = 1;  // 1 <= num <= den
    long long den = 1;  // gcd(num, den) = 1
};

// all reduced fractions in (0,1] with denominator at most Q, ascending,
// generated by the mediant recurrence
std::vector<Fraction> farey_sequence(long long Q);

// their number: the totient summatory function, by sieve
long long farey_count(long long Q);

// sup over alpha in [0,1] of |#(F cap [0,alpha]) / #F - alpha|, exact: the
// supremum of a step-versus-line deviation is attained among the one-sided
// limits at the jumps, all evaluated in rational arithmetic
Rat discrepancy(long long Q);

// bridge to the degree-1 census: left is the exact count of degree-1
// numbers of height <= Q over the whole line, right the value predicted
// from the Farey cardinality.  The classical sequence includes 0/1, which
// the Fraction type above excludes, hence the +1 shift inside.
std::pair<long long, long long> a1_relation_check(long long Q);

// Q times the largest deviation between the census share of an interval
// and a quarter of its density integral, maximized over the family; an
// empty list selects every subinterval of [0,1] with Farey endpoints
double extremal_gap_ratio(long long Q,
                          const std::vector<std::pair<Rat, Rat>>& intervals = {});

}  // namespace algcensus

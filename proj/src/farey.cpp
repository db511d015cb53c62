#include "algcensus/farey.hpp"

#include <algorithm>
#include <stdexcept>

#include "algcensus/census.hpp"
#include "algcensus/ext_rational.hpp"

namespace algcensus {

namespace {

void check_order(long long Q) {
    if (Q < 1) throw std::invalid_argument("order must be >= 1");
}

}  // namespace

std::vector<Fraction> farey_sequence(long long Q) {
    check_order(Q);
    std::vector<Fraction> out;
    out.reserve(static_cast<size_t>(farey_count(Q)));
    // walk from 0/1 (not emitted) via 1/Q up to 1/1
    long long a = 0, b = 1, c = 1, d = Q;
    out.push_back({c, d});
    while (c != d) {
        const long long k = (Q + b) / d;
        const long long p = k * c - a;
        const long long q = k * d - b;
        a = c;
        b = d;
        c = p;
        d = q;
        out.push_back({c, d});
    }
    return out;
}

long long farey_count(long long Q) {
    check_order(Q);
    std::vector<long long> phi(static_cast<size_t>(Q) + 1);
    for (long long i = 0; i <= Q; ++i) phi[static_cast<size_t>(i)] = i;
    for (long long p = 2; p <= Q; ++p) {
        if (phi[static_cast<size_t>(p)] != p) continue;  // not prime
        for (long long m = p; m <= Q; m += p)
            phi[static_cast<size_t>(m)] -= phi[static_cast<size_t>(m)] / p;
    }
    long long total = 0;
    for (long long i = 1; i <= Q; ++i) total += phi[static_cast<size_t>(i)];
    return total;
}

Rat discrepancy(long long Q) {
    check_order(Q);
    const auto seq = farey_sequence(Q);
    const long long N = static_cast<long long>(seq.size());
    Rat best = 0;
    for (long long i = 1; i <= N; ++i) {
        const Fraction& f = seq[static_cast<size_t>(i - 1)];
        const Rat x(f.num, f.den);
        const Rat right = Rat(i, N) - x;        // alpha = x_i
        const Rat left = x - Rat(i - 1, N);     // alpha -> x_i from below
        if (right > best) best = right;
        if (left > best) best = left;
    }
    return best;
}

std::pair<long long, long long> a1_relation_check(long long Q) {
    check_order(Q);
    const long long lhs = phi_count(1, Q, HalfOpenInterval::whole_line());
    const long long rhs = 4 * (farey_count(Q) + 1) - 5;
    return {lhs, rhs};
}

namespace {

// antiderivative of 1 / max(1, x^2) at a rational point
Rat density_prim(const Rat& x) {
    if (x > 1) return 2 - Rat(1) / x;
    if (x < -1) return -2 - Rat(1) / x;
    return x;
}

}  // namespace

double extremal_gap_ratio(long long Q, const std::vector<std::pair<Rat, Rat>>& intervals) {
    if (Q < 2) throw std::invalid_argument("order must be >= 2");
    const long long M = phi_count(1, Q, HalfOpenInterval::whole_line());
    Rat best = 0;
    if (intervals.empty()) {
        // family of all (x_i, x_j]: the deviation is A_j - A_i with
        // A_k = k/M - x_k/4, so the maximum is the spread of A
        const auto seq = farey_sequence(Q);
        Rat amin = 0, amax = 0;  // k = 0 term: x_0 = 0
        for (long long k = 1; k <= static_cast<long long>(seq.size()); ++k) {
            const Fraction& f = seq[static_cast<size_t>(k - 1)];
            const Rat A = Rat(k, M) - Rat(f.num, 4 * f.den);
            if (A < amin) amin = A;
            if (A > amax) amax = A;
        }
        best = amax - amin;
    } else {
        for (const auto& [lo, hi] : intervals) {
            if (!(lo < hi)) throw std::invalid_argument("interval endpoints must increase");
            const long long cnt = phi_count(
                1, Q, HalfOpenInterval(ExtRational::finite(lo), ExtRational::finite(hi)));
            Rat dev = Rat(cnt, M) - (density_prim(hi) - density_prim(lo)) / 4;
            if (dev < 0) dev = -dev;
            if (dev > best) best = dev;
        }
    }
    return static_cast<double>(best * Q);
}

}  // namespace algcensus

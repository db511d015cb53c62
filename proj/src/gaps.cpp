#include "algcensus/gaps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "algcensus/census.hpp"

namespace algcensus {

namespace {

struct Candidate {
    Rat lo, hi;  // root in [lo, hi]; collapses to a point for exact hits
    IntPoly p;
    bool exact = false;
};

Rat point_distance_low(const Candidate& c, const Rat& x0) {
    if (x0 < c.lo) return c.lo - x0;
    if (x0 > c.hi) return x0 - c.hi;
    return Rat(0);
}

Rat point_distance_high(const Candidate& c, const Rat& x0) {
    const Rat l = x0 < c.lo ? c.lo - x0 : x0 - c.lo;
    const Rat h = x0 < c.hi ? c.hi - x0 : x0 - c.hi;
    return std::max(l, h);
}

// one exact bisection step; signs at lo/hi bracket the root strictly
void refine(Candidate& c) {
    if (c.exact) return;
    const Rat mid = (c.lo + c.hi) / 2;
    const int sm = sign_at(c.p, mid);
    if (sm == 0) {
        c.lo = c.hi = mid;
        c.exact = true;
        return;
    }
    if (sm == sign_at(c.p, c.lo))
        c.lo = mid;
    else
        c.hi = mid;
}

}  // namespace

GapProbe nearest_algebraic(int n, long long Q, long long a, long long b) {
    if (b < 1) throw std::invalid_argument("denominator must be positive");
    if (std::gcd(a < 0 ? -a : a, b) != 1)
        throw std::invalid_argument("probe point must be in lowest terms");
    const auto cs = census(n, Q);
    const Rat x0(a, b);

    // cell-space prescan: the probe sits between integer cells, so the cell
    // index gap already bounds the distance to within two cell widths
    const Int two40 = Int(1) << CensusSet::kCellExp;
    const Int fc = (Int(a) * two40) / b - (a < 0 && (Int(a) * two40) % b != 0 ? 1 : 0);
    const uint32_t nroots = static_cast<uint32_t>(cs->root_count());
    if (nroots == 0) throw std::runtime_error("census is empty");
    auto cell_gap = [&](uint32_t i) {
        const Int k(cs->cell_of(i));
        Int gap = 0;
        if (k > fc)
            gap = k - fc - 1;
        else if (k < fc)
            gap = fc - k - 1;
        if (gap < 0) gap = 0;
        return gap;
    };
    // for n = 1 the probe point may itself be a census root; it always lands in
    // a gap-0 cell, so only those few roots need the exact identity check
    auto is_self = [&](uint32_t i) {
        if (n != 1 || cell_gap(i) != 0) return false;
        return sign_at(cs->poly_of(cs->poly_of_root(i)), x0) == 0;
    };
    bool seeded = false;
    Int best_gap = 0;
    for (uint32_t i = 0; i < nroots; ++i) {
        if (is_self(i)) continue;
        const Int g = cell_gap(i);
        if (!seeded || g < best_gap) best_gap = g;
        seeded = true;
    }
    if (!seeded) throw std::runtime_error("no distance candidates");
    std::vector<uint32_t> near;
    for (uint32_t i = 0; i < nroots; ++i)
        if (cell_gap(i) <= best_gap + 2 && !is_self(i)) near.push_back(i);

    std::vector<Candidate> cands;
    const Rat width(1, two40);
    for (uint32_t i : near) {
        Candidate c;
        c.lo = Rat(Int(cs->cell_of(i)), two40);
        c.hi = c.lo + width;
        c.p = cs->poly_of(cs->poly_of_root(i));
        cands.push_back(std::move(c));
    }
    if (cands.empty()) throw std::runtime_error("no distance candidates");

    Rat dmin_lo(0), dmin_hi(0);
    for (int round = 0;; ++round) {
        dmin_lo = point_distance_low(cands[0], x0);
        dmin_hi = point_distance_high(cands[0], x0);
        for (const auto& c : cands) {
            dmin_lo = std::min(dmin_lo, point_distance_low(c, x0));
            dmin_hi = std::min(dmin_hi, point_distance_high(c, x0));
        }
        if (dmin_lo > 0 && (dmin_hi - dmin_lo) * (Int(1) << 20) <= dmin_hi) break;
        if (round >= 256) throw std::runtime_error("distance refinement failed to certify");
        cands.erase(std::remove_if(cands.begin(), cands.end(),
                                   [&](const Candidate& c) {
                                       return point_distance_low(c, x0) > dmin_hi;
                                   }),
                    cands.end());
        for (auto& c : cands) refine(c);
    }

    GapProbe probe;
    probe.n = n;
    probe.q = Q;
    probe.a = a;
    probe.b = b;
    probe.nearest_distance = dmin_lo;
    Int bn = 1;
    for (int i = 0; i < n; ++i) bn *= b;
    probe.implied_constant = static_cast<double>(dmin_lo * bn * Q);
    return probe;
}

std::vector<GapProbe> constant_sweep(int n, long long a, long long b,
                                     const std::vector<long long>& qs) {
    std::vector<GapProbe> out;
    out.reserve(qs.size());
    for (long long Q : qs) out.push_back(nearest_algebraic(n, Q, a, b));
    return out;
}

bool outer_exclusion_check(int n, long long Q) {
    const auto cs = census(n, Q);
    const HalfOpenInterval box(ExtRational::finite(Rat(-Q - 1)), ExtRational::finite(Rat(Q + 1)));
    return cs->count_in(box) == cs->root_count();
}

}  // namespace algcensus

#include "algcensus/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace algcensus {

// Pseudo-remainder of f by g scaled by a positive power of |lead(g)| so all
// divisions are exact and the sign of the true rational remainder is kept.
static IntPoly pseudo_rem_signed(const IntPoly& f, const IntPoly& g) {
    const int df = f.degree(), dg = g.degree();
    const Int& gl = g.lead();
    Int scale = abs_int(gl);
    std::vector<Int> r = f.c;
    // multiply up front by |gl|^(df-dg+1)
    Int mult = 1;
    for (int i = 0; i < df - dg + 1; ++i) mult *= scale;
    for (Int& a : r) a *= mult;
    for (int k = df - dg; k >= 0; --k) {
        Int q = r[k + dg] / gl;  // exact by construction
        if (q == 0) continue;
        for (int j = 0; j < dg; ++j) r[k + j] -= q * g.c[j];
        r[k + dg] = 0;
    }
    r.resize(dg);
    return IntPoly(std::move(r));
}

static IntPoly primitive_signed(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    std::vector<Int> r = p.c;
    for (Int& a : r) a /= g;
    return IntPoly(std::move(r));
}

SturmChain SturmChain::build(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    SturmChain ch;
    ch.s.push_back(primitive_signed(p));
    if (p.degree() == 0) return ch;
    ch.s.push_back(primitive_signed(derivative(p)));
    while (!ch.s.back().is_zero() && ch.s.back().degree() > 0) {
        IntPoly r = pseudo_rem_signed(ch.s[ch.s.size() - 2], ch.s.back());
        if (r.is_zero()) break;
        for (Int& a : r.c) a = -a;
        ch.s.push_back(primitive_signed(r));
    }
    return ch;
}

int SturmChain::sign_variations(const ExtRational& x) const {
    int var = 0, prev = 0;
    for (const IntPoly& q : s) {
        int sg;
        if (x.is_finite()) {
            sg = sign_at(q, x.value);
        } else if (x.is_pos_inf()) {
            sg = q.is_zero() ? 0 : q.lead().sign();
        } else {
            sg = q.is_zero() ? 0 : (q.degree() % 2 == 0 ? q.lead().sign() : -q.lead().sign());
        }
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

long long count_roots_in(const SturmChain& chain, const HalfOpenInterval& iv) {
    // V(lo) - V(hi) counts distinct roots in (lo, hi]: with zeros skipped the
    // variation count at a root equals its right-hand limit, which matches
    // the half-open convention at both endpoints.
    return chain.sign_variations(iv.lo) - chain.sign_variations(iv.hi);
}

long long count_roots_in(const IntPoly& p, const HalfOpenInterval& iv) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    return count_roots_in(SturmChain::build(p), iv);
}

long long count_real_roots(const IntPoly& p) {
    return count_roots_in(p, HalfOpenInterval::whole_line());
}

Rat cauchy_bound_pow2(const IntPoly& p) {
    Int h = height_inf(p);
    Int l = abs_int(p.lead());
    // smallest power of two >= 1 + h/l
    Int b = 1;
    while (b * l < l + h) b <<= 1;
    return Rat(b);
}

namespace {

struct IsoCtx {
    const SturmChain& chain;
    std::vector<HalfOpenInterval>* out;
};

void isolate_rec(const IsoCtx& ctx, const Rat& lo, const Rat& hi, int vlo, int vhi) {
    const long long k = vlo - vhi;
    if (k == 0) return;
    if (k == 1) {
        ctx.out->emplace_back(ExtRational::finite(lo), ExtRational::finite(hi));
        return;
    }
    Rat mid = (lo + hi) / 2;
    int vm = ctx.chain.sign_variations(ExtRational::finite(mid));
    isolate_rec(ctx, lo, mid, vlo, vm);
    isolate_rec(ctx, mid, hi, vm, vhi);
}

}  // namespace

std::vector<HalfOpenInterval> isolate_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<HalfOpenInterval> out;
    if (p.degree() == 0) return out;
    SturmChain chain = SturmChain::build(p);
    Rat b = cauchy_bound_pow2(p);
    int vlo = chain.sign_variations(ExtRational::finite(-b));
    int vhi = chain.sign_variations(ExtRational::finite(b));
    IsoCtx ctx{chain, &out};
    isolate_rec(ctx, -b, b, vlo, vhi);
    return out;
}

HalfOpenInterval refine_root(const IntPoly& p, HalfOpenInterval iv, const Rat& eps) {
    if (!iv.lo.is_finite() || !iv.hi.is_finite())
        throw std::invalid_argument("unbounded isolating interval");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    Rat lo = iv.lo.value, hi = iv.hi.value;
    int slo = sign_at(p, lo);
    // One root in (lo, hi]; p(lo) != 0 since lo is excluded.
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) {
            // rational root exactly at mid
            Rat nl = mid - eps / 2;
            if (nl < lo) nl = lo;
            return {ExtRational::finite(nl), ExtRational::finite(mid)};
        }
        if (sm != slo) {
            hi = mid;
        } else {
            lo = mid;
            slo = sm;
        }
    }
    return {ExtRational::finite(lo), ExtRational::finite(hi)};
}

}  // namespace algcensus

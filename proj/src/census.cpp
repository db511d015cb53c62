#include "algcensus/census.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "algcensus/parallel.hpp"

namespace algcensus {

namespace {

using boost::multiprecision::int256_t;

constexpr int kExp = CensusSet::kCellExp;

// ---- exact sign of p at the dyadic point k * 2^-kExp ---------------------
// Homogeneous evaluation in 256-bit integers.  Safe for degree <= 5,
// |coefficients| <= 2^20 and |k| <= 2^47, which covers every census in the
// supported envelope with room to spare.

int sign_at_cell_pt(const int32_t* c, int deg, int64_t k) {
    const int256_t v = int256_t(1) << kExp;
    int256_t acc = 0;
    int256_t vp = 1;
    for (int i = deg; i >= 0; --i) {
        acc = acc * k + c[i] * vp;
        if (i > 0) vp *= v;
    }
    if (acc == 0) return 0;
    return acc < 0 ? -1 : 1;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// floor(x * 2^kExp), saturated to int64 (cells live well inside the range)
int64_t cell_floor(const Rat& x) {
    Int num = rat_num(x) << kExp;
    Int f = floor_div(num, rat_den(x));
    if (f > std::numeric_limits<int64_t>::max() - 2) return std::numeric_limits<int64_t>::max() - 2;
    if (f < std::numeric_limits<int64_t>::min() + 2) return std::numeric_limits<int64_t>::min() + 2;
    return static_cast<int64_t>(f);
}

// ---- small-integer primality filters --------------------------------------

struct SmallVec {
    int deg;
    std::array<int64_t, 6> c;  // constant first
};

long long content_ll(const SmallVec& p) {
    long long g = 0;
    for (int i = 0; i <= p.deg; ++i) {
        g = std::gcd(g, p.c[i]);
        if (g == 1) return 1;
    }
    return g;
}

bool is_square_ll(long long v) {
    if (v < 0) return false;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    for (long long t = std::max(0LL, s - 2); t <= s + 2; ++t)
        if (t * t == v) return true;
    return false;
}

std::vector<long long> divisors_ll(long long v) {
    if (v < 0) v = -v;
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            small.push_back(d);
            if (d != v / d) large.push_back(v / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// evaluation of a small poly at u/v times v^deg, in 128-bit
__int128 eval_homog_ll(const SmallVec& p, long long u, long long v) {
    __int128 acc = 0;
    __int128 vp = 1;
    for (int i = p.deg; i >= 0; --i) {
        acc = acc * u + static_cast<__int128>(p.c[i]) * vp;
        if (i > 0) vp *= v;
    }
    return acc;
}

bool has_rational_root_ll(const SmallVec& p) {
    if (p.c[0] == 0) return true;
    auto us = divisors_ll(p.c[0]);
    auto vs = divisors_ll(p.c[p.deg]);
    for (long long v : vs)
        for (long long u : us) {
            if (std::gcd(u, v) != 1) continue;
            if (eval_homog_ll(p, u, v) == 0) return true;
            if (eval_homog_ll(p, -u, v) == 0) return true;
        }
    return false;
}

IntPoly to_int_poly(const SmallVec& p) {
    std::vector<Int> c(p.deg + 1);
    for (int i = 0; i <= p.deg; ++i) c[i] = p.c[i];
    return IntPoly(std::move(c));
}

// reducibility of the primitive part over Q; p need not be primitive
bool reducible_primitive_part(const SmallVec& p) {
    if (p.deg == 1) return false;
    if (p.deg == 2) {
        long long disc = p.c[1] * p.c[1] - 4 * p.c[2] * p.c[0];
        return is_square_ll(disc);
    }
    long long g = content_ll(p);
    SmallVec q = p;
    if (g > 1)
        for (int i = 0; i <= p.deg; ++i) q.c[i] /= g;
    if (p.deg == 3) return has_rational_root_ll(q);
    return !is_irreducible(to_int_poly(q));
}

bool prime_small(const SmallVec& p) {
    if (content_ll(p) != 1) return false;
    if (p.deg == 1) return true;
    if (p.deg == 2) {
        long long disc = p.c[1] * p.c[1] - 4 * p.c[2] * p.c[0];
        return !is_square_ll(disc);
    }
    if (p.deg == 3) return !has_rational_root_ll(p);
    return is_irreducible(to_int_poly(p));
}

// mirror under x -> -x with the leading sign normalized back to positive
SmallVec mirror_of(const SmallVec& p) {
    SmallVec m = p;
    for (int j = 0; j <= p.deg; ++j)
        if ((p.deg - j) & 1) m.c[j] = -m.c[j];
    return m;
}

// canonical <=> p lexicographically (from the top coefficient down) no
// larger than its mirror; returns +1 canonical strict, 0 self-mirror, -1 skip
int canonical_state(const SmallVec& p, const SmallVec& m) {
    for (int j = p.deg; j >= 0; --j) {
        if (p.c[j] < m.c[j]) return 1;
        if (p.c[j] > m.c[j]) return -1;
    }
    return 0;
}

// ---- root cells ------------------------------------------------------------

// Certify that the open-left cell (k, k+1] * 2^-kExp, contained in the
// isolating range, traps the root: sign change or exact zero at the right
// endpoint.
bool cell_certified(const int32_t* c, int deg, int64_t k) {
    int sl = sign_at_cell_pt(c, deg, k);
    int sr = sign_at_cell_pt(c, deg, k + 1);
    if (sl == 0) return false;  // root at the excluded endpoint: wrong cell
    return sr == 0 || sl != sr;
}

struct CellScratch {
    std::array<int32_t, 6> c32;
    int deg;
};

// Exact fallback: dyadic bisection of the isolating interval down to a
// single cell.  lo/hi are exact rationals with p(lo) != 0.
int64_t exact_bisect_cell(const IntPoly& p, Rat lo, Rat hi) {
    int slo = sign_at(p, lo);
    for (;;) {
        Int k = floor_div(rat_num(lo) << kExp, rat_den(lo));
        Rat cell_hi = Rat(k + 1, Int(1) << kExp);
        if (hi <= cell_hi) return static_cast<int64_t>(k);
        Rat mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) {
            // rational root exactly at mid: cell ends at mid
            Int km = floor_div(rat_num(mid) << kExp, rat_den(mid));
            Rat mid_cell = Rat(km, Int(1) << kExp);
            return static_cast<int64_t>(mid == mid_cell ? km - 1 : km);
        }
        if (sm != slo)
            hi = mid;
        else
            lo = mid;
    }
}

// Root cell from an isolating interval plus a floating-point guess.
int64_t root_cell(const CellScratch& sc, const IntPoly& p, const Rat& iso_lo, const Rat& iso_hi,
                  double guess) {
    if (std::isfinite(guess)) {
        double scaled = std::ldexp(guess, kExp);
        if (std::abs(scaled) < 9.0e18) {
            int64_t k0 = static_cast<int64_t>(std::floor(scaled));
            for (int64_t k : {k0, k0 - 1, k0 + 1}) {
                Rat cl = Rat(Int(k), Int(1) << kExp);
                Rat ch = Rat(Int(k) + 1, Int(1) << kExp);
                if (iso_lo <= cl && ch <= iso_hi && cell_certified(sc.c32.data(), sc.deg, k))
                    return k;
            }
        }
    }
    return exact_bisect_cell(p, iso_lo, iso_hi);
}

double bisect_double(const IntPoly& p, double lo, double hi) {
    auto evald = [&](double x) {
        double acc = 0;
        for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
            acc = acc * x + static_cast<double>(*it);
        return acc;
    };
    double flo = evald(lo);
    for (int i = 0; i < 80 && hi - lo > std::ldexp(1.0, -kExp - 2); ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = evald(mid);
        if ((fm < 0) == (flo < 0) && fm != 0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// ---- per-block materialization ----------------------------------------------

struct BlockOut {
    long long n_prime = 0;
    std::vector<CensusSet::PolyRec> polys;
    std::vector<int64_t> cells;
};

void emit_poly(BlockOut& out, const SmallVec& p, long long height, const int64_t* cells, int k) {
    CensusSet::PolyRec rec{};
    for (int i = 0; i <= p.deg; ++i) rec.c[i] = static_cast<int32_t>(p.c[i]);
    rec.height = static_cast<int32_t>(height);
    rec.root_begin = static_cast<uint32_t>(out.cells.size());
    rec.root_count = static_cast<uint8_t>(k);
    out.polys.push_back(rec);
    out.cells.insert(out.cells.end(), cells, cells + k);
}

// roots of the mirror are the negated roots; cells reflect as k -> -k-1
// (roots of degree >= 2 prime polys are irrational, never on the cell grid)
void emit_mirror(BlockOut& out, const SmallVec& m, long long height, const int64_t* cells, int k) {
    std::array<int64_t, 5> mc;
    for (int i = 0; i < k; ++i) mc[i] = -cells[k - 1 - i] - 1;
    emit_poly(out, m, height, mc.data(), k);
}

// process one coefficient vector known to be prime; computes root cells and
// emits p (and its mirror when distinct)
void process_prime(BlockOut& out, const SmallVec& p, bool with_mirror, const SmallVec& m) {
    long long height = 0;
    for (int i = 0; i <= p.deg; ++i) height = std::max(height, std::llabs(p.c[i]));

    std::array<int64_t, 5> cells;
    int nroots = 0;

    if (p.deg == 1) {
        Rat root(Int(-p.c[0]), Int(p.c[1]));
        Int k = floor_div(rat_num(root) << kExp, rat_den(root));
        Rat cell_lo = Rat(k, Int(1) << kExp);
        if (root == cell_lo) --k;  // root sits on the grid: it closes cell k-1
        cells[nroots++] = static_cast<int64_t>(k);
    } else if (p.deg == 2) {
        const double a = static_cast<double>(p.c[2]);
        const double b = static_cast<double>(p.c[1]);
        const double cc = static_cast<double>(p.c[0]);
        const double disc = b * b - 4 * a * cc;
        if (disc <= 0) {
            // reducible squares were filtered, so disc < 0: no real roots
        } else {
            const double sq = std::sqrt(disc);
            double r1, r2;
            // stable quadratic roots
            const double qq = -0.5 * (b + (b >= 0 ? sq : -sq));
            r1 = qq / a;
            r2 = cc / qq;
            if (r1 > r2) std::swap(r1, r2);
            CellScratch sc{};
            sc.deg = 2;
            for (int i = 0; i <= 2; ++i) sc.c32[i] = static_cast<int32_t>(p.c[i]);
            IntPoly ip = to_int_poly(p);
            for (double r : {r1, r2}) {
                bool done = false;
                double scaled = std::ldexp(r, kExp);
                if (std::abs(scaled) < 9.0e18) {
                    int64_t k0 = static_cast<int64_t>(std::floor(scaled));
                    for (int64_t k : {k0, k0 - 1, k0 + 1}) {
                        if (cell_certified(sc.c32.data(), 2, k)) {
                            cells[nroots++] = k;
                            done = true;
                            break;
                        }
                    }
                }
                if (!done) {
                    // fall back to full isolation for this polynomial
                    nroots = 0;
                    auto ivs = isolate_roots(ip);
                    for (const auto& iv : ivs) {
                        double g = bisect_double(ip, iv.lo.approx(), iv.hi.approx());
                        cells[nroots++] = root_cell(sc, ip, iv.lo.value, iv.hi.value, g);
                    }
                    break;
                }
            }
            // two roots in one cell would break the ordering invariants
            if (nroots == 2 && cells[0] == cells[1])
                throw std::runtime_error("root separation below cell width");
            if (nroots == 2 && cells[0] > cells[1]) std::swap(cells[0], cells[1]);
        }
    } else {
        IntPoly ip = to_int_poly(p);
        CellScratch sc{};
        sc.deg = p.deg;
        for (int i = 0; i <= p.deg; ++i) sc.c32[i] = static_cast<int32_t>(p.c[i]);
        auto ivs = isolate_roots(ip);
        for (const auto& iv : ivs) {
            double g = bisect_double(ip, iv.lo.approx(), iv.hi.approx());
            cells[nroots++] = root_cell(sc, ip, iv.lo.value, iv.hi.value, g);
        }
        for (int i = 0; i + 1 < nroots; ++i)
            if (cells[i] >= cells[i + 1]) throw std::runtime_error("root separation below cell width");
    }

    out.n_prime += with_mirror ? 2 : 1;
    if (nroots == 0) return;
    emit_poly(out, p, height, cells.data(), nroots);
    if (with_mirror) emit_mirror(out, m, height, cells.data(), nroots);
}

// odometer over coefficients idx..0, each in [-Q, Q]
template <typename F>
void for_each_tail(SmallVec& p, int idx, long long Q, F&& fn) {
    if (idx < 0) {
        fn();
        return;
    }
    for (long long v = -Q; v <= Q; ++v) {
        p.c[idx] = v;
        for_each_tail(p, idx - 1, Q, fn);
    }
}

void process_block(int n, long long Q, long long an, long long an1, BlockOut& out) {
    SmallVec p{};
    p.deg = n;
    p.c[n] = an;
    if (n == 1) {
        for (long long a0 = -Q; a0 <= Q; ++a0) {
            p.c[0] = a0;
            if (std::gcd(an, a0) != 1) continue;
            process_prime(out, p, false, p);
        }
        return;
    }
    if (an1 > 0) return;  // mirror block of (an, -an1): emitted there
    p.c[n - 1] = an1;
    for_each_tail(p, n - 2, Q, [&] {
        SmallVec m = mirror_of(p);
        int state = an1 < 0 ? 1 : canonical_state(p, m);
        if (state < 0) return;
        if (!prime_small(p)) return;
        process_prime(out, p, state > 0, m);
    });
}

void check_build_args(int n, long long Q) {
    if (n < 1 || n > 5) throw std::invalid_argument("degree out of range [1,5]");
    if (Q < 1) throw std::invalid_argument("height bound must be >= 1");
    if (Q > 100000) throw std::invalid_argument("height bound too large to materialize");
    // keeps every 256-bit sign evaluation at cell endpoints within range
    if (n == 5 && Q > 400) throw std::invalid_argument("height bound too large for degree 5");
}

}  // namespace

CensusSet CensusSet::build(int n, long long Q) {
    check_build_args(n, Q);
    CensusSet set;
    set.n_ = n;
    set.q_ = Q;

    const long long width = 2 * Q + 1;
    const long long nblocks = n == 1 ? Q : Q * width;
    std::vector<BlockOut> outs(static_cast<size_t>(nblocks));
    parallel_blocks(nblocks, [&](long long b) {
        long long an = n == 1 ? b + 1 : b / width + 1;
        long long an1 = n == 1 ? 0 : b % width - Q;
        process_block(n, Q, an, an1, outs[static_cast<size_t>(b)]);
    });

    size_t total_polys = 0, total_cells = 0;
    for (const auto& o : outs) {
        total_polys += o.polys.size();
        total_cells += o.cells.size();
        set.n_prime_ += o.n_prime;
    }
    set.polys_.reserve(total_polys);
    set.cells_.reserve(total_cells);
    for (auto& o : outs) {
        set.polys_.insert(set.polys_.end(), o.polys.begin(), o.polys.end());
        set.cells_.insert(set.cells_.end(), o.cells.begin(), o.cells.end());
        o.polys = {};
        o.cells = {};
    }
    // root_begin values were block-local; rewrite them for the concatenation
    {
        size_t cursor = 0;
        set.root_poly_.assign(set.cells_.size(), 0);
        for (size_t pi = 0; pi < set.polys_.size(); ++pi) {
            set.polys_[pi].root_begin = static_cast<uint32_t>(cursor);
            for (int r = 0; r < set.polys_[pi].root_count; ++r)
                set.root_poly_[cursor++] = static_cast<uint32_t>(pi);
        }
        if (cursor != set.cells_.size()) throw std::logic_error("root bookkeeping mismatch");
    }
    set.order_.resize(set.cells_.size());
    std::iota(set.order_.begin(), set.order_.end(), 0u);
    std::sort(set.order_.begin(), set.order_.end(), [&](uint32_t a, uint32_t b) {
        if (set.cells_[a] != set.cells_[b]) return set.cells_[a] < set.cells_[b];
        return a < b;
    });
    return set;
}

IntPoly CensusSet::poly_of(uint32_t idx) const {
    const PolyRec& r = polys_[idx];
    std::vector<Int> c(n_ + 1);
    for (int i = 0; i <= n_; ++i) c[i] = r.c[i];
    return IntPoly(std::move(c));
}

bool CensusSet::root_leq(uint32_t root_idx, const Rat& x) const {
    const PolyRec& pr = polys_[root_poly_[root_idx]];
    const int64_t k = cells_[root_idx];
    // root in (l, u], l = k*2^-40; l < x < u here
    std::array<int32_t, 6> c = pr.c;
    IntPoly p;
    {
        std::vector<Int> cc(n_ + 1);
        for (int i = 0; i <= n_; ++i) cc[i] = c[i];
        p = IntPoly(std::move(cc));
    }
    int sx = sign_at(p, x);
    if (sx == 0) return true;  // root exactly at x
    Rat l = Rat(Int(k), Int(1) << kExp);
    return sx != sign_at(p, l);
}

long long CensusSet::count_leq(const ExtRational& x) const {
    if (x.is_neg_inf()) return 0;
    if (x.is_pos_inf()) return root_count();
    const int64_t X = cell_floor(x.value);
    // roots with cell <= X-1 are in; cell >= X+1 out; cell == X exact test
    auto lower = std::lower_bound(order_.begin(), order_.end(), X,
                                  [&](uint32_t idx, int64_t key) { return cells_[idx] < key; });
    long long cnt = static_cast<long long>(lower - order_.begin());
    for (auto it = lower; it != order_.end() && cells_[*it] == X; ++it)
        if (root_leq(*it, x.value)) ++cnt;
    return cnt;
}

long long CensusSet::count_in(const HalfOpenInterval& iv) const {
    return count_leq(iv.hi) - count_leq(iv.lo);
}

std::map<int, long long> CensusSet::roots_per_poly(const HalfOpenInterval& iv) const {
    std::map<int, long long> hist;
    const bool lo_inf = !iv.lo.is_finite(), hi_inf = !iv.hi.is_finite();
    const int64_t Xlo = lo_inf ? 0 : cell_floor(iv.lo.value);
    const int64_t Xhi = hi_inf ? 0 : cell_floor(iv.hi.value);
    auto leq = [&](uint32_t ridx, bool inf_plus, int64_t X, const ExtRational& x) {
        if (inf_plus) return true;
        int64_t c = cells_[ridx];
        if (c <= X - 1) return true;
        if (c >= X + 1) return false;
        return root_leq(ridx, x.value);
    };
    for (uint32_t pi = 0; pi < polys_.size(); ++pi) {
        const PolyRec& pr = polys_[pi];
        int k = 0;
        for (int r = 0; r < pr.root_count; ++r) {
            uint32_t ridx = pr.root_begin + r;
            bool in_hi = leq(ridx, hi_inf, Xhi, iv.hi);
            bool in_lo = lo_inf ? false : leq(ridx, false, Xlo, iv.lo);
            if (in_hi && !in_lo) ++k;
        }
        if (k > 0) ++hist[k];
    }
    return hist;
}

std::vector<long long> CensusSet::bin_counts(const HalfOpenInterval& iv, int bins) const {
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");
    if (!iv.lo.is_finite() || !iv.hi.is_finite())
        throw std::invalid_argument("bins need a bounded interval");
    std::vector<long long> cum(bins + 1);
    for (int i = 0; i <= bins; ++i) {
        Rat t = iv.lo.value + (iv.hi.value - iv.lo.value) * Rat(i, bins);
        cum[i] = count_leq(ExtRational::finite(t));
    }
    std::vector<long long> out(bins);
    for (int i = 0; i < bins; ++i) out[i] = cum[i + 1] - cum[i];
    return out;
}

// ---- cache -------------------------------------------------------------------

namespace {
std::mutex g_cache_mu;
std::list<std::pair<std::pair<int, long long>, std::shared_ptr<const CensusSet>>> g_cache;
}  // namespace

std::shared_ptr<const CensusSet> census(int n, long long Q) {
    {
        std::lock_guard<std::mutex> lk(g_cache_mu);
        for (auto it = g_cache.begin(); it != g_cache.end(); ++it)
            if (it->first == std::make_pair(n, Q)) {
                auto sp = it->second;
                g_cache.splice(g_cache.begin(), g_cache, it);
                return sp;
            }
    }
    auto sp = std::make_shared<const CensusSet>(CensusSet::build(n, Q));
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_cache.emplace_front(std::make_pair(n, Q), sp);
    while (g_cache.size() > 3) g_cache.pop_back();
    return sp;
}

void census_cache_clear() {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_cache.clear();
}

// ---- streaming enumeration ----------------------------------------------------

void enumerate_prime_polys(int n, long long Q, int shard, int nshards,
                           const std::function<void(const IntPoly&)>& yield) {
    check_build_args(n, Q);
    if (nshards < 1 || shard < 0 || shard >= nshards)
        throw std::invalid_argument("bad shard spec");
    const long long width = 2 * Q + 1;
    const long long nblocks = n == 1 ? Q : Q * width;
    for (long long b = shard; b < nblocks; b += nshards) {
        long long an = n == 1 ? b + 1 : b / width + 1;
        long long an1 = n == 1 ? 0 : b % width - Q;
        SmallVec p{};
        p.deg = n;
        p.c[n] = an;
        if (n == 1) {
            for (long long a0 = -Q; a0 <= Q; ++a0) {
                p.c[0] = a0;
                if (std::gcd(an, a0) == 1) yield(to_int_poly(p));
            }
            continue;
        }
        if (an1 > 0) continue;
        p.c[n - 1] = an1;
        for_each_tail(p, n - 2, Q, [&] {
            SmallVec m = mirror_of(p);
            int state = an1 < 0 ? 1 : canonical_state(p, m);
            if (state < 0) return;
            if (!prime_small(p)) return;
            yield(to_int_poly(p));
            if (state > 0) yield(to_int_poly(m));
        });
    }
}

long long phi_count(int n, long long Q, const HalfOpenInterval& iv) {
    return census(n, Q)->count_in(iv);
}

// ---- reducible count -----------------------------------------------------------

long long count_reducible(int n, long long Q) {
    check_build_args(n, Q);
    if (n == 1) return 0;
    const long long width = 2 * Q + 1;
    const long long nblocks = Q * width;
    std::vector<long long> counts(static_cast<size_t>(nblocks), 0);
    parallel_blocks(nblocks, [&](long long b) {
        long long an = b / width + 1;
        long long an1 = b % width - Q;
        if (an1 > 0) return;
        SmallVec p{};
        p.deg = n;
        p.c[n] = an;
        p.c[n - 1] = an1;
        long long local = 0;
        for_each_tail(p, n - 2, Q, [&] {
            SmallVec m = mirror_of(p);
            int state = an1 < 0 ? 1 : canonical_state(p, m);
            if (state < 0) return;
            if (reducible_primitive_part(p)) local += state > 0 ? 2 : 1;
        });
        counts[static_cast<size_t>(b)] = local;
    });
    long long total = 0;
    for (long long c : counts) total += c;
    return 2 * total;  // the a_n <= -1 half mirrors the a_n >= 1 half
}

// ---- ordered sequence -----------------------------------------------------------

namespace {

// exact comparison of two distinct roots sharing a cell, by deepening both
// caging intervals
bool value_less(const IntPoly& p, Rat pl, Rat ph, const IntPoly& q, Rat ql, Rat qh) {
    for (int round = 0; round < 4096; ++round) {
        if (ph <= ql) return true;
        if (qh <= pl) return false;
        Rat pm = (pl + ph) / 2;
        int sp = sign_at(p, pm);
        int spl = sign_at(p, pl);
        if (sp == 0) {
            pl = pm;
            ph = pm;  // exact rational root
        } else if (sp != spl) {
            ph = pm;
        } else {
            pl = pm;
        }
        Rat qm = (ql + qh) / 2;
        int sq = sign_at(q, qm);
        int sql = sign_at(q, ql);
        if (sq == 0) {
            ql = qm;
            qh = qm;
        } else if (sq != sql) {
            qh = qm;
        } else {
            ql = qm;
        }
        if (pl == ph && ql == qh) return pl < ql;
    }
    throw std::logic_error("could not separate two census values");
}

}  // namespace

std::vector<AlgebraicNumber> algebraic_sequence(int n, long long N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    long long Q = 1;
    std::shared_ptr<const CensusSet> set;
    for (;;) {
        set = census(n, Q);
        if (set->root_count() >= N) break;
        ++Q;
        if (Q > 100000) throw std::invalid_argument("sequence too long to materialize");
    }
    struct Item {
        int32_t height;
        int64_t cell;
        uint32_t root_idx;
    };
    std::vector<Item> items;
    items.reserve(static_cast<size_t>(set->root_count()));
    for (uint32_t pi = 0; pi < set->polys().size(); ++pi) {
        const auto& pr = set->polys()[pi];
        for (int r = 0; r < pr.root_count; ++r)
            items.push_back({pr.height, set->cell_of(pr.root_begin + r),
                             static_cast<uint32_t>(pr.root_begin + r)});
    }
    const Rat cell_den = Rat(1, Int(1) << kExp);
    auto cage_lo = [&](const Item& it) { return Rat(Int(it.cell)) * cell_den; };
    auto cage_hi = [&](const Item& it) { return Rat(Int(it.cell) + 1) * cell_den; };
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        if (a.height != b.height) return a.height < b.height;
        if (a.cell != b.cell) return a.cell < b.cell;
        if (a.root_idx == b.root_idx) return false;
        IntPoly pa = set->poly_of(set->poly_of_root(a.root_idx));
        IntPoly pb = set->poly_of(set->poly_of_root(b.root_idx));
        if (pa == pb) return false;  // same root reached twice: keep stable
        return value_less(pa, cage_lo(a), cage_hi(a), pb, cage_lo(b), cage_hi(b));
    });
    std::vector<AlgebraicNumber> seq;
    seq.reserve(static_cast<size_t>(N));
    for (long long i = 0; i < N; ++i) {
        const Item& it = items[static_cast<size_t>(i)];
        AlgebraicNumber a;
        a.minpoly = set->poly_of(set->poly_of_root(it.root_idx));
        a.lo = cage_lo(it);
        a.hi = cage_hi(it);
        a.height = it.height;
        a.approx = std::ldexp(static_cast<double>(it.cell) + 0.5, -kExp);
        seq.push_back(std::move(a));
    }
    return seq;
}

long long sequence_count_in(const std::vector<AlgebraicNumber>& seq, const HalfOpenInterval& iv) {
    auto leq = [](const AlgebraicNumber& a, const ExtRational& x) {
        if (x.is_pos_inf()) return true;
        if (x.is_neg_inf()) return false;
        const Rat& v = x.value;
        if (a.hi <= v) return true;
        if (v <= a.lo) return false;
        int sx = sign_at(a.minpoly, v);
        if (sx == 0) return true;
        return sx != sign_at(a.minpoly, a.lo);
    };
    long long cnt = 0;
    for (const auto& a : seq)
        if (leq(a, iv.hi) && !leq(a, iv.lo)) ++cnt;
    return cnt;
}

}  // namespace algcensus

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "algcensus/int_poly.hpp"

// Irreducibility over Q for primitive integer polynomials.
//
// Pipeline: cheap filters first (vanishing constant term, rational root
// test, degree-2 discriminant), then factor degree patterns modulo small
// primes, and only if those are inconclusive the exact Kronecker
// interpolation search.  The mod-p patterns can only certify irreducibility;
// every "reducible" verdict comes from an exhibited exact factor.

namespace algcensus {

namespace {

bool is_perfect_square(const Int& v) {
    if (v < 0) return false;
    Int s = boost::multiprecision::sqrt(v);
    return s * s == v;
}

bool fits_ll(const Int& v) {
    return v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max();
}

std::vector<long long> positive_divisors(long long v) {
    if (v < 0) v = -v;
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d != v / d) large.push_back(v / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// ---- rational root test ------------------------------------------------

// Requires a_0 != 0 and both |a_0|, |lead| to fit in long long.
bool has_rational_root(const IntPoly& p) {
    auto us = positive_divisors(static_cast<long long>(p.c.front()));
    auto vs = positive_divisors(static_cast<long long>(p.lead()));
    for (long long v : vs) {
        for (long long u : us) {
            if (std::gcd(u, v) != 1) continue;
            if (sign_at(p, Rat(u, v)) == 0) return true;
            if (sign_at(p, Rat(-u, v)) == 0) return true;
        }
    }
    return false;
}

// ---- factor degree patterns mod small primes ----------------------------

using ModPoly = std::vector<int>;  // coefficients in [0, q), constant first

int mod_inv(int a, int q) {
    int r = 1;
    for (int e = q - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % q;
        a = a * a % q;
    }
    return r;
}

void mp_normalize(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f by monic g, in place
ModPoly mp_rem(ModPoly f, const ModPoly& g, int q) {
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        int k = static_cast<int>(f.size()) - 1 - dg;
        int c = f.back();
        if (c != 0)
            for (int j = 0; j <= dg; ++j) f[k + j] = ((f[k + j] - c * g[j]) % q + q) % q;
        f.pop_back();
        mp_normalize(f);
        if (f.empty()) break;
    }
    return f;
}

ModPoly mp_quot_exact(const ModPoly& f, const ModPoly& g, int q) {
    ModPoly r = f;
    const int dg = static_cast<int>(g.size()) - 1;
    ModPoly quot(f.size() - g.size() + 1, 0);
    for (int k = static_cast<int>(r.size()) - 1 - dg; k >= 0; --k) {
        int c = r[k + dg];
        quot[k] = c;
        if (c != 0)
            for (int j = 0; j <= dg; ++j) r[k + j] = ((r[k + j] - c * g[j]) % q + q) % q;
    }
    return quot;
}

bool mp_has_root(const ModPoly& f, int q) {
    for (int x = 0; x < q; ++x) {
        int acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % q;
        if (acc == 0) return true;
    }
    return false;
}

// monic irreducibles of degree 1 and 2 over F_q, cached per prime
struct SmallIrreducibles {
    std::vector<ModPoly> deg1, deg2;
};

const SmallIrreducibles& small_irreducibles(int q) {
    static std::array<std::optional<SmallIrreducibles>, 14> cache;
    auto& slot = cache[q];
    if (!slot) {
        SmallIrreducibles si;
        for (int a = 0; a < q; ++a) si.deg1.push_back({(q - a) % q, 1});  // x - a
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                ModPoly f{c, b, 1};
                if (!mp_has_root(f, q)) si.deg2.push_back(f);
            }
        slot = std::move(si);
    }
    return *slot;
}

// Multiset of irreducible factor degrees of p mod q, or nullopt when the
// residual after removing degree <= 2 factors is too large to classify.
std::optional<std::vector<int>> factor_degrees_mod(const IntPoly& p, int q) {
    ModPoly f(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        long long r = static_cast<long long>(p.c[i] % q);
        f[i] = static_cast<int>((r % q + q) % q);
    }
    mp_normalize(f);
    if (static_cast<int>(f.size()) - 1 != p.degree()) return std::nullopt;  // q | lead
    int il = mod_inv(f.back(), q);
    for (int& a : f) a = a * il % q;

    std::vector<int> pattern;
    const auto& si = small_irreducibles(q);
    for (const auto& g : si.deg1)
        while (f.size() >= g.size() && mp_rem(f, g, q).empty()) {
            f = mp_quot_exact(f, g, q);
            pattern.push_back(1);
        }
    for (const auto& g : si.deg2)
        while (f.size() >= g.size() && mp_rem(f, g, q).empty()) {
            f = mp_quot_exact(f, g, q);
            pattern.push_back(2);
        }
    int rem_deg = static_cast<int>(f.size()) - 1;
    if (rem_deg > 5) return std::nullopt;  // could be 3+3; not needed below degree 6
    if (rem_deg > 0) pattern.push_back(rem_deg);
    return pattern;
}

// degrees expressible as a subset sum of the pattern
std::vector<bool> subset_sums(const std::vector<int>& pattern, int dmax) {
    std::vector<bool> can(dmax + 1, false);
    can[0] = true;
    for (int d : pattern)
        for (int s = dmax; s >= d; --s)
            if (can[s - d]) can[s] = true;
    return can;
}

// ---- Kronecker interpolation --------------------------------------------

// True iff p has an integer polynomial factor of degree in [1, df].
bool kronecker_factor_search(const IntPoly& p, int df, bool allow_deg1) {
    std::vector<Rat> xs;
    xs.push_back(Rat(0));
    for (int k = 1; static_cast<int>(xs.size()) < df + 1; ++k) {
        xs.push_back(Rat(k));
        if (static_cast<int>(xs.size()) < df + 1) xs.push_back(Rat(-k));
    }
    std::vector<std::vector<Int>> choices(df + 1);
    for (int i = 0; i <= df; ++i) {
        Rat v = eval(p, xs[i]);
        Int vi = rat_num(v);
        if (vi == 0) return true;  // integer root, hence a linear factor
        if (!fits_ll(vi)) throw std::invalid_argument("coefficients too large for factor search");
        auto divs = positive_divisors(static_cast<long long>(vi));
        for (long long d : divs) {
            choices[i].push_back(Int(d));
            if (i > 0) choices[i].push_back(Int(-d));  // sign of the factor fixed at x=0
        }
    }
    // iterate the tuple product
    std::vector<size_t> idx(df + 1, 0);
    std::vector<Rat> ys(df + 1);
    while (true) {
        for (int i = 0; i <= df; ++i) ys[i] = Rat(choices[i][idx[i]]);
        // Lagrange interpolation through (xs, ys)
        std::vector<Rat> g(df + 1, Rat(0));
        for (int i = 0; i <= df; ++i) {
            std::vector<Rat> basis{Rat(1)};
            Rat denom = 1;
            for (int j = 0; j <= df; ++j) {
                if (j == i) continue;
                basis.resize(basis.size() + 1, Rat(0));
                for (int k = static_cast<int>(basis.size()) - 1; k > 0; --k)
                    basis[k] = basis[k - 1] - xs[j] * basis[k];
                basis[0] = -xs[j] * basis[0];
                denom *= xs[i] - xs[j];
            }
            Rat w = ys[i] / denom;
            for (int k = 0; k <= df; ++k) g[k] += w * basis[k];
        }
        bool integral = true;
        for (const Rat& c : g)
            if (rat_den(c) != 1) {
                integral = false;
                break;
            }
        if (integral) {
            std::vector<Int> gc(df + 1);
            for (int k = 0; k <= df; ++k) gc[k] = rat_num(g[k]);
            IntPoly cand(std::move(gc));
            if (!cand.is_zero() && cand.degree() >= (allow_deg1 ? 1 : 2) &&
                cand.degree() <= df && divides(cand, p))
                return true;
        }
        int pos = df;
        while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return false;
}

}  // namespace

bool is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) throw std::invalid_argument("constant polynomial");
    if (content(p) != 1) throw std::invalid_argument("content > 1");
    const int d = p.degree();
    if (d == 1) return true;
    if (p.c.front() == 0) return false;  // x divides

    if (d == 2) {
        Int disc = p.c[1] * p.c[1] - 4 * p.c[2] * p.c[0];
        return !is_perfect_square(disc);
    }

    bool small_coeffs = fits_ll(p.c.front()) && fits_ll(p.lead());
    bool deg1_ruled_out = false;
    if (small_coeffs) {
        if (has_rational_root(p)) return false;
        deg1_ruled_out = true;
        if (d == 3) return true;
    }

    // candidate proper factor degrees still in play
    const int half = d / 2;
    std::vector<bool> candidate(half + 1, true);
    candidate[0] = false;
    if (deg1_ruled_out && half >= 1) candidate[1] = false;

    for (int q : {2, 3, 5, 7, 11, 13}) {
        auto pattern = factor_degrees_mod(p, q);
        if (!pattern) continue;
        // a split (e, d-e) survives only if e is a subset sum of the factor
        // degree pattern (the complement then sums to d-e automatically)
        auto can = subset_sums(*pattern, half);
        bool any = false;
        for (int e = 1; e <= half; ++e) {
            candidate[e] = candidate[e] && can[e];
            any = any || candidate[e];
        }
        if (!any) return true;
    }

    int max_candidate = 0;
    for (int e = 1; e <= half; ++e)
        if (candidate[e]) max_candidate = e;
    if (max_candidate == 0) return true;
    return !kronecker_factor_search(p, max_candidate, !deg1_ruled_out);
}

}  // namespace algcensus

#include "algcensus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "algcensus/density.hpp"
#include "algcensus/parallel.hpp"

namespace algcensus {

namespace {

int total_degree(const std::vector<int>& exps) {
    int s = 0;
    for (int e : exps) s += e;
    return s;
}

Int int_pow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Region::Region(int dim, std::vector<Inequality> inequalities)
    : dim_(dim), ineqs_(std::move(inequalities)), degree_bound_(0) {
    if (dim < 1 || dim > 6) throw std::invalid_argument("dimension must be in 1..6");
    for (const auto& ineq : ineqs_)
        for (const auto& [c, exps] : ineq) {
            if (static_cast<int>(exps.size()) != dim)
                throw std::invalid_argument("exponent vector length must equal the dimension");
            for (int e : exps)
                if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
            degree_bound_ = std::max(degree_bound_, total_degree(exps));
        }
}

bool Region::contains(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("point dimension mismatch");
    for (const Rat& v : x)
        if (v > 1 || v < -1) return false;
    for (const auto& ineq : ineqs_) {
        Rat acc = 0;
        for (const auto& [c, exps] : ineq) {
            Rat term = c;
            for (int j = 0; j < dim_; ++j)
                for (int e = 0; e < exps[j]; ++e) term *= x[static_cast<size_t>(j)];
            acc += term;
        }
        if (acc < 0) return false;
    }
    return true;
}

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
    int sign = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

namespace {

struct ClearedTerm {
    Int coeff;
    std::vector<int> exps;
};

// number of nonzero integer x with (n/Q) x in the region: every constraint
// F_i((n/Q) x) >= 0 is cleared to an integer polynomial by multiplying
// through with the coefficient denominators and Q^{deg F_i}
long long count_scaled(const Region& r, long long Q, long long n) {
    const int d = r.dim();
    const long long B = Q / n;  // box bound |x_j| <= floor(Q/n)
    if (B == 0) return 0;

    std::vector<std::vector<ClearedTerm>> forms;
    for (const auto& ineq : r.inequalities()) {
        int m = 0;
        Int lcm = 1;
        for (const auto& [c, exps] : ineq) {
            m = std::max(m, total_degree(exps));
            Int den = rat_den(c);
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<ClearedTerm> f;
        for (const auto& [c, exps] : ineq) {
            const int s = total_degree(exps);
            Int ic = rat_num(c) * (lcm / rat_den(c));
            ic *= int_pow(Int(n), s);
            ic *= int_pow(Int(Q), m - s);
            f.push_back({std::move(ic), exps});
        }
        forms.push_back(std::move(f));
    }

    const long long slabs = 2 * B + 1;
    std::vector<long long> per(static_cast<size_t>(slabs), 0);
    parallel_blocks(slabs, [&](long long si) {
        std::vector<long long> x(static_cast<size_t>(d));
        x[0] = si - B;
        for (int j = 1; j < d; ++j) x[static_cast<size_t>(j)] = -B;
        long long cnt = 0;
        for (;;) {
            bool zero = true;
            for (int j = 0; j < d; ++j)
                if (x[static_cast<size_t>(j)]) {
                    zero = false;
                    break;
                }
            if (!zero) {
                bool ok = true;
                for (const auto& f : forms) {
                    Int acc = 0;
                    for (const auto& t : f) {
                        Int mv = t.coeff;
                        for (int j = 0; j < d; ++j)
                            for (int e = 0; e < t.exps[static_cast<size_t>(j)]; ++e)
                                mv *= x[static_cast<size_t>(j)];
                        acc += mv;
                    }
                    if (acc < 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++cnt;
            }
            int pos = 1;
            while (pos < d && x[static_cast<size_t>(pos)] == B) x[static_cast<size_t>(pos++)] = -B;
            if (pos == d) break;
            ++x[static_cast<size_t>(pos)];
        }
        per[static_cast<size_t>(si)] = cnt;
    });
    long long total = 0;
    for (long long c : per) total += c;
    return total;
}

void check_q(long long Q) {
    if (Q < 1) throw std::invalid_argument("scale must be >= 1");
}

}  // namespace

long long count_points(const Region& region, long long Q) {
    check_q(Q);
    return count_scaled(region, Q, 1);
}

long long count_primitive(const Region& region, long long Q) {
    check_q(Q);
    long long total = 0;
    for (long long n = 1; n <= Q; ++n) {
        const int mu = mobius(n);
        if (mu) total += mu * count_scaled(region, Q, n);
    }
    return total;
}

double measure_estimate(const Region& region, long long samples) {
    if (samples < 1000) throw std::invalid_argument("need at least 1000 samples");
    static const int bases[6] = {2, 3, 5, 7, 11, 13};
    const int d = region.dim();

    // double image of the constraints; a measure estimate tolerates the
    // boundary rounding that the exact counters must avoid
    struct DTerm {
        double c;
        std::vector<int> exps;
    };
    std::vector<std::vector<DTerm>> forms;
    for (const auto& ineq : region.inequalities()) {
        std::vector<DTerm> f;
        for (const auto& [c, exps] : ineq)
            f.push_back({static_cast<double>(c), exps});
        forms.push_back(std::move(f));
    }

    auto radical_inverse = [](int base, unsigned long long i) {
        double r = 0, f = 1.0 / base;
        while (i) {
            r += static_cast<double>(i % base) * f;
            i /= base;
            f /= base;
        }
        return r;
    };

    const long long chunk = 4096;
    const long long nchunks = (samples + chunk - 1) / chunk;
    std::vector<long long> hits(static_cast<size_t>(nchunks), 0);
    parallel_blocks(nchunks, [&](long long ci) {
        const long long beg = ci * chunk;
        const long long end = std::min(samples, beg + chunk);
        long long h = 0;
        double x[6];
        for (long long i = beg; i < end; ++i) {
            for (int j = 0; j < d; ++j)
                x[j] = 2 * radical_inverse(bases[j], static_cast<unsigned long long>(i) + 1) - 1;
            bool ok = true;
            for (const auto& f : forms) {
                double acc = 0;
                for (const auto& t : f) {
                    double mv = t.c;
                    for (int j = 0; j < d; ++j)
                        for (int e = 0; e < t.exps[static_cast<size_t>(j)]; ++e) mv *= x[j];
                    acc += mv;
                }
                if (acc < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++h;
        }
        hits[static_cast<size_t>(ci)] = h;
    });
    long long total = 0;
    for (long long h : hits) total += h;
    return std::ldexp(static_cast<double>(total) / static_cast<double>(samples), d);
}

LatticeCountReport lattice_report(const Region& region, long long Q, long long samples) {
    check_q(Q);
    if (region.dim() < 2) throw std::invalid_argument("report needs dimension >= 2");
    LatticeCountReport rep;
    rep.q = Q;
    rep.total_points = count_points(region, Q);
    rep.primitive_points = count_primitive(region, Q);
    rep.measure_estimate = measure_estimate(region, samples);
    rep.main_term =
        std::pow(static_cast<double>(Q), region.dim()) * rep.measure_estimate / zeta(region.dim());
    return rep;
}

}  // namespace algcensus

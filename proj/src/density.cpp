#include "algcensus/density.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "algcensus/bigint.hpp"
#include "algcensus/int_poly.hpp"
#include "algcensus/parallel.hpp"
#include "algcensus/sturm.hpp"

namespace algcensus {

std::string to_string(DensityMethod m) {
    switch (m) {
        case DensityMethod::closed_form: return "closed_form";
        case DensityMethod::qmc: return "qmc";
        case DensityMethod::n1_formula: return "n1_formula";
        case DensityMethod::sphere_formula: return "sphere_formula";
        case DensityMethod::sphere_series: return "sphere_series";
    }
    return "unknown";
}

double zeta(double s) {
    if (!(s > 1)) throw std::invalid_argument("zeta needs s > 1");
    const double N = 64;
    double sum = 0;
    for (int k = 63; k >= 1; --k) sum += std::pow(k, -s);
    // Euler-Maclaurin tail from N
    const double ns = std::pow(N, -s);
    double tail = N * ns / (s - 1) + ns / 2 + s * ns / N / 12;
    tail -= s * (s + 1) * (s + 2) * ns / (N * N * N) / 720;
    tail += s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * ns / (N * N * N * N * N) / 30240;
    return sum + tail;
}

namespace {

// bisection for an increasing function on [0, 1] with f(0) < 0 <= f(1)
template <typename F>
double bisect01(F&& f) {
    double lo = 0, hi = 1;
    double fhi = f(hi);
    if (fhi == 0) return 1;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if (fm == 0) return mid;
        if (fm < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void check_degree(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
}

}  // namespace

double t0(int n) {
    check_degree(n);
    return bisect01([n](double t) {
        double s = 0, p = 1;
        for (int k = 1; k <= n; ++k) {
            p *= t;
            s += p;
        }
        return s - 1;
    });
}

double t1(int n) {
    if (n < 2) throw std::invalid_argument("t1 needs degree >= 2");
    return bisect01([n](double t) {
        double s = 0, p = 1;
        for (int k = 2; k <= n; ++k) {
            s += k * p * t;  // k * t^{k-1}
            p *= t;
        }
        return s - 1;
    });
}

double closed_form_radius(int n) {
    check_degree(n);
    return n == 1 ? 1.0 : t1(n);
}

double phi1(double t) { return 1.0 / std::max(1.0, t * t); }

double phi_closed(int n, double t) {
    check_degree(n);
    if (!(std::abs(t) <= closed_form_radius(n) + 1e-12))
        throw std::invalid_argument("outside closed-form region");
    const double t2 = t * t;
    double s = 3, p = 1;
    for (int k = 1; k <= n - 1; ++k) {
        p *= t2;
        s += (k + 1.0) * (k + 1.0) * p;
    }
    return std::ldexp(s / 3.0, n - 1);
}

namespace {

constexpr int kHaltonBases[4] = {2, 3, 5, 7};
constexpr long long kChunk = 4096;

double radical_inverse(int base, unsigned long long i) {
    double r = 0, f = 1.0 / base;
    while (i) {
        r += static_cast<double>(i % base) * f;
        i /= base;
        f /= base;
    }
    return r;
}

double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
    if (hi - lo <= 8) {
        double s = 0;
        for (size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

// integral over p_1 of |p_1 + D| for p_1 in the slab-clipped segment, at
// outer point (p_2..p_n) and parameter a in [0, 1]
double inner_integral(int n, double a, const double* p) {
    auto ramp = [](double z) { return 0.5 * z * std::abs(z); };
    if (a == 0) return 1.0;
    double S = 0, D = 0, ak = a;  // ak = a^{k-1} entering iteration k
    for (int k = 2; k <= n; ++k) {
        D += k * p[k - 2] * ak;
        ak *= a;
        S += p[k - 2] * ak;
    }
    const double lo = std::max(-1.0, (-1.0 - S) / a);
    const double hi = std::min(1.0, (1.0 - S) / a);
    if (hi <= lo) return 0.0;
    return ramp(hi + D) - ramp(lo + D);
}

// Halton-rule estimate with `nodes` points of the reduced integral at
// a = |t| <= 1; deterministic and independent of the worker count
double qmc_estimate(int n, double a, long long nodes) {
    const int dim = n - 1;
    const long long nchunks = (nodes + kChunk - 1) / kChunk;
    std::vector<double> partial(static_cast<size_t>(nchunks), 0.0);
    parallel_blocks(nchunks, [&](long long ci) {
        const long long beg = ci * kChunk;
        const long long end = std::min(nodes, beg + kChunk);
        double s = 0;
        double p[4];
        for (long long i = beg; i < end; ++i) {
            for (int d = 0; d < dim; ++d)
                p[d] = 2 * radical_inverse(kHaltonBases[d], static_cast<unsigned long long>(i) + 1) - 1;
            s += inner_integral(n, a, p);
        }
        partial[static_cast<size_t>(ci)] = s;
    });
    return std::ldexp(pairwise_sum(partial) / static_cast<double>(nodes), n - 1);
}

}  // namespace

DensityEstimate phi_numeric(int n, double t, long long budget) {
    check_degree(n);
    if (budget < 64) throw std::invalid_argument("budget too small");
    if (std::isnan(t)) throw std::invalid_argument("t must be a number");
    if (n == 1) return {phi1(t), 0.0, DensityMethod::n1_formula};

    double a = std::abs(t);
    double scale = 1.0;
    if (a > 1) {
        scale = 1.0 / (a * a);
        a = 1.0 / a;
    }
    if (std::isinf(t)) return {0.0, 0.0, DensityMethod::qmc};
    const double full = qmc_estimate(n, a, budget);
    const double half = qmc_estimate(n, a, budget / 2);
    DensityEstimate est;
    est.value = scale * full;
    est.abs_error = scale * (2 * std::abs(full - half) + 1e-12);
    est.method = DensityMethod::qmc;
    return est;
}

DensityEstimate phi_auto(int n, double t, long long budget) {
    check_degree(n);
    if (n == 1) return {phi1(t), 0.0, DensityMethod::n1_formula};
    if (std::abs(t) <= closed_form_radius(n)) {
        double v = phi_closed(n, t);
        return {v, 1e-15 * v, DensityMethod::closed_form};
    }
    return phi_numeric(n, t, budget);
}

namespace {

// 16-point Gauss-Legendre rule on [-1, 1], generated once by Newton
// iteration on the Legendre recurrence
const std::vector<std::pair<double, double>>& gl16() {
    static const std::vector<std::pair<double, double>> rule = [] {
        const int m = 16;
        std::vector<std::pair<double, double>> r(m);
        for (int i = 0; i < m / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
            double pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = 0;
                for (int j = 0; j < m; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
                }
                pp = m * (z * p0 - p1) / (z * z - 1);
                double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15) break;
            }
            double w = 2.0 / ((1 - z * z) * pp * pp);
            r[i] = {-z, w};
            r[m - 1 - i] = {z, w};
        }
        return r;
    }();
    return rule;
}

// integral of phi_n over [lo, hi] subset of the closed-form region: the
// integrand is a polynomial, so one 16-node panel is exact to rounding
double closed_panel(int n, double lo, double hi) {
    double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
    double s = 0;
    for (const auto& [x, w] : gl16()) s += w * phi_closed(n, mid + rad * x);
    return s * rad;
}

// composite quadrature with phi_numeric values away from the closed region
double numeric_panels(int n, double lo, double hi, long long budget, int panels) {
    double total = 0;
    for (int j = 0; j < panels; ++j) {
        double a = lo + (hi - lo) * j / panels;
        double b = lo + (hi - lo) * (j + 1) / panels;
        double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
        double s = 0;
        for (const auto& [x, w] : gl16()) s += w * phi_numeric(n, mid + rad * x, budget).value;
        total += s * rad;
    }
    return total;
}

// integral of phi_n over [0, y], y in [0, 1]
double integral_0_to(int n, double y, long long budget) {
    if (y <= 0) return 0;
    if (n == 1) return std::min(y, 1.0);
    const double r1 = t1(n), r0 = t0(n);
    double total = 0;
    double a = 0;
    for (double b : {std::min(y, r1), std::min(y, r0), y}) {
        if (b > a) {
            if (b <= r1 + 1e-12)
                total += closed_panel(n, a, b);
            else
                total += numeric_panels(n, a, b, budget, 8);
            a = b;
        }
    }
    return total;
}

double integral_01_cached(int n, long long budget) {
    static std::mutex mu;
    static std::map<std::pair<int, long long>, double> memo;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(n, budget);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    double v = integral_0_to(n, 1.0, budget);
    memo.emplace(key, v);
    return v;
}

// integral of phi_n over [0, x] for x >= 0 (possibly inf), folding x > 1
// back into [0,1] by the inversion symmetry
double half_line_integral(int n, double x, long long budget) {
    if (n == 1) {
        if (std::isinf(x)) return 2.0;
        return x <= 1 ? x : 2.0 - 1.0 / x;
    }
    const double i01 = integral_01_cached(n, budget);
    if (std::isinf(x)) return 2 * i01;
    if (x <= 1) return integral_0_to(n, x, budget);
    return 2 * i01 - integral_0_to(n, 1.0 / x, budget);
}

long long clamp_budget(long long budget) { return std::max<long long>(budget, 64); }

}  // namespace

double gamma_n(int n, long long budget) {
    check_degree(n);
    if (n == 1) return 4.0;
    return 4.0 * integral_01_cached(n, clamp_budget(budget));
}

double rho(int n, double t, long long budget) {
    return phi_auto(n, t, clamp_budget(budget)).value / gamma_n(n, budget);
}

double dist_F(int n, double x, long long budget) {
    check_degree(n);
    if (std::isnan(x)) throw std::invalid_argument("x must be a number");
    if (x < 0) return 1.0 - dist_F(n, -x, budget);
    long long b = clamp_budget(budget);
    if (n == 1) return 0.5 + half_line_integral(1, x, b) / 4.0;
    const double i01 = integral_01_cached(n, b);
    return 0.5 + half_line_integral(n, x, b) / (4.0 * i01);
}

double main_term(int n, long long Q, double lo, double hi, long long budget) {
    check_degree(n);
    if (std::isnan(lo) || std::isnan(hi) || lo > hi)
        throw std::invalid_argument("bad interval");
    if (Q < 0) throw std::invalid_argument("height bound must be >= 0");
    long long b = clamp_budget(budget);
    auto signed_half = [&](double x) {
        return x >= 0 ? half_line_integral(n, x, b) : -half_line_integral(n, -x, b);
    };
    const double mass = signed_half(hi) - signed_half(lo);
    return std::pow(static_cast<double>(Q), n + 1) / (2 * zeta(n + 1.0)) * mass;
}

namespace {

// numerator of the euclidean-norm radicand: ((u^{n+1}-1)/(u-1))^2 - (n+1)^2 u^n
// divided exactly by (u-1)^2; all integer arithmetic
std::vector<long long> sphere_kernel(int n) {
    std::vector<long long> sq(2 * n + 1, 0);  // (1 + u + ... + u^n)^2
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) sq[i + j] += 1;
    sq[n] -= static_cast<long long>(n + 1) * (n + 1);
    // synthetic division by (u - 1), twice; remainders vanish identically
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<long long> q(sq.size() - 1, 0);
        long long acc = 0;
        for (int i = static_cast<int>(sq.size()) - 1; i >= 1; --i) {
            acc += sq[i];
            q[i - 1] = acc;
        }
        sq = std::move(q);
    }
    return sq;  // degree 2n - 2
}

double eval_poly(const std::vector<long long>& c, double u) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + static_cast<double>(*it);
    return acc;
}

}  // namespace

double phi_sphere(int n, double t) {
    check_degree(n);
    if (std::isnan(t)) throw std::invalid_argument("t must be a number");
    const double u = t * t;
    if (std::isinf(u)) return 0.0;
    // numerator and denominator are palindromic in u, so the inversion law
    // phi(1/t) = t^2 phi(t) holds exactly; fold |t| > 1 into [0,1]
    if (u > 1) return phi_sphere(n, 1.0 / std::fabs(t)) / u;
    static std::mutex mu;
    static std::map<int, std::vector<long long>> kernels;
    std::vector<long long> ker;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = kernels.find(n);
        if (it == kernels.end()) it = kernels.emplace(n, sphere_kernel(n)).first;
        ker = it->second;
    }
    double psum = 0, up = 1;
    for (int k = 0; k <= n; ++k) {
        psum += up;
        up *= u;
    }
    const double radicand = std::max(0.0, eval_poly(ker, u)) / (psum * psum);
    const double c = std::pow(M_PI, (n - 1) / 2.0) / std::tgamma((n + 3) / 2.0);
    return c * std::sqrt(radicand);
}

DensityEstimate phi_sphere_est(int n, double t) {
    double v = phi_sphere(n, t);
    return {v, 4e-16 * std::max(1.0, v), DensityMethod::sphere_formula};
}

std::pair<double, double> jacobian_identity_check(const std::vector<double>& b, double alpha,
                                                  double beta) {
    if (b.empty()) throw std::invalid_argument("factor polynomial needs coefficients");
    const int n = static_cast<int>(b.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n + 1, n + 1);
    // column j < n-1: d a / d b_j = coefficients of (x-alpha)(x-beta) x^j
    for (int j = 0; j <= n - 2; ++j) {
        J(j, j) += alpha * beta;
        J(j + 1, j) += -(alpha + beta);
        J(j + 2, j) += 1;
    }
    // d a / d alpha = -(x - beta) g(x), d a / d beta = -(x - alpha) g(x)
    for (int k = 0; k <= n - 1; ++k) {
        const double gk = k <= n - 2 ? b[static_cast<size_t>(k)] : 0.0;
        const double gk1 = k >= 1 ? b[static_cast<size_t>(k - 1)] : 0.0;
        J(k, n - 1) = beta * gk - gk1;
        J(k, n) = alpha * gk - gk1;
    }
    const double lhs = std::abs(J.determinant());
    auto geval = [&](double x) {
        double acc = 0;
        for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    const double rhs = std::abs(alpha - beta) * std::abs(geval(alpha) * geval(beta));
    return {lhs, rhs};
}

namespace {

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// exact integer polynomial equal to 2^s * (c_n x^n + ... + c_0) for the
// common power-of-two denominator 2^s of the double coefficients
IntPoly poly_from_doubles(const double* c, int m) {
    std::vector<Rat> rs(m);
    Int den = 1;
    for (int i = 0; i < m; ++i) {
        rs[i] = Rat(c[i]);  // exact binary expansion
        Int d = rat_den(rs[i]);
        if (d > den) den = d;
    }
    std::vector<Int> cc(m);
    for (int i = 0; i < m; ++i) cc[i] = rat_num(rs[i]) * (den / rat_den(rs[i]));
    return IntPoly(std::move(cc));
}

}  // namespace

McEstimate two_root_measure_mc(int n, double lo, double hi, long long samples, uint64_t seed) {
    check_degree(n);
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    if (hi - lo > 1.0 + 1e-12) throw std::invalid_argument("interval longer than 1");
    if (samples < 1) throw std::invalid_argument("need samples >= 1");

    const HalfOpenInterval range(ExtRational::finite(Rat(lo)), ExtRational::finite(Rat(hi)));
    const long long chunk = 8192;
    const long long nchunks = (samples + chunk - 1) / chunk;
    std::vector<long long> hits(static_cast<size_t>(nchunks), 0);
    parallel_blocks(nchunks, [&](long long ci) {
        const long long beg = ci * chunk;
        const long long end = std::min(samples, beg + chunk);
        long long h = 0;
        double c[6];
        for (long long i = beg; i < end; ++i) {
            for (int j = 0; j <= n; ++j) {
                uint64_t ctr = seed + 0x9e3779b97f4a7c15ULL *
                                          (static_cast<uint64_t>(i) * (n + 1) + j + 1);
                c[j] = 2 * unit_double(mix64(ctr)) - 1;
            }
            IntPoly p = poly_from_doubles(c, n + 1);
            if (p.is_zero() || p.degree() < 1) continue;
            if (count_roots_in(p, range) >= 2) ++h;
        }
        hits[static_cast<size_t>(ci)] = h;
    });
    long long total = 0;
    for (long long h : hits) total += h;
    const double phat = static_cast<double>(total) / static_cast<double>(samples);
    McEstimate out;
    out.estimate = std::ldexp(phat, n + 1);
    out.std_error = std::ldexp(std::sqrt(phat * (1 - phat) / static_cast<double>(samples)), n + 1);
    return out;
}

}  // namespace algcensus

#pragma once

// Brute-force reference implementations used only by the test suite.  These
// are deliberately written as directly as possible, independent of the
// algorithms under test, so that agreement is meaningful.

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "algcensus/int_poly.hpp"

namespace oracle {

using algcensus::Int;
using algcensus::IntPoly;
using algcensus::Rat;

inline std::vector<long long> signed_divisors(long long v) {
    if (v < 0) v = -v;
    std::vector<long long> out;
    for (long long d = 1; d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            out.push_back(-d);
        }
    return out;
}

inline std::vector<long long> positive_divisors(long long v) {
    if (v < 0) v = -v;
    std::vector<long long> out;
    for (long long d = 1; d <= v; ++d)
        if (v % d == 0) out.push_back(d);
    return out;
}

// Exhaustive factor search: does primitive p (degree >= 2, small height)
// split into two integer polynomials of positive degree?  Candidate factors
// are enumerated with the Mahler bound H(f) <= 2^df * sqrt(n+1) * H(p),
// leading coefficient a positive divisor of lead(p) and constant term a
// divisor of p(0).
inline bool reducible_by_search(const IntPoly& p) {
    const int n = p.degree();
    if (p.c.front() == 0) return true;
    const double hp = static_cast<double>(algcensus::height_inf(p));
    auto leads = positive_divisors(static_cast<long long>(p.lead()));
    auto consts = signed_divisors(static_cast<long long>(p.c.front()));
    for (int df = 1; df <= n / 2; ++df) {
        const long long bound =
            static_cast<long long>(std::floor(std::pow(2.0, df) * std::sqrt(n + 1.0) * hp));
        std::vector<Int> f(df + 1);
        for (long long lc : leads) {
            if (lc > bound) continue;
            f[df] = lc;
            for (long long c0 : consts) {
                if (std::abs(c0) > bound) continue;
                f[0] = c0;
                // enumerate middle coefficients in [-bound, bound]
                std::vector<long long> mid(df > 1 ? df - 1 : 0, -bound);
                while (true) {
                    for (int i = 0; i < df - 1; ++i) f[i + 1] = mid[i];
                    auto cand = IntPoly(std::vector<Int>(f));
                    if (!cand.is_zero() && cand.degree() == df && algcensus::divides(cand, p))
                        return true;
                    int pos = df - 2;
                    while (pos >= 0 && mid[pos] == bound) mid[pos--] = -bound;
                    if (pos < 0) break;
                    ++mid[pos];
                }
            }
        }
    }
    return false;
}

// Real roots from the companion matrix.  Returns nullopt when eigenvalue
// imaginary parts fall in the ambiguous zone and the classification is not
// trustworthy.
inline std::optional<std::vector<double>> real_roots_companion(const IntPoly& p) {
    const int n = p.degree();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    const double lead = static_cast<double>(p.lead());
    for (int i = 0; i < n; ++i) {
        C(i, n - 1) = -static_cast<double>(p.c[i]) / lead;
        if (i > 0) C(i, i - 1) = 1.0;
    }
    Eigen::VectorXcd ev = C.eigenvalues();
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        double im = std::abs(ev[i].imag());
        double scale = std::max(1.0, std::abs(ev[i].real()));
        if (im > 1e-9 * scale && im < 1e-5 * scale) return std::nullopt;
        if (im <= 1e-9 * scale) roots.push_back(ev[i].real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace oracle

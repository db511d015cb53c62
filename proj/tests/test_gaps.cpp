#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "algcensus/census.hpp"
#include "algcensus/gaps.hpp"

using namespace algcensus;

namespace {

double loglog_slope(const std::vector<GapProbe>& ps) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : ps) {
        const double x = std::log(static_cast<double>(p.q));
        const double y = std::log(static_cast<double>(p.nearest_distance));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(ps.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

long long count_around(int n, long long Q, const Rat& x0, const Rat& r) {
    return phi_count(
        n, Q, HalfOpenInterval(ExtRational::finite(x0 - r), ExtRational::finite(x0 + r)));
}

}  // namespace

TEST_CASE("nearest distance matches the height-one quadratics") {
    // the four height-1 quadratic irrationals are (+-1 +- sqrt(5))/2
    const double gold = (std::sqrt(5.0) - 1.0) / 2.0;

    GapProbe g0 = nearest_algebraic(2, 1, 0, 1);
    CHECK(g0.n == 2);
    CHECK(g0.q == 1);
    CHECK(g0.a == 0);
    CHECK(g0.b == 1);
    CHECK(g0.nearest_distance > 0);
    const double d0 = static_cast<double>(g0.nearest_distance);
    CHECK(d0 <= gold + 1e-15);
    CHECK(d0 >= gold * (1.0 - 2e-6));
    CHECK(g0.implied_constant == doctest::Approx(d0).epsilon(1e-12));

    GapProbe g1 = nearest_algebraic(2, 1, 1, 1);
    const double d1 = static_cast<double>(g1.nearest_distance);
    CHECK(d1 <= (1.0 - gold) + 1e-15);
    CHECK(d1 >= (1.0 - gold) * (1.0 - 2e-6));
}

TEST_CASE("degree one excludes the probe point itself") {
    struct Row {
        long long q, a, b;
        Rat expect;
    };
    // nearest fraction distinct from a/b with denominator and numerator <= q
    const Row rows[] = {
        {5, 1, 3, Rat(1, 15)},    // 2/5
        {9, 1, 3, Rat(1, 24)},    // 3/8: q=9 itself is a multiple of 3
        {40, 1, 3, Rat(1, 120)},  // 13/40
        {5, 0, 1, Rat(1, 5)},
    };
    for (const auto& r : rows) {
        CAPTURE(r.q);
        CAPTURE(r.a);
        CAPTURE(r.b);
        GapProbe g = nearest_algebraic(1, r.q, r.a, r.b);
        CHECK(g.nearest_distance > 0);
        CHECK(g.nearest_distance <= r.expect);
        CHECK(static_cast<double>(g.nearest_distance) >=
              static_cast<double>(r.expect) * (1.0 - 2e-6));
    }
    GapProbe g = nearest_algebraic(1, 9, 1, 3);
    CHECK(g.implied_constant == doctest::Approx(9.0 / 8.0).epsilon(1e-5));
}

TEST_CASE("certified sandwich brackets the nearest member") {
    struct Probe {
        int n;
        long long q, a, b;
    };
    const Probe probes[] = {
        {2, 1, 0, 1}, {2, 5, 1, 2}, {3, 3, 0, 1}, {3, 7, 1, 3}, {1, 5, 1, 3}, {4, 2, 1, 1},
    };
    for (const auto& pr : probes) {
        CAPTURE(pr.n);
        CAPTURE(pr.q);
        CAPTURE(pr.a);
        CAPTURE(pr.b);
        GapProbe g = nearest_algebraic(pr.n, pr.q, pr.a, pr.b);
        const Rat x0(pr.a, pr.b);
        const Rat d = g.nearest_distance;
        // the reported distance is a lower bound: the open disc is still empty
        // (degree one keeps the probe point itself as the lone resident)
        const long long self =
            pr.n == 1 && std::max(pr.a < 0 ? -pr.a : pr.a, pr.b) <= pr.q ? 1 : 0;
        CHECK(count_around(pr.n, pr.q, x0, d) == self);
        // pushing past the certification margin must reveal the nearest member
        const Rat dp = d + d / 262144;
        CHECK(count_around(pr.n, pr.q, x0, dp) >= self + 1);
    }
}

TEST_CASE("sweep slopes track the reciprocal-of-height law") {
    const std::vector<long long> q2{5, 8, 12, 18, 27, 40};

    auto s20 = constant_sweep(2, 0, 1, q2);
    REQUIRE(s20.size() == q2.size());
    for (size_t i = 0; i < q2.size(); ++i) CHECK(s20[i].q == q2[i]);
    CHECK(loglog_slope(s20) == doctest::Approx(-1.0).epsilon(0.15));
    for (const auto& p : s20) {
        CHECK(p.implied_constant > 0.7);
        CHECK(p.implied_constant < 1.1);
    }

    auto s2h = constant_sweep(2, 1, 2, q2);
    CHECK(loglog_slope(s2h) == doctest::Approx(-1.0).epsilon(0.15));
    for (const auto& p : s2h) {
        CHECK(p.implied_constant > 0.4);
        CHECK(p.implied_constant < 0.65);
    }

    std::vector<long long> q3;
    for (long long q = 3; q <= 12; ++q) q3.push_back(q);
    auto s30 = constant_sweep(3, 0, 1, q3);
    CHECK(loglog_slope(s30) == doctest::Approx(-1.0).epsilon(0.15));
    for (const auto& p : s30) {
        CHECK(p.implied_constant > 0.7);
        CHECK(p.implied_constant < 1.0);
    }

    // rational case is exactly solvable: distance 1/(3q) whenever 3 does not
    // divide q, so the fit is tight up to the certification margin
    auto s1 = constant_sweep(1, 1, 3, {5, 10, 20, 40});
    CHECK(std::fabs(loglog_slope(s1) + 1.0) < 1e-4);
    for (const auto& p : s1) CHECK(p.implied_constant == doctest::Approx(1.0).epsilon(2e-6));
}

TEST_CASE("an interval of half the measured constant is empty") {
    auto run = [](int n, long long a, long long b, const std::vector<long long>& qs,
                  long long expect_inside) {
        auto sw = constant_sweep(n, a, b, qs);
        Int bn = 1;
        for (int i = 0; i < n; ++i) bn *= b;
        Rat cmin;
        bool first = true;
        for (const auto& p : sw) {
            const Rat c = p.nearest_distance * bn * p.q;
            if (first || c < cmin) cmin = c;
            first = false;
        }
        CHECK(cmin > 0);
        const Rat x0(a, b);
        for (long long q : qs) {
            CAPTURE(n);
            CAPTURE(q);
            const Rat r = cmin / (2 * bn * q);
            CHECK(count_around(n, q, x0, r) == expect_inside);
        }
    };
    run(2, 1, 2, {5, 8, 12, 18, 27, 40}, 0);
    run(3, 0, 1, {3, 5, 8, 12}, 0);
    run(1, 1, 7, {3, 4, 5, 6}, 0);  // height 7 exceeds every q probed
    run(1, 1, 3, {5, 10, 20}, 1);   // the probe point is its own neighborhood's resident
}

TEST_CASE("all census members stay inside the height box") {
    CHECK(outer_exclusion_check(1, 1));
    CHECK(outer_exclusion_check(1, 5));
    CHECK(outer_exclusion_check(1, 30));
    CHECK(outer_exclusion_check(2, 1));
    CHECK(outer_exclusion_check(2, 5));
    CHECK(outer_exclusion_check(2, 12));
    CHECK(outer_exclusion_check(3, 3));
    CHECK(outer_exclusion_check(3, 8));
    CHECK(outer_exclusion_check(4, 2));
    CHECK(outer_exclusion_check(4, 4));
    CHECK(outer_exclusion_check(5, 2));
}

TEST_CASE("gap probe input validation") {
    CHECK_THROWS_AS(nearest_algebraic(2, 1, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(nearest_algebraic(2, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(nearest_algebraic(2, 1, 1, -2), std::invalid_argument);
    CHECK(constant_sweep(2, 0, 1, {}).empty());
}

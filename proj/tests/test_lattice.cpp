#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "algcensus/density.hpp"
#include "algcensus/lattice.hpp"

using namespace algcensus;

namespace {

std::vector<int> e2(int a, int b) { return {a, b}; }
std::vector<int> e3(int a, int b, int c) { return {a, b, c}; }

// the five stock test regions, in 2 and 3 dimensions
Region square() { return Region(2, {}); }
Region cube() { return Region(3, {}); }
Region disk() { return Region(2, {{{Rat(1), e2(0, 0)}, {Rat(-1), e2(2, 0)}, {Rat(-1), e2(0, 2)}}}); }
Region ball() {
    return Region(3, {{{Rat(1), e3(0, 0, 0)},
                       {Rat(-1), e3(2, 0, 0)},
                       {Rat(-1), e3(0, 2, 0)},
                       {Rat(-1), e3(0, 0, 2)}}});
}
Region triangle() {
    return Region(2, {{{Rat(1), e2(1, 0)}},
                      {{Rat(1), e2(0, 1)}},
                      {{Rat(1), e2(0, 0)}, {Rat(-1), e2(1, 0)}, {Rat(-1), e2(0, 1)}}});
}
Region simplex() {
    return Region(3, {{{Rat(1), e3(1, 0, 0)}},
                      {{Rat(1), e3(0, 1, 0)}},
                      {{Rat(1), e3(0, 0, 1)}},
                      {{Rat(1), e3(0, 0, 0)},
                       {Rat(-1), e3(1, 0, 0)},
                       {Rat(-1), e3(0, 1, 0)},
                       {Rat(-1), e3(0, 0, 1)}}});
}
Region annulus_slice() {
    return Region(2, {{{Rat(-1, 4), e2(0, 0)}, {Rat(1), e2(2, 0)}, {Rat(1), e2(0, 2)}},
                      {{Rat(1), e2(0, 0)}, {Rat(-1), e2(2, 0)}, {Rat(-1), e2(0, 2)}},
                      {{Rat(1), e2(1, 0)}}});
}
Region shell_slice() {
    return Region(
        3, {{{Rat(-1, 4), e3(0, 0, 0)}, {Rat(1), e3(2, 0, 0)}, {Rat(1), e3(0, 2, 0)}, {Rat(1), e3(0, 0, 2)}},
            {{Rat(1), e3(0, 0, 0)}, {Rat(-1), e3(2, 0, 0)}, {Rat(-1), e3(0, 2, 0)}, {Rat(-1), e3(0, 0, 2)}},
            {{Rat(1), e3(1, 0, 0)}}});
}
Region slab2() {
    return Region(2, {{{Rat(1, 3), e2(0, 0)}, {Rat(-1), e2(0, 1)}},
                      {{Rat(1, 3), e2(0, 0)}, {Rat(1), e2(0, 1)}}});
}
Region slab3() {
    return Region(3, {{{Rat(1, 3), e3(0, 0, 0)}, {Rat(-1), e3(0, 0, 1)}},
                      {{Rat(1, 3), e3(0, 0, 0)}, {Rat(1), e3(0, 0, 1)}}});
}

// hand-derived integer membership tests for x/Q, written without any of the
// library's constraint clearing
using Member2 = std::function<bool(long long, long long, long long)>;
using Member3 = std::function<bool(long long, long long, long long, long long)>;

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

// gcd scan over the whole box; counts (total, primitive)
std::pair<long long, long long> scan2(const Member2& in, long long Q) {
    long long tot = 0, prim = 0;
    for (long long x = -Q; x <= Q; ++x)
        for (long long y = -Q; y <= Q; ++y) {
            if ((x == 0 && y == 0) || !in(x, y, Q)) continue;
            ++tot;
            if (std::gcd(std::abs(x), std::abs(y)) == 1) ++prim;
        }
    return {tot, prim};
}

std::pair<long long, long long> scan3(const Member3& in, long long Q) {
    long long tot = 0, prim = 0;
    for (long long x = -Q; x <= Q; ++x)
        for (long long y = -Q; y <= Q; ++y)
            for (long long z = -Q; z <= Q; ++z) {
                if ((x == 0 && y == 0 && z == 0) || !in(x, y, z, Q)) continue;
                ++tot;
                if (gcd3(x, y, z) == 1) ++prim;
            }
    return {tot, prim};
}

}  // namespace

TEST_CASE("moebius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
    CHECK(mobius(97) == -1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    // sum_{n<=N} mu(n) floor(N/n) = 1 for every N
    for (long long N = 1; N <= 200; ++N) {
        long long s = 0;
        for (long long n = 1; n <= N; ++n) s += mobius(n) * (N / n);
        CHECK(s == 1);
    }
}

TEST_CASE("counts at the worked examples") {
    CHECK(count_points(square(), 3) == 48);
    CHECK(count_primitive(square(), 3) == 32);
    CHECK(count_points(disk(), 2) == 12);
    Region quadrant(2, {{{Rat(1), e2(1, 0)}}, {{Rat(1), e2(0, 1)}}});
    CHECK(count_points(quadrant, 5) == 35);
    CHECK(count_primitive(quadrant, 5) == 21);
    // at Q = 1 every nonzero vector in the box is primitive
    for (const Region& r : {square(), disk(), triangle(), annulus_slice(), slab2()})
        CHECK(count_points(r, 1) == count_primitive(r, 1));
    CHECK_THROWS_AS(count_points(square(), 0), std::invalid_argument);
}

TEST_CASE("membership is exact at boundary points") {
    // (3/5, 4/5) lies exactly on the unit circle and must be inside the
    // closed disk; scaled: (3,4) at Q = 5
    Region d = disk();
    CHECK(d.contains({Rat(3, 5), Rat(4, 5)}));
    CHECK(!d.contains({Rat(4, 5), Rat(4, 5)}));
    CHECK(d.contains({Rat(1), Rat(0)}));
    CHECK(!d.contains({Rat(101, 100), Rat(0)}));
    // box clamp applies even with no constraints
    CHECK(!square().contains({Rat(2), Rat(0)}));
    CHECK_THROWS_AS(d.contains({Rat(0)}), std::invalid_argument);
}

TEST_CASE("moebius counts match a direct gcd scan in two dimensions") {
    struct Case {
        Region r;
        Member2 in;
    };
    std::vector<Case> cases;
    cases.push_back({square(), [](long long, long long, long long) { return true; }});
    cases.push_back({disk(), [](long long x, long long y, long long Q) {
                         return x * x + y * y <= Q * Q;
                     }});
    cases.push_back({triangle(), [](long long x, long long y, long long Q) {
                         return x >= 0 && y >= 0 && x + y <= Q;
                     }});
    cases.push_back({annulus_slice(), [](long long x, long long y, long long Q) {
                         const long long s = x * x + y * y;
                         return 4 * s >= Q * Q && s <= Q * Q && x >= 0;
                     }});
    cases.push_back({slab2(), [](long long x, long long y, long long Q) {
                         return 3 * std::abs(y) <= Q && std::abs(x) <= Q;
                     }});
    for (const auto& c : cases)
        for (long long Q : {1, 2, 3, 5, 12, 50}) {
            auto [tot, prim] = scan2(c.in, Q);
            CHECK(count_points(c.r, Q) == tot);
            CHECK(count_primitive(c.r, Q) == prim);
        }
}

TEST_CASE("moebius counts match a direct gcd scan in three dimensions") {
    struct Case {
        Region r;
        Member3 in;
    };
    std::vector<Case> cases;
    cases.push_back({cube(), [](long long, long long, long long, long long) { return true; }});
    cases.push_back({ball(), [](long long x, long long y, long long z, long long Q) {
                         return x * x + y * y + z * z <= Q * Q;
                     }});
    cases.push_back({simplex(), [](long long x, long long y, long long z, long long Q) {
                         return x >= 0 && y >= 0 && z >= 0 && x + y + z <= Q;
                     }});
    cases.push_back({shell_slice(), [](long long x, long long y, long long z, long long Q) {
                         const long long s = x * x + y * y + z * z;
                         return 4 * s >= Q * Q && s <= Q * Q && x >= 0;
                     }});
    cases.push_back({slab3(), [](long long x, long long y, long long z, long long Q) {
                         return 3 * std::abs(z) <= Q && std::abs(x) <= Q && std::abs(y) <= Q;
                     }});
    for (const auto& c : cases)
        for (long long Q : {1, 3, 8}) {
            auto [tot, prim] = scan3(c.in, Q);
            CHECK(count_points(c.r, Q) == tot);
            CHECK(count_primitive(c.r, Q) == prim);
        }
    // two of the five at the top of the contracted range
    for (int ci : {1, 2}) {
        auto [tot, prim] = scan3(cases[static_cast<size_t>(ci)].in, 50);
        CHECK(count_points(cases[static_cast<size_t>(ci)].r, 50) == tot);
        CHECK(count_primitive(cases[static_cast<size_t>(ci)].r, 50) == prim);
    }
}

TEST_CASE("one dimensional primitive vectors are the two units") {
    Region line(1, {});
    for (long long Q = 1; Q <= 30; ++Q) {
        CHECK(count_points(line, Q) == 2 * Q);
        CHECK(count_primitive(line, Q) == 2);
    }
}

TEST_CASE("measure estimates") {
    CHECK(measure_estimate(square(), 2000) == 4.0);
    CHECK(measure_estimate(disk(), 200000) == doctest::Approx(M_PI).epsilon(5e-3 / M_PI));
    CHECK(measure_estimate(triangle(), 200000) == doctest::Approx(0.5).epsilon(2e-3));
    CHECK(measure_estimate(ball(), 200000) == doctest::Approx(4 * M_PI / 3).epsilon(4e-3));
    CHECK_THROWS_AS(measure_estimate(square(), 999), std::invalid_argument);
}

TEST_CASE("primitive counts follow the density main term") {
    // |primitive - Q^2 mes / zeta(2)| / (Q ln Q) stays small over the sweep
    const double mes[3] = {4.0, M_PI, 0.5};
    const Region regs[3] = {square(), disk(), triangle()};
    for (int i = 0; i < 3; ++i)
        for (long long Q = 10; Q <= 100; Q += 10) {
            const double main = mes[i] * static_cast<double>(Q) * static_cast<double>(Q) / zeta(2);
            const double dev = std::abs(static_cast<double>(count_primitive(regs[i], Q)) - main);
            CHECK(dev / (static_cast<double>(Q) * std::log(static_cast<double>(Q))) <= 3.0);
        }
}

TEST_CASE("counts are invariant under coordinate permutation") {
    Region a(2, {{{Rat(1), e2(1, 0)}},
                 {{Rat(1), e2(0, 1)}},
                 {{Rat(1), e2(0, 0)}, {Rat(-1), e2(1, 0)}, {Rat(-2), e2(0, 1)}}});
    Region b(2, {{{Rat(1), e2(0, 1)}},
                 {{Rat(1), e2(1, 0)}},
                 {{Rat(1), e2(0, 0)}, {Rat(-1), e2(0, 1)}, {Rat(-2), e2(1, 0)}}});
    for (long long Q : {7, 12, 25}) {
        CHECK(count_points(a, Q) == count_points(b, Q));
        CHECK(count_primitive(a, Q) == count_primitive(b, Q));
    }
}

TEST_CASE("report bundles the counts") {
    auto rep = lattice_report(disk(), 20, 100000);
    CHECK(rep.q == 20);
    CHECK(rep.total_points == count_points(disk(), 20));
    CHECK(rep.primitive_points == count_primitive(disk(), 20));
    CHECK(rep.primitive_points <= rep.total_points);
    CHECK(rep.measure_estimate == doctest::Approx(M_PI).epsilon(2e-3));
    CHECK(rep.main_term ==
          doctest::Approx(400.0 * rep.measure_estimate / zeta(2)).epsilon(1e-14));
    CHECK_THROWS_AS(lattice_report(Region(1, {}), 5, 2000), std::invalid_argument);
}

TEST_CASE("region construction is validated") {
    CHECK_THROWS_AS(Region(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Region(7, {}), std::invalid_argument);
    CHECK_THROWS_AS(Region(2, {{{Rat(1), {1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(Region(2, {{{Rat(1), {1, -1}}}}), std::invalid_argument);
    CHECK(disk().degree_bound() == 2);
    CHECK(disk().num_constraints() == 1);
    CHECK(triangle().num_constraints() == 3);
    CHECK(square().degree_bound() == 0);
}

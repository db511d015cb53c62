#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algcensus/sturm.hpp"
#include "oracles.hpp"

using namespace algcensus;

static ExtRational fin(long long num, long long den = 1) {
    return ExtRational::finite(Rat(num, den));
}

TEST_CASE("interval basics") {
    HalfOpenInterval iv(fin(0), fin(1));
    CHECK(iv.contains(Rat(1)));
    CHECK(iv.contains(Rat(1, 2)));
    CHECK_FALSE(iv.contains(Rat(0)));
    CHECK_THROWS_AS(HalfOpenInterval(fin(1), fin(1)), std::invalid_argument);
    HalfOpenInterval neg = iv.negated();
    CHECK(neg.contains(Rat(-1, 2)));
    CHECK(neg.contains(Rat(0)));       // right-closed after reflection
    CHECK_FALSE(neg.contains(Rat(-1)));

    HalfOpenInterval ray(fin(0), ExtRational::pos_inf());
    CHECK(ray.contains(Rat(1000000)));
    HalfOpenInterval nray = ray.negated();
    CHECK(nray.contains(Rat(-1000000)));
    CHECK(nray.contains(Rat(0)));
}

TEST_CASE("sturm chain of a quadratic") {
    IntPoly p{-1, 1, 1};  // x^2+x-1, roots -1.618, 0.618
    SturmChain ch = SturmChain::build(p);
    CHECK(ch.s.size() == 3);
    CHECK(count_roots_in(ch, HalfOpenInterval::whole_line()) == 2);
    CHECK(count_roots_in(ch, {fin(0), ExtRational::pos_inf()}) == 1);
    CHECK(count_roots_in(ch, {fin(0), fin(1)}) == 1);
    CHECK(count_roots_in(ch, {fin(-2), fin(-1)}) == 1);
    CHECK(count_roots_in(ch, {fin(-1), fin(0)}) == 0);
}

TEST_CASE("half-open endpoint handling with rational roots") {
    IntPoly p{-1, 2};  // root 1/2
    CHECK(count_roots_in(p, {fin(0), fin(1, 2)}) == 1);   // at hi: in
    CHECK(count_roots_in(p, {fin(1, 2), fin(1)}) == 0);   // at lo: out
    CHECK(count_roots_in(p, {fin(0), fin(1)}) == 1);
    CHECK(count_roots_in(p, {fin(-1), fin(0)}) == 0);

    IntPoly q{0, 1};  // root 0
    CHECK(count_roots_in(q, {fin(-1), fin(0)}) == 1);
    CHECK(count_roots_in(q, {fin(0), fin(1)}) == 0);
}

TEST_CASE("count additivity at a rational split point") {
    IntPoly p{-2, 0, 0, 1};  // x^3 - 2
    for (long long s : {-3, -1, 0, 1, 2}) {
        long long whole = count_roots_in(p, {fin(-10), fin(10)});
        long long left = count_roots_in(p, {fin(-10), fin(s)});
        long long right = count_roots_in(p, {fin(s), fin(10)});
        CHECK(whole == left + right);
    }
    CHECK(count_real_roots(p) == 1);
}

TEST_CASE("negate_arg mirrors counts") {
    IntPoly p{-3, 1, 4, 1};
    IntPoly m = negate_arg(p);
    HalfOpenInterval iv(fin(1, 3), fin(7, 2));
    CHECK(count_roots_in(p, iv) == count_roots_in(m, iv.negated()));
}

TEST_CASE("isolation finds all roots exactly once") {
    IntPoly p{-1, 1, 1};
    auto ivs = isolate_roots(p);
    REQUIRE(ivs.size() == 2);
    for (const auto& iv : ivs) CHECK(count_roots_in(p, iv) == 1);
    CHECK(ivs[0].hi.value <= ivs[1].lo.value);

    // no real roots
    CHECK(isolate_roots(IntPoly{1, 0, 1}).empty());

    // quintic with 5 real roots: (x^2-1)(x^2-4)x = x^5 -5x^3 +4x
    IntPoly q{0, 4, 0, -5, 0, 1};
    auto qivs = isolate_roots(q);
    CHECK(qivs.size() == 5);
}

TEST_CASE("refinement shrinks and keeps the root") {
    IntPoly p{-2, 0, 1};  // sqrt 2
    auto ivs = isolate_roots(p);
    REQUIRE(ivs.size() == 2);
    Rat eps(1, 1000000000000LL);
    auto r = refine_root(p, ivs[1], eps);
    CHECK(r.hi.value - r.lo.value <= eps);
    CHECK(count_roots_in(p, r) == 1);
    double approx = static_cast<double>(r.lo.value);
    CHECK(approx == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("refinement lands exactly on rational roots") {
    IntPoly p{-1, 3};  // root 1/3
    auto ivs = isolate_roots(p);
    REQUIRE(ivs.size() == 1);
    auto r = refine_root(p, ivs[0], Rat(1, 1LL << 45));
    CHECK(r.contains(Rat(1, 3)));
    CHECK(count_roots_in(p, r) == 1);
}

TEST_CASE("random square-free polynomials against companion-matrix oracle") {
    std::mt19937_64 rng(20260818u);
    std::uniform_int_distribution<int> coeff(-10, 10);
    std::uniform_int_distribution<int> degd(2, 5);
    int done = 0, skipped = 0;
    while (done < 1000) {
        int d = degd(rng);
        std::vector<Int> c(d + 1);
        for (int i = 0; i < d; ++i) c[i] = coeff(rng);
        int lead = 0;
        while (lead == 0) lead = coeff(rng);
        c[d] = lead;
        IntPoly p(std::move(c));
        bool sqfree = true;
        auto roots = oracle::real_roots_companion(p);
        if (!roots) {
            ++skipped;
            continue;
        }
        // discard polys with nearly touching oracle roots (double roots or
        // ambiguity for the float oracle)
        for (size_t i = 0; i + 1 < roots->size(); ++i)
            if ((*roots)[i + 1] - (*roots)[i] < 1e-5) sqfree = false;
        if (!sqfree) {
            ++skipped;
            continue;
        }
        CHECK(count_real_roots(p) == static_cast<long long>(roots->size()));
        // random interval with endpoints away from all roots
        std::uniform_int_distribution<long long> pick(-12, 12);
        long long a = pick(rng), b = pick(rng);
        if (a >= b) {
            std::swap(a, b);
            if (a == b) b = a + 1;
        }
        bool clear = true;
        for (double r : *roots)
            if (std::abs(r - a) < 1e-6 || std::abs(r - b) < 1e-6) clear = false;
        if (clear) {
            long long expect = 0;
            for (double r : *roots)
                if (r > a && r <= b) ++expect;
            CHECK(count_roots_in(p, {fin(a), fin(b)}) == expect);
        }
        ++done;
    }
    CHECK(skipped < done / 4);
}

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "algcensus/ext_rational.hpp"
#include "algcensus/int_poly.hpp"
#include "algcensus/sturm.hpp"

namespace algcensus {

// The real algebraic numbers of degree n and height <= Q, materialized as
// the real roots of all prime polynomials (irreducible, primitive, positive
// leading coefficient) with that degree and height bound.
//
// Every root is pinned to a dyadic cell (k*2^-40, (k+1)*2^-40] certified by
// exact sign evaluations, so interval counting is exact: cells order roots
// except at a query point falling inside a root's own cell, which is settled
// by an exact sign test of the minimal polynomial.
class CensusSet {
public:
    static constexpr int kCellExp = 40;

    struct PolyRec {
        std::array<int32_t, 6> c;   // coefficients, constant term first
        int32_t height;
        uint32_t root_begin;
        uint8_t root_count;
    };

    static CensusSet build(int n, long long Q);

    int degree() const { return n_; }
    long long height_bound() const { return q_; }
    long long prime_poly_count() const { return n_prime_; }
    long long root_count() const { return static_cast<long long>(cells_.size()); }

    // #{alpha in the set : alpha <= x}
    long long count_leq(const ExtRational& x) const;
    // #{alpha in the set : alpha in (lo, hi]}
    long long count_in(const HalfOpenInterval& iv) const;
    // histogram {k >= 1 : number of prime polys with exactly k roots in iv}
    std::map<int, long long> roots_per_poly(const HalfOpenInterval& iv) const;
    // counts for `bins` equal subintervals of a bounded interval
    std::vector<long long> bin_counts(const HalfOpenInterval& iv, int bins) const;

    const std::vector<PolyRec>& polys() const { return polys_; }
    IntPoly poly_of(uint32_t idx) const;
    // root's certified cell: the value lies in (cell*2^-40, (cell+1)*2^-40]
    int64_t cell_of(uint32_t root_idx) const { return cells_[root_idx]; }
    uint32_t poly_of_root(uint32_t root_idx) const { return root_poly_[root_idx]; }

private:
    int n_ = 0;
    long long q_ = 0;
    long long n_prime_ = 0;
    std::vector<PolyRec> polys_;      // only polys with at least one real root
    std::vector<int64_t> cells_;      // grouped by poly
    std::vector<uint32_t> root_poly_;
    std::vector<uint32_t> order_;     // root indices sorted by cell

    // true iff the root with this index is <= x; exact
    bool root_leq(uint32_t root_idx, const Rat& x) const;
};

// Shared cache so repeated queries against one (n, Q) census reuse the
// materialized set.
std::shared_ptr<const CensusSet> census(int n, long long Q);
void census_cache_clear();

// Streams every prime polynomial of degree n, height <= Q, in a fixed
// deterministic order, sharded for parallel consumption: shard s receives
// the blocks with (index mod nshards == s).  The union over shards is the
// full census, disjoint across shards.
void enumerate_prime_polys(int n, long long Q, int shard, int nshards,
                           const std::function<void(const IntPoly&)>& yield);

// Counting function: number of algebraic numbers of degree n, height <= Q
// in the interval.
long long phi_count(int n, long long Q, const HalfOpenInterval& iv);

// Number of coefficient vectors (a_n >= 1 doubled for the sign mirror) whose
// polynomial of degree n, height <= Q splits over Q into factors of positive
// degree.
long long count_reducible(int n, long long Q);

// A real algebraic number: a root of its prime minimal polynomial, caged in
// (lo, hi] with hi - lo <= 2^-40.
struct AlgebraicNumber {
    IntPoly minpoly;
    Rat lo, hi;
    long long height;
    double approx;
};

// First N members of the degree-n census ordered by (height asc, value asc).
std::vector<AlgebraicNumber> algebraic_sequence(int n, long long N);

// #{members of seq : value in iv}, exact.
long long sequence_count_in(const std::vector<AlgebraicNumber>& seq, const HalfOpenInterval& iv);

}  // namespace algcensus

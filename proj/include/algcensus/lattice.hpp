#pragma once

#include <utility>
#include <vector>

#include "algcensus/bigint.hpp"

namespace algcensus {

// one monomial of a polynomial inequality: coefficient times
// x_1^{e_1} ... x_d^{e_d}
using IneqTerm = std::pair<Rat, std::vector<int>>;
// the inequality  sum of terms >= 0
using Inequality = std::vector<IneqTerm>;

// conjunction of rational-coefficient polynomial inequalities, always
// intersected with the box [-1,1]^d; membership is exact at rational
// points, so scaled lattice counts have no float-boundary ambiguity
class Region {
  public:
    Region(int dim, std::vector<Inequality> inequalities);

    int dim() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }
    // largest total degree over all constraint monomials
    int degree_bound() const { return degree_bound_; }
    int num_constraints() const { return static_cast<int>(ineqs_.size()); }
    bool contains(const std::vector<Rat>& x) const;

  private:
    int dim_;
    std::vector<Inequality> ineqs_;
    int degree_bound_;
};

struct LatticeCountReport {
    long long q = 0;
    long long total_points = 0;
    long long primitive_points = 0;
    double main_term = 0;       // Q^d * measure / zeta(d)
    double measure_estimate = 0;
};

// Moebius function by trial factorization; n >= 1
int mobius(long long n);

// number of nonzero integer vectors x with x/Q in the region; Q >= 1
long long count_points(const Region& region, long long Q);

// number of primitive vectors (coordinate gcd 1) among those, by Moebius
// inversion over scaled sublattices, truncated at n = Q
long long count_primitive(const Region& region, long long Q);

// deterministic low-discrepancy estimate of the region's measure;
// samples >= 1000
double measure_estimate(const Region& region, long long samples);

// bundle of both exact counts with the density main term; dim >= 2
LatticeCountReport lattice_report(const Region& region, long long Q, long long samples);

}  // namespace algcensus

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace algcensus {

enum class DensityMethod { closed_form, qmc, n1_formula, sphere_formula, sphere_series };
std::string to_string(DensityMethod m);

// Point evaluation of a density with a self-consistency error estimate.
struct DensityEstimate {
    double value = 0;
    double abs_error = 0;
    DensityMethod method = DensityMethod::qmc;
};

struct DensityGrid {
    int n = 0;
    std::vector<std::pair<double, DensityEstimate>> points;  // ascending in t
};

// Riemann zeta for real s > 1, accurate to ~1e-15 (tail by Euler-Maclaurin).
double zeta(double s);

// Positive solution of t^n + ... + t^2 + t = 1; t0(1) = 1.  Bisection.
double t0(int n);
// Positive solution of n t^{n-1} + ... + 2t = 1; needs n >= 2.  Bisection.
double t1(int n);
// Radius of the interval around 0 where the polynomial closed form is valid:
// t1(n) for n >= 2, and 1 for n = 1.
double closed_form_radius(int n);

// Degree-1 density: 1 / max(1, t^2).
double phi1(double t);

// Polynomial closed form of the density, valid for |t| <= closed_form_radius.
double phi_closed(int n, double t);

// Quadrature evaluation of the defining coefficient-space integral.  The
// innermost coordinate is integrated exactly; the remaining (n-1)-cube is
// covered by a deterministic Halton rule with `budget` nodes.  abs_error is
// a two-scale (budget vs budget/2) self-consistency estimate.
DensityEstimate phi_numeric(int n, double t, long long budget);

// Closed form where valid, quadrature elsewhere.
DensityEstimate phi_auto(int n, double t, long long budget);

// gamma_n = integral of phi_n over R, computed as 4 * integral over [0,1].
double gamma_n(int n, long long budget);

// Distribution density rho_n = phi_n / gamma_n.
double rho(int n, double t, long long budget);

// Distribution function F_n(x) = integral_{-inf}^x rho_n; x may be +-inf.
// By construction F(0) = 1/2, F(1) = 3/4 and F(+inf) = 1 hold exactly.
double dist_F(int n, double x, long long budget);

// Q^{n+1} / (2 zeta(n+1)) * integral_{lo}^{hi} phi_n; endpoints may be +-inf.
double main_term(int n, long long Q, double lo, double hi, long long budget);

// Density for the Euclidean coefficient norm.  The defining formula has a
// removable singularity at |t| = 1; it cancels algebraically here, so the
// evaluation is regular everywhere.
double phi_sphere(int n, double t);
DensityEstimate phi_sphere_est(int n, double t);

// Jacobian of (b, alpha, beta) -> coefficients of (x-alpha)(x-beta) g(x)
// where g(x) = sum_j b_j x^j.  Returns (|det J|, |alpha-beta| |g(alpha) g(beta)|).
std::pair<double, double> jacobian_identity_check(const std::vector<double>& b, double alpha,
                                                  double beta);

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
};

// Monte-Carlo measure of coefficient vectors in [-1,1]^{n+1} whose polynomial
// has at least two distinct real roots in (lo, hi], hi - lo <= 1.  Root
// counting is exact per sample (the sampled doubles are dyadic rationals),
// and the counter-based generator makes the run schedule-independent.
McEstimate two_root_measure_mc(int n, double lo, double hi, long long samples,
                               uint64_t seed = 0x853c49e6748fea9bULL);

}  // namespace algcensus

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "algcensus/bigint.hpp"

namespace algcensus {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// c[i] multiplies x^i.  Normalized: no trailing zero coefficients, so the
// zero polynomial has an empty coefficient vector.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    bool is_zero() const { return c.empty(); }
    // Index of the highest nonzero coefficient.  Undefined for zero (throws).
    int degree() const;
    const Int& lead() const;
    const Int& coeff(size_t i) const;

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

// gcd of |coefficients|; throws std::invalid_argument("zero polynomial").
Int content(const IntPoly& p);

// max |coefficient|; throws on the zero polynomial.
Int height_inf(const IntPoly& p);

// x^deg(p) * p(1/x).  Requires p(0) != 0, otherwise throws
// std::invalid_argument("degree drop under reversal").
IntPoly reverse(const IntPoly& p);

// p(-x).
IntPoly negate_arg(const IntPoly& p);

// Exact evaluation at a rational point.
Rat eval(const IntPoly& p, const Rat& x);

// Sign of p at a rational point, computed without building the full value
// when possible.  Returns -1, 0, or +1.
int sign_at(const IntPoly& p, const Rat& x);

// Formal derivative (zero polynomial for constants).
IntPoly derivative(const IntPoly& p);

// p divided by its content, with the leading coefficient made positive.
IntPoly make_prime(const IntPoly& p);

// True iff p, assumed primitive of degree >= 1, does not factor into two
// integer polynomials of positive degree.  Degree-1 inputs return true.
// Throws if p is zero, constant, or has content > 1.
bool is_irreducible(const IntPoly& p);

// True iff den divides num exactly over the rationals (den nonzero).
bool divides(const IntPoly& den, const IntPoly& num);

std::string to_string(const IntPoly& p);

}  // namespace algcensus

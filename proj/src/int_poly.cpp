#include "algcensus/int_poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>

namespace algcensus {

static void strip_trailing_zeros(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
    strip_trailing_zeros(c);
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    c.assign(coeffs.begin(), coeffs.end());
    strip_trailing_zeros(c);
}

int IntPoly::degree() const {
    if (c.empty()) throw std::invalid_argument("zero polynomial");
    return static_cast<int>(c.size()) - 1;
}

const Int& IntPoly::lead() const {
    if (c.empty()) throw std::invalid_argument("zero polynomial");
    return c.back();
}

const Int& IntPoly::coeff(size_t i) const {
    static const Int zero = 0;
    return i < c.size() ? c[i] : zero;
}

Int content(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    Int g = 0;
    for (const Int& a : p.c) {
        g = boost::multiprecision::gcd(g, a);
        if (g == 1) break;
    }
    return g;
}

Int height_inf(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    Int h = 0;
    for (const Int& a : p.c) {
        Int v = abs_int(a);
        if (v > h) h = v;
    }
    return h;
}

IntPoly reverse(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.c.front() == 0) throw std::invalid_argument("degree drop under reversal");
    std::vector<Int> r(p.c.rbegin(), p.c.rend());
    return IntPoly(std::move(r));
}

IntPoly negate_arg(const IntPoly& p) {
    std::vector<Int> r = p.c;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

Rat eval(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

int sign_at(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return 0;
    // Homogeneous integer evaluation: sign of sum a_i u^i v^(d-i) with x=u/v.
    const Int& u = rat_num(x);
    const Int& v = rat_den(x);
    Int acc = 0;
    Int vp = 1;
    // Horner in u with a running power of v.
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = acc * u + (*it) * vp;
        if (it + 1 != p.c.rend()) vp *= v;
    }
    return acc.sign();
}

IntPoly derivative(const IntPoly& p) {
    if (p.c.size() <= 1) return IntPoly{};
    std::vector<Int> r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * Int(i);
    return IntPoly(std::move(r));
}

IntPoly make_prime(const IntPoly& p) {
    Int g = content(p);
    if (p.lead() < 0) g = -g;
    std::vector<Int> r = p.c;
    for (Int& a : r) a /= g;
    return IntPoly(std::move(r));
}

bool divides(const IntPoly& den, const IntPoly& num) {
    if (den.is_zero()) throw std::invalid_argument("zero polynomial");
    if (num.is_zero()) return true;
    if (num.degree() < den.degree()) return false;
    std::vector<Rat> r(num.c.size());
    for (size_t i = 0; i < num.c.size(); ++i) r[i] = Rat(num.c[i]);
    const int dd = den.degree();
    const Rat dl = Rat(den.lead());
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rat q = r[k + dd] / dl;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) r[k + j] -= q * Rat(den.c[j]);
    }
    for (int i = 0; i < dd; ++i)
        if (r[i] != 0) return false;
    return true;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& a = p.c[i];
        if (a == 0) continue;
        Int v = abs_int(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (v != 1 || i == 0) os << v.str();
        if (i > 0) {
            if (v != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace algcensus

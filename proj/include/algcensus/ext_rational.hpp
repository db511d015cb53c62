#pragma once

#include <stdexcept>
#include <string>

#include "algcensus/bigint.hpp"

namespace algcensus {

// A rational number extended with -inf / +inf endpoints.
struct ExtRational {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rat value;  // meaningful only when finite

    static ExtRational neg_inf() { return {Kind::NegInf, Rat(0)}; }
    static ExtRational pos_inf() { return {Kind::PosInf, Rat(0)}; }
    static ExtRational finite(Rat v) { return {Kind::Finite, std::move(v)}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_neg_inf() const { return kind == Kind::NegInf; }
    bool is_pos_inf() const { return kind == Kind::PosInf; }

    double approx() const;
};

bool operator<(const ExtRational& a, const ExtRational& b);
bool operator==(const ExtRational& a, const ExtRational& b);
inline bool operator<=(const ExtRational& a, const ExtRational& b) { return a < b || a == b; }

// Interval (lo, hi]: open at lo, closed at hi.  An infinite hi means the set
// (lo, +inf); an infinite lo means (-inf, hi].  Requires lo < hi.
struct HalfOpenInterval {
    ExtRational lo, hi;

    HalfOpenInterval(ExtRational l, ExtRational h);
    static HalfOpenInterval whole_line() {
        return {ExtRational::neg_inf(), ExtRational::pos_inf()};
    }

    // The interval -I = (-hi, -lo] as a point set (endpoint membership of the
    // reflected set differs only at rational endpoints).
    HalfOpenInterval negated() const;

    bool contains(const Rat& x) const;
};

std::string to_string(const ExtRational& x);
std::string to_string(const HalfOpenInterval& iv);

}  // namespace algcensus

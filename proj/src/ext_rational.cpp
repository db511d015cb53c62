#include "algcensus/ext_rational.hpp"

#include <limits>
#include <sstream>

namespace algcensus {

double ExtRational::approx() const {
    switch (kind) {
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        default: return static_cast<double>(value);
    }
}

bool operator<(const ExtRational& a, const ExtRational& b) {
    using K = ExtRational::Kind;
    if (a.kind == K::NegInf) return b.kind != K::NegInf;
    if (a.kind == K::PosInf) return false;
    if (b.kind == K::PosInf) return true;
    if (b.kind == K::NegInf) return false;
    return a.value < b.value;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != ExtRational::Kind::Finite) return true;
    return a.value == b.value;
}

HalfOpenInterval::HalfOpenInterval(ExtRational l, ExtRational h)
    : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
}

HalfOpenInterval HalfOpenInterval::negated() const {
    ExtRational nl = hi.is_pos_inf() ? ExtRational::neg_inf()
                   : hi.is_neg_inf() ? ExtRational::pos_inf()
                                     : ExtRational::finite(-hi.value);
    ExtRational nh = lo.is_pos_inf() ? ExtRational::neg_inf()
                   : lo.is_neg_inf() ? ExtRational::pos_inf()
                                     : ExtRational::finite(-lo.value);
    return {nl, nh};
}

bool HalfOpenInterval::contains(const Rat& x) const {
    ExtRational p = ExtRational::finite(x);
    return lo < p && (p < hi || p == hi);
}

std::string to_string(const ExtRational& x) {
    switch (x.kind) {
        case ExtRational::Kind::NegInf: return "-inf";
        case ExtRational::Kind::PosInf: return "inf";
        default: {
            std::ostringstream os;
            os << rat_num(x.value).str();
            if (rat_den(x.value) != 1) os << "/" << rat_den(x.value).str();
            return os.str();
        }
    }
}

std::string to_string(const HalfOpenInterval& iv) {
    return "(" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

}  // namespace algcensus

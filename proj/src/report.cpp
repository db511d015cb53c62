#include "algcensus/report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "algcensus/census.hpp"
#include "algcensus/density.hpp"

namespace algcensus {

int remainder_log_exponent(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("degree out of range");
    return n == 2 ? 1 : 0;
}

SweepSummary fit_loglog(const std::vector<std::pair<double, double>>& points,
                        const std::string& parameter) {
    if (points.size() < 4) throw std::invalid_argument("slope fit needs at least 4 points");
    const size_t m = points.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (!(x > 0) || !(y > 0))
            throw std::invalid_argument("log fit needs strictly positive data");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = m * sxx - sx * sx;
    if (den <= 0) throw std::invalid_argument("degenerate abscissa");
    const double slope = (m * sxy - sx * sy) / den;
    const double icept = (sy - slope * sx) / m;

    SweepSummary s;
    s.parameter = parameter;
    s.points = points;
    s.fitted_slope = slope;
    double rss = 0, rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
    for (const auto& [x, y] : points) {
        const double r = std::log(y) - (icept + slope * std::log(x));
        rss += r * r;
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    const double se = std::sqrt(rss / double(m - 2) / (den / m));
    s.slope_ci = {slope - 2 * se, slope + 2 * se};
    s.band = {rmin, rmax};
    return s;
}

SweepSummary remainder_band(int n, const std::vector<long long>& qs, const Rat& lo,
                            const Rat& hi, long long budget) {
    if (qs.size() < 4) throw std::invalid_argument("remainder sweep needs at least 4 heights");
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    const int l = remainder_log_exponent(n);
    const HalfOpenInterval iv(ExtRational::finite(lo), ExtRational::finite(hi));
    const double a = static_cast<double>(lo), b = static_cast<double>(hi);

    SweepSummary s;
    s.parameter = "Q";
    double bmin = std::numeric_limits<double>::infinity(), bmax = -bmin;
    std::vector<std::pair<double, double>> fitpts;
    for (long long q : qs) {
        if (q < 2 && l > 0) throw std::invalid_argument("height too small for the log factor");
        if (q < 1) throw std::invalid_argument("height must be positive");
        const double count = static_cast<double>(phi_count(n, q, iv));
        const double main = main_term(n, q, a, b, budget);
        const double res = count - main;
        const double scale = std::pow(double(q), n) * std::pow(std::log(double(q)), l);
        bmin = std::min(bmin, res / scale);
        bmax = std::max(bmax, res / scale);
        s.points.emplace_back(double(q), std::fabs(res));
        if (res != 0) fitpts.emplace_back(double(q), std::fabs(res));
    }
    s.band = {bmin, bmax};
    if (fitpts.size() >= 4) {
        SweepSummary f = fit_loglog(fitpts, "Q");
        s.fitted_slope = f.fitted_slope;
        s.slope_ci = f.slope_ci;
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        s.fitted_slope = nan;
        s.slope_ci = {nan, nan};
    }
    return s;
}

}  // namespace algcensus

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algcensus/bigint.hpp"

namespace algcensus {

// least-squares scaling summary of a sweep. points hold the raw (x, y) data;
// fitted_slope and slope_ci (+-2 standard errors) come from ordinary least
// squares on (log x, log y); band is the (min, max) residual range, which for
// the log fit means log-space residuals and for count sweeps means signed
// residuals normalized by the expected remainder order.
struct SweepSummary {
    std::string parameter;
    std::vector<std::pair<double, double>> points;
    double fitted_slope = 0;
    std::pair<double, double> slope_ci{0, 0};
    std::pair<double, double> band{0, 0};
};

// exponent of the logarithmic factor in the count remainder for degree n
int remainder_log_exponent(int n);

// OLS power-law fit; needs at least 4 strictly positive points
SweepSummary fit_loglog(const std::vector<std::pair<double, double>>& points,
                        const std::string& parameter = "x");

// sweeps the exact census count over (lo, hi] against the density main term.
// points are (Q, |count - main|); band is the signed residual normalized by
// Q^n (ln Q)^l. A residual of exactly zero is kept in the band but dropped
// from the slope fit; the fit degrades to NaN if fewer than 4 points remain.
SweepSummary remainder_band(int n, const std::vector<long long>& qs, const Rat& lo,
                            const Rat& hi, long long budget = 1 << 14);

}  // namespace algcensus

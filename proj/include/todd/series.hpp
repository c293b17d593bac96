#pragma once

#include <vector>

#include "exactalg/rational.hpp"

namespace todd {

// Truncated power series over the rationals; index m holds the coefficient
// of x^m. Operations truncate at the requested order (inclusive).
using Series = std::vector<exactalg::Rational>;

Series series_mul(const Series& a, const Series& b, int order);
// Requires b[0] != 0.
Series series_div(const Series& a, const Series& b, int order);
// log(1 + u) for a series u with u[0] == 0.
Series series_log1p(const Series& u, int order);
// exp(u) for a series u with u[0] == 0.
Series series_exp(const Series& u, int order);

// Coefficients t_0..t_K of log(x / (1 - e^{-x})): truncated division of the
// defining quotient followed by log composition.
Series todd_log_series(int K);
// The same coefficients by an independent route: termwise integration of
// 1/x - 1/(e^x - 1).
Series todd_log_series_alt(int K);

}  // namespace todd

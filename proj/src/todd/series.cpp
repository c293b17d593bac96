#include "todd/series.hpp"

#include <stdexcept>

namespace todd {

using exactalg::Rational;

Series series_mul(const Series& a, const Series& b, int order) {
    Series out(order + 1, Rational(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_div(const Series& a, const Series& b, int order) {
    if (b.empty() || b[0] == 0)
        throw std::invalid_argument("series_div: divisor has no constant term");
    Series out(order + 1, Rational(0));
    for (int m = 0; m <= order; ++m) {
        Rational acc = m < static_cast<int>(a.size()) ? a[m] : Rational(0);
        for (int j = 1; j <= m && j < static_cast<int>(b.size()); ++j)
            acc -= b[j] * out[m - j];
        out[m] = acc / b[0];
    }
    return out;
}

Series series_log1p(const Series& u, int order) {
    if (!u.empty() && u[0] != 0)
        throw std::invalid_argument("series_log1p: argument must have zero constant term");
    Series out(order + 1, Rational(0));
    Series pw{Rational(1)};  // u^0
    for (int j = 1; j <= order; ++j) {
        pw = series_mul(pw, u, order);
        const Rational coeff = Rational(j % 2 == 1 ? 1 : -1) / j;
        for (int m = 0; m <= order; ++m) out[m] += coeff * pw[m];
    }
    return out;
}

Series series_exp(const Series& u, int order) {
    if (!u.empty() && u[0] != 0)
        throw std::invalid_argument("series_exp: argument must have zero constant term");
    Series out(order + 1, Rational(0));
    out[0] = 1;
    Series pw{Rational(1)};  // u^j / j!
    for (int j = 1; j <= order; ++j) {
        pw = series_mul(pw, u, order);
        for (auto& c : pw) c /= j;
        for (int m = 0; m <= order; ++m) out[m] += pw[m];
    }
    return out;
}

Series todd_log_series(int order) {
    if (order < 0) throw std::invalid_argument("todd_log_series: negative order");
    // q(x) = (1 - e^{-x})/x has coefficients (-1)^m / (m+1)!.
    Series q(order + 1, Rational(0));
    Rational fact(1);
    for (int m = 0; m <= order; ++m) {
        fact *= m + 1;
        q[m] = Rational(m % 2 == 0 ? 1 : -1) / fact;
    }
    Series one{Rational(1)};
    Series td = series_div(one, q, order);
    Series u = td;
    u[0] = 0;
    return series_log1p(u, order);
}

Series todd_log_series_alt(int order) {
    if (order < 0) throw std::invalid_argument("todd_log_series_alt: negative order");
    // (log td)'(x) = 1/x - 1/(e^x - 1) = (1 - g(x))/x with
    // g = 1 / (sum_m x^m/(m+1)!); integrate termwise from t_0 = 0.
    Series p(order + 2, Rational(0));
    Rational fact(1);
    for (int m = 0; m <= order + 1; ++m) {
        fact *= m + 1;
        p[m] = Rational(1) / fact;
    }
    Series one{Rational(1)};
    Series g = series_div(one, p, order + 1);
    Series out(order + 1, Rational(0));
    for (int m = 1; m <= order; ++m) out[m] = -g[m] / m;
    return out;
}

}  // namespace todd

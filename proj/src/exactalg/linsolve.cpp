#include "exactalg/linsolve.hpp"

#include <cassert>
#include <stdexcept>

namespace exactalg {

RatMatrix RatMatrix::zero(size_t r, size_t c) {
    RatMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r * c, Rational(0));
    return m;
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m = zero(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    assert(cols == o.rows);
    RatMatrix out = zero(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
    assert(x.size() == cols);
    std::vector<Rational> y(rows, Rational(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

std::variant<LinearSolution, LinearObstruction> solve_linear(const RatMatrix& A,
                                                             const std::vector<Rational>& b) {
    assert(b.size() == A.rows);
    const size_t m = A.rows, n = A.cols;
    // Augment with b and with the identity to track the row operations; when
    // elimination exposes an inconsistent row, the identity part is exactly
    // the certifying functional.
    RatMatrix w = RatMatrix::zero(m, n + 1 + m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) w.at(i, j) = A.at(i, j);
        w.at(i, n) = b[i];
        w.at(i, n + 1 + i) = 1;
    }

    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && w.at(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (size_t j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(row, j));
        const Rational inv = Rational(1) / w.at(row, col);
        for (size_t j = 0; j < w.cols; ++j) w.at(row, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || w.at(i, col) == 0) continue;
            const Rational f = w.at(i, col);
            for (size_t j = 0; j < w.cols; ++j) w.at(i, j) -= f * w.at(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    // Rows past `row` have zero A-part. Any nonzero b-part certifies failure.
    for (size_t i = row; i < m; ++i) {
        if (w.at(i, n) == 0) continue;
        LinearObstruction ob;
        ob.y.assign(m, Rational(0));
        for (size_t j = 0; j < m; ++j) ob.y[j] = w.at(i, n + 1 + j);
        return ob;
    }

    LinearSolution sol;
    sol.x.assign(n, Rational(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) sol.x[pivot_col_of_row[i]] = w.at(i, n);
    return sol;
}

std::optional<RatMatrix> invert(const RatMatrix& A) {
    if (A.rows != A.cols) return std::nullopt;
    const size_t n = A.rows;
    RatMatrix w = RatMatrix::zero(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w.at(i, j) = A.at(i, j);
        w.at(i, n + i) = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && w.at(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(w.at(piv, j), w.at(col, j));
        const Rational inv = Rational(1) / w.at(col, col);
        for (size_t j = 0; j < 2 * n; ++j) w.at(col, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            const Rational f = w.at(i, col);
            for (size_t j = 0; j < 2 * n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    RatMatrix out = RatMatrix::zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
    return out;
}

size_t rank(RatMatrix A) {
    size_t rk = 0;
    for (size_t col = 0; col < A.cols && rk < A.rows; ++col) {
        size_t piv = rk;
        while (piv < A.rows && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != rk)
            for (size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(rk, j));
        const Rational inv = Rational(1) / A.at(rk, col);
        for (size_t j = 0; j < A.cols; ++j) A.at(rk, j) *= inv;
        for (size_t i = 0; i < A.rows; ++i) {
            if (i == rk || A.at(i, col) == 0) continue;
            const Rational f = A.at(i, col);
            for (size_t j = 0; j < A.cols; ++j) A.at(i, j) -= f * A.at(rk, j);
        }
        ++rk;
    }
    return rk;
}

}  // namespace exactalg

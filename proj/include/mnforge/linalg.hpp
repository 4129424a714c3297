#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mnforge/errors.hpp"
#include "mnforge/rational.hpp"

namespace mnforge {

// Dense matrix over the rationals with exact arithmetic throughout.
class RationalMatrix {
  public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

inline RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

namespace detail {

// Row echelon reduction in place.  Returns the pivot columns, in order, and
// flips `sign` once per row swap (callers that only need the rank pass
// nullptr).  Entries below each pivot are eliminated; zero multipliers are
// skipped, which matters because the matrices built from sparse structure
// constants are mostly zeros.
inline std::vector<std::size_t> echelon(RationalMatrix& m, int* sign) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
            if (sign) *sign = -*sign;
        }
        const Rational pivot = m.at(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / pivot;
            m.at(r, col) = 0;
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                if (m.at(row, j) != 0) m.at(r, j) -= f * m.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix m) {
    return detail::echelon(m, nullptr).size();
}

inline std::size_t nullity(const RationalMatrix& m) {
    return m.cols() - rank(m);
}

inline Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    int sign = 1;
    auto pivots = detail::echelon(m, &sign);
    if (pivots.size() < m.rows()) return 0;
    Rational det(sign);
    for (std::size_t i = 0; i < m.rows(); ++i) det *= m.at(i, i);
    return det;
}

// Unique solution of the square system A v = b, or nullopt when A is
// singular.
inline std::optional<std::vector<Rational>> solve_unique(RationalMatrix a,
                                                         std::vector<Rational> b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw DimensionMismatch("solve_unique expects a square system");
    const std::size_t n = a.rows();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < n && a.at(p, col) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != row) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(p, j), a.at(row, j));
            std::swap(b[p], b[row]);
        }
        const Rational pivot = a.at(row, col);
        for (std::size_t r = row + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rational f = a.at(r, col) / pivot;
            a.at(r, col) = 0;
            for (std::size_t j = col + 1; j < n; ++j)
                if (a.at(row, j) != 0) a.at(r, j) -= f * a.at(row, j);
            if (b[row] != 0) b[r] -= f * b[row];
        }
        ++row;
    }
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            if (a.at(k, j) != 0 && v[j] != 0) acc -= a.at(k, j) * v[j];
        v[k] = acc / a.at(k, k);
    }
    return v;
}

// Basis of the right null space {v : Mv = 0}, one vector per non-pivot
// column, deterministic: free column `f` yields the vector with v[f] = 1.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
    auto pivots = detail::echelon(m, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        // Back-substitute through the pivot rows from the bottom up.
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t col = pivots[k];
            if (col > f) continue;
            Rational acc(0);
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                if (m.at(k, j) != 0 && v[j] != 0) acc += m.at(k, j) * v[j];
            v[col] = -acc / m.at(k, col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mnforge

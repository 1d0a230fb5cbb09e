/**
 * Dense exact matrices over the rationals: rank, reduced row echelon form,
 * right kernel, and a fraction-free (Bareiss) rank used as an independent
 * cross-check of the Gaussian path.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace rbmtrop {

class RationalMatrix
{
    public:
        RationalMatrix() = default;

        RationalMatrix(std::size_t rows, std::size_t cols)
            : rows_(rows), cols_(cols), entries_(rows * cols) {}

        RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
            : rows_(rows), cols_(cols), entries_(std::move(entries))
        {
            if (entries_.size() != rows_ * cols_)
                throw std::invalid_argument("RationalMatrix: entry count != rows * cols");
        }

        /// Row-major literal, e.g. RationalMatrix::from_rows({{1, 2}, {3, 4}}).
        static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows)
        {
            const std::size_t r = rows.size();
            const std::size_t c = r == 0 ? 0 : rows.begin()->size();
            RationalMatrix m(r, c);
            std::size_t i = 0;
            for (const auto& row : rows) {
                if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
                std::size_t j = 0;
                for (const auto& x : row) m(i, j++) = x;
                ++i;
            }
            return m;
        }

        static RationalMatrix identity(std::size_t n)
        {
            RationalMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
            return m;
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
        const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

        const std::vector<Rational>& entries() const { return entries_; }

        RationalVector row(std::size_t i) const
        {
            return RationalVector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
        }

        RationalMatrix transpose() const
        {
            RationalMatrix t(cols_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
            return t;
        }

        /// Horizontal concatenation (this | other).
        RationalMatrix hcat(const RationalMatrix& other) const
        {
            if (other.rows_ != rows_) throw std::invalid_argument("hcat: row count mismatch");
            RationalMatrix m(rows_, cols_ + other.cols_);
            for (std::size_t i = 0; i < rows_; ++i) {
                for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
                for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
            }
            return m;
        }

        RationalVector multiply(const RationalVector& x) const
        {
            if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
            RationalVector y(rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    if (!is_zero((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
            return y;
        }

        bool operator==(const RationalMatrix&) const = default;

    private:
        static bool is_zero(const Rational& r) { return r.sign() == 0; }

        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<Rational> entries_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> reduce_to_rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).sign() == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).sign() == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j).sign() != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Exact rank by rational Gaussian elimination (forward pass only).
inline std::size_t rank(RationalMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).sign() == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).sign() == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j).sign() != 0) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Rank by fraction-free Bareiss elimination.  Rows are first cleared of
/// denominators, so all intermediate values are integers and every division
/// is exact.
inline std::size_t rank_bareiss(const RationalMatrix& input)
{
    const std::size_t rows = input.rows(), cols = input.cols();
    std::vector<Integer> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(input(i, j))));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& x = input(i, j);
            a[i * cols + j] = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<RationalVector> nullspace(const RationalMatrix& input)
{
    RationalMatrix m = input;
    const auto pivots = reduce_to_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(m.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Exact determinant of a square matrix.
inline Rational determinant(RationalMatrix m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).sign() == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).sign() == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].sign() != 0 && b[i].sign() != 0) s += a[i] * b[i];
    return s;
}

}  // namespace rbmtrop

#pragma once

// Dense matrices over an exact field, with Gaussian elimination.

#include <cstddef>
#include <utility>
#include <vector>

#include "uncorrset/error.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : r_(rows.size()), c_(0) {
        for (const auto& row : rows) {
            if (c_ == 0) c_ = row.size();
            if (row.size() != c_) throw PreconditionViolated("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_.at(i * c_ + j); }
    const T& operator()(std::size_t i, std::size_t j) const { return a_.at(i * c_ + j); }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t p = row;
            while (p < r_ && (*this)(p, col) == T(0)) ++p;
            if (p == r_) continue;
            swap_rows(p, row);
            const T inv = T(1) / (*this)(row, col);
            for (std::size_t j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row || (*this)(i, col) == T(0)) continue;
                const T f = (*this)(i, col);
                for (std::size_t j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    std::size_t r_;
    std::size_t c_;
    std::vector<T> a_;
};

template <class T>
std::size_t rank(Matrix<T> m) {
    return m.rref().size();
}

/// Exact determinant by elimination.
template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw PreconditionViolated("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == T(0)) ++p;
        if (p == n) return T(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const T inv = T(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == T(0)) continue;
            const T f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// A basis of {v : M v = 0}, one vector per free column, with a 1 in that column.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

using RationalMatrix = Matrix<Rational>;

}  // namespace uncorrset

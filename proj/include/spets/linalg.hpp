#pragma once

// Exact dense linear algebra over a field (Rational or CycNumber).

#include <cstddef>
#include <utility>
#include <vector>

#include "spets/cyclotomic.hpp"

namespace spets {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Row-reduces in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m, std::size_t ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && is_zero(m[p][c])) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        F inv = F(1) / m[r][c];
        for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

/// Incrementally maintained reduced echelon basis of a row space.
template <class F>
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const Matrix<F>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Reduces v against the basis; the result is zero iff v is in the span.
    Vec<F> reduce(Vec<F> v) const {
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const int pc = pivots_[b];
            if (is_zero(v[pc])) continue;
            F f = v[pc];
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero(rows_[b][j])) v[j] -= f * rows_[b][j];
        }
        return v;
    }

    bool contains(const Vec<F>& v) const {
        Vec<F> r = reduce(v);
        for (const auto& x : r)
            if (!is_zero(x)) return false;
        return true;
    }

    /// Adds v to the span; returns false if it was already contained.
    bool add(const Vec<F>& v) {
        Vec<F> r = reduce(v);
        std::size_t pc = 0;
        while (pc < dim_ && is_zero(r[pc])) ++pc;
        if (pc == dim_) return false;
        F inv = F(1) / r[pc];
        for (std::size_t j = pc; j < dim_; ++j) r[j] *= inv;
        // keep the basis fully reduced
        for (auto& row : rows_) {
            if (is_zero(row[pc])) continue;
            F f = row[pc];
            for (std::size_t j = pc; j < dim_; ++j)
                if (!is_zero(r[j])) row[j] -= f * r[j];
        }
        // insert keeping pivots sorted
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < static_cast<int>(pc)) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(pc));
        return true;
    }

  private:
    std::size_t dim_;
    Matrix<F> rows_;
    std::vector<int> pivots_;
};

/// Basis of {x : m x = 0}, returned in reduced echelon form.
template <class F>
Matrix<F> null_space(Matrix<F> m, std::size_t ncols) {
    std::vector<int> pivots = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix<F> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(ncols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    rref(basis, ncols);
    return basis;
}

template <class F>
Matrix<F> row_space(Matrix<F> m, std::size_t ncols) {
    rref(m, ncols);
    return m;
}

template <class F>
std::size_t rank(Matrix<F> m, std::size_t ncols) {
    return rref(m, ncols).size();
}

/// Whether every row of sub lies in the span of the rows of super.
template <class F>
bool span_contains(const Matrix<F>& super, const Matrix<F>& sub, std::size_t ncols) {
    EchelonBasis<F> basis(ncols);
    for (const auto& r : super) basis.add(r);
    for (const auto& r : sub)
        if (!basis.contains(r)) return false;
    return true;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix<F> c(n, Vec<F>(m, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!is_zero(b[l][j])) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

/// Determinant by Gaussian elimination over the field.
template <class F>
F determinant(Matrix<F> m) {
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m[p][c])) ++p;
        if (p == n) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        F inv = F(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m[i][c])) continue;
            F f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace spets

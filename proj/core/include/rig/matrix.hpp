#pragma once

#include "rig/gaussian.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rig {

/// Dense row-major matrix over an exact field (Rational or GaussianRational).
/// Values are immutable in practice: operations return new matrices.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conj_transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = field_conj((*this)(i, j));
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (field_is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Exact reduced row-echelon form. Pivot rule is fixed: scan columns left
/// to right, take the first row with a nonzero entry. Deterministic.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < m.rows() && field_is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
        F inv = F(1) / m(lead, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) = m(lead, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || field_is_zero(m(i, col))) continue;
            F f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    out.reduced = std::move(m);
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Exact basis of the null space; size = cols - rank. Vectors annihilate M
/// with no tolerance.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
    RrefResult<F> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols());
        v[free] = F(1);
        for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
            v[r.pivot_cols[pi]] = -r.reduced(pi, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact coefficients expressing v in span(S), or nullopt when v is outside.
/// S is given as a list of spanning vectors, all the same length as v.
template <class F>
std::optional<std::vector<F>> membership(const std::vector<F>& v,
                                         const std::vector<std::vector<F>>& s) {
    for (const auto& col : s)
        if (col.size() != v.size()) throw std::invalid_argument("membership: dimension mismatch");
    Matrix<F> aug(v.size(), s.size() + 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) aug(i, j) = s[j][i];
    for (std::size_t i = 0; i < v.size(); ++i) aug(i, s.size()) = v[i];
    RrefResult<F> r = rref(std::move(aug));
    std::vector<F> coeff(s.size());
    for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
        if (r.pivot_cols[pi] == s.size()) return std::nullopt;  // inconsistent
        coeff[r.pivot_cols[pi]] = r.reduced(pi, s.size());
    }
    return coeff;
}

/// Basis of { x : M x in span(S) }, solved through the stacked homogeneous
/// system [M | -S] (x, c)^T = 0 projected to the x block. Contains ker(M).
template <class F>
std::vector<std::vector<F>> constrained_preimage(const Matrix<F>& m,
                                                 const std::vector<std::vector<F>>& s) {
    for (const auto& col : s)
        if (col.size() != m.rows())
            throw std::invalid_argument("constrained_preimage: dimension mismatch");
    Matrix<F> stacked(m.rows(), m.cols() + s.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) stacked(i, j) = m(i, j);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) stacked(i, m.cols() + j) = -s[j][i];
    auto ker = kernel_basis(stacked);
    // Project to x and re-extract an independent set.
    Matrix<F> proj(ker.size(), m.cols());
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) proj(i, j) = ker[i][j];
    RrefResult<F> r = rref(std::move(proj));
    std::vector<std::vector<F>> basis;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::vector<F> v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = r.reduced(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    F det = F(1);
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && field_is_zero(m(piv, col))) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det = det * m(col, col);
        F inv = F(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (field_is_zero(m(i, col))) continue;
            F f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

/// Realification: each complex entry a+bi becomes the 2x2 block
/// [[a, -b], [b, a]]; a complex vector x = u+iv maps to interleaved
/// (u_0, v_0, u_1, v_1, ...). Fixed convention, rank doubles exactly.
inline Matrix<Rational> realify(const Matrix<GaussianRational>& m) {
    Matrix<Rational> r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const GaussianRational& z = m(i, j);
            r(2 * i, 2 * j) = z.re;
            r(2 * i, 2 * j + 1) = -z.im;
            r(2 * i + 1, 2 * j) = z.im;
            r(2 * i + 1, 2 * j + 1) = z.re;
        }
    return r;
}

}  // namespace rig

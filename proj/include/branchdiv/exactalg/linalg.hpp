#pragma once

#include "branchdiv/exactalg/upoly.hpp"

#include <optional>
#include <vector>

namespace branchdiv {

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, K(0)) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    K& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const K& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<K> row(size_t i) const { return std::vector<K>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }
    void append_row(const std::vector<K>& v) {
        if (r_ == 0 && c_ == 0) c_ = v.size();
        if (v.size() != c_) throw std::invalid_argument("row length mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++r_;
    }
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (size_t j = 0; j < b.c_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<size_t> rref(Matrix<K>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        K inv = inverse(m(r, col));
        for (size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, col))) continue;
            K f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class K>
size_t rank(Matrix<K> m) { return rref(m).size(); }

// Basis of {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> kernel(Matrix<K> m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<K>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<K> v(m.cols(), K(0));
        v[free] = K(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = K(0) - m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = b, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<K> x(m.cols(), K(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
    return x;
}

template <class K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    K det(1);
    const size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && is_zero(m(p, col))) ++p;
        if (p == n) return K(0);
        if (p != col) {
            m.swap_rows(p, col);
            det = K(0) - det;
        }
        det = det * m(col, col);
        K inv = inverse(m(col, col));
        for (size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            K f = m(i, col) * inv;
            for (size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

// Faddeev-LeVerrier; characteristic zero.
template <class K>
UPoly<K> characteristic_polynomial(const Matrix<K>& a) {
    const size_t n = a.rows();
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);
    Matrix<K> M(n, n);
    for (size_t k = 1; k <= n; ++k) {
        Matrix<K> AM = a * M;
        for (size_t i = 0; i < n; ++i) AM(i, i) = AM(i, i) + c[n - k + 1];
        M = AM;
        Matrix<K> AMk = a * M;
        K tr(0);
        for (size_t i = 0; i < n; ++i) tr = tr + AMk(i, i);
        c[n - k] = (K(0) - tr) * inverse(K(static_cast<int>(k)));
    }
    return UPoly<K>(std::move(c));
}

} // namespace branchdiv

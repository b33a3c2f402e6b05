// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exfeec {

template <class F>
using Vector = std::vector<F>;

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector<F> row(std::size_t i) const { return Vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vector<F> col(std::size_t j) const {
        Vector<F> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!exfeec::is_zero(x)) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t l = 0; l < x.cols_; ++l) {
                const F& xil = x(i, l);
                if (exfeec::is_zero(xil)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xil * y(l, j);
            }
        return p;
    }

    friend Vector<F> operator*(const Matrix& x, const Vector<F>& v) {
        if (x.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
        Vector<F> out(x.rows_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j)
                if (!exfeec::is_zero(v[j])) out[i] += x(i, j) * v[j];
        return out;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }

    friend Matrix operator-(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }

    friend Matrix operator*(const F& s, Matrix x) {
        for (auto& e : x.a_) e *= s;
        return x;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

template <class F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j).submul(f, m(r, j));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Exact solution of M x = b, free variables set to zero; nullopt when inconsistent.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto res = rref(std::move(aug));
    if (!res.pivots.empty() && res.pivots.back() == m.cols()) return std::nullopt;
    Vector<F> x(m.cols());
    for (std::size_t i = 0; i < res.rank; ++i) x[res.pivots[i]] = res.reduced(i, m.cols());
    return x;
}

template <class F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
    auto res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : res.pivots) is_pivot[p] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector<F> v(m.cols());
        v[f] = F(1);
        for (std::size_t i = 0; i < res.rank; ++i) v[res.pivots[i]] = -res.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return F(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j).submul(f, m(c, j));
        }
    }
    return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto res = rref(std::move(aug));
    if (res.rank < n || res.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.reduced(i, n + j);
    return inv;
}

// det of the leading k×k blocks, k = 1..n, via elimination without row exchanges.
// Once a zero pivot appears, all later minors are computed directly.
template <class F>
std::vector<F> leading_principal_minors(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minors of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<F> minors;
    Matrix<F> a = m;
    F prod(1);
    for (std::size_t c = 0; c < n; ++c) {
        if (is_zero(a(c, c))) {
            for (std::size_t k = c + 1; k <= n; ++k) {
                Matrix<F> block(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
                minors.push_back(determinant(block));
            }
            return minors;
        }
        prod *= a(c, c);
        minors.push_back(prod);
        F inv = F(1) / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            F f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j).submul(f, a(c, j));
        }
    }
    return minors;
}

// Incrementally built semi-echelon basis of a row space. Row i is zero at the
// pivot columns of rows 0..i-1, so a single ordered pass reduces a vector.
// With tracking enabled, each stored row also records its combination of the
// inserted vectors.
template <class F>
class EchelonBasis {
public:
    struct SparseRow {
        std::vector<std::size_t> idx;
        std::vector<F> val;
    };

    explicit EchelonBasis(std::size_t width, bool track = false) : width_(width), track_(track) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    // Indices of inserted vectors that raised the rank.
    const std::vector<std::size_t>& independent() const { return independent_; }

    // Returns true when v raised the rank. Otherwise, when tracking, the
    // dependency (coefficients over all inserted vectors, with this one at
    // +1) is stored in last_relation().
    bool insert(Vector<F> v) {
        check(v);
        Vector<F> comb;
        if (track_) {
            comb.assign(inserted_ + 1, F(0));
            comb[inserted_] = F(1);
        }
        reduce_in_place(v, track_ ? &comb : nullptr);
        std::size_t index = inserted_++;
        std::size_t p = 0;
        while (p < width_ && is_zero(v[p])) ++p;
        if (p == width_) {
            if (track_) relation_ = std::move(comb);
            return false;
        }
        F inv = F(1) / v[p];
        SparseRow row;
        for (std::size_t j = p; j < width_; ++j)
            if (!is_zero(v[j])) {
                row.idx.push_back(j);
                row.val.push_back(v[j] * inv);
            }
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        independent_.push_back(index);
        if (track_) {
            SparseRow c;
            for (std::size_t j = 0; j < comb.size(); ++j)
                if (!is_zero(comb[j])) {
                    c.idx.push_back(j);
                    c.val.push_back(comb[j] * inv);
                }
            combos_.push_back(std::move(c));
        }
        return true;
    }

    const Vector<F>& last_relation() const { return relation_; }

    bool contains(Vector<F> v) const {
        check(v);
        reduce_in_place(v, nullptr);
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

    // Coefficients c over the inserted vectors with Σ c_i v_i = v, or nullopt.
    // Requires tracking.
    std::optional<Vector<F>> coordinates(Vector<F> v) const {
        if (!track_) throw std::logic_error("EchelonBasis: coordinates need tracking");
        check(v);
        Vector<F> comb(inserted_, F(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            F f = v[pivots_[i]];
            if (is_zero(f)) continue;
            const auto& row = rows_[i];
            for (std::size_t t = 0; t < row.idx.size(); ++t) v[row.idx[t]].submul(f, row.val[t]);
            const auto& c = combos_[i];
            for (std::size_t t = 0; t < c.idx.size(); ++t) comb[c.idx[t]].addmul(f, c.val[t]);
        }
        for (const auto& x : v)
            if (!is_zero(x)) return std::nullopt;
        return comb;
    }

private:
    void check(const Vector<F>& v) const {
        if (v.size() != width_) throw std::invalid_argument("EchelonBasis: width mismatch");
    }

    // On return comb (if given) holds the coefficients with
    // v_out = comb · (inserted vectors).
    void reduce_in_place(Vector<F>& v, Vector<F>* comb) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            F f = v[pivots_[i]];
            if (is_zero(f)) continue;
            const auto& row = rows_[i];
            for (std::size_t t = 0; t < row.idx.size(); ++t) v[row.idx[t]].submul(f, row.val[t]);
            if (comb) {
                const auto& c = combos_[i];
                for (std::size_t t = 0; t < c.idx.size(); ++t) (*comb)[c.idx[t]].submul(f, c.val[t]);
            }
        }
    }

    std::size_t width_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<SparseRow> rows_;
    std::vector<SparseRow> combos_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> independent_;
    Vector<F> relation_;
};

}  // namespace exfeec

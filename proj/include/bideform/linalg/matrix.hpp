#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over any scalar with ring operations.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bideform/exactfield/scalar.hpp"

namespace bideform {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const F& fill = F(0)) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix diagonal(const std::vector<F>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<F>& data() const { return a_; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Conjugate transpose (plain transpose for real scalars).
    Matrix adjoint() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = ScalarTraits<F>::conjugate((*this)(i, j));
        return t;
    }

    F trace() const {
        require_square("trace");
        F s = F(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

    friend Matrix operator*(const F& s, Matrix m) {
        for (auto& v : m.a_) v = s * v;
        return m;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<F> y(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Elementwise conversion to another scalar type.
    template <class G, class Fn>
    Matrix<G> map(Fn&& fn) const {
        Matrix<G> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]";
        }
        return os << "]";
    }

private:
    void require_square(const char* what) const {
        if (!is_square()) throw std::invalid_argument(std::string("Matrix: ") + what + " needs a square matrix");
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> a_;
};

template <class F>
Matrix<F> matrix_pow(const Matrix<F>& m, unsigned e) {
    Matrix<F> r = Matrix<F>::identity(m.rows()), b = m;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

/// Determinant by cofactor expansion along the first row. Division free, so
/// it works over commutative rings; intended for n <= 5.
template <class F>
F determinant_cofactor(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant_cofactor: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return F(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    F acc = F(0);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<F> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        F term = m(0, j) * determinant_cofactor(minor);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

/// Classical adjugate, adj(m) * m = det(m) * I. Division free.
template <class F>
Matrix<F> adjugate(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate: square matrix required");
    const std::size_t n = m.rows();
    Matrix<F> adj(n, n);
    if (n == 1) {
        adj(0, 0) = F(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<F> minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != j) minor(rr, cc++) = m(r, c);
                ++rr;
            }
            F cof = determinant_cofactor(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

/// Inverse of a small matrix through its adjugate. Works for exact fields and
/// for floating types alike (no pivoting decisions are made).
template <class F>
Matrix<F> small_inverse(const Matrix<F>& m) {
    F det = determinant_cofactor(m);
    if (ScalarTraits<F>::is_zero(det)) throw std::domain_error("small_inverse: singular matrix");
    F inv = F(1) / det;
    return inv * adjugate(m);
}

}  // namespace bideform

#pragma once

/// @file matrix.hpp
/// Dense row-major matrix over an arbitrary exact scalar, value semantics.
///
/// Vectors are rows throughout the library: images are row spans (u |-> u*M)
/// and kernels are left kernels ({u : u*M = 0}).  A default-constructed scalar
/// must behave as an additive identity, so products with an empty inner
/// dimension yield well-defined zero matrices.

#include <cstddef>
#include <vector>

#include "ccode/errors.hpp"

namespace ccode {

template <class T>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) throw UsageError("ragged rows in matrix literal");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    void set_row(std::size_t i, const std::vector<T>& v) {
        if (v.size() != c_) throw UsageError("row length mismatch");
        for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
    }

    Matrix transposed() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.r_, a.c_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw UsageError("matrix product dimension mismatch");
        Matrix r(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t j = 0; j < b.c_; ++j) {
                T acc{};
                for (std::size_t t = 0; t < a.c_; ++t) acc = acc + a(i, t) * b(t, j);
                r(i, j) = acc;
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.r_, m.c_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const {
        if (i0 + h > r_ || j0 + w > c_) throw UsageError("block out of range");
        Matrix r(h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw UsageError("matrix shape mismatch");
    }

    std::size_t r_, c_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw UsageError("hstack row count mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw UsageError("vstack column count mismatch");
    Matrix<T> r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

/// Row vector times matrix.
template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const Matrix<T>& m) {
    if (v.size() != m.rows()) throw UsageError("vector-matrix dimension mismatch");
    std::vector<T> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        T acc{};
        for (std::size_t i = 0; i < v.size(); ++i) acc = acc + v[i] * m(i, j);
        r[j] = acc;
    }
    return r;
}

template <class T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace ccode

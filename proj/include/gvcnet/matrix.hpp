#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gvcnet/common.hpp"

namespace gvc {

// Dense row-major matrix of 64-bit reals. Column vectors are n x 1.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        d_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            require(r.size() == cols_, "Matrix: ragged initializer");
            d_.insert(d_.end(), r.begin(), r.end());
        }
    }

    static Matrix column(const std::vector<double>& v) {
        Matrix m(v.size(), 1);
        m.d_ = v;
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return d_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
    double& operator[](std::size_t k) { return d_[k]; }
    double operator[](std::size_t k) const { return d_[k]; }

    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    void fill(double v) { d_.assign(d_.size(), v); }

    bool all_finite() const {
        for (double x : d_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        require(same_shape(o), "Matrix +=: shape mismatch");
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require(same_shape(o), "Matrix -=: shape mismatch");
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
        return *this;
    }
    Matrix& operator*=(double s) {
        for (double& x : d_) x *= s;
        return *this;
    }

    // this += s * o
    void add_scaled(const Matrix& o, double s) {
        require(same_shape(o), "Matrix add_scaled: shape mismatch");
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += s * o.d_[k];
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> d_;
};

inline Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
inline Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
inline Matrix operator*(Matrix a, double s) { return a *= s; }
inline Matrix operator*(double s, Matrix a) { return a *= s; }

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

// C = A * B, ikj order so the inner loop is unit stride.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    const double* bd = b.data();
    double* cd = c.data();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data() + i * m;
        double* ci = cd + i * p;
        for (std::size_t k = 0; k < m; ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = bd + k * p;
            for (std::size_t j = 0; j < p; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

// C += A^T * B without materializing the transpose.
inline void accumulate_atb(Matrix& c, const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "accumulate_atb: row mismatch");
    require(c.rows() == a.cols() && c.cols() == b.cols(), "accumulate_atb: output shape mismatch");
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        const double* ak = a.data() + k * m;
        const double* bk = b.data() + k * p;
        for (std::size_t i = 0; i < m; ++i) {
            const double aki = ak[i];
            if (aki == 0.0) continue;
            double* ci = c.data() + i * p;
            for (std::size_t j = 0; j < p; ++j) ci[j] += aki * bk[j];
        }
    }
}

// C = A * B^T
inline Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "matmul_nt: inner dimension mismatch");
    Matrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.data() + i * a.cols();
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const double* bj = b.data() + j * b.cols();
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += ai[k] * bj[k];
            c(i, j) = s;
        }
    }
    return c;
}

inline double dot(const Matrix& a, const Matrix& b) {
    require(a.size() == b.size(), "dot: size mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline double max_abs(const Matrix& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s = std::max(s, std::fabs(a[k]));
    return s;
}

inline Matrix concat_rows(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "concat_rows: column mismatch");
    Matrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[a.size() + k] = b[k];
    return c;
}

}  // namespace gvc

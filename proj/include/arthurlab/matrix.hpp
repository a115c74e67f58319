#pragma once

#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

#include "arthurlab/rational.hpp"

namespace arthurlab {

// Dense matrix over the Gaussian rationals.  Everything here is exact;
// sizes stay small (at most (2n+1) x (2n+1) with n <= 6), so Gaussian
// elimination over the field is cheap.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
        return m;
    }

    // E_{i,j} with 1-based indices, matching the usual matrix-unit notation.
    static Matrix unit(int n, int i, int j, GaussianRational v = GaussianRational(1)) {
        Matrix m(n, n);
        m(i - 1, j - 1) = v;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[std::size_t(r) * cols_ + c];
    }
    const GaussianRational& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return data_[std::size_t(r) * cols_ + c];
    }

    // 1-based accessors, convenient when transcribing E_{i,j} formulas.
    GaussianRational& at1(int r, int c) { return (*this)(r - 1, c - 1); }
    const GaussianRational& at1(int r, int c) const { return (*this)(r - 1, c - 1); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    // Entrywise complex conjugation (the Galois action of Gal(C/R)).
    Matrix conj() const {
        Matrix m(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).conj();
        return m;
    }

    Matrix conj_transpose() const { return conj().transpose(); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix m(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const GaussianRational& arc = a(r, k);
                if (arc.is_zero()) continue;
                for (int c = 0; c < b.cols_; ++c) {
                    const GaussianRational& bkc = b(k, c);
                    if (!bkc.is_zero()) m(r, c) += arc * bkc;
                }
            }
        return m;
    }
    friend Matrix operator*(const GaussianRational& s, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
        return m;
    }
    Matrix operator-() const { return GaussianRational(-1) * (*this); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix commutator(const Matrix& b) const { return (*this) * b - b * (*this); }

    GaussianRational det() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: det of non-square matrix");
        Matrix a = *this;
        GaussianRational d(1);
        for (int col = 0; col < cols_; ++col) {
            int pivot = -1;
            for (int r = col; r < rows_; ++r)
                if (!a(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) return GaussianRational(0);
            if (pivot != col) {
                for (int c = 0; c < cols_; ++c) std::swap(a(pivot, c), a(col, c));
                d = -d;
            }
            d *= a(col, col);
            GaussianRational inv = GaussianRational(1) / a(col, col);
            for (int r = col + 1; r < rows_; ++r) {
                if (a(r, col).is_zero()) continue;
                GaussianRational f = a(r, col) * inv;
                for (int c = col; c < cols_; ++c) a(r, c) -= f * a(col, c);
            }
        }
        return d;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square matrix");
        int n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!a(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) throw std::domain_error("Matrix: singular matrix has no inverse");
            if (pivot != col)
                for (int c = 0; c < n; ++c) {
                    std::swap(a(pivot, c), a(col, c));
                    std::swap(inv(pivot, c), inv(col, c));
                }
            GaussianRational f = GaussianRational(1) / a(col, col);
            for (int c = 0; c < n; ++c) { a(col, c) *= f; inv(col, c) *= f; }
            for (int r = 0; r < n; ++r) {
                if (r == col || a(r, col).is_zero()) continue;
                GaussianRational g = a(r, col);
                for (int c = 0; c < n; ++c) {
                    a(r, c) -= g * a(col, c);
                    inv(r, c) -= g * inv(col, c);
                }
            }
        }
        return inv;
    }

    // exp of a nilpotent matrix; a nilpotent n x n matrix satisfies
    // x^n = 0, so the series terminates within rows() steps.
    static Matrix exp_nilpotent(const Matrix& x) {
        Matrix sum = identity(x.rows());
        Matrix term = identity(x.rows());
        for (int k = 1; k <= x.rows(); ++k) {
            term = term * x;
            term = GaussianRational(Rational(1, k)) * term;
            if (term.is_zero()) return sum;
            sum = sum + term;
        }
        throw std::domain_error("Matrix: exp_nilpotent of a non-nilpotent matrix");
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_;
    int cols_;
    std::vector<GaussianRational> data_;
};

}  // namespace arthurlab

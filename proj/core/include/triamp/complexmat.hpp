// complexmat.hpp - small dense complex matrix, row-major storage

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "triamp/errors.hpp"

namespace triamp {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class CMat {
public:
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw ValidationError("CMat: dimensions must be positive");
    }

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    bool all_finite() const {
        for (const auto& z : data_)
            if (!is_finite(z)) return false;
        return true;
    }

    CMat transpose() const {
        CMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend CMat operator*(const CMat& a, const CMat& b) {
        if (a.cols_ != b.rows_)
            throw ValidationError("CMat multiply: inner dimensions mismatch");
        CMat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend CMat operator+(const CMat& a, const CMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ValidationError("CMat add: dimension mismatch");
        CMat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }

    friend CMat operator-(const CMat& a, const CMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ValidationError("CMat subtract: dimension mismatch");
        CMat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

} // namespace triamp

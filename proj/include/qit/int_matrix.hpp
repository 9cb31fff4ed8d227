#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "error.hpp"

namespace qit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
    IntVector column(std::size_t c) const {
        IntVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    IntVector apply(const IntVector& x) const {
        if (x.size() != cols_) throw PreconditionError("IntMatrix::apply: dimension mismatch");
        IntVector y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("IntMatrix product: dimension mismatch");
        IntMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    IntMatrix power(unsigned exponent) const {
        if (!square()) throw PreconditionError("IntMatrix::power: matrix not square");
        IntMatrix result = identity(rows_);
        IntMatrix base = *this;
        while (exponent) {
            if (exponent & 1U) result = result * base;
            exponent >>= 1U;
            if (exponent) base = base * base;
        }
        return result;
    }

    Integer row_sum(std::size_t r) const {
        Integer s = 0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
        return s;
    }
    Integer column_sum(std::size_t c) const {
        Integer s = 0;
        for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
        return s;
    }

    /// Fraction-free Bareiss elimination; exact.
    Integer determinant() const {
        if (!square()) throw PreconditionError("IntMatrix::determinant: matrix not square");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Integer prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (sgn(m(k, k)) == 0) {
                std::size_t swap = k + 1;
                while (swap < n && sgn(m(swap, k)) == 0) ++swap;
                if (swap == n) return 0;
                for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                    mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ",[" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

} // namespace qit

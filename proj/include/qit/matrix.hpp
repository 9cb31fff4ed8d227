#pragma once

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace qit {

/// Dense matrix over a field F, row-major.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!qit::is_zero(x)) return false;
        return true;
    }

    std::vector<F> column(std::size_t c) const {
        std::vector<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    void set_column(std::size_t c, const std::vector<F>& v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        if (x.size() != cols_) throw PreconditionError("Matrix::apply: dimension mismatch");
        std::vector<F> y(rows_, F(0));
        for (std::size_t c = 0; c < cols_; ++c) {
            if (qit::is_zero(x[c])) continue;
            for (std::size_t r = 0; r < rows_; ++r)
                if (!qit::is_zero((*this)(r, c))) y[r] += (*this)(r, c) * x[c];
        }
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("Matrix product: dimension mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (qit::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!qit::is_zero(b(k, j))) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("Matrix sum: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("Matrix difference: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Columns `first .. first+count-1`.
    Matrix column_block(std::size_t first, std::size_t count) const {
        Matrix b(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
        return b;
    }

    Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix b(count, cols_);
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(first + r, c);
        return b;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix b(rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) b(r, c) = (*this)(r, idx[c]);
        return b;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix b(idx.size(), cols_);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(idx[r], c);
        return b;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hstack: row mismatch");
    Matrix<F> m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw PreconditionError("vstack: column mismatch");
    Matrix<F> m(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
    }
    return m;
}

/// Block diagonal sum.
template <class F>
Matrix<F> block_diagonal(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form with pivots chosen left to right, first nonzero row.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
    RowEchelon<F> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        F inv = F(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).pivots.size();
}

/// Basis of {x : m x = 0} as the columns of the result.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(f, k) = F(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, f);
    }
    return basis;
}

/// Indices of a maximal independent set of columns, greedily left to right.
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
    return rref(m).pivots;
}

/// Columns forming a basis of the column space of m.
template <class F>
Matrix<F> column_space(const Matrix<F>& m) {
    return m.select_columns(independent_columns(m));
}

/// Solve b x = y column by column; b must have full column rank and every
/// column of y must lie in the column space of b.
template <class F>
Matrix<F> solve_in_basis(const Matrix<F>& b, const Matrix<F>& y) {
    if (b.rows() != y.rows()) throw PreconditionError("solve_in_basis: row mismatch");
    auto e = rref(hstack(b, y));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.pivots[i] >= b.cols()) throw PreconditionError("solve_in_basis: vector outside the span");
    if (e.pivots.size() != b.cols()) throw PreconditionError("solve_in_basis: basis columns are dependent");
    Matrix<F> x(b.cols(), y.cols());
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t c = 0; c < y.cols(); ++c) x(i, c) = e.reduced(i, b.cols() + c);
    return x;
}

/// A right inverse s with m s = identity; m must have full row rank.
template <class F>
Matrix<F> right_inverse(const Matrix<F>& m) {
    auto piv = rref(m).pivots;
    if (piv.size() != m.rows()) throw PreconditionError("right_inverse: matrix is not surjective");
    Matrix<F> sub = m.select_columns(piv);
    Matrix<F> inv = solve_in_basis(sub, Matrix<F>::identity(m.rows()));
    Matrix<F> s(m.cols(), m.rows());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t c = 0; c < m.rows(); ++c) s(piv[i], c) = inv(i, c);
    return s;
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Convert between fields (rationals to F_p via reduction).
template <class To>
Matrix<To> convert_matrix(const Matrix<Rational>& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = FieldTraits<To>::from_rational(m(r, c));
    return out;
}

} // namespace qit

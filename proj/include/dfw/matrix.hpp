#pragma once

// Dense matrices of arbitrary-precision integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfw {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-major literal, e.g. IntMatrix::from_rows({{2, 4}, {6, 8}}).
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c)
                throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
            std::size_t j = 0;
            for (long v : row)
                m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0)
    {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? cols_if_empty : rows.front().size();
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty = 0)
    {
        std::size_t c = cols.size();
        std::size_t r = c == 0 ? rows_if_empty : cols.front().size();
        IntMatrix m(r, c);
        for (std::size_t j = 0; j < c; ++j) {
            if (cols[j].size() != r)
                throw std::invalid_argument("IntMatrix::from_columns: ragged columns");
            for (std::size_t i = 0; i < r; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix diagonal(std::span<const Integer> d)
    {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Integer>& entries() const noexcept { return data_; }

    IntVector column(std::size_t j) const
    {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    IntVector row(std::size_t i) const
    {
        return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void set_column(std::size_t j, std::span<const Integer> v)
    {
        if (v.size() != rows_)
            throw std::invalid_argument("IntMatrix::set_column: length mismatch");
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
    }

    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q)
    {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Integer& s = (*this)(src, j);
            if (s != 0)
                mpz_addmul((*this)(dst, j).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
        }
    }

    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            const Integer& s = (*this)(i, src);
            if (s != 0)
                mpz_addmul((*this)(i, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
        }
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = -(*this)(i, j);
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    bool column_is_zero(std::size_t j) const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, j) != 0)
                return false;
        return true;
    }

    IntMatrix transpose() const
    {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count).
    IntMatrix column_range(std::size_t first, std::size_t count) const
    {
        IntMatrix m(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j)
                m(i, j) = (*this)(i, first + j);
        return m;
    }

    /// Rows [first, first + count).
    IntMatrix row_range(std::size_t first, std::size_t count) const
    {
        IntMatrix m(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(first + i, j);
        return m;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix product: dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Integer& bkj = b(k, j);
                    if (bkj != 0)
                        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
                }
            }
        return c;
    }

    friend IntVector operator*(const IntMatrix& a, std::span<const Integer> x)
    {
        if (a.cols_ != x.size())
            throw std::invalid_argument("IntMatrix-vector product: dimension mismatch");
        IntVector y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0 && x[j] != 0)
                    mpz_addmul(y[i].get_mpz_t(), a(i, j).get_mpz_t(), x[j].get_mpz_t());
        return y;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
    {
        a.require_same_shape(b);
        IntMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] += b.data_[k];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
    {
        a.require_same_shape(b);
        IntMatrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] -= b.data_[k];
        return c;
    }

    friend IntMatrix operator*(const Integer& s, const IntMatrix& a)
    {
        IntMatrix c = a;
        for (auto& x : c.data_)
            x *= s;
        return c;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i)
                os << ',';
            os << '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    os << ',';
                os << (*this)(i, j);
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

private:
    void require_same_shape(const IntMatrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// [a | b]
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat: row count mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

/// [a ; b]
inline IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("vconcat: column count mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, j) = b(i, j);
    return m;
}

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

/// Kronecker product; row (i, k) -> i * b.rows() + k, column (j, l) -> j * b.cols() + l.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Integer& aij = a(i, j);
            if (aij == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0)
                        m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

} // namespace dfw

#pragma once

// Exact integer linear algebra: Smith and column Hermite normal forms,
// saturated kernels and integer linear solving.

#include "dfw/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace dfw {

/// left * input * right == diag, with left and right unimodular.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix diag;
    IntMatrix right;

    /// Nonzero diagonal entries d_1 | d_2 | ... in order.
    IntVector invariants() const
    {
        IntVector d;
        for (std::size_t i = 0; i < std::min(diag.rows(), diag.cols()); ++i)
            if (diag(i, i) != 0)
                d.push_back(diag(i, i));
        return d;
    }
};

namespace detail {

    inline Integer floor_quotient(const Integer& a, const Integer& b)
    {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    inline bool divides(const Integer& d, const Integer& a)
    {
        return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
    }

    // Diagonalizes d in place; when Track is set the row/column operations are
    // mirrored into left (rows) and right (columns).
    template <bool Track>
    void smith_reduce(IntMatrix& d, IntMatrix& left, IntMatrix& right)
    {
        const std::size_t rows = d.rows();
        const std::size_t cols = d.cols();
        const std::size_t n = std::min(rows, cols);
        for (std::size_t t = 0; t < n; ++t) {
            for (;;) {
                // minimal-absolute-value pivot in the trailing block
                std::size_t pi = rows, pj = cols;
                for (std::size_t i = t; i < rows; ++i)
                    for (std::size_t j = t; j < cols; ++j) {
                        const Integer& x = d(i, j);
                        if (x == 0)
                            continue;
                        if (pi == rows || mpz_cmpabs(x.get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)
                            pi = i, pj = j;
                    }
                if (pi == rows)
                    return;
                d.swap_rows(t, pi);
                d.swap_cols(t, pj);
                if constexpr (Track) {
                    left.swap_rows(t, pi);
                    right.swap_cols(t, pj);
                }

                bool clean = true;
                const Integer pivot = d(t, t);
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (d(i, t) == 0)
                        continue;
                    Integer q = -floor_quotient(d(i, t), pivot);
                    d.add_row_multiple(i, t, q);
                    if constexpr (Track)
                        left.add_row_multiple(i, t, q);
                    if (d(i, t) != 0)
                        clean = false;
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (d(t, j) == 0)
                        continue;
                    Integer q = -floor_quotient(d(t, j), pivot);
                    d.add_col_multiple(j, t, q);
                    if constexpr (Track)
                        right.add_col_multiple(j, t, q);
                    if (d(t, j) != 0)
                        clean = false;
                }
                if (!clean)
                    continue;

                // enforce d_t | every remaining entry
                std::size_t bad = rows;
                for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (!divides(pivot, d(i, j))) {
                            bad = i;
                            break;
                        }
                if (bad == rows)
                    break;
                d.add_row_multiple(t, bad, Integer(1));
                if constexpr (Track)
                    left.add_row_multiple(t, bad, Integer(1));
            }
            if (d(t, t) < 0) {
                d.negate_row(t);
                if constexpr (Track)
                    left.negate_row(t);
            }
        }
    }

} // namespace detail

/// Smith normal form with unimodular transforms. Pivots on the entry of
/// least absolute value; diagonal entries are nonnegative with zeros last.
inline SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    SmithDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    detail::smith_reduce<true>(s.diag, s.left, s.right);
    return s;
}

/// Nonzero invariant factors only, without transforms.
inline IntVector smith_invariants(const IntMatrix& m)
{
    IntMatrix d = m;
    IntMatrix unused;
    detail::smith_reduce<false>(d, unused, unused);
    IntVector out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0)
            out.push_back(d(i, i));
    return out;
}

/// Column Hermite form: input * transform == form, transform unimodular.
/// Column k < rank has a positive pivot at row pivot_rows[k] (strictly
/// increasing), zeros above it, and entries to its left in that row reduced
/// into [0, pivot). Columns from rank on are zero.
struct ColumnEchelon {
    IntMatrix form;
    IntMatrix transform;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const noexcept { return pivot_rows.size(); }
};

inline ColumnEchelon column_echelon(const IntMatrix& m)
{
    ColumnEchelon e{m, IntMatrix::identity(m.cols()), {}};
    IntMatrix& h = e.form;
    IntMatrix& t = e.transform;
    const std::size_t cols = m.cols();
    std::size_t k = 0;
    for (std::size_t i = 0; i < m.rows() && k < cols; ++i) {
        std::size_t p = cols;
        for (;;) {
            p = cols;
            for (std::size_t j = k; j < cols; ++j)
                if (h(i, j) != 0 && (p == cols || mpz_cmpabs(h(i, j).get_mpz_t(), h(i, p).get_mpz_t()) < 0))
                    p = j;
            if (p == cols)
                break;
            bool clean = true;
            for (std::size_t j = k; j < cols; ++j) {
                if (j == p || h(i, j) == 0)
                    continue;
                Integer q = -detail::floor_quotient(h(i, j), h(i, p));
                h.add_col_multiple(j, p, q);
                t.add_col_multiple(j, p, q);
                if (h(i, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (p == cols)
            continue;
        h.swap_cols(k, p);
        t.swap_cols(k, p);
        if (h(i, k) < 0) {
            h.negate_col(k);
            t.negate_col(k);
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (h(i, j) == 0)
                continue;
            Integer q = -detail::floor_quotient(h(i, j), h(i, k));
            if (q != 0) {
                h.add_col_multiple(j, k, q);
                t.add_col_multiple(j, k, q);
            }
        }
        e.pivot_rows.push_back(i);
        ++k;
    }
    return e;
}

inline std::size_t rank(const IntMatrix& m) { return column_echelon(m).rank(); }

/// Basis of the saturated integer kernel {x : m x = 0}, one vector per column.
inline IntMatrix kernel_basis(const IntMatrix& m)
{
    ColumnEchelon e = column_echelon(m);
    return e.transform.column_range(e.rank(), m.cols() - e.rank());
}

/// Independent columns spanning the same lattice as the columns of m.
inline IntMatrix column_span_basis(const IntMatrix& m)
{
    ColumnEchelon e = column_echelon(m);
    return e.form.column_range(0, e.rank());
}

/// Integer solver for m x = b, reusable across right-hand sides.
class LinearSolver {
public:
    explicit LinearSolver(const IntMatrix& m) : echelon_(column_echelon(m)), rows_(m.rows()) {}

    std::optional<IntVector> solve(std::span<const Integer> b) const
    {
        if (b.size() != rows_)
            throw std::invalid_argument("LinearSolver::solve: right-hand side has wrong length");
        const IntMatrix& h = echelon_.form;
        IntVector residual(b.begin(), b.end());
        const std::size_t r = echelon_.rank();
        IntVector y(r);
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t p = echelon_.pivot_rows[k];
            for (std::size_t i = (k == 0 ? 0 : echelon_.pivot_rows[k - 1] + 1); i < p; ++i)
                if (residual[i] != 0)
                    return std::nullopt;
            if (residual[p] == 0)
                continue;
            if (!detail::divides(h(p, k), residual[p]))
                return std::nullopt;
            mpz_divexact(y[k].get_mpz_t(), residual[p].get_mpz_t(), h(p, k).get_mpz_t());
            for (std::size_t i = p; i < rows_; ++i)
                if (h(i, k) != 0)
                    mpz_submul(residual[i].get_mpz_t(), y[k].get_mpz_t(), h(i, k).get_mpz_t());
        }
        for (const auto& v : residual)
            if (v != 0)
                return std::nullopt;
        const IntMatrix& t = echelon_.transform;
        IntVector x(t.rows());
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t k = 0; k < r; ++k)
                if (y[k] != 0 && t(i, k) != 0)
                    mpz_addmul(x[i].get_mpz_t(), t(i, k).get_mpz_t(), y[k].get_mpz_t());
        return x;
    }

    bool solvable(std::span<const Integer> b) const { return solve(b).has_value(); }

    /// Solves column by column; nullopt if any column is not solvable.
    std::optional<IntMatrix> solve_columns(const IntMatrix& b) const
    {
        IntMatrix x(echelon_.transform.rows(), b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto col = solve(b.column(j));
            if (!col)
                return std::nullopt;
            x.set_column(j, *col);
        }
        return x;
    }

    bool all_solvable(const IntMatrix& b) const
    {
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!solvable(b.column(j)))
                return false;
        return true;
    }

    std::size_t rank() const noexcept { return echelon_.rank(); }

private:
    ColumnEchelon echelon_;
    std::size_t rows_;
};

inline std::optional<IntVector> solve(const IntMatrix& m, std::span<const Integer> b)
{
    return LinearSolver(m).solve(b);
}

} // namespace dfw

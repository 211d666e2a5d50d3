#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// goes through the normal-form code it is meant to check.

#include "dfw/dfw.hpp"

#include <functional>
#include <random>
#include <set>

namespace dfw {

// readable gtest failure messages
inline void PrintTo(const CanonicalForm& c, std::ostream* os) { *os << c.to_string(); }

} // namespace dfw

namespace dfw::oracle {

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> c(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(c);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            c[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// g_k = gcd of all k x k minors (0 when every minor vanishes).
inline Integer minor_gcd(const IntMatrix& m, std::size_t k)
{
    Integer g = 0;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        combinations(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = m(rows[i], cols[j]);
            Integer d = determinant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

/// d_k = g_k / g_{k-1} for every k with g_k != 0.
inline IntVector invariant_factors_from_minors(const IntMatrix& m)
{
    IntVector d;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = minor_gcd(m, k);
        if (g == 0)
            break;
        d.push_back(g / prev);
        prev = g;
    }
    return d;
}

/// |A / nA| for A = Z^r / span(relations), by closing the span of the
/// relation columns inside (Z/n)^r. Exponential in r; keep r and n small.
inline std::size_t quotient_mod_order(const PresentedGroup& g, long n)
{
    const std::size_t r = g.rank();
    auto reduce = [n](const Integer& x) {
        Integer m;
        mpz_fdiv_r_ui(m.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
        return static_cast<long>(m.get_si());
    };
    std::vector<std::vector<long>> gens;
    for (std::size_t j = 0; j < g.relations().cols(); ++j) {
        std::vector<long> v(r);
        for (std::size_t i = 0; i < r; ++i)
            v[i] = reduce(g.relations()(i, j));
        gens.push_back(v);
    }
    std::set<std::vector<long>> span{std::vector<long>(r, 0)};
    std::vector<std::vector<long>> frontier{std::vector<long>(r, 0)};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& x : frontier)
            for (const auto& gen : gens) {
                std::vector<long> y(r);
                for (std::size_t i = 0; i < r; ++i)
                    y[i] = (x[i] + gen[i]) % n;
                if (span.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i)
        total *= static_cast<std::size_t>(n);
    return total / span.size();
}

/// |A / nA| predicted from a canonical form.
inline std::size_t quotient_mod_order(const CanonicalForm& c, long n)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < c.free_rank; ++i)
        total *= static_cast<std::size_t>(n);
    for (const auto& d : c.torsion) {
        Integer g;
        mpz_gcd_ui(g.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
        total *= g.get_ui();
    }
    return total;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = d(rng);
    return m;
}

// Reference closed forms, written against invariant factors only.
inline CanonicalForm from_factors(const IntVector& f)
{
    return canonical_form(PresentedGroup{f.size(), IntMatrix::diagonal(f)});
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Tor(A, B) = sum of Z/gcd(a_i, b_j); free parts contribute nothing.
inline CanonicalForm tor_reference(const CanonicalForm& a, const CanonicalForm& b)
{
    IntVector f;
    for (const auto& x : a.torsion)
        for (const auto& y : b.torsion)
            f.push_back(gcd(x, y));
    return from_factors(f);
}

inline CanonicalForm l1_sp2_reference(const CanonicalForm& a)
{
    IntVector f;
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        for (std::size_t j = i + 1; j < a.torsion.size(); ++j)
            f.push_back(gcd(a.torsion[i], a.torsion[j]));
    return from_factors(f);
}

// L_1SP^m of a sum of cyclic groups C_1 + ... + C_n (d_i = 0 for Z), from
// SP^m(A + B) = sum SP^i(A) (x) SP^(m-i)(B), SP^k(C) = C and L_1SP^k(C) = 0 for
// k >= 1, and Kunneth for the tensor product of the resolutions: a support
// i_1 < ... < i_t contributes Tor(C_i1 (x) ... (x) C_i(j-1), C_ij) for j = 2..t,
// once per composition of m into t positive parts.
inline CanonicalForm l1_sp_reference(unsigned m, const CanonicalForm& a)
{
    IntVector d(a.free_rank, Integer(0));
    d.insert(d.end(), a.torsion.begin(), a.torsion.end());
    const std::size_t n = d.size();
    IntVector f;
    for (std::size_t t = 2; t <= std::min<std::size_t>(m, n); ++t) {
        std::size_t compositions = binomial(m - 1, t - 1);
        combinations(n, t, [&](const std::vector<std::size_t>& support) {
            Integer g = d[support[0]]; // tensor of the prefix is Z/g (Z when g = 0)
            for (std::size_t j = 1; j < t; ++j) {
                const Integer& c = d[support[j]];
                if (g != 0 && c != 0)
                    for (std::size_t k = 0; k < compositions; ++k)
                        f.push_back(gcd(g, c));
                g = gcd(g, c);
            }
        });
    }
    return from_factors(f);
}

} // namespace dfw::oracle

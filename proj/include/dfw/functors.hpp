#pragma once

// Polynomial functors on free lattices: induced maps, the commutator
// embedding of the Lie cube, Koszul-type complexes, and functor values on
// presented groups.

#include "dfw/abelian.hpp"
#include "dfw/basis.hpp"

#include <algorithm>

namespace dfw {

/// Bounded complex of free lattices; differentials[k - 1] is d_k : term_k -> term_{k-1}.
struct FreeComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> differentials;

    const IntMatrix& d(std::size_t k) const { return differentials.at(k - 1); }

    bool is_complex() const
    {
        for (std::size_t k = 0; k < differentials.size(); ++k) {
            const IntMatrix& dk = differentials[k];
            if (dk.cols() != ranks.at(k + 1) || dk.rows() != ranks.at(k))
                return false;
            if (k + 1 < differentials.size() && !(dk * differentials[k + 1]).is_zero())
                return false;
        }
        return true;
    }
};

/// Components phi_k : source_k -> target_k.
struct ChainMap {
    std::vector<IntMatrix> components;

    /// phi_{k-1} d_k == d_k phi_k for every square, exactly.
    bool commutes(const FreeComplex& source, const FreeComplex& target) const
    {
        for (std::size_t k = 1; k < components.size(); ++k)
            if (!(components[k - 1] * source.d(k) == target.d(k) * components[k]))
                return false;
        return true;
    }
};

namespace detail {

    using Poly = std::map<Word, Integer>;

    inline void add_term(Poly& p, Word w, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = p.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                p.erase(it);
        }
    }

    // Commutative product with the linear form sum_t v[t] x_t.
    inline Poly sym_times_linear(const Poly& p, std::span<const Integer> v)
    {
        Poly out;
        for (const auto& [mono, c] : p)
            for (std::size_t t = 0; t < v.size(); ++t) {
                if (v[t] == 0)
                    continue;
                Word m = mono;
                m.insert(std::upper_bound(m.begin(), m.end(), t), t);
                add_term(out, std::move(m), c * v[t]);
            }
        return out;
    }

    // Exterior product (on the right) with the linear form sum_t v[t] e_t.
    inline Poly wedge_linear(const Poly& p, std::span<const Integer> v)
    {
        Poly out;
        for (const auto& [w, c] : p)
            for (std::size_t t = 0; t < v.size(); ++t) {
                if (v[t] == 0 || std::binary_search(w.begin(), w.end(), t))
                    continue;
                Word m = w;
                auto pos = std::upper_bound(m.begin(), m.end(), t);
                std::size_t passed = static_cast<std::size_t>(m.end() - pos);
                m.insert(pos, t);
                add_term(out, std::move(m), (passed % 2 ? -c : c) * v[t]);
            }
        return out;
    }

    // Noncommutative expansion of a bracketed word in the tensor algebra.
    inline Poly bracket_expansion(const Word& w)
    {
        Bracket b = standard_bracketing(w);
        if (!b.split)
            return {{w, Integer(1)}};
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*b.split));
        Word right(w.begin() + static_cast<std::ptrdiff_t>(*b.split), w.end());
        Poly pl = bracket_expansion(left);
        Poly pr = bracket_expansion(right);
        Poly out;
        for (const auto& [a, ca] : pl)
            for (const auto& [c, cc] : pr) {
                Word ac = a;
                ac.insert(ac.end(), c.begin(), c.end());
                add_term(out, ac, ca * cc);
                Word ca_word = c;
                ca_word.insert(ca_word.end(), a.begin(), a.end());
                add_term(out, ca_word, -(ca * cc));
            }
        return out;
    }

    inline void poly_to_column(const Poly& p, const FunctorBasis& basis, IntMatrix& m, std::size_t col)
    {
        for (const auto& [w, c] : p)
            m(basis.at(w), col) = c;
    }

    inline IntMatrix kronecker_power(const IntMatrix& f, unsigned n)
    {
        IntMatrix out = IntMatrix::identity(1);
        for (unsigned i = 0; i < n; ++i)
            out = kronecker(out, f);
        return out;
    }

} // namespace detail

/// Inclusion of the Lie cube into the tensor cube on Z^r: each Lyndon word
/// goes to the commutator expansion of its standard bracketing.
inline IntMatrix lie3_embedding(std::size_t r)
{
    FunctorBasis lie(FunctorSpec::lie3(), r);
    FunctorBasis tensors(FunctorSpec::tensor(3), r);
    IntMatrix m(tensors.size(), lie.size());
    for (std::size_t j = 0; j < lie.size(); ++j)
        detail::poly_to_column(detail::bracket_expansion(lie[j]), tensors, m, j);
    return m;
}

/// Matrix of F(f) in the indexed bases, for f : Z^s -> Z^t (t x s).
inline IntMatrix induced_map(FunctorSpec spec, const IntMatrix& f)
{
    const std::size_t s = f.cols();
    const std::size_t t = f.rows();
    switch (spec.kind) {
    case FunctorKind::tensor_power: {
        FunctorBasis check(spec, t); // validates the degree
        return detail::kronecker_power(f, spec.degree);
    }
    case FunctorKind::sym_power:
    case FunctorKind::ext_power: {
        FunctorBasis src(spec, s);
        FunctorBasis dst(spec, t);
        IntMatrix m(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            detail::Poly p{{Word{}, Integer(1)}};
            for (std::size_t letter : src[j]) {
                IntVector col = f.column(letter);
                p = spec.kind == FunctorKind::sym_power ? detail::sym_times_linear(p, col)
                                                        : detail::wedge_linear(p, col);
            }
            detail::poly_to_column(p, dst, m, j);
        }
        return m;
    }
    case FunctorKind::lie3: {
        IntMatrix image = detail::kronecker_power(f, 3) * lie3_embedding(s);
        auto coords = LinearSolver(lie3_embedding(t)).solve_columns(image);
        if (!coords)
            throw std::logic_error("induced_map: Lie element outside the Lyndon lattice");
        return *coords;
    }
    case FunctorKind::super_lie3:
        break;
    }
    throw std::invalid_argument("induced_map: the super-Lie cube is not a functor on bases");
}

/// Multiplication SP^p(Z^r) (x) SP^q(Z^r) -> SP^{p+q}(Z^r); column a * |SP^q| + b.
inline IntMatrix sym_product(std::size_t r, unsigned p, unsigned q)
{
    FunctorBasis bp(FunctorSpec::sym(p), r), bq(FunctorSpec::sym(q), r), out(FunctorSpec::sym(p + q), r);
    IntMatrix m(out.size(), bp.size() * bq.size());
    for (std::size_t a = 0; a < bp.size(); ++a)
        for (std::size_t b = 0; b < bq.size(); ++b) {
            Word w = bp[a];
            w.insert(w.end(), bq[b].begin(), bq[b].end());
            std::sort(w.begin(), w.end());
            m(out.at(w), a * bq.size() + b) = 1;
        }
    return m;
}

/// Lambda^2(Z^r) -> Z^r (x) Z^r, a ^ b |-> a (x) b - b (x) a.
inline IntMatrix antisymmetrization(std::size_t r)
{
    FunctorBasis ext(FunctorSpec::ext(2), r);
    IntMatrix m(r * r, ext.size());
    for (std::size_t k = 0; k < ext.size(); ++k) {
        std::size_t i = ext[k][0], j = ext[k][1];
        m(i * r + j, k) = 1;
        m(j * r + i, k) = -1;
    }
    return m;
}

/// Exterior product Z^r (x) Lambda^{n-1}(Z^r) -> Lambda^n(Z^r); column i * |Lambda^{n-1}| + J.
inline IntMatrix ext_product(std::size_t r, unsigned n)
{
    FunctorBasis lower(FunctorSpec::ext(n - 1), r), upper(FunctorSpec::ext(n), r);
    IntMatrix m(upper.size(), r * lower.size());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t b = 0; b < lower.size(); ++b) {
            const Word& w = lower[b];
            if (std::binary_search(w.begin(), w.end(), i))
                continue;
            Word m_word = w;
            auto pos = std::upper_bound(m_word.begin(), m_word.end(), i);
            std::size_t passed = static_cast<std::size_t>(pos - m_word.begin());
            m_word.insert(pos, i);
            m(upper.at(m_word), i * lower.size() + b) = passed % 2 ? -1 : 1;
        }
    return m;
}

/// Lambda^2(U) (x) SP^{m-2}(Q) -> U (x) SP^{m-1}(Q) -> SP^m(Q) for U spanned
/// by the independent columns of u inside Q = Z^r, with
/// d2((a ^ b) (x) s) = a (x) b s - b (x) a s and d1(a (x) s) = a s.
inline FreeComplex koszul_sp(unsigned m, const IntMatrix& u)
{
    if (m < 2 || m > max_sym_degree)
        throw std::invalid_argument("koszul_sp: degree out of range");
    const std::size_t r = u.rows();
    const std::size_t s = u.cols();
    if (rank(u) != s)
        throw std::invalid_argument("koszul_sp: sublattice generators are dependent");

    FunctorBasis top(FunctorSpec::sym(m), r);
    FunctorBasis mid(FunctorSpec::sym(m - 1), r);
    FunctorBasis low(FunctorSpec::sym(m - 2), r);
    FunctorBasis pairs(FunctorSpec::ext(2), s);

    auto times_generator = [&](std::size_t i, const Word& mono) {
        return detail::sym_times_linear(detail::Poly{{mono, Integer(1)}}, u.column(i));
    };

    IntMatrix d1(top.size(), s * mid.size());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t b = 0; b < mid.size(); ++b)
            detail::poly_to_column(times_generator(i, mid[b]), top, d1, i * mid.size() + b);

    IntMatrix d2(s * mid.size(), pairs.size() * low.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        std::size_t i = pairs[p][0], j = pairs[p][1];
        for (std::size_t c = 0; c < low.size(); ++c) {
            std::size_t col = p * low.size() + c;
            for (const auto& [mono, coef] : times_generator(j, low[c]))
                d2(i * mid.size() + mid.at(mono), col) += coef;
            for (const auto& [mono, coef] : times_generator(i, low[c]))
                d2(j * mid.size() + mid.at(mono), col) -= coef;
        }
    }
    return {{top.size(), s * mid.size(), pairs.size() * low.size()}, {d1, d2}};
}

/// F(A) for a presented group A = Z^r / U: SP^n and Lambda^n as cokernels of
/// U (x) F^{n-1}(Q) -> F^n(Q), tensor powers via tensor products, and the
/// super-Lie cube as the tensor cube modulo {a,b,c} = {b,a,c} and the cyclic sums.
inline PresentedGroup functor_on_group(FunctorSpec spec, const PresentedGroup& a)
{
    switch (spec.kind) {
    case FunctorKind::sym_power:
    case FunctorKind::ext_power: {
        const unsigned n = spec.degree;
        FunctorBasis values(spec, a.rank());
        if (n == 0)
            return PresentedGroup::free(1);
        if (n == 1)
            return a;
        IntMatrix u = column_span_basis(a.relations());
        IntMatrix product = spec.kind == FunctorKind::sym_power ? sym_product(a.rank(), 1, n - 1)
                                                                 : ext_product(a.rank(), n);
        const std::size_t lower = spec.kind == FunctorKind::sym_power
                                      ? FunctorBasis(FunctorSpec::sym(n - 1), a.rank()).size()
                                      : FunctorBasis(FunctorSpec::ext(n - 1), a.rank()).size();
        IntMatrix rel = product * kronecker(u, IntMatrix::identity(lower));
        return {values.size(), rel};
    }
    case FunctorKind::tensor_power: {
        if (spec.degree > max_tensor_degree)
            throw std::invalid_argument("functor_on_group: tensor degree out of range");
        PresentedGroup out = PresentedGroup::free(1);
        for (unsigned i = 0; i < spec.degree; ++i)
            out = tensor(out, a);
        return out;
    }
    case FunctorKind::super_lie3: {
        const std::size_t r = a.rank();
        PresentedGroup cube = functor_on_group(FunctorSpec::tensor(3), a);
        auto idx = [r](std::size_t x, std::size_t y, std::size_t z) { return (x * r + y) * r + z; };
        IntMatrix extra(cube.rank(), 2 * r * r * r);
        std::size_t col = 0;
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y)
                for (std::size_t z = 0; z < r; ++z) {
                    extra(idx(x, y, z), col) += 1;
                    extra(idx(y, x, z), col) -= 1;
                    ++col;
                    extra(idx(x, y, z), col) += 1;
                    extra(idx(z, x, y), col) += 1;
                    extra(idx(y, z, x), col) += 1;
                    ++col;
                }
        return {cube.rank(), hconcat(cube.relations(), extra)};
    }
    case FunctorKind::lie3:
        break;
    }
    throw std::invalid_argument("functor_on_group: the Lie cube is only defined here on free lattices");
}

} // namespace dfw

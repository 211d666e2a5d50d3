#pragma once

// Derived functors of SP^m and of the super-Lie cube, and Tor, computed from
// explicit complexes of free lattices attached to a presentation Q / U.

#include "dfw/functors.hpp"

namespace dfw {

/// A = Q / U with Q = Z^ambient_rank and U spanned by independent columns.
class Presentation {
public:
    Presentation(std::size_t ambient_rank, IntMatrix sublattice)
        : ambient_rank_(ambient_rank), sublattice_(std::move(sublattice))
    {
        if (sublattice_.rows() != ambient_rank_)
            throw std::invalid_argument("Presentation: sublattice must live in Z^ambient_rank");
        if (rank(sublattice_) != sublattice_.cols())
            throw std::invalid_argument("Presentation: sublattice generators are dependent");
    }

    /// Purifies the relations of g into a basis of their span.
    static Presentation from_group(const PresentedGroup& g) { return {g.rank(), column_span_basis(g.relations())}; }

    std::size_t ambient_rank() const noexcept { return ambient_rank_; }
    std::size_t sublattice_rank() const noexcept { return sublattice_.cols(); }
    const IntMatrix& sublattice() const noexcept { return sublattice_; }
    PresentedGroup quotient() const { return {ambient_rank_, sublattice_}; }

private:
    std::size_t ambient_rank_;
    IntMatrix sublattice_;
};

/// U <= V <= Q = Z^r, with outer * factor == inner.
class NestedPresentation {
public:
    NestedPresentation(std::size_t ambient_rank, IntMatrix inner, IntMatrix outer)
        : inner_(ambient_rank, std::move(inner)), outer_(ambient_rank, std::move(outer))
    {
        auto w = LinearSolver(outer_.sublattice()).solve_columns(inner_.sublattice());
        if (!w)
            throw ContainmentError("NestedPresentation: inner lattice is not contained in outer");
        factor_ = std::move(*w);
    }

    std::size_t ambient_rank() const noexcept { return inner_.ambient_rank(); }
    const Presentation& inner() const noexcept { return inner_; }
    const Presentation& outer() const noexcept { return outer_; }
    const IntMatrix& factor() const noexcept { return factor_; }

    PresentedGroup whole() const { return inner_.quotient(); }     // E = Q / U
    PresentedGroup sub() const { return {outer_.sublattice_rank(), factor_}; } // I = V / U
    PresentedGroup top() const { return outer_.quotient(); }       // E / I = Q / V

private:
    Presentation inner_;
    Presentation outer_;
    IntMatrix factor_;
};

/// H_1 of a complex C_2 -> C_1 -> C_0 presented on a basis of the cycles.
struct Homology {
    PresentedGroup group;
    IntMatrix cycles; // columns: basis of ker d_1 in C_1 coordinates
};

inline Homology middle_homology(const FreeComplex& c)
{
    IntMatrix z = kernel_basis(c.d(1));
    auto rel = LinearSolver(z).solve_columns(c.d(2));
    if (!rel)
        throw std::logic_error("middle_homology: boundaries are not cycles");
    return {{z.cols(), *rel}, z};
}

/// Map H_1(source) -> H_1(target) induced by a degree-one chain component.
inline Hom induced_on_homology(const Homology& source, const Homology& target, const IntMatrix& phi1)
{
    auto coords = LinearSolver(target.cycles).solve_columns(phi1 * source.cycles);
    if (!coords)
        throw std::logic_error("induced_on_homology: image of a cycle is not a cycle");
    return {source.group, target.group, *coords};
}

inline FreeComplex koszul_complex(unsigned m, const Presentation& p) { return koszul_sp(m, p.sublattice()); }

inline PresentedGroup l1_sp(unsigned m, const Presentation& p) { return middle_homology(koszul_complex(m, p)).group; }

inline PresentedGroup l1_sp(unsigned m, const PresentedGroup& a) { return l1_sp(m, Presentation::from_group(a)); }

/// Lambda^2(Q) / Lambda^2(U) -> (Q / U) (x) Q, a ^ b |-> a (x) b - b (x) a.
inline Hom lambda2_quotient_map(const Presentation& p)
{
    const std::size_t r = p.ambient_rank();
    const IntMatrix& u = p.sublattice();
    PresentedGroup source{binomial(r, 2), induced_map(FunctorSpec::ext(2), u)};
    PresentedGroup target{r * r, kronecker(u, IntMatrix::identity(r))};
    return {source, target, antisymmetrization(r)};
}

/// L_1 SP^2(Q / U) as the kernel of lambda2_quotient_map.
inline PresentedGroup l1_sp2_kernel_form(const Presentation& p) { return kernel(lambda2_quotient_map(p)).group; }

/// Lie^3(Q) / Lie^3(U) -> (Q (x) Q) / (U (x) U) (x) Q via the commutator expansion.
inline Hom lie3_quotient_map(const Presentation& p)
{
    const std::size_t r = p.ambient_rank();
    const IntMatrix& u = p.sublattice();
    IntMatrix lie_u = induced_map(FunctorSpec::lie3(), u);
    PresentedGroup source{lie_u.rows(), lie_u};
    PresentedGroup target{r * r * r, kronecker(kronecker(u, u), IntMatrix::identity(r))};
    return {source, target, lie3_embedding(r)};
}

/// L_2 of the super-Lie cube, with its inclusion into Lie^3(Q) / Lie^3(U).
inline Subgroup l2_superlie3_subgroup(const Presentation& p) { return kernel(lie3_quotient_map(p)); }

inline PresentedGroup l2_superlie3(const Presentation& p) { return l2_superlie3_subgroup(p).group; }

/// Total complex of (U_a -> Q_a) (x) (U_b -> Q_b):
/// U_a(x)U_b -> U_a(x)Q_b + Q_a(x)U_b -> Q_a(x)Q_b.
inline FreeComplex tor_complex(const Presentation& a, const Presentation& b)
{
    const IntMatrix& ua = a.sublattice();
    const IntMatrix& ub = b.sublattice();
    IntMatrix ia_s = IntMatrix::identity(a.sublattice_rank());
    IntMatrix ib_s = IntMatrix::identity(b.sublattice_rank());
    IntMatrix d2 = vconcat(Integer(-1) * kronecker(ia_s, ub), kronecker(ua, ib_s));
    IntMatrix d1 = hconcat(kronecker(ua, IntMatrix::identity(b.ambient_rank())),
                           kronecker(IntMatrix::identity(a.ambient_rank()), ub));
    return {{a.ambient_rank() * b.ambient_rank(), d1.cols(), d2.cols()}, {d1, d2}};
}

inline PresentedGroup tor(const Presentation& a, const Presentation& b)
{
    return middle_homology(tor_complex(a, b)).group;
}

/// Chain map of Koszul complexes for U <= V: (Lambda^2 W, W (x) id, id).
inline ChainMap koszul_inclusion_map(const NestedPresentation& np)
{
    const std::size_t r = np.ambient_rank();
    const IntMatrix& w = np.factor();
    return {{IntMatrix::identity(FunctorBasis(FunctorSpec::sym(2), r).size()),
             kronecker(w, IntMatrix::identity(r)), induced_map(FunctorSpec::ext(2), w)}};
}

struct InducedMap {
    Hom hom;
    bool squares_commute;
};

/// L_1SP^2(Q / U) -> L_1SP^2(Q / V).
inline InducedMap induced_l1_sp2_checked(const NestedPresentation& np)
{
    FreeComplex src = koszul_complex(2, np.inner());
    FreeComplex dst = koszul_complex(2, np.outer());
    ChainMap phi = koszul_inclusion_map(np);
    Hom h = induced_on_homology(middle_homology(src), middle_homology(dst), phi.components[1]);
    return {h, phi.commutes(src, dst)};
}

inline Hom induced_l1_sp2(const NestedPresentation& np)
{
    InducedMap m = induced_l1_sp2_checked(np);
    if (!m.squares_commute)
        throw std::logic_error("induced_l1_sp2: chain map does not commute");
    return m.hom;
}

/// From the Tor complex of (V -> Q) (x) (V -> Q) to the Koszul complex of V <= Q:
/// phi_0 = multiplication, phi_1(v(x)q, q'(x)w) = v(x)q + w(x)q', phi_2(v(x)w) = -(v ^ w).
inline ChainMap tor_to_koszul_map(const Presentation& v)
{
    const std::size_t r = v.ambient_rank();
    const std::size_t s = v.sublattice_rank();
    IntMatrix phi0 = sym_product(r, 1, 1);

    IntMatrix phi1(s * r, 2 * s * r);
    for (std::size_t i = 0; i < s * r; ++i)
        phi1(i, i) = 1;
    for (std::size_t q = 0; q < r; ++q)
        for (std::size_t w = 0; w < s; ++w)
            phi1(w * r + q, s * r + q * s + w) = 1;

    FunctorBasis pairs(FunctorSpec::ext(2), s);
    IntMatrix phi2(pairs.size(), s * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            if (i < j)
                phi2(pairs.at({i, j}), i * s + j) = -1;
            else if (j < i)
                phi2(pairs.at({j, i}), i * s + j) = 1;
        }
    return {{phi0, phi1, phi2}};
}

/// Chain map (V -> Q)(x)(U -> Q) => (V -> Q)(x)(V -> Q) induced by U <= V in the second slot.
inline ChainMap tor_inclusion_map(const NestedPresentation& np)
{
    const std::size_t r = np.ambient_rank();
    const std::size_t sv = np.outer().sublattice_rank();
    const IntMatrix& w = np.factor();
    IntMatrix i_sv = IntMatrix::identity(sv);
    IntMatrix psi1 = block_diagonal(IntMatrix::identity(sv * r), kronecker(IntMatrix::identity(r), w));
    return {{IntMatrix::identity(r * r), psi1, kronecker(i_sv, w)}};
}

struct TorToL1Sp2 {
    Hom hom; // Tor(Q/V, Q/U) -> L_1SP^2(Q/V)
    bool tor_squares_commute;
    bool koszul_squares_commute;
};

/// Tor(E/I, E) -> Tor(E/I, E/I) -> L_1SP^2(E/I) for E = Q/U, I = V/U.
inline TorToL1Sp2 tor_to_l1_sp2(const NestedPresentation& np)
{
    const Presentation& v = np.outer();
    FreeComplex tor_src = tor_complex(v, np.inner());
    FreeComplex tor_dst = tor_complex(v, v);
    FreeComplex kos = koszul_complex(2, v);
    ChainMap psi = tor_inclusion_map(np);
    ChainMap phi = tor_to_koszul_map(v);
    Hom h = induced_on_homology(middle_homology(tor_src), middle_homology(kos),
                                phi.components[1] * psi.components[1]);
    return {h, psi.commutes(tor_src, tor_dst), phi.commutes(tor_dst, kos)};
}

} // namespace dfw

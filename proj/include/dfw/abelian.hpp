#pragma once

// Finitely generated abelian groups given by integer presentations, and the
// homomorphisms between them.

#include "dfw/linalg.hpp"

#include <string>

namespace dfw {

/// free_rank copies of Z plus Z/d_1 + ... with 2 <= d_1 | d_2 | ...
struct CanonicalForm {
    std::size_t free_rank = 0;
    IntVector torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// `0`, or `Z^k + Z/d1 + ... + Z/dm` with the free part first (`Z` when k = 1).
    std::string to_string() const
    {
        if (is_trivial())
            return "0";
        std::string s;
        auto append = [&](const std::string& part) {
            if (!s.empty())
                s += " + ";
            s += part;
        };
        if (free_rank == 1)
            append("Z");
        else if (free_rank > 1)
            append("Z^" + std::to_string(free_rank));
        for (const auto& d : torsion)
            append("Z/" + d.get_str());
        return s;
    }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Z^rank modulo the column span of relations.
class PresentedGroup {
public:
    PresentedGroup() = default;
    PresentedGroup(std::size_t rank, IntMatrix relations) : rank_(rank), relations_(std::move(relations))
    {
        if (relations_.rows() != rank_)
            throw std::invalid_argument("PresentedGroup: relation matrix must have one row per generator");
    }

    static PresentedGroup free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }
    static PresentedGroup trivial() { return free(0); }

    static PresentedGroup cyclic(const Integer& n)
    {
        IntMatrix rel(1, 1);
        rel(0, 0) = n;
        return {1, rel};
    }

    /// Z^free_rank + Z/d_1 + ... on free_rank + #torsion generators.
    static PresentedGroup from_canonical(const CanonicalForm& c)
    {
        std::size_t n = c.free_rank + c.torsion.size();
        IntMatrix rel(n, c.torsion.size());
        for (std::size_t i = 0; i < c.torsion.size(); ++i)
            rel(c.free_rank + i, i) = c.torsion[i];
        return {n, rel};
    }

    std::size_t rank() const noexcept { return rank_; }
    const IntMatrix& relations() const noexcept { return relations_; }

    /// Is the integer vector x (in generator coordinates) zero in the group?
    bool is_zero_element(std::span<const Integer> x) const { return solver().solvable(x); }

    LinearSolver solver() const { return LinearSolver(relations_); }

private:
    std::size_t rank_ = 0;
    IntMatrix relations_;
};

inline CanonicalForm canonical_form(const PresentedGroup& g)
{
    CanonicalForm c;
    IntVector d = smith_invariants(g.relations());
    c.free_rank = g.rank() - d.size();
    for (auto& x : d)
        if (x != 1)
            c.torsion.push_back(std::move(x));
    return c;
}

inline bool isomorphic(const PresentedGroup& a, const PresentedGroup& b)
{
    return canonical_form(a) == canonical_form(b);
}

/// Same group with an independent set of relators (a genuine sublattice).
inline PresentedGroup purified(const PresentedGroup& g)
{
    return {g.rank(), column_span_basis(g.relations())};
}

/// Is every element of the group killed by c?
inline bool annihilated_by(const Integer& c, const PresentedGroup& g)
{
    return LinearSolver(g.relations()).all_solvable(c * IntMatrix::identity(g.rank()));
}

class ContainmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Homomorphism given on generators: column j is the image of generator j.
struct Hom {
    PresentedGroup source;
    PresentedGroup target;
    IntMatrix matrix;

    /// The image of every relator of the source vanishes in the target.
    bool well_defined() const
    {
        if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
            return false;
        return target.solver().all_solvable(matrix * source.relations());
    }

    static Hom identity(const PresentedGroup& g) { return {g, g, IntMatrix::identity(g.rank())}; }
    static Hom zero(const PresentedGroup& s, const PresentedGroup& t) { return {s, t, IntMatrix(t.rank(), s.rank())}; }
};

/// Hom built from a matrix, rejecting matrices that do not respect relations.
inline Hom make_hom(PresentedGroup source, PresentedGroup target, IntMatrix matrix)
{
    Hom f{std::move(source), std::move(target), std::move(matrix)};
    if (!f.well_defined())
        throw std::invalid_argument("make_hom: matrix does not define a homomorphism");
    return f;
}

/// g after f.
inline Hom compose(const Hom& g, const Hom& f)
{
    if (f.target.rank() != g.source.rank())
        throw std::invalid_argument("compose: rank mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

/// Equal as homomorphisms: generator images agree modulo target relations.
inline bool equal(const Hom& f, const Hom& g)
{
    if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols())
        return false;
    return f.target.solver().all_solvable(f.matrix - g.matrix);
}

inline bool is_zero(const Hom& f) { return f.target.solver().all_solvable(f.matrix); }

struct Subgroup {
    PresentedGroup group;
    Hom inclusion;
};

struct Quotient {
    PresentedGroup group;
    Hom projection;
};

struct Image {
    PresentedGroup group;
    Hom epi;  // source ->> image
    Hom mono; // image >-> target
};

namespace detail {

    // Lattice of x in Z^source with f x in the span of the target relations.
    inline IntMatrix preimage_of_zero(const Hom& f)
    {
        IntMatrix block = hconcat(f.matrix, f.target.relations());
        IntMatrix k = kernel_basis(block);
        return column_span_basis(k.row_range(0, f.source.rank()));
    }

    // Presents the subgroup of g generated by the (independent) columns of
    // gens, assumed to contain the relation lattice of g.
    inline PresentedGroup restrict_to(const PresentedGroup& g, const IntMatrix& gens)
    {
        LinearSolver in_gens(gens);
        auto rel = in_gens.solve_columns(g.relations());
        if (!rel)
            throw std::logic_error("restrict_to: lattice does not contain the relations");
        return {gens.cols(), *rel};
    }

} // namespace detail

/// K with an injective inclusion onto {x : f(x) = 0}.
inline Subgroup kernel(const Hom& f)
{
    IntMatrix gens = detail::preimage_of_zero(f);
    PresentedGroup k = detail::restrict_to(f.source, gens);
    return {k, Hom{k, f.source, gens}};
}

inline Quotient cokernel(const Hom& f)
{
    PresentedGroup c{f.target.rank(), hconcat(f.target.relations(), f.matrix)};
    return {c, Hom{f.target, c, IntMatrix::identity(f.target.rank())}};
}

/// Subgroup of the target generated by the images of the source generators,
/// presented as source / kernel.
inline Image image(const Hom& f)
{
    PresentedGroup im{f.source.rank(), detail::preimage_of_zero(f)};
    return {im, Hom{f.source, im, IntMatrix::identity(f.source.rank())}, Hom{im, f.target, f.matrix}};
}

/// Coordinates (in generators of source of sub) of elements x of the ambient
/// group that lie in the image of sub; nullopt otherwise.
inline std::optional<IntMatrix> lift_through(const Hom& sub, const IntMatrix& x)
{
    LinearSolver s(hconcat(sub.matrix, sub.target.relations()));
    auto y = s.solve_columns(x);
    if (!y)
        return std::nullopt;
    return y->row_range(0, sub.source.rank());
}

/// Is the image of a contained in the image of b (same ambient group)?
inline bool contained_in(const Hom& a, const Hom& b) { return lift_through(b, a.matrix).has_value(); }

/// K / J for subgroups J <= K of a common group A.
inline PresentedGroup subquotient(const Hom& k, const Hom& j)
{
    auto coords = lift_through(k, j.matrix);
    if (!coords)
        throw ContainmentError("subquotient: a generator of J does not lie in K");
    return {k.source.rank(), hconcat(k.source.relations(), *coords)};
}

inline PresentedGroup direct_sum(const PresentedGroup& a, const PresentedGroup& b)
{
    return {a.rank() + b.rank(), block_diagonal(a.relations(), b.relations())};
}

/// Generator (i, j) of a (x) b has index i * b.rank() + j.
inline PresentedGroup tensor(const PresentedGroup& a, const PresentedGroup& b)
{
    IntMatrix left = kronecker(a.relations(), IntMatrix::identity(b.rank()));
    IntMatrix right = kronecker(IntMatrix::identity(a.rank()), b.relations());
    return {a.rank() * b.rank(), hconcat(left, right)};
}

inline bool is_injective(const Hom& f) { return canonical_form(kernel(f).group).is_trivial(); }
inline bool is_surjective(const Hom& f) { return canonical_form(cokernel(f).group).is_trivial(); }

} // namespace dfw

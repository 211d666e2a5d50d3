#pragma once

// Randomized verification of the identities relating the Koszul-type
// complexes, Tor and the derived functors of SP^2, plus evaluation of the
// derived-functor values attached to an abelian group.

#include "dfw/derived.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>

namespace dfw {

struct TrialConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t max_rank = 4;
    long max_entry = 6;

    void validate() const
    {
        if (trials < 1 || max_rank < 1 || max_entry < 1)
            throw std::invalid_argument("TrialConfig: trials, max_rank and max_entry must all be >= 1");
    }
};

struct TrialOutcome {
    bool passed = false;
    std::string lhs;
    std::string rhs;
};

struct TrialRecord {
    std::size_t trial = 0;
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::string instance; // serialized lattices, replayable with replay()
};

struct Verdict {
    std::string suite;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<TrialRecord> records;
    std::optional<TrialRecord> first_counterexample;

    std::size_t trials() const { return passed + failed; }
    bool ok() const { return failed == 0; }
};

// ---------------------------------------------------------------------------
// instance serialization

namespace detail {

    inline std::string trim(std::string_view s)
    {
        std::size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
            ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
            --b;
        return std::string(s.substr(a, b - a));
    }

} // namespace detail

/// Parses the `[[a,b],[c,d]]` form written by IntMatrix::to_string; rows
/// gives the row count when the literal is `[]`.
inline IntMatrix parse_matrix_literal(std::string_view text, std::size_t rows_if_empty = 0)
{
    std::vector<std::vector<Integer>> rows;
    std::size_t i = 0;
    auto expect = [&](char c) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument("parse_matrix_literal: expected '" + std::string(1, c) + "'");
        ++i;
    };
    auto peek = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        return i < text.size() ? text[i] : '\0';
    };
    expect('[');
    if (peek() != ']') {
        for (;;) {
            expect('[');
            std::vector<Integer> row;
            if (peek() != ']') {
                for (;;) {
                    std::size_t start = i;
                    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                        ++i;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        ++i;
                    row.emplace_back(std::string(text.substr(start, i - start)));
                    if (peek() == ',') {
                        ++i;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            rows.push_back(std::move(row));
            if (peek() == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    expect(']');
    if (peek() != '\0')
        throw std::invalid_argument("parse_matrix_literal: trailing characters");
    if (rows.empty())
        return IntMatrix(rows_if_empty, 0);
    return IntMatrix::from_rows(rows);
}

inline std::string serialize(const Presentation& p, const std::string& prefix = "")
{
    return prefix + "r=" + std::to_string(p.ambient_rank()) + ";" + prefix + "U=" + p.sublattice().to_string();
}

inline std::string serialize(const NestedPresentation& np)
{
    return "r=" + std::to_string(np.ambient_rank()) + ";U=" + np.inner().sublattice().to_string() +
           ";V=" + np.outer().sublattice().to_string();
}

/// key=value fields separated by ';'.
inline std::map<std::string, std::string> parse_fields(std::string_view text)
{
    std::map<std::string, std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string field = detail::trim(text.substr(start, end - start));
        if (!field.empty()) {
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("parse_fields: missing '=' in " + field);
            out[detail::trim(field.substr(0, eq))] = detail::trim(field.substr(eq + 1));
        }
        start = end + 1;
    }
    return out;
}

inline Presentation parse_presentation(const std::map<std::string, std::string>& f, const std::string& prefix = "")
{
    std::size_t r = std::stoul(f.at(prefix + "r"));
    return {r, parse_matrix_literal(f.at(prefix + "U"), r)};
}

inline NestedPresentation parse_nested(const std::map<std::string, std::string>& f)
{
    std::size_t r = std::stoul(f.at("r"));
    return {r, parse_matrix_literal(f.at("U"), r), parse_matrix_literal(f.at("V"), r)};
}

// ---------------------------------------------------------------------------
// random instances

/// SplitMix64 step; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite, std::size_t trial)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : suite)
        h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return mix_seed(mix_seed(seed ^ h) + trial);
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    IntMatrix matrix(std::size_t rows, std::size_t cols, long max_entry)
    {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = uniform(-max_entry, max_entry);
        return m;
    }

    /// Product of a few elementary operations with multipliers in [-1, 1].
    IntMatrix unimodular(std::size_t n)
    {
        IntMatrix m = IntMatrix::identity(n);
        if (n < 2)
            return m;
        const std::size_t steps = n + 1;
        for (std::size_t k = 0; k < steps; ++k) {
            std::size_t a = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            std::size_t b = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
            if (b >= a)
                ++b;
            switch (uniform(0, 2)) {
            case 0: m.swap_rows(a, b); break;
            case 1: m.add_row_multiple(a, b, Integer(1)); break;
            default: m.add_row_multiple(a, b, Integer(-1)); break;
            }
        }
        return m;
    }

    /// Independent generators of a random sublattice of Z^r with entries in
    /// [-max_entry, max_entry]: a dense random matrix, or a diagonal moved by
    /// random unimodular changes of basis. Diagonals share a common factor a
    /// third of the time, so non-cyclic torsion shows up often.
    IntMatrix sublattice(std::size_t r, long max_entry)
    {
        // the larger of two draws, so full-rank (finite) quotients are common
        std::size_t c = static_cast<std::size_t>(
            std::max(uniform(0, static_cast<long>(r)), uniform(0, static_cast<long>(r))));
        if (c == 0)
            return IntMatrix(r, 0);
        long mode = uniform(0, 2);
        if (mode == 0) {
            IntMatrix m = column_span_basis(matrix(r, c, max_entry));
            if (within(m, max_entry) && m.cols() > 0)
                return m;
            mode = 1;
        }
        long g = 1;
        if (mode == 2 && max_entry >= 2)
            g = uniform(2, std::min(3L, max_entry));
        IntMatrix d(r, c);
        for (std::size_t i = 0; i < c; ++i)
            d(i, i) = g * uniform(1, max_entry / g);
        for (int attempt = 0; attempt < 8; ++attempt) {
            IntMatrix m = column_span_basis(unimodular(r) * d * unimodular(c));
            if (within(m, max_entry))
                return m;
        }
        return column_span_basis(d);
    }

    Presentation presentation(std::size_t max_rank, long max_entry)
    {
        std::size_t r = static_cast<std::size_t>(uniform(1, static_cast<long>(max_rank)));
        return {r, sublattice(r, max_entry)};
    }

    /// U <= V by construction: V is U together with extra random vectors,
    /// or U is cut out of a sampled V by a random coefficient matrix. Both
    /// lattices keep their entries within max_entry; after a few rejected
    /// draws the pair degenerates to U = V.
    NestedPresentation nested(std::size_t max_rank, long max_entry)
    {
        std::size_t r = static_cast<std::size_t>(uniform(1, static_cast<long>(max_rank)));
        IntMatrix last = sublattice(r, max_entry);
        for (int attempt = 0; attempt < 8; ++attempt) {
            IntMatrix u, v;
            if (coin()) {
                u = sublattice(r, max_entry);
                std::size_t extra = static_cast<std::size_t>(uniform(0, 2));
                v = column_span_basis(hconcat(u, matrix(r, extra, std::min(max_entry, 3L))));
            } else {
                v = sublattice(r, max_entry);
                std::size_t c = static_cast<std::size_t>(uniform(0, static_cast<long>(v.cols())));
                u = column_span_basis(v * matrix(v.cols(), c, 3));
            }
            if (within(u, max_entry) && within(v, max_entry))
                return {r, u, v};
            last = v;
        }
        return {r, last, last};
    }

    /// Z^r / U with every invariant factor dividing c.
    Presentation killed_by(const Integer& c, std::size_t max_rank)
    {
        std::vector<long> divisors;
        for (long d = 1; d <= c.get_si(); ++d)
            if (c.get_si() % d == 0)
                divisors.push_back(d);
        std::size_t r = static_cast<std::size_t>(uniform(1, static_cast<long>(max_rank)));
        IntMatrix d(r, r);
        for (std::size_t i = 0; i < r; ++i)
            d(i, i) = divisors[static_cast<std::size_t>(uniform(0, static_cast<long>(divisors.size()) - 1))];
        return {r, column_span_basis(unimodular(r) * d * unimodular(r))};
    }

    /// Another presentation of the same group: a change of basis of Q, a
    /// change of generators of U, and possibly one redundant generator.
    Presentation represent(const Presentation& p)
    {
        const std::size_t r = p.ambient_rank();
        IntMatrix u = unimodular(r) * p.sublattice() * unimodular(p.sublattice_rank());
        std::size_t extra = static_cast<std::size_t>(uniform(0, 1));
        IntMatrix big(r + extra, u.cols() + extra);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < u.cols(); ++j)
                big(i, j) = u(i, j);
        for (std::size_t g = 0; g < extra; ++g) {
            // new generator equals a combination of the old ones
            for (std::size_t i = 0; i < r; ++i)
                big(i, u.cols() + g) = -uniform(-1, 1);
            big(r + g, u.cols() + g) = 1;
        }
        return {r + extra, unimodular(r + extra) * big};
    }

private:
    static bool within(const IntMatrix& m, long bound)
    {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (abs(m(i, j)) > bound)
                    return false;
        return true;
    }

    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// closed forms used as oracles

/// Z/gcd(d_i, d_j) over pairs i < j of invariant factors; free summands contribute nothing.
inline CanonicalForm l1_sp2_closed_form(const CanonicalForm& a)
{
    IntVector factors;
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        for (std::size_t j = i + 1; j < a.torsion.size(); ++j) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.torsion[i].get_mpz_t(), a.torsion[j].get_mpz_t());
            factors.push_back(g);
        }
    IntMatrix d = IntMatrix::diagonal(factors);
    return canonical_form(PresentedGroup{factors.size(), d});
}

// ---------------------------------------------------------------------------
// single-instance checks

/// Middle homology of Lambda^2(I) -> I (x) E -> SP^2(E) versus
/// Coker{L_1SP^2(E) -> L_1SP^2(E/I)}, for E = Q/U and I = V/U.
inline TrialOutcome thm_3_1_instance(const NestedPresentation& np)
{
    const std::size_t r = np.ambient_rank();
    const std::size_t sv = np.outer().sublattice_rank();
    const IntMatrix& v = np.outer().sublattice();
    PresentedGroup e = np.whole();
    PresentedGroup i = np.sub();

    PresentedGroup ext_i = functor_on_group(FunctorSpec::ext(2), i);
    PresentedGroup i_e = tensor(i, e);
    PresentedGroup sym_e = functor_on_group(FunctorSpec::sym(2), e);

    FunctorBasis pairs(FunctorSpec::ext(2), sv);
    IntMatrix d2(sv * r, pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        std::size_t a = pairs[k][0], b = pairs[k][1];
        for (std::size_t t = 0; t < r; ++t) {
            d2(a * r + t, k) += v(t, b);
            d2(b * r + t, k) -= v(t, a);
        }
    }
    IntMatrix d1 = sym_product(r, 1, 1) * kronecker(v, IntMatrix::identity(r));

    Hom f2 = make_hom(ext_i, i_e, d2);
    Hom f1 = make_hom(i_e, sym_e, d1);
    PresentedGroup middle = subquotient(kernel(f1).inclusion, image(f2).mono);

    PresentedGroup coker = cokernel(induced_l1_sp2(np)).group;
    CanonicalForm lhs = canonical_form(middle);
    CanonicalForm rhs = canonical_form(coker);
    return {lhs == rhs, lhs.to_string(), rhs.to_string()};
}

/// Coker{Tor(E/I, E) -> L_1SP^2(E/I)} versus Ker{Lambda^2(E)/Lambda^2(I) -> E/I (x) E}.
inline TrialOutcome thm_3_2_instance(const NestedPresentation& np)
{
    const std::size_t r = np.ambient_rank();
    TorToL1Sp2 t = tor_to_l1_sp2(np);
    CanonicalForm lhs = canonical_form(cokernel(t.hom).group);

    IntMatrix ext_v = induced_map(FunctorSpec::ext(2), np.outer().sublattice());
    IntMatrix u_wedge_q = ext_product(r, 2) * kronecker(np.inner().sublattice(), IntMatrix::identity(r));
    PresentedGroup source{binomial(r, 2), hconcat(ext_v, u_wedge_q)};
    PresentedGroup target = tensor(np.top(), np.whole());
    CanonicalForm rhs = canonical_form(kernel(make_hom(source, target, antisymmetrization(r))).group);

    bool squares = t.tor_squares_commute && t.koszul_squares_commute;
    std::string rhs_text = rhs.to_string();
    if (!squares)
        rhs_text += " (chain map does not commute)";
    return {squares && lhs == rhs, lhs.to_string(), rhs_text};
}

/// 0 -> L_1SP^2(Q/U) -> Lambda^2(Q)/Lambda^2(U) -> Q/U (x) Q -> SP^2(Q/U) -> 0.
inline TrialOutcome exact4_instance(const Presentation& p)
{
    const std::size_t r = p.ambient_rank();
    Homology h = middle_homology(koszul_complex(2, p));
    Hom beta = lambda2_quotient_map(p);

    auto lifted = LinearSolver(antisymmetrization(r))
                      .solve_columns(kronecker(p.sublattice(), IntMatrix::identity(r)) * h.cycles);
    if (!lifted)
        return {false, "cycle not antisymmetric", "exact"};
    Hom alpha = make_hom(h.group, beta.source, *lifted);
    make_hom(beta.source, beta.target, beta.matrix);
    Hom gamma = make_hom(beta.target, functor_on_group(FunctorSpec::sym(2), p.quotient()), sym_product(r, 1, 1));

    auto exact_at = [](const Hom& in, const Hom& out) {
        Hom im = image(in).mono;
        Hom ker = kernel(out).inclusion;
        return contained_in(im, ker) && contained_in(ker, im);
    };
    bool injective = is_injective(alpha);
    bool exact_middle = exact_at(alpha, beta);
    bool exact_right = exact_at(beta, gamma);
    bool surjective = is_surjective(gamma);

    std::string flags = std::string(injective ? "" : " not-injective") + (exact_middle ? "" : " not-exact-at-2") +
                        (exact_right ? "" : " not-exact-at-3") + (surjective ? "" : " not-surjective");
    return {injective && exact_middle && exact_right && surjective,
            canonical_form(h.group).to_string() + flags, canonical_form(kernel(beta).group).to_string()};
}

/// L_1SP^2(A + B) versus L_1SP^2(A) + L_1SP^2(B) + Tor(A, B).
inline TrialOutcome cross_effect_instance(const Presentation& a, const Presentation& b)
{
    Presentation sum(a.ambient_rank() + b.ambient_rank(), block_diagonal(a.sublattice(), b.sublattice()));
    CanonicalForm lhs = canonical_form(l1_sp(2, sum));
    CanonicalForm rhs = canonical_form(direct_sum(direct_sum(l1_sp(2, a), l1_sp(2, b)), tor(a, b)));
    return {lhs == rhs, lhs.to_string(), rhs.to_string()};
}

inline std::string derived_profile(const Presentation& p)
{
    return "A=" + canonical_form(p.quotient()).to_string() + ";L1SP2=" + canonical_form(l1_sp(2, p)).to_string() +
           ";L1SP3=" + canonical_form(l1_sp(3, p)).to_string() + ";L1SP4=" +
           canonical_form(l1_sp(4, p)).to_string() + ";L2Ls3=" + canonical_form(l2_superlie3(p)).to_string() +
           ";Tor=" + canonical_form(tor(p, p)).to_string();
}

/// Every derived value computed from two presentations of one group.
inline TrialOutcome presentation_independence_instance(const Presentation& a, const Presentation& b)
{
    std::string lhs = derived_profile(a);
    std::string rhs = derived_profile(b);
    return {lhs == rhs, lhs, rhs};
}

/// The inclusion L_2Ls^3 -> Lie^3(Q)/Lie^3(U) is injective, lands in the kernel,
/// and the sequence maps are well defined.
inline TrialOutcome superlie_instance(const Presentation& p)
{
    Hom q = lie3_quotient_map(p);
    bool defined = q.well_defined();
    Subgroup k = kernel(q);
    bool injective = is_injective(k.inclusion);
    bool composite_zero = is_zero(compose(q, k.inclusion));
    bool complexes = koszul_complex(2, p).is_complex() && koszul_complex(3, p).is_complex() &&
                     koszul_complex(4, p).is_complex() && tor_complex(p, p).is_complex();
    std::string lhs = canonical_form(k.group).to_string();
    std::string flags = std::string(defined ? "" : " ill-defined") + (injective ? "" : " not-injective") +
                        (composite_zero ? "" : " nonzero-composite") + (complexes ? "" : " d*d!=0");
    return {defined && injective && composite_zero && complexes, lhs + flags, lhs};
}

// ---------------------------------------------------------------------------
// suites

inline const std::vector<std::string>& check_suite_names()
{
    static const std::vector<std::string> names{"thm31", "thm32", "exact4", "crosseffect", "presindep"};
    return names;
}

namespace detail {

    struct SampledTrial {
        std::string instance;
        std::function<TrialOutcome()> run;
    };

    inline Verdict run_suite(const std::string& suite, const TrialConfig& cfg,
                             const std::function<SampledTrial(Sampler&, std::size_t)>& sample)
    {
        cfg.validate();
        Verdict v{suite, 0, 0, {}, std::nullopt};
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            Sampler s(trial_seed(cfg.seed, suite, t));
            SampledTrial trial = sample(s, t);
            TrialRecord rec{t, false, "", "", trial.instance};
            try {
                TrialOutcome o = trial.run();
                rec.passed = o.passed;
                rec.lhs = std::move(o.lhs);
                rec.rhs = std::move(o.rhs);
            } catch (const std::exception& e) {
                rec.lhs = std::string("error: ") + e.what();
                rec.rhs = "-";
            }
            if (rec.passed) {
                ++v.passed;
            } else {
                ++v.failed;
                if (!v.first_counterexample)
                    v.first_counterexample = rec;
            }
            v.records.push_back(std::move(rec));
        }
        return v;
    }

} // namespace detail

inline Verdict check_thm_3_1(const TrialConfig& cfg)
{
    return detail::run_suite("thm31", cfg, [&](Sampler& s, std::size_t) {
        NestedPresentation np = s.nested(cfg.max_rank, cfg.max_entry);
        return detail::SampledTrial{serialize(np), [np] { return thm_3_1_instance(np); }};
    });
}

inline Verdict check_thm_3_2(const TrialConfig& cfg)
{
    return detail::run_suite("thm32", cfg, [&](Sampler& s, std::size_t) {
        NestedPresentation np = s.nested(cfg.max_rank, cfg.max_entry);
        return detail::SampledTrial{serialize(np), [np] { return thm_3_2_instance(np); }};
    });
}

inline Verdict check_exact4(const TrialConfig& cfg)
{
    return detail::run_suite("exact4", cfg, [&](Sampler& s, std::size_t) {
        Presentation p = s.presentation(cfg.max_rank, cfg.max_entry);
        return detail::SampledTrial{serialize(p), [p] { return exact4_instance(p); }};
    });
}

inline Verdict check_cross_effect(const TrialConfig& cfg)
{
    return detail::run_suite("crosseffect", cfg, [&](Sampler& s, std::size_t) {
        std::size_t half = std::max<std::size_t>(1, (cfg.max_rank + 1) / 2);
        Presentation a = s.presentation(half, cfg.max_entry);
        Presentation b = s.presentation(half, cfg.max_entry);
        return detail::SampledTrial{serialize(a, "A.") + ";" + serialize(b, "B."),
                                    [a, b] { return cross_effect_instance(a, b); }};
    });
}

inline Verdict check_presentation_independence(const TrialConfig& cfg)
{
    return detail::run_suite("presindep", cfg, [&](Sampler& s, std::size_t) {
        Presentation a = s.presentation(cfg.max_rank, cfg.max_entry);
        Presentation b = s.represent(a);
        return detail::SampledTrial{serialize(a, "P1.") + ";" + serialize(b, "P2."),
                                    [a, b] { return presentation_independence_instance(a, b); }};
    });
}

/// Koszul L_1SP^2 against the gcd closed form on the invariant factors.
inline Verdict check_l1_sp2_closed_form(const TrialConfig& cfg)
{
    return detail::run_suite("closedform", cfg, [&](Sampler& s, std::size_t) {
        Presentation p = s.presentation(cfg.max_rank, cfg.max_entry);
        return detail::SampledTrial{serialize(p), [p] {
                                        CanonicalForm lhs = canonical_form(l1_sp(2, p));
                                        CanonicalForm rhs = l1_sp2_closed_form(canonical_form(p.quotient()));
                                        return TrialOutcome{lhs == rhs, lhs.to_string(), rhs.to_string()};
                                    }};
    });
}

inline Verdict check_superlie_left_exact(const TrialConfig& cfg)
{
    return detail::run_suite("superlie", cfg, [&](Sampler& s, std::size_t) {
        Presentation p = s.presentation(cfg.max_rank, cfg.max_entry);
        return detail::SampledTrial{serialize(p), [p] { return superlie_instance(p); }};
    });
}

/// Asserted: c kills L_1SP^2(A) whenever c kills A. Monitored only: whether
/// c (and c^2) kill L_2Ls^3(A).
struct ExponentReport {
    Verdict verdict;
    std::size_t superlie_killed_by_c = 0;
    std::size_t superlie_killed_by_c2 = 0;
    std::vector<std::string> superlie_exceptions; // instances where c fails to kill L_2Ls^3
};

inline ExponentReport check_exponent_shadow(const TrialConfig& cfg, long max_exponent = 12)
{
    ExponentReport report;
    std::vector<std::pair<bool, bool>> monitored(cfg.trials);
    report.verdict = detail::run_suite("exponent", cfg, [&](Sampler& s, std::size_t t) {
        Integer c = s.uniform(2, max_exponent);
        Presentation p = s.killed_by(c, cfg.max_rank);
        std::string inst = "c=" + c.get_str() + ";" + serialize(p);
        return detail::SampledTrial{inst, [c, p, &slot = monitored[t]] {
                                        PresentedGroup l1 = l1_sp(2, p);
                                        PresentedGroup l2 = l2_superlie3(p);
                                        slot = {annihilated_by(c, l2), annihilated_by(c * c, l2)};
                                        return TrialOutcome{annihilated_by(c, p.quotient()) && annihilated_by(c, l1),
                                                            canonical_form(l1).to_string(),
                                                            canonical_form(l2).to_string()};
                                    }};
    });
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        report.superlie_killed_by_c += monitored[t].first;
        report.superlie_killed_by_c2 += monitored[t].second;
        if (!monitored[t].first)
            report.superlie_exceptions.push_back(report.verdict.records[t].instance);
    }
    return report;
}

inline Verdict run_check(const std::string& suite, const TrialConfig& cfg)
{
    if (suite == "thm31")
        return check_thm_3_1(cfg);
    if (suite == "thm32")
        return check_thm_3_2(cfg);
    if (suite == "exact4")
        return check_exact4(cfg);
    if (suite == "crosseffect")
        return check_cross_effect(cfg);
    if (suite == "presindep")
        return check_presentation_independence(cfg);
    throw std::invalid_argument("unknown check suite: " + suite);
}

/// Re-runs one serialized instance of a suite.
inline TrialOutcome replay(const std::string& suite, const std::string& instance)
{
    auto f = parse_fields(instance);
    if (suite == "thm31")
        return thm_3_1_instance(parse_nested(f));
    if (suite == "thm32")
        return thm_3_2_instance(parse_nested(f));
    if (suite == "exact4")
        return exact4_instance(parse_presentation(f));
    if (suite == "crosseffect")
        return cross_effect_instance(parse_presentation(f, "A."), parse_presentation(f, "B."));
    if (suite == "presindep")
        return presentation_independence_instance(parse_presentation(f, "P1."), parse_presentation(f, "P2."));
    throw std::invalid_argument("unknown check suite: " + suite);
}

// ---------------------------------------------------------------------------
// derived values attached to a group (the section4 command)

/// H_2 of an abelian group is computed as Lambda^2 (Schur's formula for abelian groups).
struct Section4Report {
    CanonicalForm h2;
    CanonicalForm l1_sp2_h2;
    CanonicalForm l2_superlie3_h2;
    CanonicalForm l1_sp3;
    CanonicalForm l1_sp4;
};

/// Smallest presentation of the isomorphism class of g.
inline Presentation minimal_presentation(const PresentedGroup& g)
{
    return Presentation::from_group(PresentedGroup::from_canonical(canonical_form(g)));
}

inline Section4Report evaluate_section4(const PresentedGroup& g)
{
    Presentation p = minimal_presentation(g);
    PresentedGroup h2 = functor_on_group(FunctorSpec::ext(2), p.quotient());
    Presentation ph2 = minimal_presentation(h2);
    return {canonical_form(h2), canonical_form(l1_sp(2, ph2)), canonical_form(l2_superlie3(ph2)),
            canonical_form(l1_sp(3, p)), canonical_form(l1_sp(4, p))};
}

} // namespace dfw

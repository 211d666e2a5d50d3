#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dfw;

namespace {

CanonicalForm cf(std::size_t free_rank, std::initializer_list<long> torsion)
{
    CanonicalForm c;
    c.free_rank = free_rank;
    for (long d : torsion)
        c.torsion.emplace_back(d);
    return c;
}

PresentedGroup group(std::initializer_list<long> d)
{
    IntVector v;
    for (long x : d)
        v.emplace_back(x);
    return {v.size(), IntMatrix::diagonal(v)};
}

TrialConfig config(std::uint64_t seed, std::size_t trials)
{
    TrialConfig c;
    c.seed = seed;
    c.trials = trials;
    return c;
}

} // namespace

TEST(Thm31, DegenerateNests)
{
    IntMatrix u = IntMatrix::from_rows({{2, 0}, {0, 4}});
    TrialOutcome same = thm_3_1_instance({2, u, u});
    EXPECT_TRUE(same.passed);
    EXPECT_EQ(same.lhs, "0");
    TrialOutcome full = thm_3_1_instance({2, u, IntMatrix::identity(2)});
    EXPECT_TRUE(full.passed);
    EXPECT_EQ(full.lhs, "0");
    EXPECT_EQ(full.rhs, "0");
}

TEST(Thm32, DegenerateNests)
{
    TrialOutcome free = thm_3_2_instance({3, IntMatrix(3, 0), IntMatrix(3, 0)});
    EXPECT_TRUE(free.passed);
    EXPECT_EQ(free.lhs, "0");
    IntMatrix u = IntMatrix::from_rows({{2, 0}, {0, 2}});
    TrialOutcome klein = thm_3_2_instance({2, u, u});
    EXPECT_TRUE(klein.passed) << klein.lhs << " vs " << klein.rhs;
}

TEST(Exact4, SmallCases)
{
    EXPECT_TRUE(exact4_instance({3, IntMatrix(3, 0)}).passed);
    EXPECT_TRUE(exact4_instance({1, IntMatrix::from_rows({{5}})}).passed);
    EXPECT_TRUE(exact4_instance({2, IntMatrix::from_rows({{2, 0}, {0, 4}})}).passed);
}

TEST(PresentationIndependence, SixTwoWays)
{
    Presentation a{1, IntMatrix::from_rows({{6}})};
    Presentation b{2, IntMatrix::from_rows({{2, 0}, {1, 3}})};
    ASSERT_EQ(canonical_form(b.quotient()), cf(0, {6}));
    TrialOutcome o = presentation_independence_instance(a, b);
    EXPECT_TRUE(o.passed) << o.lhs << " vs " << o.rhs;
}

TEST(PresentationIndependence, FreeGroupsOfDifferentAmbientRank)
{
    Presentation a{2, IntMatrix(2, 0)};
    Presentation b{3, IntMatrix::from_rows({{0}, {0}, {1}})};
    EXPECT_TRUE(presentation_independence_instance(a, b).passed);
}

TEST(PresentationIndependence, RedundantGenerators)
{
    Sampler s(8);
    for (int trial = 0; trial < 20; ++trial) {
        Presentation p = s.presentation(3, 6);
        Presentation q = s.represent(s.represent(p));
        TrialOutcome o = presentation_independence_instance(p, q);
        EXPECT_TRUE(o.passed) << serialize(p) << " / " << serialize(q);
    }
}

TEST(Suites, PassOnSmallRuns)
{
    for (const auto& name : check_suite_names()) {
        Verdict v = run_check(name, config(3, 10));
        EXPECT_EQ(v.trials(), 10u);
        EXPECT_EQ(v.records.size(), 10u);
        EXPECT_TRUE(v.ok()) << name << ": " << (v.first_counterexample ? v.first_counterexample->instance : "");
    }
    EXPECT_THROW(run_check("nosuch", config(0, 1)), std::invalid_argument);
}

// more seeds and some larger bounds than the defaults
TEST(Suites, SeedSweep)
{
    for (std::uint64_t seed : {101u, 202u, 303u}) {
        for (const char* name : {"thm31", "thm32", "exact4", "crosseffect"}) {
            TrialConfig c = config(seed, 60);
            c.max_entry = seed == 303u ? 9 : 6;
            Verdict v = run_check(name, c);
            EXPECT_TRUE(v.ok()) << name << " seed " << seed << ": "
                                << (v.first_counterexample ? v.first_counterexample->instance : "");
        }
    }
    TrialConfig wide = config(404, 15);
    wide.max_rank = 5;
    EXPECT_TRUE(run_check("thm31", wide).ok());
    EXPECT_TRUE(run_check("thm32", wide).ok());
}

TEST(Suites, RejectInvalidConfig)
{
    TrialConfig c = config(0, 0);
    EXPECT_THROW(run_check("thm31", c), std::invalid_argument);
    c = config(0, 1);
    c.max_rank = 0;
    EXPECT_THROW(run_check("exact4", c), std::invalid_argument);
}

TEST(Suites, Deterministic)
{
    for (const auto& name : check_suite_names()) {
        Verdict a = run_check(name, config(42, 6));
        Verdict b = run_check(name, config(42, 6));
        ASSERT_EQ(a.records.size(), b.records.size());
        for (std::size_t i = 0; i < a.records.size(); ++i) {
            EXPECT_EQ(a.records[i].instance, b.records[i].instance);
            EXPECT_EQ(a.records[i].lhs, b.records[i].lhs);
            EXPECT_EQ(a.records[i].rhs, b.records[i].rhs);
        }
    }
    // different seeds sample different instances
    EXPECT_NE(run_check("exact4", config(1, 4)).records[0].instance + run_check("exact4", config(1, 4)).records[1].instance,
              run_check("exact4", config(2, 4)).records[0].instance + run_check("exact4", config(2, 4)).records[1].instance);
}

TEST(Suites, ReplayReproducesEveryRecord)
{
    for (const auto& name : check_suite_names()) {
        std::size_t trials = name == "presindep" ? 3 : 8;
        Verdict v = run_check(name, config(5, trials));
        for (const auto& r : v.records) {
            TrialOutcome o = replay(name, r.instance);
            EXPECT_EQ(o.passed, r.passed);
            EXPECT_EQ(o.lhs, r.lhs);
            EXPECT_EQ(o.rhs, r.rhs);
        }
    }
}

TEST(Serialization, RoundTrip)
{
    Sampler s(10);
    for (int trial = 0; trial < 50; ++trial) {
        Presentation p = s.presentation(4, 9);
        Presentation q = parse_presentation(parse_fields(serialize(p)));
        EXPECT_EQ(q.ambient_rank(), p.ambient_rank());
        EXPECT_EQ(q.sublattice(), p.sublattice());

        NestedPresentation np = s.nested(4, 9);
        NestedPresentation nq = parse_nested(parse_fields(serialize(np)));
        EXPECT_EQ(nq.inner().sublattice(), np.inner().sublattice());
        EXPECT_EQ(nq.outer().sublattice(), np.outer().sublattice());
    }
    Presentation prefixed = parse_presentation(parse_fields("A.r=2;A.U=[[3],[0]]"), "A.");
    EXPECT_EQ(canonical_form(prefixed.quotient()), cf(1, {3}));
}

TEST(Serialization, MatrixLiterals)
{
    EXPECT_EQ(parse_matrix_literal("[[1,-2],[3,4]]"), IntMatrix::from_rows({{1, -2}, {3, 4}}));
    EXPECT_EQ(parse_matrix_literal(" [ [ 5 ] ] "), IntMatrix::from_rows({{5}}));
    IntMatrix empty = parse_matrix_literal("[]", 3);
    EXPECT_EQ(empty.rows(), 3u);
    EXPECT_EQ(empty.cols(), 0u);
    EXPECT_THROW(parse_matrix_literal("[[1,2],[3]]"), std::invalid_argument);
    EXPECT_THROW(parse_matrix_literal("[[1,x]]"), std::invalid_argument);
}

TEST(Seeds, TrialSeedsDifferAcrossSuitesAndTrials)
{
    EXPECT_NE(trial_seed(0, "thm31", 0), trial_seed(0, "thm32", 0));
    EXPECT_NE(trial_seed(0, "thm31", 0), trial_seed(0, "thm31", 1));
    EXPECT_NE(trial_seed(0, "thm31", 0), trial_seed(1, "thm31", 0));
    EXPECT_EQ(trial_seed(9, "exact4", 3), trial_seed(9, "exact4", 3));
}

TEST(Sampler, NestedLatticesAreNested)
{
    Sampler s(20);
    for (int trial = 0; trial < 100; ++trial) {
        NestedPresentation np = s.nested(4, 6);
        EXPECT_EQ(np.outer().sublattice() * np.factor(), np.inner().sublattice());
    }
}

TEST(Sampler, EntriesStayWithinBound)
{
    Sampler s(22);
    auto bounded = [](const IntMatrix& m, long b) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (abs(m(i, j)) > b)
                    return false;
        return true;
    };
    for (long bound : {1L, 3L, 8L})
        for (int trial = 0; trial < 100; ++trial) {
            EXPECT_TRUE(bounded(s.presentation(5, bound).sublattice(), bound));
            NestedPresentation np = s.nested(4, bound);
            EXPECT_TRUE(bounded(np.inner().sublattice(), bound));
            EXPECT_TRUE(bounded(np.outer().sublattice(), bound));
        }
}

TEST(Sampler, KilledByRespectsExponent)
{
    Sampler s(21);
    for (int trial = 0; trial < 100; ++trial) {
        Integer c = s.uniform(2, 12);
        EXPECT_TRUE(annihilated_by(c, s.killed_by(c, 4).quotient()));
    }
}

TEST(Section4, CyclicAndFreeGroupsGiveZeros)
{
    for (long n : {2L, 7L, 12L}) {
        Section4Report r = evaluate_section4(PresentedGroup::cyclic(n));
        EXPECT_TRUE(r.h2.is_trivial());
        EXPECT_TRUE(r.l1_sp2_h2.is_trivial());
        EXPECT_TRUE(r.l2_superlie3_h2.is_trivial());
        EXPECT_TRUE(r.l1_sp3.is_trivial());
        EXPECT_TRUE(r.l1_sp4.is_trivial());
    }
    Section4Report f = evaluate_section4(PresentedGroup::free(3));
    EXPECT_EQ(f.h2, cf(3, {}));
    EXPECT_TRUE(f.l1_sp2_h2.is_trivial());
    EXPECT_TRUE(f.l1_sp3.is_trivial());
}

TEST(Section4, ElementaryAbelian)
{
    Section4Report two = evaluate_section4(group({2, 2}));
    EXPECT_EQ(two.h2, cf(0, {2}));
    EXPECT_TRUE(two.l1_sp2_h2.is_trivial());
    EXPECT_TRUE(two.l2_superlie3_h2.is_trivial());

    Section4Report three = evaluate_section4(group({2, 2, 2}));
    EXPECT_EQ(three.h2, cf(0, {2, 2, 2}));
    EXPECT_EQ(three.l1_sp2_h2, cf(0, {2, 2, 2}));
}

TEST(Section4, IndependentOfInputPresentation)
{
    PresentedGroup a = group({2, 4});
    PresentedGroup b{3, IntMatrix::from_rows({{2, 0, 1}, {0, 4, 0}, {0, 0, 1}})};
    ASSERT_EQ(canonical_form(a), canonical_form(b));
    Section4Report ra = evaluate_section4(a), rb = evaluate_section4(b);
    EXPECT_EQ(ra.h2, rb.h2);
    EXPECT_EQ(ra.l1_sp3, rb.l1_sp3);
    EXPECT_EQ(ra.l1_sp4, rb.l1_sp4);
}

TEST(ExponentShadow, SmallRun)
{
    ExponentReport r = check_exponent_shadow(config(4, 20));
    EXPECT_TRUE(r.verdict.ok());
    EXPECT_LE(r.superlie_killed_by_c, 20u);
    EXPECT_GE(r.superlie_killed_by_c2, r.superlie_killed_by_c);
    EXPECT_EQ(r.superlie_exceptions.size(), 20u - r.superlie_killed_by_c);
}

#include <gtest/gtest.h>

#include "excgamma/closed.hpp"

using namespace excgamma;

namespace {

const Poly s = var_s();
const Poly t = var_t();
const Poly one = Poly::constant(1);

::testing::AssertionResult same(const Poly& a, const Poly& b) {
    if ((a - b).is_zero()) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << to_string(a) << " != " << to_string(b);
}

constexpr ClassFilter kBoth[] = {ClassFilter::plus, ClassFilter::minus};

}  // namespace

TEST(Eulerian, SmallValues) {
    EXPECT_TRUE(same(eulerian(EulerianType::A, 3), s * s + Integer(4) * s * t + t * t));
    EXPECT_TRUE(same(eulerian(EulerianType::B, 2), s * s + Integer(6) * s * t + t * t));
    EXPECT_TRUE(same(eulerian(EulerianType::A, 1), one));
    EXPECT_TRUE(same(eulerian_t(4), one + Integer(11) * t + Integer(11) * t * t + pow(t, 3)));
}

TEST(Eulerian, MatchesDescentOracle) {
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_TRUE(same(eulerian(EulerianType::A, n), family_poly({FamilyName::a_des, n}))) << n;
        if (n <= 5) EXPECT_TRUE(same(eulerian(EulerianType::B, n), family_poly({FamilyName::b_des, n}))) << n;
    }
}

TEST(HalfSums, ReferenceValues) {
    EXPECT_TRUE(same(half_sum_closed(HalfSumFamily::aexc, 2, ClassFilter::plus), s));
    EXPECT_TRUE(same(half_sum_closed(HalfSumFamily::aexc, 2, ClassFilter::minus), t));
    EXPECT_TRUE(same(half_sum_closed(HalfSumFamily::bexc, 2, ClassFilter::minus), Integer(4) * s * t));
}

TEST(HalfSums, MatchOracleAndSteps) {
    for (unsigned n = 2; n <= 7; ++n)
        for (ClassFilter c : kBoth) {
            const Poly a = half_sum_closed(HalfSumFamily::aexc, n, c);
            EXPECT_TRUE(same(a, family_poly({FamilyName::aexc, n, c}))) << n;
            EXPECT_TRUE(same(a, aexc_step(n, c))) << n;
            if (n <= 5) {
                const Poly b = half_sum_closed(HalfSumFamily::bexc, n, c);
                EXPECT_TRUE(same(b, family_poly({FamilyName::bexc, n, c}))) << n;
                EXPECT_TRUE(same(b, bexc_step(n, c))) << n;
            }
        }
}

TEST(TypeD, PairRecurrence) {
    EXPECT_TRUE(same(dexc_pair_step(2).dexc, pow(s + t, 2)));
    for (unsigned n = 2; n <= 5; ++n) {
        const DExcPair p = dexc_pair_step(n);
        EXPECT_TRUE(same(p.dexc, family_poly({FamilyName::dexc, n}))) << n;
        EXPECT_TRUE(same(p.bdexc, family_poly({FamilyName::bdexc, n}))) << n;
        for (ClassFilter c : kBoth) EXPECT_TRUE(same(dexc_step(n, c), family_poly({FamilyName::dexc, n, c}))) << n;
    }
    EXPECT_THROW(dexc_pair_step(1), InvalidSpec);
}

TEST(SignedSums, ClosedForms) {
    for (unsigned n = 1; n <= 5; ++n) {
        EXPECT_TRUE(same(sgn_aexc_closed(n), family_poly({FamilyName::sgn_aexc, n}))) << n;
        EXPECT_TRUE(same(sgn_bexc_closed(n), family_poly({FamilyName::sgn_bexc, n}))) << n;
        EXPECT_TRUE(same(sgn_dexc_closed(n), family_poly({FamilyName::sgn_dexc, n}))) << n;
    }
    EXPECT_TRUE(same(sgn_dexc_closed(3), s * pow(s - t, 2)));
    EXPECT_TRUE(same(sgn_dexc_closed(4), pow(s - t, 4)));
}

TEST(CoefficientTables, Rows) {
    const CoeffTable tab = coeff_tables(6);
    EXPECT_EQ(tab.plus[2], (std::vector<Integer>{1, 0}));
    EXPECT_EQ(tab.minus[2], (std::vector<Integer>{0, 1}));
    EXPECT_EQ(tab.plus[4], (std::vector<Integer>{1, 4, 7, 0}));
    EXPECT_EQ(tab.minus[4], (std::vector<Integer>{0, 7, 4, 1}));
    for (unsigned n = 2; n <= 6; ++n) {
        const Poly plus = substitute_one(half_sum_closed(HalfSumFamily::aexc, n, ClassFilter::plus), "s");
        EXPECT_TRUE(same(from_dense(tab.plus[n], "t"), plus)) << n;
    }
    EXPECT_THROW(coeff_tables(0), InvalidSpec);
}

TEST(JumpTables, SelectedEntries) {
    const JumpTables& j = jump_tables();
    EXPECT_TRUE(same(j.L[1], Integer(15) * s * t * pow(s + t, 2)));
    EXPECT_TRUE(same(j.R[0], pow(s + t, 4) + Integer(8) * s * t * pow(s + t, 2) + Integer(16) * pow(s * t, 2)));
    EXPECT_TRUE(same(j.R[6], Integer(2) * pow(s * t, 2)));
    for (std::size_t i = 0; i < j.L.size(); ++i)
        EXPECT_EQ(gamma_decompose(j.L[i], GammaMode::bivariate).center(), j.L_cos[i]) << i;
    for (std::size_t i = 0; i < j.R.size(); ++i)
        EXPECT_EQ(gamma_decompose(j.R[i], GammaMode::bivariate).center(), j.R_cos[i]) << i;
}

TEST(JumpByFour, MatchesStepRecurrences) {
    for (unsigned n = 5; n <= 15; n += 2)
        for (ClassFilter c : kBoth)
            EXPECT_TRUE(same(aexc_jump4(n, c), half_sum_closed(HalfSumFamily::aexc, n, c))) << n;
    for (unsigned n = 4; n <= 14; n += 2)
        for (ClassFilter c : kBoth) EXPECT_TRUE(same(dexc_jump4(n, c), dexc_step(n, c))) << n;
    EXPECT_THROW(aexc_jump4(6, ClassFilter::plus), MissingBase);
}

TEST(JumpByFour, TabulatedBases) {
    const auto a7 = tabulated_base(FamilyName::aexc, 7);
    ASSERT_TRUE(a7);
    EXPECT_TRUE(same(a7->first, half_sum_closed(HalfSumFamily::aexc, 7, ClassFilter::plus)));
    EXPECT_TRUE(same(a7->second, half_sum_closed(HalfSumFamily::aexc, 7, ClassFilter::minus)));
    const auto d6 = tabulated_base(FamilyName::dexc, 6);
    ASSERT_TRUE(d6);
    EXPECT_TRUE(same(d6->first, dexc_step(6, ClassFilter::plus)));
    EXPECT_FALSE(tabulated_base(FamilyName::bexc, 5));
}

TEST(Conjugacy, ReferenceValues) {
    EXPECT_EQ(set_partition_count(CycleType::parse("2,2")), Integer(3));
    EXPECT_EQ(set_partition_count(CycleType::parse("3,2")), Integer(10));
    EXPECT_EQ(set_partition_count(CycleType::parse("6")), Integer(1));
    EXPECT_TRUE(same(conj_exc_closed(CycleType::parse("4")), t + Integer(4) * t * t + pow(t, 3)));
    EXPECT_TRUE(same(conj_exc_closed(CycleType::parse("2,2")), Integer(3) * t * t));
    EXPECT_TRUE(same(conj_exc_closed(CycleType::parse("1,1,1")), one));
}

TEST(Conjugacy, MatchesOracleForEveryClass) {
    for (unsigned n = 1; n <= 6; ++n)
        for (const CycleType& l : partitions(n)) {
            FamilySpec spec{FamilyName::conj_exc, n};
            spec.lambda = l;
            EXPECT_TRUE(same(conj_exc_closed(l), family_poly(spec))) << l.to_string();
        }
}

TEST(Derangements, ReferenceValues) {
    EXPECT_TRUE(same(derangement_closed(4, ClassFilter::all), t + Integer(7) * t * t + pow(t, 3)));
    EXPECT_TRUE(same(derangement_closed(4, ClassFilter::plus), Integer(3) * t * t));
    EXPECT_TRUE(same(derangement_closed(4, ClassFilter::minus), t + Integer(4) * t * t + pow(t, 3)));
    EXPECT_TRUE(same(derangement_closed(5, ClassFilter::all, 5), one));
}

TEST(Derangements, MatchOracleWithFixedPoints) {
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned i = 0; i <= n; ++i)
            for (ClassFilter c : {ClassFilter::all, ClassFilter::plus, ClassFilter::minus}) {
                FamilySpec spec{FamilyName::aderexc_fixed, n, c};
                spec.fixed = i;
                EXPECT_TRUE(same(derangement_closed(n, c, i), family_poly(spec))) << n << ' ' << i;
            }
}

TEST(TwoTermSplits, RecomposeWithCentersOneApart) {
    struct Case {
        FamilyName f;
        unsigned n;
    };
    for (const Case& k : {Case{FamilyName::aexc, 4}, Case{FamilyName::aexc, 8}, Case{FamilyName::bexc, 3},
                          Case{FamilyName::bexc, 7}, Case{FamilyName::dexc, 5}, Case{FamilyName::dexc, 9}})
        for (ClassFilter c : kBoth) {
            const TwoTermSplit sp = two_term_split(k.f, k.n, c);
            const Poly target = substitute_one(closed_family_poly({k.f, k.n, c}), "s");
            EXPECT_TRUE(same(sp.w1 + sp.w2, target)) << info(k.f).name << k.n;
            EXPECT_TRUE(sp.g1.all_gammas_nonnegative());
            EXPECT_TRUE(sp.g2.all_gammas_nonnegative());
            EXPECT_EQ(sp.g2.center() - sp.g1.center(), Rational(1));
        }
    EXPECT_THROW(two_term_split(FamilyName::aexc, 5, ClassFilter::plus), InvalidSpec);
    EXPECT_THROW(two_term_split(FamilyName::conj_exc, 4, ClassFilter::plus), UnsupportedClass);
}

TEST(ClosedDispatch, AgreesWithOracleOnEveryFamily) {
    for (const auto& fi : family_table()) {
        if (fi.family == FamilyName::q_refined || fi.family == FamilyName::conj_exc) continue;
        for (ClassFilter c : {ClassFilter::all, ClassFilter::plus, ClassFilter::minus}) {
            if (c != ClassFilter::all && !fi.splits) continue;
            FamilySpec spec{fi.family, 4, c};
            spec.fixed = 1;
            EXPECT_TRUE(same(closed_family_poly(spec), family_poly(spec))) << fi.name << ' ' << name(c);
        }
    }
    EXPECT_FALSE(has_closed_form({FamilyName::q_refined, 3}));
}

TEST(LargeN, HalfSumStaysGammaPositive) {
    const Poly f = half_sum_closed(HalfSumFamily::aexc, 41, ClassFilter::minus);
    const auto g = gamma_decompose(f, GammaMode::bivariate);
    EXPECT_TRUE(g.all_gammas_nonnegative());
    EXPECT_EQ(evaluate_at_ones(f), [] {
        Integer f = 1;
        for (int k = 2; k <= 41; ++k) f *= k;
        return Integer(f / 2);
    }());
}

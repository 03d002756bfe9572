#include <gtest/gtest.h>

#include "excgamma/oracle.hpp"

using namespace excgamma;

namespace {

const Poly s = var_s();
const Poly t = var_t();
const Poly u = var_u();
const Poly q = var_q();
const Poly one = Poly::constant(1);

::testing::AssertionResult same(const Poly& a, const Poly& b) {
    if ((a - b).is_zero()) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << to_string(a) << " != " << to_string(b);
}

WeightSpec exc_weight() { return WeightSpec{{{"t", Stat::exc}}}; }

}  // namespace

TEST(DistPoly, SymmetricGroupOfTwo) {
    const WeightSpec w{{{"t", Stat::exc}, {"s", Stat::nexc, -1}}};
    EXPECT_TRUE(same(dist_poly(GroupSpec::symmetric(2), w), s + t));
}

TEST(DistPoly, AlternatingGroupOfFour) {
    EXPECT_TRUE(same(dist_poly(GroupSpec::alternating(4), exc_weight()), one + Integer(4) * t + Integer(7) * t * t));
}

TEST(DistPoly, OddHalfOfB2) {
    const WeightSpec w{{{"t", Stat::exc_b}, {"s", Stat::nexc_b}}};
    EXPECT_TRUE(same(dist_poly(GroupSpec::b_minus_d(2), w), Integer(4) * s * t));
    EXPECT_TRUE(same(dist_poly(GroupSpec::type_b(2, Parity::odd), w), Integer(4) * s * t));
}

TEST(DistPoly, DerangementsOfFour) {
    EXPECT_TRUE(same(dist_poly(GroupSpec::derangements(4), exc_weight()), t + Integer(7) * t * t + pow(t, 3)));
}

TEST(DistPoly, SignWeight) {
    WeightSpec w = exc_weight();
    w.sign = Stat::inv;
    // Signed excedance sum over S_3: 1 - 3t... collapses to (1-t)^2 after s = 1.
    EXPECT_TRUE(same(dist_poly(GroupSpec::symmetric(3), w), pow(one - t, 2)));
}

TEST(DistPoly, StatisticMustFitGroup) {
    const WeightSpec w{{{"t", Stat::exc_b}}};
    EXPECT_THROW(dist_poly(GroupSpec::symmetric(3), w), UndefinedStatistic);
}

TEST(DistPoly, ParallelMatchesSerial) {
    OracleOptions par;
    par.jobs = 4;
    const WeightSpec w{{{"t", Stat::exc}, {"s", Stat::des}}};
    EXPECT_EQ(dist_poly(GroupSpec::symmetric(7), w, par), dist_poly(GroupSpec::symmetric(7), w));
}

TEST(FamilyPoly, ReferenceValues) {
    EXPECT_TRUE(same(family_poly({FamilyName::aexc, 5, ClassFilter::plus}),
                     pow(s, 4) + Integer(11) * pow(s, 3) * t + Integer(36) * pow(s * t, 2) +
                         Integer(11) * s * pow(t, 3) + pow(t, 4)));
    EXPECT_TRUE(same(family_poly({FamilyName::dexc, 4, ClassFilter::minus}),
                     Integer(20) * pow(s, 3) * t + Integer(56) * pow(s * t, 2) + Integer(20) * s * pow(t, 3)));
    EXPECT_TRUE(same(family_poly({FamilyName::sgn_aexc, 4}), pow(s - t, 3)));
}

TEST(FamilyPoly, SmallTypeA) {
    EXPECT_TRUE(same(family_poly({FamilyName::aexc, 2, ClassFilter::plus}), s));
    EXPECT_TRUE(same(family_poly({FamilyName::aexc, 2, ClassFilter::minus}), t));
    // identity, 2,3,1 and 3,1,2
    EXPECT_TRUE(same(family_poly({FamilyName::aexc, 3, ClassFilter::plus}), s * s + s * t + t * t));
}

TEST(FamilyPoly, ClassesSumToWhole) {
    for (FamilyName f : {FamilyName::aexc, FamilyName::bexc, FamilyName::dexc, FamilyName::aderexc}) {
        const unsigned n = 4;
        const Poly whole = family_poly({f, n});
        EXPECT_TRUE(same(family_poly({f, n, ClassFilter::plus}) + family_poly({f, n, ClassFilter::minus}), whole))
            << info(f).name;
    }
}

TEST(FamilyPoly, ConjugacyAndFixedPoints) {
    FamilySpec c{FamilyName::conj_exc, 4};
    c.lambda = CycleType::parse("2,2");
    EXPECT_TRUE(same(family_poly(c), Integer(3) * t * t));
    FamilySpec f{FamilyName::aderexc_fixed, 5};
    f.fixed = 5;
    EXPECT_TRUE(same(family_poly(f), one));
}

TEST(FamilyPoly, UnsplitFamilyRejectsClass) {
    EXPECT_THROW(family_poly({FamilyName::sgn_bexc, 3, ClassFilter::plus}), UnsupportedClass);
    EXPECT_THROW(family_poly({FamilyName::conj_exc, 3}), InvalidSpec);
}

TEST(FamilyNames, RoundTrip) {
    for (const auto& i : family_table()) EXPECT_EQ(parse_family(i.name), i.family);
    EXPECT_THROW(parse_family("nope"), ParseError);
}

TEST(SignedDescentSum, ReferenceValues) {
    EXPECT_TRUE(same(sgnb_des_u(1), (s - t) * u));
    EXPECT_TRUE(same(sgnb_des_u(3), pow(s - t, 3) * pow(u, 3)));
    EXPECT_TRUE(same(sgnb_des_u(3, {2, 5, 9}), pow(s - t, 3) * pow(u, 3)));
    EXPECT_TRUE(sgnb_des_u(4, {}, MaxPosition::not_at_end).is_zero());
}

TEST(SignedDescentSum, LettersValidated) {
    EXPECT_THROW(sgnb_des_u(2, {3, 1}), NonIncreasingLetters);
    EXPECT_THROW(sgnb_des_u(2, {1}), InvalidSpec);
}

TEST(QRefined, SmallValues) {
    EXPECT_TRUE(same(q_refined(2, Stat::cyc, ClassFilter::minus), q * t));
    EXPECT_TRUE(same(q_refined(3, Stat::cyc, ClassFilter::plus), q * (t + t * t)));
    EXPECT_TRUE(q_refined(2, Stat::cyc, ClassFilter::plus).is_zero());
}

TEST(QRefined, SpecializesToDerangements) {
    for (unsigned n = 2; n <= 6; ++n)
        for (ClassFilter c : {ClassFilter::plus, ClassFilter::minus})
            for (Stat st : {Stat::inv, Stat::cyc}) {
                const Poly f = q_refined(n, st, c);
                const Poly at_one = f.has_var("q") ? substitute_one(f, "q") : f;
                EXPECT_TRUE(same(at_one, family_poly({FamilyName::aderexc, n, c}))) << n;
            }
}

#include <gtest/gtest.h>

#include <random>

#include "excgamma/gamma.hpp"

using namespace excgamma;

namespace {

const Poly s = var_s();
const Poly t = var_t();
const Poly one = Poly::constant(1);

Poly aexc5_plus() {
    return pow(s, 4) + Integer(11) * pow(s, 3) * t + Integer(36) * pow(s * t, 2) + Integer(11) * s * pow(t, 3) +
           pow(t, 4);
}

std::vector<Integer> ints(const GammaExpansion& g) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < g.gammas.size(); ++i) out.push_back(g.gamma(i));
    return out;
}

GammaExpansion biv(unsigned r, unsigned n, std::vector<Integer> gammas) {
    GammaExpansion g;
    g.mode = GammaMode::bivariate;
    g.offset = r;
    g.degree = n;
    for (auto& c : gammas) g.gammas.push_back({c});
    return g;
}

}  // namespace

TEST(PalindromeInfo, NonPalindromic) {
    EXPECT_FALSE(palindrome_info(one + Integer(4) * t + Integer(7) * t * t, PalindromeMode::univariate_t).is_palindromic);
}

TEST(PalindromeInfo, BivariateTExponentRange) {
    const auto info = palindrome_info(Integer(15) * s * t * pow(s + t, 2), PalindromeMode::bivariate_st);
    EXPECT_TRUE(info.is_palindromic);
    EXPECT_EQ(info.r, 1u);
    EXPECT_EQ(info.n, 3u);
    EXPECT_EQ(info.cos, Rational(2));
}

TEST(PalindromeInfo, BinomialPower) {
    const auto info = palindrome_info(pow(one + t, 5), PalindromeMode::univariate_t);
    EXPECT_TRUE(info.is_palindromic);
    EXPECT_EQ(info.r, 0u);
    EXPECT_EQ(info.n, 5u);
    EXPECT_EQ(info.cos, Rational(5, 2));
}

TEST(PalindromeInfo, Errors) {
    EXPECT_THROW(palindrome_info(s + t * t, PalindromeMode::bivariate_st), NotHomogeneous);
    EXPECT_THROW(palindrome_info(Poly(std::vector<std::string>{"t"}), PalindromeMode::univariate_t), ZeroPolynomial);
}

TEST(PalindromeInfo, BivariateNeedsSymmetryInSAndT) {
    // s^2 t is palindromic as a t-sequence but not symmetric under s <-> t.
    EXPECT_FALSE(palindrome_info(s * s * t, PalindromeMode::bivariate_st).is_palindromic);
}

TEST(GammaDecompose, AExc5Plus) {
    const auto g = gamma_decompose(aexc5_plus(), GammaMode::bivariate);
    EXPECT_EQ(g.offset, 0u);
    EXPECT_EQ(ints(g), (std::vector<Integer>{1, 7, 16}));
    EXPECT_EQ(g.center(), Rational(2));
}

TEST(GammaDecompose, DExc4Minus) {
    const Poly f = Integer(20) * pow(s, 3) * t + Integer(56) * pow(s * t, 2) + Integer(20) * s * pow(t, 3);
    const auto g = gamma_decompose(f, GammaMode::bivariate);
    EXPECT_EQ(g.offset, 1u);
    EXPECT_EQ(ints(g), (std::vector<Integer>{20, 16}));
    EXPECT_EQ(to_json(g).dump(), R"({"gammas":["20","16"],"n":4,"r":1})");
}

TEST(GammaDecompose, PureBinomial) {
    const auto g = gamma_decompose(pow(s + t, 6), GammaMode::bivariate);
    EXPECT_EQ(g.offset, 0u);
    EXPECT_EQ(ints(g), (std::vector<Integer>{1, 0, 0, 0}));
}

TEST(GammaDecompose, ReportsFirstViolatedPair) {
    try {
        gamma_decompose((one + Integer(4) * t + Integer(7) * t * t).extended_to({"t"}), GammaMode::univariate);
        FAIL() << "expected NotPalindromic";
    } catch (const NotPalindromic& e) {
        EXPECT_EQ(e.low_exponent, 0u);
        EXPECT_EQ(e.high_exponent, 2u);
        EXPECT_EQ(e.low_coefficient, "1");
        EXPECT_EQ(e.high_coefficient, "7");
    }
}

TEST(GammaDecompose, ConstantAndSingleTerm) {
    const auto c = gamma_decompose(Poly::constant(5, {"t"}), GammaMode::univariate);
    EXPECT_EQ(ints(c), (std::vector<Integer>{5}));
    const auto m = gamma_decompose(Integer(3) * pow(t, 2), GammaMode::univariate);
    EXPECT_EQ(m.offset, 2u);
    EXPECT_EQ(m.center(), Rational(2));
}

TEST(GammaDecompose, UnexpectedVariable) {
    EXPECT_THROW(gamma_decompose(s + t, GammaMode::univariate), InvalidInput);
}

TEST(GammaDecompose, QCoefficients) {
    GammaExpansion g;
    g.mode = GammaMode::q_coefficients;
    g.offset = 1;
    g.degree = 5;
    g.gammas = {{0, 1}, {0, 2, 1}, {3}};
    const Poly f = gamma_recompose(g);
    EXPECT_EQ(f.vars(), (std::vector<std::string>{"t", "q"}));
    const GammaExpansion back = gamma_decompose(f, GammaMode::q_coefficients);
    EXPECT_EQ(back.offset, 1u);
    EXPECT_EQ(to_string(back), to_string(g));
    EXPECT_TRUE(g.all_gammas_nonnegative());
    EXPECT_EQ(to_string(g), "r=1 n=5 cos=3 gammas=[q, q^2 + 2*q, 3] gamma_positive=true");
}

TEST(GammaRecompose, ReferenceExpansions) {
    EXPECT_EQ(gamma_recompose(biv(0, 4, {1, 7, 16})), aexc5_plus());
    const Poly aexc7_minus = Integer(63) * s * t * pow(s + t, 4) + Integer(336) * pow(s * t, 2) * pow(s + t, 2) +
                             Integer(168) * pow(s * t, 3);
    EXPECT_EQ(gamma_recompose(biv(1, 6, {63, 336, 168})), aexc7_minus);
    EXPECT_TRUE(gamma_recompose(biv(2, 7, {0})).is_zero());
}

TEST(GammaRecompose, RoundTripRandomExpansions) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(-9, 9), deg(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        GammaExpansion g;
        g.degree = static_cast<unsigned>(deg(rng));
        g.offset = static_cast<unsigned>(deg(rng)) % (g.degree + 1);
        for (unsigned i = 0; g.offset + 2 * i <= g.degree; ++i) g.gammas.push_back({Integer(c(rng))});
        g.gammas[0] = {Integer(c(rng) == 0 ? 1 : 2)};  // nonzero leading term fixes r
        const Poly f = gamma_recompose(g);
        const GammaExpansion back = gamma_decompose(f, GammaMode::univariate);
        ASSERT_EQ(back.offset, g.offset) << to_string(f);
        ASSERT_EQ(back.degree, g.degree) << to_string(f);
        ASSERT_EQ(ints(back), ints(g)) << to_string(f);
    }
}

TEST(SplitOddLength, BinomialCube) {
    const auto g = gamma_decompose(pow(one + t, 3).extended_to({"t"}), GammaMode::univariate);
    const auto [p1, p2] = split_odd_length(g);
    EXPECT_EQ(gamma_recompose(p1), pow(one + t, 2).extended_to({"t"}));
    EXPECT_EQ(gamma_recompose(p2), (t * pow(one + t, 2)).extended_to({"t"}));
    EXPECT_EQ(p1.center(), Rational(1));
    EXPECT_EQ(p2.center(), Rational(2));
}

TEST(SplitOddLength, EvenLengthRejected) {
    // t + 4t^2 + t^3 has length 2.
    const auto g = gamma_decompose(t + Integer(4) * t * t + pow(t, 3), GammaMode::univariate);
    EXPECT_THROW(split_odd_length(g), EvenLength);
}

TEST(SplitOddLength, NegativeGammaRejected) {
    const auto g = gamma_decompose((one + pow(t, 3)).extended_to({"t"}), GammaMode::univariate);
    ASSERT_FALSE(g.all_gammas_nonnegative());  // 1 + t^3 = (1+t)^3 - 3t(1+t)
    EXPECT_THROW(split_odd_length(g), NotGammaPositive);
}

TEST(SplitOddLength, CentersDifferByOne) {
    const Poly f = pow(one + t, 5) + Integer(3) * t * pow(one + t, 3) + Integer(2) * t * t * (one + t);
    const auto g = gamma_decompose(f.extended_to({"t"}), GammaMode::univariate);
    const auto [p1, p2] = split_odd_length(g);
    EXPECT_EQ(gamma_recompose(p1) + gamma_recompose(p2), f.extended_to({"t"}));
    EXPECT_EQ(p1.center(), Rational(2));
    EXPECT_EQ(p2.center(), Rational(3));
    EXPECT_EQ(p1.length() % 2, 0u);
    EXPECT_EQ(p2.length() % 2, 0u);
}

TEST(GammaCalculus, ProductOfGammaPositive) {
    const Poly f1 = aexc5_plus();
    const Poly f2 = Integer(15) * s * t * pow(s + t, 2);
    const auto g = gamma_decompose(f1 * f2, GammaMode::bivariate);
    EXPECT_TRUE(g.all_gammas_nonnegative());
    EXPECT_EQ(g.center(), Rational(4));
}

TEST(GammaCalculus, DAndMultipliers) {
    const Poly f = aexc5_plus();
    const auto d = gamma_decompose(apply_D(f), GammaMode::bivariate);
    EXPECT_TRUE(d.all_gammas_nonnegative());
    EXPECT_EQ(d.center(), Rational(3, 2));
    EXPECT_EQ(gamma_decompose(s * t * f, GammaMode::bivariate).center(), Rational(3));
    EXPECT_EQ(gamma_decompose((s + t) * f, GammaMode::bivariate).center(), Rational(5, 2));
}

// A short walk through the library: enumerate a family, rebuild it from the
// closed form, and read off its gamma vector.

#include <iostream>

#include "excgamma/closed.hpp"
#include "excgamma/gamma.hpp"
#include "excgamma/oracle.hpp"

int main() {
    using namespace excgamma;

    // Excedances over the even permutations of S_5, weighted t^exc s^(nexc-1).
    const FamilySpec spec{FamilyName::aexc, 5, ClassFilter::plus};
    const Poly enumerated = family_poly(spec);
    const Poly closed = half_sum_closed(HalfSumFamily::aexc, 5, ClassFilter::plus);
    std::cout << "AExc_5^+ = " << enumerated << '\n';
    std::cout << "closed form agrees: " << std::boolalpha << (enumerated == closed) << '\n';

    const GammaExpansion g = gamma_decompose(closed, GammaMode::bivariate);
    std::cout << "gamma: " << to_string(g) << '\n';

    // Derangements of S_6 by excedances, as a sum over cycle types.
    const Poly der = derangement_closed(6, ClassFilter::all);
    std::cout << "ADerExc_6(t) = " << der << '\n';
    std::cout << "gamma: " << to_string(gamma_decompose(der, GammaMode::univariate)) << '\n';

    // Large n is cheap through the recurrences.
    const Poly big = half_sum_closed(HalfSumFamily::aexc, 41, ClassFilter::minus);
    std::cout << "AExc_41^- has " << big.term_count() << " terms; gamma positive: "
              << gamma_decompose(big, GammaMode::bivariate).all_gammas_nonnegative() << '\n';
    return enumerated == closed ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion. Each criterion bundles
// registry checks, the smallest upper n each check must reach, a wall-clock
// limit, and optionally an extra timed probe.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>

#include "excgamma/closed.hpp"
#include "excgamma/harness.hpp"

using namespace excgamma;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    std::string title;
    std::vector<std::pair<std::string, unsigned>> checks;  // id, required n_hi
    SuiteLimits limits;
    double max_seconds;
    std::function<std::string()> probe;  // empty string on success
};

SuiteLimits with(unsigned a, unsigned b, unsigned d) {
    SuiteLimits l;
    l.a = a;
    l.b = b;
    l.d = d;
    return l;
}

// Closed forms for the four reference polynomials of one family, timed.
std::string closed_reference_probe(FamilyName family, std::initializer_list<unsigned> ns, double limit) {
    const auto start = Clock::now();
    for (unsigned n : ns)
        for (ClassFilter c : {ClassFilter::plus, ClassFilter::minus}) {
            const Poly f = closed_family_poly({family, n, c});
            if (!gamma_decompose(f, GammaMode::bivariate).all_gammas_nonnegative())
                return "negative gamma at n=" + std::to_string(n);
        }
    const double took = seconds_since(start);
    if (took >= limit) return "closed forms took " + std::to_string(took) + "s";
    return "";
}

std::vector<Criterion> criteria() {
    const SuiteLimits base = with(8, 6, 6);
    return {
        {1, "type A reference polynomials and gamma vectors at n=5,7",
         {{"typeA.reference_values", 7}}, with(7, 6, 6), 6.0,
         [] { return closed_reference_probe(FamilyName::aexc, {5, 7}, 1.0); }},
        {2, "type D reference polynomials and gamma vectors at n=4,6",
         {{"typeD.reference_values", 6}}, base, 10.0,
         [] { return closed_reference_probe(FamilyName::dexc, {4, 6}, 1.0); }},
        {3, "signed excedance sum over S_n is (s-t)^(n-1)", {{"signed_sums.sgn_aexc", 8}}, base, 30.0, {}},
        {4, "signed type B sums and the vanishing partial sum",
         {{"signed_sums.sgn_bexc", 6}, {"signed_sums.sgnb_des_u", 6}, {"signed_sums.sgnb_partial_sum_zero", 6}},
         base, 120.0, {}},
        {5, "signed type D sums and the (s-t)^4 jump",
         {{"signed_sums.sgn_dexc", 7}, {"signed_sums.sgn_dexc_jump", 13}}, with(8, 6, 7), 120.0, {}},
        {6, "descent/excedance equidistribution by class and D versus B halves",
         {{"typeB.des_exc_equidistributed_by_class", 6}, {"typeD.dexc_equals_bexc_classes", 6}}, base, 120.0, {}},
        {7, "step recurrences match enumeration and jumps match steps",
         {{"typeA.step_recurrence_matches_oracle", 8},
          {"typeB.step_recurrence_matches_oracle", 6},
          {"typeD.pair_recurrence_matches_oracle", 6},
          {"typeA.jump4_matches_steps", 13},
          {"typeD.jump4_matches_steps", 12}},
         base, 120.0, {}},
        {8, "coefficient table recurrences reproduce the half sums",
         {{"typeA.coefficient_tables", 12}}, base, 30.0, {}},
        {9, "bijections transport their statistics",
         {{"bijections.fft_des_equals_exc", 8},
          {"bijections.penultimate_max_map", 7},
          {"bijections.last_two_swap", 7},
          {"bijections.cycle_map", 7}},
         base, 120.0, {}},
        {10, "conjugacy class and derangement closed forms match enumeration",
         {{"derangements.conjugacy_product_formula", 8}, {"derangements.closed_matches_oracle", 8}}, base, 60.0, {}},
        {11, "gamma positivity, centers and two-term splits",
         {{"gamma_calculus.decompose_roundtrip", 7},
          {"gamma_calculus.derivative_positive", 7},
          {"gamma_calculus.jump_table_centers", 4},
          {"gamma_calculus.odd_length_split", 12},
          {"gamma_calculus.product_positive", 5},
          {"gamma_calculus.st_and_sum_multipliers", 7},
          {"typeA.derivative_halves", 8},
          {"typeA.gamma_positive_odd_n", 11},
          {"typeA.palindromic_iff_odd", 9},
          {"typeA.two_term_split_even_n", 10},
          {"typeB.gamma_positive_even_n", 10},
          {"typeB.two_term_split_odd_n", 9},
          {"typeD.gamma_positive_even_n", 10},
          {"typeD.s_term_even_gammas", 12},
          {"typeD.two_term_split_odd_n", 9},
          {"derangements.gamma_positive", 13},
          {"derangements.conjugacy_center", 13}},
         base, 120.0, {}},
        {12, "q-refined derangement sums are gamma positive and specialize at q=1",
         {{"q_refined.gamma_positive", 7}, {"q_refined.q_one_specialization", 7}}, base, 120.0, {}},
    };
}

const Check& find_check(const std::string& id) {
    for (const Check& c : registry())
        if (c.id == id) return c;
    throw InvalidSpec("no registered check " + id);
}

}  // namespace

int main() {
    int failures = 0;
    for (const Criterion& cr : criteria()) {
        const auto start = Clock::now();
        std::string problem;
        for (const auto& [id, need] : cr.checks) {
            const CheckResult r = run_check(find_check(id), cr.limits);
            if (r.status != CheckStatus::pass) {
                problem = id + " " + name(r.status) + ": " + (r.witness.empty() ? r.reason : r.witness);
                break;
            }
            if (r.n_hi < need) {
                problem = id + " reached n=" + std::to_string(r.n_hi) + ", needs " + std::to_string(need);
                break;
            }
        }
        if (problem.empty() && cr.probe) problem = cr.probe();
        const double took = seconds_since(start);
        if (problem.empty() && took >= cr.max_seconds)
            problem = "took " + std::to_string(took) + "s, limit " + std::to_string(cr.max_seconds) + "s";
        const bool ok = problem.empty();
        failures += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.number << ": " << cr.title << " ("
                  << std::fixed << std::setprecision(2) << took << "s)";
        if (!ok) std::cout << "\n  " << problem;
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all 12 criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}

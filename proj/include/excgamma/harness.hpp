#pragma once

// Verification registry: every identity the library relies on as a named,
// runnable check that compares two independently computed sides exactly.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "excgamma/bijections.hpp"
#include "excgamma/closed.hpp"
#include "excgamma/gamma.hpp"
#include "excgamma/groups.hpp"
#include "excgamma/oracle.hpp"
#include "excgamma/poly.hpp"

namespace excgamma {

/// Largest n each kind of check may reach.
struct SuiteLimits {
    unsigned a = 8;        // oracle over S_n
    unsigned b = 6;        // oracle over B_n
    unsigned d = 6;        // oracle over D_n
    unsigned closed = 13;  // enumeration-free checks
    double budget = 1e9;

    /// Uniform cap k: S_n and closed checks up to k, signed groups up to min(k, 6).
    static SuiteLimits up_to(unsigned k) {
        SuiteLimits l;
        l.a = k;
        l.b = l.d = std::min(k, 6u);
        l.closed = k;
        return l;
    }
};

enum class CheckStatus { pass, fail, skipped };

inline const char* name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    default: return "SKIP";
    }
}

struct CheckResult {
    std::string id;
    unsigned n_lo = 0, n_hi = 0;  // n_lo > n_hi when nothing was covered
    CheckStatus status = CheckStatus::pass;
    std::string witness, lhs, rhs, reason;
    double seconds = 0;
};

/// Handed to each check body; records coverage and the first mismatch.
class Recorder {
public:
    explicit Recorder(const SuiteLimits& limits) : limits(limits) {}

    const SuiteLimits limits;

    OracleOptions oracle_options() const {
        OracleOptions o;
        o.enumeration.budget = limits.budget;
        return o;
    }
    Poly oracle(const FamilySpec& spec) const { return family_poly(spec, oracle_options()); }

    void cover(unsigned n) {
        lo_ = std::min(lo_, n);
        hi_ = std::max(hi_, n);
    }

    bool equal(const Poly& lhs, const Poly& rhs, const std::string& witness) {
        if (lhs == rhs) return true;
        fail(witness, to_string(lhs), to_string(rhs));
        return false;
    }

    bool expect(bool ok, const std::string& witness, const std::string& lhs = "", const std::string& rhs = "") {
        if (!ok) fail(witness, lhs, rhs);
        return ok;
    }

    /// Gamma positivity in the given mode with the stated center.
    bool gamma_positive(const Poly& f, GammaMode mode, Rational cos, const std::string& witness) {
        GammaExpansion g;
        try {
            g = gamma_decompose(f, mode);
        } catch (const Error& e) {
            return expect(false, witness + ": " + e.what(), to_string(f));
        }
        if (!g.all_gammas_nonnegative()) return expect(false, witness + ": negative gamma", to_string(g));
        return expect(g.center() == cos, witness + ": center", to_string(g.center()), to_string(cos));
    }

    bool failed() const { return failed_; }

    CheckResult finish(const std::string& id) const {
        CheckResult r;
        r.id = id;
        r.n_lo = lo_;
        r.n_hi = hi_;
        r.status = failed_ ? CheckStatus::fail : covered() ? CheckStatus::pass : CheckStatus::skipped;
        r.witness = witness_;
        r.lhs = lhs_;
        r.rhs = rhs_;
        if (r.status == CheckStatus::skipped) r.reason = "range empty at these limits";
        return r;
    }

private:
    bool covered() const { return lo_ <= hi_; }

    void fail(const std::string& witness, const std::string& lhs, const std::string& rhs) {
        if (failed_) return;
        failed_ = true;
        witness_ = witness;
        lhs_ = lhs;
        rhs_ = rhs;
    }

    unsigned lo_ = UINT_MAX, hi_ = 0;
    bool failed_ = false;
    std::string witness_, lhs_, rhs_;
};

struct Check {
    std::string id;     // "<suite>.<name>"
    std::string claim;  // what is compared
    std::function<void(Recorder&)> run;

    std::string suite() const { return id.substr(0, id.find('.')); }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"gamma_calculus", "typeA",      "typeB",      "typeD",
                                                   "derangements",   "bijections", "signed_sums", "q_refined"};
    return names;
}

namespace checks {

inline std::string nstr(unsigned n) { return "n=" + std::to_string(n); }

inline const ClassFilter kClasses[] = {ClassFilter::plus, ClassFilter::minus};

inline std::string tag(const char* family, unsigned n, ClassFilter c) {
    return std::string(family) + " n=" + std::to_string(n) + " class=" + name(c);
}

inline Rational half(unsigned k) { return Rational(k, 2); }

/// Bivariate gamma-positive polynomials for the calculus checks: A_n, B_n and
/// the jump tables (reported under n = 4, the jump length).
struct Sample {
    std::string label;
    unsigned n;
    Poly f;
};

inline std::vector<Sample> calculus_samples(unsigned n_max) {
    std::vector<Sample> out;
    for (unsigned n = 2; n <= std::min(n_max, 7u); ++n) {
        out.push_back({"A_" + std::to_string(n), n, eulerian(EulerianType::A, n)});
        out.push_back({"B_" + std::to_string(n), n, eulerian(EulerianType::B, n)});
    }
    const auto& j = jump_tables();
    for (std::size_t i = 0; i < j.L.size(); ++i) out.push_back({"L" + std::to_string(i + 1), 4, j.L[i]});
    for (std::size_t i = 0; i < j.R.size(); ++i) out.push_back({"R" + std::to_string(i + 1), 4, j.R[i]});
    return out;
}

inline Rational biv_center(const Poly& f) { return gamma_decompose(f, GammaMode::bivariate).center(); }

// --- gamma calculus --------------------------------------------------------

inline void product_positive(Recorder& r) {
    const auto samples = calculus_samples(std::min(r.limits.closed, 5u));
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t k = i; k < samples.size(); ++k) {
            const Sample& a = samples[i];
            const Sample& b = samples[k];
            r.cover(std::max(a.n, b.n));
            r.gamma_positive(a.f * b.f, GammaMode::bivariate, biv_center(a.f) + biv_center(b.f),
                             a.label + "*" + b.label);
        }
}

inline void derivative_positive(Recorder& r) {
    for (const Sample& x : calculus_samples(r.limits.closed)) {
        r.cover(x.n);
        r.gamma_positive(apply_D(x.f), GammaMode::bivariate, biv_center(x.f) - Rational(1, 2), "D " + x.label);
    }
}

inline void multipliers(Recorder& r) {
    const Poly st = var_s() * var_t();
    const Poly sum = var_s() + var_t();
    for (const Sample& x : calculus_samples(r.limits.closed)) {
        r.cover(x.n);
        r.gamma_positive(st * x.f, GammaMode::bivariate, biv_center(x.f) + Rational(1), "st*" + x.label);
        r.gamma_positive(sum * x.f, GammaMode::bivariate, biv_center(x.f) + Rational(1, 2), "(s+t)*" + x.label);
    }
}

inline void odd_split(Recorder& r) {
    for (unsigned n = 2; n <= r.limits.closed; n += 2) {
        r.cover(n);
        const Poly f = eulerian_t(n);
        const GammaExpansion g = gamma_decompose(f, GammaMode::univariate);
        const auto [p1, p2] = split_odd_length(g);
        r.equal(gamma_recompose(p1) + gamma_recompose(p2), f, "A_" + std::to_string(n) + "(t)");
        r.expect(p2.center() - p1.center() == Rational(1), "centers of A_" + std::to_string(n) + "(t) split",
                 to_string(p1.center()), to_string(p2.center()));
    }
}

inline void roundtrip(Recorder& r) {
    for (const Sample& x : calculus_samples(r.limits.closed)) {
        r.cover(x.n);
        r.equal(detail::over_st(gamma_recompose(gamma_decompose(x.f, GammaMode::bivariate))), detail::over_st(x.f),
                x.label);
        const Poly ft = substitute_one(detail::over_st(x.f), "s");
        r.equal(gamma_recompose(gamma_decompose(ft, GammaMode::univariate)).extended_to({"t"}),
                ft.extended_to({"t"}), x.label + "(t)");
    }
}

inline void jump_table_centers(Recorder& r) {
    const auto& j = jump_tables();
    r.cover(4);
    for (std::size_t i = 0; i < j.L.size(); ++i)
        r.gamma_positive(j.L[i], GammaMode::bivariate, j.L_cos[i], "L" + std::to_string(i + 1));
    for (std::size_t i = 0; i < j.R.size(); ++i)
        r.gamma_positive(j.R[i], GammaMode::bivariate, j.R_cos[i], "R" + std::to_string(i + 1));
}

// --- type A ----------------------------------------------------------------

inline void a_eulerian(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.a; ++n) {
        r.cover(n);
        const Poly des = r.oracle({FamilyName::a_des, n});
        r.equal(eulerian(EulerianType::A, n), des, "A_" + std::to_string(n) + " des/asc");
        r.equal(r.oracle({FamilyName::aexc, n}), des, "exc/nexc-1 vs des/asc " + nstr(n));
    }
}

inline void a_half_sum(Recorder& r) {
    for (unsigned n = 2; n <= r.limits.a; ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.equal(half_sum_closed(HalfSumFamily::aexc, n, c), r.oracle({FamilyName::aexc, n, c}),
                    tag("aexc", n, c));
    }
}

inline void a_step(Recorder& r) {
    for (unsigned n = 2; n <= r.limits.a; ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.equal(aexc_step(n, c), r.oracle({FamilyName::aexc, n, c}), tag("aexc", n, c));
    }
}

inline void a_derivative(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.closed, 8u); ++n) {
        r.cover(n);
        const Poly half_d = halve(apply_D(eulerian(EulerianType::A, n)));
        for (ClassFilter c : kClasses)
            r.equal(apply_D(half_sum_closed(HalfSumFamily::aexc, n, c)), half_d, tag("D aexc", n, c));
    }
}

inline void a_palindromic(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.closed, 9u); ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses) {
            const bool pal =
                palindrome_info(half_sum_closed(HalfSumFamily::aexc, n, c), PalindromeMode::bivariate_st)
                    .is_palindromic;
            r.expect(pal == (n % 2 == 1), tag("aexc", n, c), pal ? "palindromic" : "not palindromic");
        }
    }
}

inline void a_gamma_odd(Recorder& r) {
    for (unsigned n = 5; n <= std::min(r.limits.closed, 11u); n += 2) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.gamma_positive(half_sum_closed(HalfSumFamily::aexc, n, c), GammaMode::bivariate, half(n - 1),
                             tag("aexc", n, c));
    }
}

inline void a_reference(Recorder& r) {
    struct Row {
        unsigned n;
        ClassFilter c;
        unsigned offset;
        std::vector<int> gammas;
    };
    const Row rows[] = {{5, ClassFilter::plus, 0, {1, 7, 16}},
                        {5, ClassFilter::minus, 1, {15, 0}},
                        {7, ClassFilter::plus, 0, {1, 51, 384, 104}},
                        {7, ClassFilter::minus, 1, {63, 336, 168}}};
    for (const Row& row : rows) {
        if (row.n > r.limits.closed) continue;
        r.cover(row.n);
        const Poly closed = half_sum_closed(HalfSumFamily::aexc, row.n, row.c);
        const auto base = *tabulated_base(FamilyName::aexc, row.n);
        r.equal(closed, row.c == ClassFilter::plus ? base.first : base.second, tag("aexc", row.n, row.c));
        const GammaExpansion g = gamma_decompose(closed, GammaMode::bivariate);
        std::vector<int> got;
        for (std::size_t i = 0; i < g.gammas.size(); ++i) got.push_back(static_cast<int>(g.gamma(i)));
        r.expect(g.offset == row.offset && got == row.gammas, tag("aexc gammas", row.n, row.c), to_string(g));
        if (row.n <= r.limits.a) r.equal(r.oracle({FamilyName::aexc, row.n, row.c}), closed, tag("oracle aexc", row.n, row.c));
    }
}

inline void a_jump4(Recorder& r) {
    for (unsigned n = 2; n + 4 <= r.limits.closed; ++n) {
        r.cover(n + 4);
        const Poly plus = aexc_step(n, ClassFilter::plus), minus = aexc_step(n, ClassFilter::minus);
        for (ClassFilter c : kClasses)
            r.equal(aexc_jump4_from(plus, minus, c), aexc_step(n + 4, c), tag("aexc jump", n + 4, c));
    }
    for (unsigned n = 5; n <= r.limits.closed; n += 2) {
        r.cover(n);
        for (ClassFilter c : kClasses) r.equal(aexc_jump4(n, c), aexc_step(n, c), tag("aexc chain", n, c));
    }
}

inline void a_coeff_tables(Recorder& r) {
    const unsigned n_max = std::min(r.limits.closed, 12u);
    if (n_max < 1) return;
    const CoeffTable tab = coeff_tables(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses) {
            const Poly f = n == 1 ? (c == ClassFilter::plus ? Poly::constant(1, {"t"}) : Poly({"t"}))
                                  : substitute_one(half_sum_closed(HalfSumFamily::aexc, n, c), "s");
            const auto& row = c == ClassFilter::plus ? tab.plus[n] : tab.minus[n];
            r.equal(from_dense(row, "t"), f.extended_to({"t"}), tag("coefficient row", n, c));
        }
    }
    if (n_max >= 4) {
        const std::vector<Integer> plus4{1, 4, 7, 0}, minus4{0, 7, 4, 1};
        r.expect(tab.plus[4] == plus4 && tab.minus[4] == minus4, "row 4");
    }
}

inline void split_check(Recorder& r, FamilyName family, unsigned lo, unsigned hi, const char* label) {
    for (unsigned n = lo; n <= std::min(r.limits.closed, hi); n += 2) {
        r.cover(n);
        for (ClassFilter c : kClasses) {
            const TwoTermSplit sp = two_term_split(family, n, c);
            const FamilySpec spec{family, n, c};
            const Poly target = substitute_one(closed_family_poly(spec), "s").extended_to({"t"});
            r.equal(sp.w1 + sp.w2, target, tag(label, n, c));
            r.expect(sp.g1.all_gammas_nonnegative() && sp.g2.all_gammas_nonnegative(),
                     tag(label, n, c) + ": negative gamma", to_string(sp.g1), to_string(sp.g2));
            r.expect(sp.g2.center() - sp.g1.center() == Rational(1), tag(label, n, c) + ": centers",
                     to_string(sp.g1.center()), to_string(sp.g2.center()));
        }
    }
}

inline void a_split(Recorder& r) { split_check(r, FamilyName::aexc, 4, 10, "aexc split"); }

// --- type B ----------------------------------------------------------------

inline void b_eulerian(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        r.equal(eulerian(EulerianType::B, n), r.oracle({FamilyName::b_des, n}), "B_" + std::to_string(n));
    }
}

inline void b_half_sum(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.equal(half_sum_closed(HalfSumFamily::bexc, n, c), r.oracle({FamilyName::bexc, n, c}),
                    tag("bexc", n, c));
    }
}

inline void b_step(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.equal(bexc_step(n, c), r.oracle({FamilyName::bexc, n, c}), tag("bexc", n, c));
    }
}

inline void b_equidistribution(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.equal(r.oracle({FamilyName::b_des, n, c}), r.oracle({FamilyName::bexc, n, c}), tag("des vs exc", n, c));
    }
}

inline void b_gamma_even(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.closed, 10u); n += 2) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.gamma_positive(half_sum_closed(HalfSumFamily::bexc, n, c), GammaMode::bivariate, half(n),
                             tag("bexc", n, c));
    }
}

inline void b_split(Recorder& r) { split_check(r, FamilyName::bexc, 3, 9, "bexc split"); }

// --- type D ----------------------------------------------------------------

inline void d_pair(Recorder& r) {
    for (unsigned n = 2; n <= r.limits.d; ++n) {
        r.cover(n);
        const DExcPair p = dexc_pair_step(n);
        r.equal(p.dexc, r.oracle({FamilyName::dexc, n}), "dexc " + nstr(n));
        r.equal(p.bdexc, r.oracle({FamilyName::bdexc, n}), "bdexc " + nstr(n));
        for (ClassFilter c : kClasses)
            r.equal(dexc_step(n, c), r.oracle({FamilyName::dexc, n, c}), tag("dexc", n, c));
    }
}

inline void d_bridge(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.b, r.limits.d); ++n) {
        r.cover(n);
        r.equal(r.oracle({FamilyName::dexc, n}), r.oracle({FamilyName::bexc, n, ClassFilter::plus}),
                "dexc vs bexc plus " + nstr(n));
        r.equal(r.oracle({FamilyName::bdexc, n}), r.oracle({FamilyName::bexc, n, ClassFilter::minus}),
                "bdexc vs bexc minus " + nstr(n));
    }
}

inline void d_reference(Recorder& r) {
    struct Row {
        unsigned n;
        ClassFilter c;
        unsigned offset;
        std::vector<int> gammas;
    };
    const Row rows[] = {{4, ClassFilter::plus, 0, {1, 12, 32}},
                        {4, ClassFilter::minus, 1, {20, 16}},
                        {6, ClassFilter::plus, 0, {1, 170, 1952, 928}},
                        {6, ClassFilter::minus, 1, {182, 1904, 992}}};
    for (const Row& row : rows) {
        if (row.n > r.limits.closed) continue;
        r.cover(row.n);
        const Poly closed = dexc_step(row.n, row.c);
        const auto base = *tabulated_base(FamilyName::dexc, row.n);
        r.equal(closed, row.c == ClassFilter::plus ? base.first : base.second, tag("dexc", row.n, row.c));
        const GammaExpansion g = gamma_decompose(closed, GammaMode::bivariate);
        std::vector<int> got;
        for (std::size_t i = 0; i < g.gammas.size(); ++i) got.push_back(static_cast<int>(g.gamma(i)));
        r.expect(g.offset == row.offset && got == row.gammas, tag("dexc gammas", row.n, row.c), to_string(g));
        if (row.n <= r.limits.d) r.equal(r.oracle({FamilyName::dexc, row.n, row.c}), closed, tag("oracle dexc", row.n, row.c));
    }
}

inline void d_jump4(Recorder& r) {
    for (unsigned n = 2; n + 4 <= std::min(r.limits.closed, 12u); ++n) {
        r.cover(n + 4);
        const DExcPair p = dexc_pair_step(n);
        r.equal(dexc_jump4_from(n, p.dexc, p.bdexc), dexc_pair_step(n + 4).dexc, "dexc jump " + nstr(n + 4));
        const Poly plus = dexc_step(n, ClassFilter::plus), minus = dexc_step(n, ClassFilter::minus);
        for (ClassFilter c : kClasses)
            r.equal(dexc_signed_jump4_from(n, plus, minus, c), dexc_step(n + 4, c), tag("dexc jump", n + 4, c));
    }
    for (unsigned n = 4; n <= std::min(r.limits.closed, 12u); n += 2) {
        r.cover(n);
        for (ClassFilter c : kClasses) r.equal(dexc_jump4(n, c), dexc_step(n, c), tag("dexc chain", n, c));
    }
}

// BDExc_n is palindromic only for even n, so S_{n+4} is symmetric only then.
inline void d_s_term(Recorder& r) {
    for (unsigned n = 2; n + 4 <= std::min(r.limits.closed, 12u); n += 2) {
        r.cover(n + 4);
        const Poly s = s_term(n, dexc_pair_step(n).bdexc);
        const std::string w = "S_" + std::to_string(n + 4);
        if (!r.gamma_positive(s, GammaMode::bivariate, half(n + 4), w)) continue;
        const GammaExpansion g = gamma_decompose(s, GammaMode::bivariate);
        for (std::size_t i = 0; i < g.gammas.size(); ++i)
            r.expect(g.gamma(i) % 2 == 0, w + ": odd gamma", to_string(g));
    }
}

inline void d_gamma_even(Recorder& r) {
    for (unsigned n = 4; n <= std::min(r.limits.closed, 10u); n += 2) {
        r.cover(n);
        for (ClassFilter c : kClasses)
            r.gamma_positive(dexc_step(n, c), GammaMode::bivariate, half(n), tag("dexc", n, c));
    }
}

inline void d_split(Recorder& r) { split_check(r, FamilyName::dexc, 3, 9, "dexc split"); }

// --- signed sums -----------------------------------------------------------

inline void sgn_a(Recorder& r) {
    for (unsigned n = 2; n <= r.limits.a; ++n) {
        r.cover(n);
        r.equal(r.oracle({FamilyName::sgn_aexc, n}), sgn_aexc_closed(n), "sgn_aexc " + nstr(n));
    }
}

inline void sgn_b(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        r.equal(r.oracle({FamilyName::sgn_bexc, n}), sgn_bexc_closed(n), "sgn_bexc " + nstr(n));
    }
}

inline void sgn_b_des_u(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        const Poly expected = pow(var_s() - var_t(), n) * pow(var_u(), n);
        r.equal(sgnb_des_u(n, {}, MaxPosition::any, r.oracle_options().enumeration), expected, "sgnb_des_u " + nstr(n));
        std::vector<int> spread;
        for (unsigned i = 1; i <= n; ++i) spread.push_back(static_cast<int>(3 * i + 1));
        r.equal(sgnb_des_u(n, spread, MaxPosition::any, r.oracle_options().enumeration), expected,
                "sgnb_des_u on letters 4,7,.. " + nstr(n));
    }
}

inline void sgn_b_partial(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.b; ++n) {
        r.cover(n);
        r.expect(sgnb_des_u(n, {}, MaxPosition::not_at_end, r.oracle_options().enumeration).is_zero(),
                 "partial sum with the largest letter not last " + nstr(n));
    }
}

inline void sgn_d(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.d; ++n) {
        r.cover(n);
        r.equal(r.oracle({FamilyName::sgn_dexc, n}), sgn_dexc_closed(n), "sgn_dexc " + nstr(n));
    }
}

inline void sgn_d_jump(Recorder& r) {
    const Poly q = pow(var_s() - var_t(), 4);
    for (unsigned n = 1; n + 4 <= r.limits.closed; ++n) {
        r.cover(n + 4);
        r.equal(sgn_dexc_closed(n + 4), detail::over_st(q * sgn_dexc_closed(n)), "sgn_dexc jump " + nstr(n + 4));
        // The closed signed sums also agree with the class halves.
        r.equal(dexc_step(n + 4, ClassFilter::plus) - dexc_step(n + 4, ClassFilter::minus), sgn_dexc_closed(n + 4),
                "dexc plus - minus " + nstr(n + 4));
    }
}

// --- derangements and conjugacy classes -------------------------------------

inline void conj_formula(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.a; ++n) {
        r.cover(n);
        for (const CycleType& lambda : partitions(n)) {
            FamilySpec spec{FamilyName::conj_exc, n};
            spec.lambda = lambda;
            r.equal(conj_exc_closed(lambda), r.oracle(spec), "lambda=" + lambda.to_string());
            const Integer size = evaluate_at_ones(conj_exc_closed(lambda));
            r.expect(size == lambda.class_size(), "class size lambda=" + lambda.to_string(), size.str(),
                     lambda.class_size().str());
        }
    }
}

inline void conj_center(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.closed; ++n) {
        r.cover(n);
        for (const CycleType& lambda : partitions(n))
            r.gamma_positive(conj_exc_closed(lambda), GammaMode::univariate, half(n - lambda.fixed_points()),
                             "lambda=" + lambda.to_string());
    }
}

inline void derangement_oracle(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.a; ++n) {
        r.cover(n);
        for (ClassFilter c : {ClassFilter::all, ClassFilter::plus, ClassFilter::minus}) {
            r.equal(derangement_closed(n, c), r.oracle({FamilyName::aderexc, n, c}), tag("aderexc", n, c));
            for (unsigned i = 0; i <= n; ++i) {
                FamilySpec spec{FamilyName::aderexc_fixed, n, c};
                spec.fixed = i;
                r.equal(derangement_closed(n, c, i), r.oracle(spec), tag("aderexc_fixed", n, c) + " i=" + std::to_string(i));
            }
        }
    }
}

inline void derangement_gamma(Recorder& r) {
    for (unsigned n = 2; n <= r.limits.closed; ++n) {
        r.cover(n);
        for (ClassFilter c : {ClassFilter::all, ClassFilter::plus, ClassFilter::minus}) {
            const Poly f = derangement_closed(n, c);
            if (f.is_zero()) continue;  // SD_2^+ and SD_3^- are empty
            r.gamma_positive(f, GammaMode::univariate, half(n), tag("aderexc", n, c));
            for (unsigned i = 1; i + 2 <= n; ++i) {
                const Poly g = derangement_closed(n, c, i);
                if (g.is_zero()) continue;
                r.gamma_positive(g, GammaMode::univariate, half(n - i),
                                 tag("aderexc_fixed", n, c) + " i=" + std::to_string(i));
            }
        }
    }
}

// --- bijections --------------------------------------------------------------

inline void fft(Recorder& r) {
    for (unsigned n = 1; n <= r.limits.a; ++n) {
        r.cover(n);
        std::vector<char> hit(1, 0);
        std::vector<Window> images;
        for_each_element(GroupSpec::symmetric(n), [&](WindowView w) {
            const Perm p{Window(w.begin(), w.end())};
            const Perm f = foata_fft(p);
            if (stat::des(f.window()) != stat::exc(p.window()))
                r.expect(false, "des(FFT(" + to_string(p) + ")) != exc");
            if (!(foata_fft_inverse(f) == p)) r.expect(false, "inverse fails at " + to_string(p), to_string(f));
            images.emplace_back(f.window().begin(), f.window().end());
        }, r.oracle_options().enumeration);
        std::sort(images.begin(), images.end());
        r.expect(std::adjacent_find(images.begin(), images.end()) == images.end(), "FFT not injective " + nstr(n));
    }
}

inline void penultimate(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.a, 7u); ++n) {
        r.cover(n);
        std::vector<Window> images;
        for_each_element(GroupSpec::with_pos_n(n, n - 1), [&](WindowView w) {
            const Perm p{Window(w.begin(), w.end())};
            const Perm f = penultimate_max_map(p);
            const unsigned des = stat::des(f.window());
            r.expect(stat::pos_max(f.window()) == 1, "image not in pos_n = 1 at " + to_string(p), to_string(f));
            r.expect(des == stat::exc(p.window()) && n - 1 - des == n - stat::exc(p.window()) - 1,
                     "statistics not carried at " + to_string(p), to_string(f));
            r.expect(penultimate_max_map_inverse(f) == p, "inverse fails at " + to_string(p), to_string(f));
            images.emplace_back(f.window().begin(), f.window().end());
        }, r.oracle_options().enumeration);
        std::sort(images.begin(), images.end());
        const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
        const auto target = count_elements(GroupSpec::with_pos_n(n, 1), r.oracle_options().enumeration);
        r.expect(injective && images.size() == target, "not a bijection onto pos_n = 1 " + nstr(n));
    }
}

inline void last_swap(Recorder& r) {
    for (unsigned n = 3; n <= std::min(r.limits.a, 7u); ++n) {
        r.cover(n);
        for_each_element(GroupSpec::symmetric(n), [&](WindowView w) {
            if (stat::pos_max(w) > n - 2) return;
            const Perm p{Window(w.begin(), w.end())};
            const Perm g = last_two_swap(p);
            const auto& gw = g.window();
            r.expect(last_two_swap(g) == p, "not an involution at " + to_string(p));
            r.expect(stat::inv(gw) % 2 != stat::inv(w) % 2, "sign kept at " + to_string(p));
            r.expect(stat::exc(gw) == stat::exc(w) && stat::pos_max(gw) == stat::pos_max(w),
                     "exc or pos_n changed at " + to_string(p), to_string(g));
        }, r.oracle_options().enumeration);
    }
}

inline void cycle_maps(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.a, 7u); ++n) {
        r.cover(n);
        std::uint64_t count = 0;
        for_each_element(GroupSpec::symmetric(n - 1), [&](WindowView w) {
            const Perm p{Window(w.begin(), w.end())};
            const Perm c = cycle_map(p);
            ++count;
            r.expect(cycle_type(c) == CycleType({n}), "image not an n-cycle at " + to_string(p), to_string(c));
            r.expect(stat::exc(c.window()) == stat::des(w) + 1, "exc != des + 1 at " + to_string(p), to_string(c));
            r.expect(cycle_map_inverse(c) == p, "inverse fails at " + to_string(p), to_string(c));
        }, r.oracle_options().enumeration);
        r.expect(Integer(count) == CycleType({n}).class_size(), "cycle map not onto " + nstr(n));
    }
}

// --- q refinement --------------------------------------------------------------

inline void q_positive(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.a, 7u); ++n) {
        r.cover(n);
        for (Stat st : {Stat::inv, Stat::cyc})
            for (ClassFilter c : kClasses) {
                const Poly f = q_refined(n, st, c, r.oracle_options());
                if (f.is_zero()) continue;
                const std::string w = tag("q_refined", n, c) + " stat=" + name(st);
                GammaExpansion g;
                try {
                    g = gamma_decompose(f, GammaMode::q_coefficients);
                } catch (const Error& e) {
                    r.expect(false, w + ": " + e.what(), to_string(f));
                    continue;
                }
                r.expect(g.all_gammas_nonnegative(), w, to_string(g));
                r.expect(g.center() == half(n), w + ": center", to_string(g.center()));
            }
    }
}

inline void q_specialization(Recorder& r) {
    for (unsigned n = 2; n <= std::min(r.limits.a, 7u); ++n) {
        r.cover(n);
        for (Stat st : {Stat::inv, Stat::cyc})
            for (ClassFilter c : kClasses) {
                const Poly f = q_refined(n, st, c, r.oracle_options());
                const Poly at_one = f.has_var("q") ? substitute_one(f, "q") : f;
                r.equal(at_one.extended_to({"t"}), derangement_closed(n, c),
                        tag("q=1", n, c) + " stat=" + name(st));
            }
    }
}

}  // namespace checks

/// All registered checks, sorted by id.
inline const std::vector<Check>& registry() {
    static const std::vector<Check> all = [] {
        using namespace checks;
        std::vector<Check> v = {
            {"gamma_calculus.product_positive", "products of gamma-positive polynomials are gamma positive, centers add", product_positive},
            {"gamma_calculus.derivative_positive", "D of a gamma-positive polynomial is gamma positive with center lowered by 1/2", derivative_positive},
            {"gamma_calculus.st_and_sum_multipliers", "multiplying by st or s+t keeps gamma positivity and shifts the center by 1 or 1/2", multipliers},
            {"gamma_calculus.odd_length_split", "odd-length gamma-positive polynomials split into two with centers one apart", odd_split},
            {"gamma_calculus.decompose_roundtrip", "gamma decomposition recomposes exactly", roundtrip},
            {"gamma_calculus.jump_table_centers", "each L_i and R_i is gamma positive with its tabulated center", jump_table_centers},
            {"typeA.eulerian_matches_oracle", "insertion recurrence for A_n(s,t) equals des/asc and exc/nexc-1 enumeration", a_eulerian},
            {"typeA.half_sum_matches_oracle", "(A_n +- (s-t)^{n-1})/2 equals AExc_n^+- by enumeration", a_half_sum},
            {"typeA.step_recurrence_matches_oracle", "one-step AExc^+- recurrence equals enumeration", a_step},
            {"typeA.derivative_halves", "D AExc_n^+ = D AExc_n^- = D A_n / 2", a_derivative},
            {"typeA.palindromic_iff_odd", "AExc_n^+- palindromic exactly for odd n", a_palindromic},
            {"typeA.gamma_positive_odd_n", "AExc_n^+- gamma positive with center (n-1)/2 for odd n >= 5", a_gamma_odd},
            {"typeA.reference_values", "AExc_5^+-, AExc_7^+- coefficients and gamma vectors", a_reference},
            {"typeA.jump4_matches_steps", "the L-table n -> n+4 identity equals four recurrence steps", a_jump4},
            {"typeA.coefficient_tables", "coefficient recurrences reproduce the rows of AExc_n^+-(t)", a_coeff_tables},
            {"typeA.two_term_split_even_n", "AExc_n^+-(t) for even n is a sum of two gamma-positive parts, centers one apart", a_split},
            {"typeB.eulerian_matches_oracle", "insertion recurrence for B_n(s,t) equals des_B/asc_B enumeration", b_eulerian},
            {"typeB.half_sum_matches_oracle", "(B_n +- (s-t)^n)/2 equals BExc_n^+- by enumeration", b_half_sum},
            {"typeB.step_recurrence_matches_oracle", "one-step BExc^+- recurrence equals enumeration", b_step},
            {"typeB.des_exc_equidistributed_by_class", "des_B/asc_B and exc_B/nexc_B agree on B_n^+ and on B_n^-", b_equidistribution},
            {"typeB.gamma_positive_even_n", "BExc_n^+- gamma positive with center n/2 for even n", b_gamma_even},
            {"typeB.two_term_split_odd_n", "BExc_n^+-(t) for odd n is a sum of two gamma-positive parts, centers one apart", b_split},
            {"typeD.pair_recurrence_matches_oracle", "the DExc/BDExc pair recurrence equals enumeration, with class halves", d_pair},
            {"typeD.dexc_equals_bexc_classes", "DExc_n = BExc_n^+ and BDExc_n = BExc_n^- by enumeration", d_bridge},
            {"typeD.reference_values", "DExc_4^+-, DExc_6^+- coefficients and gamma vectors", d_reference},
            {"typeD.jump4_matches_steps", "the R-table n -> n+4 identities (unsigned and by class) equal four recurrence steps", d_jump4},
            {"typeD.s_term_even_gammas", "for even n, S_{n+4} is gamma positive with center (n+4)/2 and even gammas", d_s_term},
            {"typeD.gamma_positive_even_n", "DExc_n^+- gamma positive with center n/2 for even n >= 4", d_gamma_even},
            {"typeD.two_term_split_odd_n", "DExc_n^+-(t) for odd n is a sum of two gamma-positive parts, centers one apart", d_split},
            {"signed_sums.sgn_aexc", "sum over S_n of (-1)^inv t^exc s^{nexc-1} is (s-t)^{n-1}", sgn_a},
            {"signed_sums.sgn_bexc", "sum over B_n of (-1)^{inv_B} t^{exc_B} s^{nexc_B} is (s-t)^n", sgn_b},
            {"signed_sums.sgnb_des_u", "signed des_B/asc_B/pos sum over B on any letters is (s-t)^n u^n", sgn_b_des_u},
            {"signed_sums.sgnb_partial_sum_zero", "the signed sum restricted to the largest letter not last vanishes", sgn_b_partial},
            {"signed_sums.sgn_dexc", "sum over D_n of (-1)^{inv_D} t^{exc_D} s^{nexc_D} is (s-t)^n or s(s-t)^{n-1}", sgn_d},
            {"signed_sums.sgn_dexc_jump", "SgnDExc_{n+4} = (s-t)^4 SgnDExc_n and equals DExc^+ - DExc^-", sgn_d_jump},
            {"derangements.conjugacy_product_formula", "class polynomial is the set-partition count times prod (t A_{j-1}(t))^{m_j}", conj_formula},
            {"derangements.conjugacy_center", "class polynomials are gamma positive with center (n - m_1)/2", conj_center},
            {"derangements.closed_matches_oracle", "summed class polynomials equal derangement enumeration, all classes and fixed-point counts", derangement_oracle},
            {"derangements.gamma_positive", "derangement polynomials are gamma positive with center n/2, or (n-i)/2 with i fixed points", derangement_gamma},
            {"bijections.fft_des_equals_exc", "FFT is a bijection with des(FFT(p)) = exc(p)", fft},
            {"bijections.penultimate_max_map", "n at position n-1 maps bijectively to n first, carrying exc to des", penultimate},
            {"bijections.last_two_swap", "swapping the last two entries is a sign-reversing involution keeping exc and pos_n", last_swap},
            {"bijections.cycle_map", "S_{n-1} maps onto the n-cycles with exc = des + 1", cycle_maps},
            {"q_refined.gamma_positive", "q-refined derangement sums have non-negative q-polynomial gammas, center n/2", q_positive},
            {"q_refined.q_one_specialization", "setting q = 1 recovers the derangement polynomials", q_specialization},
        };
        std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
        return v;
    }();
    return all;
}

inline CheckResult run_check(const Check& check, const SuiteLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    Recorder rec(limits);
    CheckResult result;
    try {
        check.run(rec);
        result = rec.finish(check.id);
    } catch (const BudgetExceeded& e) {
        result = rec.finish(check.id);
        if (result.status != CheckStatus::fail) {
            result.status = CheckStatus::skipped;
            result.reason = e.what();
        }
    } catch (const std::exception& e) {
        result = rec.finish(check.id);
        result.status = CheckStatus::fail;
        if (result.witness.empty()) result.witness = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

/// Runs every check whose suite matches ("all" selects everything). Results are
/// ordered by id regardless of `jobs`.
inline std::vector<CheckResult> run_suite(const std::string& suite, const SuiteLimits& limits, unsigned jobs = 1) {
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw InvalidSpec("unknown suite '" + suite + "'");
    std::vector<const Check*> selected;
    for (const Check& c : registry())
        if (suite == "all" || c.suite() == suite) selected.push_back(&c);
    std::vector<CheckResult> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) results[i] = run_check(*selected[i], limits);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(jobs, 1u); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

inline std::string format_result(const CheckResult& r, bool timings) {
    std::ostringstream out;
    out << name(r.status) << ' ' << r.id;
    if (r.n_lo <= r.n_hi) out << " n=" << r.n_lo << ".." << r.n_hi;
    if (timings) out << " (" << std::fixed << std::setprecision(3) << r.seconds << "s)";
    if (r.status == CheckStatus::fail) {
        out << "\n  witness: " << r.witness;
        if (!r.lhs.empty()) out << "\n  lhs: " << r.lhs;
        if (!r.rhs.empty()) out << "\n  rhs: " << r.rhs;
    }
    if (r.status == CheckStatus::skipped) out << " (" << r.reason << ")";
    return out.str();
}

/// Prints one line per check plus a totals line; returns true if nothing failed.
inline bool print_report(std::ostream& out, const std::vector<CheckResult>& results, bool timings) {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : results) {
        out << format_result(r, timings) << '\n';
        (r.status == CheckStatus::pass ? pass : r.status == CheckStatus::fail ? fail : skip)++;
    }
    out << results.size() << " checks: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return fail == 0;
}

}  // namespace excgamma

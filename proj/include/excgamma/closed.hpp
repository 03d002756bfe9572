#pragma once

// Enumeration-free constructions: insertion recurrences, half sums against the
// signed sums, jump-by-four identities, and the conjugacy-class product formula.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "excgamma/gamma.hpp"
#include "excgamma/groups.hpp"
#include "excgamma/oracle.hpp"
#include "excgamma/poly.hpp"

namespace excgamma {

namespace detail {

inline const std::vector<std::string>& st_vars() {
    static const std::vector<std::string> v{"s", "t"};
    return v;
}

/// Re-expresses f over exactly {s, t}.
inline Poly over_st(const Poly& f) { return f.extended_to(st_vars()); }

inline Poly s_minus_t_pow(unsigned k) { return over_st(pow(var_s() - var_t(), k)); }

/// sum gammas[i] (st)^{offset+i} (s+t)^{degree-2(offset+i)}
inline Poly bivariate_gamma(unsigned offset, unsigned degree, std::initializer_list<int> gammas) {
    GammaExpansion g;
    g.mode = GammaMode::bivariate;
    g.offset = offset;
    g.degree = degree;
    for (int c : gammas) g.gammas.push_back({Integer(c)});
    return over_st(gamma_recompose(g));
}

inline ClassFilter opposite(ClassFilter c) {
    return c == ClassFilter::plus ? ClassFilter::minus : ClassFilter::plus;
}

inline void require_split(ClassFilter c) {
    if (c == ClassFilter::all) throw InvalidSpec("expected class plus or minus");
}

}  // namespace detail

enum class EulerianType { A, B };

/// A_n(s,t) = sum t^des s^asc over S_n (degree n-1) or B_n(s,t) over B_n (degree n).
inline Poly eulerian(EulerianType type, unsigned n) {
    if (n == 0) throw InvalidSpec("eulerian polynomials need n >= 1");
    const Poly sum = detail::over_st(var_s() + var_t());
    const Poly st = detail::over_st(var_s() * var_t());
    if (type == EulerianType::A) {
        Poly f = Poly::constant(1, detail::st_vars());
        for (unsigned k = 1; k < n; ++k) f = sum * f + st * apply_D(f);
        return f;
    }
    Poly f = sum;
    for (unsigned k = 1; k < n; ++k) f = sum * f + Integer(2) * st * apply_D(f);
    return f;
}

/// Univariate A_n(t) = A_n(1, t).
inline Poly eulerian_t(unsigned n) { return substitute_one(eulerian(EulerianType::A, n), "s"); }

enum class HalfSumFamily { aexc, bexc };

/// (G_n +- (s-t)^d) / 2 with (G, d) = (A_n, n-1) or (B_n, n).
inline Poly half_sum_closed(HalfSumFamily family, unsigned n, ClassFilter cls) {
    const bool a = family == HalfSumFamily::aexc;
    if (a ? n < 2 : n < 1) throw InvalidSpec("half sum needs n >= " + std::string(a ? "2" : "1"));
    const Poly g = eulerian(a ? EulerianType::A : EulerianType::B, n);
    if (cls == ClassFilter::all) return g;
    const Poly sgn = detail::s_minus_t_pow(a ? n - 1 : n);
    return halve(cls == ClassFilter::plus ? g + sgn : g - sgn);
}

// ---------------------------------------------------------------------------
// One-step recurrences

/// AExc_n^+- = s AExc_{n-1}^+- + t AExc_{n-1}^-+ + (1/2) st D A_{n-1}, from AExc_2^+- = (s, t).
inline Poly aexc_step(unsigned n, ClassFilter cls) {
    if (n < 2) throw InvalidSpec("aexc recurrence needs n >= 2");
    if (cls == ClassFilter::all) return eulerian(EulerianType::A, n);
    const Poly s = detail::over_st(var_s()), t = detail::over_st(var_t());
    Poly plus = s, minus = t;
    for (unsigned k = 3; k <= n; ++k) {
        const Poly extra = halve(s * t * apply_D(plus + minus));
        Poly next_plus = s * plus + t * minus + extra;
        Poly next_minus = s * minus + t * plus + extra;
        plus = std::move(next_plus);
        minus = std::move(next_minus);
    }
    return cls == ClassFilter::plus ? plus : minus;
}

/// BExc_n^+- = s BExc_{n-1}^+- + t BExc_{n-1}^-+ + st D B_{n-1}, from BExc_1^+- = (s, t).
inline Poly bexc_step(unsigned n, ClassFilter cls) {
    if (n < 1) throw InvalidSpec("bexc recurrence needs n >= 1");
    if (cls == ClassFilter::all) return eulerian(EulerianType::B, n);
    const Poly s = detail::over_st(var_s()), t = detail::over_st(var_t());
    Poly plus = s, minus = t;
    for (unsigned k = 2; k <= n; ++k) {
        const Poly extra = s * t * apply_D(plus + minus);
        Poly next_plus = s * plus + t * minus + extra;
        Poly next_minus = s * minus + t * plus + extra;
        plus = std::move(next_plus);
        minus = std::move(next_minus);
    }
    return cls == ClassFilter::plus ? plus : minus;
}

struct DExcPair {
    Poly dexc;   // over D_n
    Poly bdexc;  // over B_n minus D_n
};

/// (DExc_n, BDExc_n) from DExc_2 = (s+t)^2, BDExc_2 = 4st via
/// DExc_n = s DExc_{n-1} + t BDExc_{n-1} + st D B_{n-1} and its mirror.
inline DExcPair dexc_pair_step(unsigned n) {
    if (n < 2) throw InvalidSpec("type D recurrence needs n >= 2");
    const Poly s = detail::over_st(var_s()), t = detail::over_st(var_t());
    DExcPair p{pow(s + t, 2), Integer(4) * s * t};
    for (unsigned k = 3; k <= n; ++k) {
        const Poly extra = s * t * apply_D(eulerian(EulerianType::B, k - 1));
        DExcPair next{s * p.dexc + t * p.bdexc + extra, t * p.dexc + s * p.bdexc + extra};
        p = std::move(next);
    }
    return p;
}

/// (s-t)^n for even n, s(s-t)^{n-1} for odd n.
inline Poly sgn_dexc_closed(unsigned n) {
    if (n == 0) throw InvalidSpec("n must be positive");
    if (n % 2 == 0) return detail::s_minus_t_pow(n);
    return detail::over_st(var_s() * detail::s_minus_t_pow(n - 1));
}
inline Poly sgn_aexc_closed(unsigned n) {
    if (n == 0) throw InvalidSpec("n must be positive");
    return detail::s_minus_t_pow(n - 1);
}
inline Poly sgn_bexc_closed(unsigned n) { return detail::s_minus_t_pow(n); }

/// DExc_n^+- = (DExc_n +- SgnDExc_n) / 2, with DExc_n from the pair recurrence.
inline Poly dexc_step(unsigned n, ClassFilter cls) {
    const Poly all = dexc_pair_step(n).dexc;
    if (cls == ClassFilter::all) return all;
    const Poly sgn = sgn_dexc_closed(n);
    return halve(cls == ClassFilter::plus ? all + sgn : all - sgn);
}

// ---------------------------------------------------------------------------
// Coefficient tables of AExc_n^+-(t)

struct CoeffTable {
    // plus[n][k], minus[n][k] for 1 <= n <= n_max, 0 <= k <= n-1; row 0 unused.
    std::vector<std::vector<Integer>> plus, minus;
};

inline CoeffTable coeff_tables(unsigned n_max) {
    if (n_max < 1) throw InvalidSpec("n_max must be positive");
    CoeffTable tab;
    tab.plus.resize(n_max + 1);
    tab.minus.resize(n_max + 1);
    tab.plus[1] = {1};
    tab.minus[1] = {0};
    auto at = [](const std::vector<Integer>& row, long k) -> Integer {
        return k < 0 || k >= static_cast<long>(row.size()) ? Integer(0) : row[static_cast<std::size_t>(k)];
    };
    for (unsigned n = 2; n <= n_max; ++n) {
        auto& p = tab.plus[n];
        auto& m = tab.minus[n];
        const auto& pp = tab.plus[n - 1];
        const auto& pm = tab.minus[n - 1];
        for (long k = 0; k < static_cast<long>(n); ++k) {
            p.push_back(k * at(pm, k) + (n - k) * at(pm, k - 1) + at(pp, k));
            m.push_back(k * at(pp, k) + (n - k) * at(pp, k - 1) + at(pm, k));
        }
    }
    return tab;
}

// ---------------------------------------------------------------------------
// Jump-by-four identities

struct JumpTables {
    std::array<Poly, 6> L;
    std::array<Rational, 6> L_cos;
    std::array<Poly, 7> R;
    std::array<Rational, 7> R_cos;
};

inline const JumpTables& jump_tables() {
    static const JumpTables tables = [] {
        using detail::bivariate_gamma;
        JumpTables j;
        j.L = {bivariate_gamma(0, 4, {1, 7, 16}),   bivariate_gamma(1, 4, {15}),
               bivariate_gamma(1, 5, {15, 60}),     bivariate_gamma(2, 6, {25, 20}),
               bivariate_gamma(3, 7, {10}),         bivariate_gamma(4, 8, {1})};
        j.L_cos = {Rational(2), Rational(2), Rational(5, 2), Rational(3), Rational(7, 2), Rational(4)};
        j.R = {bivariate_gamma(0, 4, {1, 8, 16}),   bivariate_gamma(1, 4, {16}),
               bivariate_gamma(1, 5, {4, 32}),      bivariate_gamma(2, 6, {2, 8}),
               bivariate_gamma(1, 4, {12}),         bivariate_gamma(2, 5, {8}),
               bivariate_gamma(2, 4, {2})};
        j.R_cos = {Rational(2), Rational(2), Rational(5, 2), Rational(3), Rational(2), Rational(5, 2),
                   Rational(2)};
        return j;
    }();
    return tables;
}

/// Tabulated starting values for the jump chains, given by their gamma vectors.
inline std::optional<std::pair<Poly, Poly>> tabulated_base(FamilyName family, unsigned n) {
    using detail::bivariate_gamma;
    if (family == FamilyName::aexc) {
        if (n == 5) return std::pair{bivariate_gamma(0, 4, {1, 7, 16}), bivariate_gamma(1, 4, {15, 0})};
        if (n == 7)
            return std::pair{bivariate_gamma(0, 6, {1, 51, 384, 104}), bivariate_gamma(1, 6, {63, 336, 168})};
    }
    if (family == FamilyName::dexc) {
        if (n == 4) return std::pair{bivariate_gamma(0, 4, {1, 12, 32}), bivariate_gamma(1, 4, {20, 16})};
        if (n == 6)
            return std::pair{bivariate_gamma(0, 6, {1, 170, 1952, 928}), bivariate_gamma(1, 6, {182, 1904, 992})};
    }
    return std::nullopt;
}

/// AExc_{n+4}^+- = L1 P + L2 M + (L3 D + L4 D^2 + L5 D^3 + L6 D^4) P, where (P, M) is
/// (AExc_n^+, AExc_n^-) for the plus class and swapped for minus.
inline Poly aexc_jump4_from(const Poly& plus, const Poly& minus, ClassFilter cls) {
    detail::require_split(cls);
    const auto& L = jump_tables().L;
    const Poly& p = cls == ClassFilter::plus ? plus : minus;
    const Poly& m = cls == ClassFilter::plus ? minus : plus;
    Poly out = L[0] * p + L[1] * m;
    Poly d = detail::over_st(p);
    for (unsigned k = 1; k <= 4; ++k) {
        d = apply_D(d);
        out += L[k + 1] * d;
    }
    return detail::over_st(out);
}

/// AExc_n^+- for odd n >= 5 by jumping from the tabulated n = 5 or n = 7 values.
inline Poly aexc_jump4(unsigned n, ClassFilter cls) {
    detail::require_split(cls);
    if (n < 5 || n % 2 == 0) throw MissingBase("the aexc jump chain covers odd n >= 5");
    const unsigned base = n % 4 == 1 ? 5 : 7;
    auto [plus, minus] = *tabulated_base(FamilyName::aexc, base);
    for (unsigned k = base; k < n; k += 4) {
        Poly next_plus = aexc_jump4_from(plus, minus, ClassFilter::plus);
        Poly next_minus = aexc_jump4_from(plus, minus, ClassFilter::minus);
        plus = std::move(next_plus);
        minus = std::move(next_minus);
    }
    return cls == ClassFilter::plus ? plus : minus;
}

/// R2 BDExc_n + (R3 D + R4 D^2) B_n + (R5 D + R6 D^2) B_{n+1} + R7 D^2 B_{n+2}.
inline Poly s_term(unsigned n, const Poly& bdexc_n) {
    const auto& R = jump_tables().R;
    const Poly b0 = eulerian(EulerianType::B, n);
    const Poly b1 = eulerian(EulerianType::B, n + 1);
    const Poly b2 = eulerian(EulerianType::B, n + 2);
    return detail::over_st(R[1] * bdexc_n + R[2] * apply_D(b0) + R[3] * apply_D(b0, 2) + R[4] * apply_D(b1) +
                           R[5] * apply_D(b1, 2) + R[6] * apply_D(b2, 2));
}

/// DExc_{n+4} = R1 DExc_n + S_{n+4}.
inline Poly dexc_jump4_from(unsigned n, const Poly& dexc_n, const Poly& bdexc_n) {
    return detail::over_st(jump_tables().R[0] * dexc_n + s_term(n, bdexc_n));
}

/// DExc_{n+4}^+- = ([R1 +- (s-t)^4] DExc_n^+ + [R1 -+ (s-t)^4] DExc_n^- + S_{n+4}) / 2.
inline Poly dexc_signed_jump4_from(unsigned n, const Poly& plus, const Poly& minus, ClassFilter cls) {
    detail::require_split(cls);
    const Poly& R1 = jump_tables().R[0];
    const Poly q = detail::s_minus_t_pow(4);
    const Poly bdexc = eulerian(EulerianType::B, n) - plus - minus;
    const Poly& same = cls == ClassFilter::plus ? plus : minus;
    const Poly& other = cls == ClassFilter::plus ? minus : plus;
    return detail::over_st(halve((R1 + q) * same + (R1 - q) * other + s_term(n, bdexc)));
}

/// DExc_n^+- for even n >= 4 by jumping from the tabulated n = 4 or n = 6 values.
inline Poly dexc_jump4(unsigned n, ClassFilter cls) {
    detail::require_split(cls);
    if (n < 4 || n % 2 == 1) throw MissingBase("the dexc jump chain covers even n >= 4");
    const unsigned base = n % 4 == 0 ? 4 : 6;
    auto [plus, minus] = *tabulated_base(FamilyName::dexc, base);
    for (unsigned k = base; k < n; k += 4) {
        Poly next_plus = dexc_signed_jump4_from(k, plus, minus, ClassFilter::plus);
        Poly next_minus = dexc_signed_jump4_from(k, plus, minus, ClassFilter::minus);
        plus = std::move(next_plus);
        minus = std::move(next_minus);
    }
    return cls == ClassFilter::plus ? plus : minus;
}

// ---------------------------------------------------------------------------
// Conjugacy classes and derangements

/// Number of set partitions of [n] whose block sizes are the parts of lambda.
inline Integer set_partition_count(const CycleType& lambda) {
    Integer num = 1;
    for (unsigned k = 2; k <= lambda.n(); ++k) num *= k;
    Integer den = 1;
    std::map<unsigned, unsigned> mult;
    for (unsigned part : lambda.parts()) {
        for (unsigned k = 2; k <= part; ++k) den *= k;
        ++mult[part];
    }
    for (const auto& [part, m] : mult)
        for (unsigned k = 2; k <= m; ++k) den *= k;
    return num / den;
}

/// set_partition_count(lambda) * prod_{j >= 2} (t A_{j-1}(t))^{m_j}, over {t}.
inline Poly conj_exc_closed(const CycleType& lambda) {
    const std::vector<std::string> tv{"t"};
    Poly out = Poly::constant(set_partition_count(lambda), tv);
    for (unsigned part : lambda.parts()) {
        if (part < 2) continue;
        out *= var_t() * eulerian_t(part - 1);
    }
    return out.extended_to(tv);
}

/// Sum of conj_exc_closed over the cycle types with exactly `fixed` fixed points
/// (no fixed points when absent) and the requested sign.
inline Poly derangement_closed(unsigned n, ClassFilter cls, std::optional<unsigned> fixed = std::nullopt) {
    if (fixed && *fixed > n) throw InvalidSpec("more fixed points than letters");
    PartitionFilter filter;
    filter.fixed_points = fixed;
    filter.no_part_1 = !fixed;
    filter.sign = cls == ClassFilter::plus ? std::optional<int>(1)
                  : cls == ClassFilter::minus ? std::optional<int>(-1)
                                              : std::nullopt;
    Poly out(std::vector<std::string>{"t"});
    for (const CycleType& lambda : partitions(n, filter)) out += conj_exc_closed(lambda);
    return out;
}

// ---------------------------------------------------------------------------
// Two-term splits of the non-palindromic classes

struct TwoTermSplit {
    Poly w1, w2;  // univariate in t; w1 + w2 is the target
    GammaExpansion g1, g2;
};

namespace detail {

inline Poly at_s_one(const Poly& f) { return substitute_one(over_st(f), "s"); }

inline TwoTermSplit assemble(const Poly& w1, const Poly& w2) {
    TwoTermSplit out{w1.extended_to({"t"}), w2.extended_to({"t"}), {}, {}};
    out.g1 = gamma_decompose(out.w1, GammaMode::univariate);
    out.g2 = gamma_decompose(out.w2, GammaMode::univariate);
    return out;
}

inline Poly recompose_t(const GammaExpansion& g) { return gamma_recompose(g).extended_to({"t"}); }

}  // namespace detail

/// Writes AExc_n^+-(t) (even n >= 4), BExc_n^+-(t) (odd n >= 3) or DExc_n^+-(t)
/// (odd n >= 3) as w1 + w2 with gamma-positive parts whose centers differ by one.
inline TwoTermSplit two_term_split(FamilyName family, unsigned n, ClassFilter cls) {
    detail::require_split(cls);
    const Poly t = Poly::variable("t");
    const Poly st = detail::over_st(var_s() * var_t());
    switch (family) {
    case FamilyName::aexc: {
        if (n < 4 || n % 2) throw InvalidSpec("aexc two-term split needs even n >= 4");
        const Poly same = detail::at_s_one(half_sum_closed(HalfSumFamily::aexc, n - 1, cls));
        const Poly other =
            detail::at_s_one(half_sum_closed(HalfSumFamily::aexc, n - 1, detail::opposite(cls)));
        const Poly p = detail::at_s_one(halve(st * apply_D(eulerian(EulerianType::A, n - 1))));
        const auto [p1, p2] = split_odd_length(gamma_decompose(p.extended_to({"t"}), GammaMode::univariate));
        return detail::assemble(same + detail::recompose_t(p1), t * other + detail::recompose_t(p2));
    }
    case FamilyName::bexc: {
        if (n < 3 || n % 2 == 0) throw InvalidSpec("bexc two-term split needs odd n >= 3");
        const Poly same = detail::at_s_one(half_sum_closed(HalfSumFamily::bexc, n - 1, cls));
        const Poly other =
            detail::at_s_one(half_sum_closed(HalfSumFamily::bexc, n - 1, detail::opposite(cls)));
        const Poly p = detail::at_s_one(st * apply_D(eulerian(EulerianType::B, n - 1)));
        const auto [p1, p2] = split_odd_length(gamma_decompose(p.extended_to({"t"}), GammaMode::univariate));
        return detail::assemble(same + detail::recompose_t(p1), t * other + detail::recompose_t(p2));
    }
    case FamilyName::dexc: {
        if (n < 3 || n % 2 == 0) throw InvalidSpec("dexc two-term split needs odd n >= 3");
        const Poly same = detail::at_s_one(dexc_step(n - 1, cls));
        const Poly bd = detail::at_s_one(dexc_pair_step(n - 1).bdexc);
        const Poly p = detail::at_s_one(st * apply_D(eulerian(EulerianType::B, n - 1)));
        const auto [p1, p2] = split_odd_length(gamma_decompose(p.extended_to({"t"}), GammaMode::univariate));
        return detail::assemble(same + halve(detail::recompose_t(p1)),
                                halve(t * bd + detail::recompose_t(p2)));
    }
    default:
        throw UnsupportedClass("no two-term split for this family");
    }
}

// ---------------------------------------------------------------------------
// Closed-form dispatch for FamilySpec

inline bool has_closed_form(const FamilySpec& spec) {
    return spec.family != FamilyName::q_refined;
}

/// Closed-form value of a family; matches family_poly exactly.
inline Poly closed_family_poly(const FamilySpec& spec) {
    if (spec.cls != ClassFilter::all && !info(spec.family).splits)
        throw UnsupportedClass(std::string(info(spec.family).name) + " has no plus/minus split");
    const unsigned n = spec.n;
    switch (spec.family) {
    case FamilyName::a_des:
        return eulerian(EulerianType::A, n);
    case FamilyName::aexc:
        if (n == 1) {
            if (spec.cls == ClassFilter::minus) return Poly(detail::st_vars());
            return Poly::constant(1, detail::st_vars());
        }
        return half_sum_closed(HalfSumFamily::aexc, n, spec.cls);
    case FamilyName::aderexc:
        return derangement_closed(n, spec.cls);
    case FamilyName::aderexc_fixed:
        return derangement_closed(n, spec.cls, spec.fixed);
    case FamilyName::conj_exc:
        if (!spec.lambda) throw InvalidSpec("conj_exc needs a cycle type");
        if (spec.lambda->n() != n) throw InvalidSpec("cycle type is not a partition of n");
        return conj_exc_closed(*spec.lambda);
    case FamilyName::b_des:
    case FamilyName::bexc:
        return half_sum_closed(HalfSumFamily::bexc, n, spec.cls);
    case FamilyName::dexc:
        if (n < 2) throw InvalidSpec("dexc closed form needs n >= 2");
        return dexc_step(n, spec.cls);
    case FamilyName::bdexc:
        if (n < 2) throw InvalidSpec("bdexc closed form needs n >= 2");
        return dexc_pair_step(n).bdexc;
    case FamilyName::sgn_aexc:
        return sgn_aexc_closed(n);
    case FamilyName::sgn_bexc:
        return sgn_bexc_closed(n);
    case FamilyName::sgn_dexc:
        return sgn_dexc_closed(n);
    case FamilyName::sgnb_des_u:
        return pow(var_s() - var_t(), n) * pow(var_u(), n);
    case FamilyName::q_refined:
        break;
    }
    throw UnsupportedClass(std::string(info(spec.family).name) + " has no closed form");
}

}  // namespace excgamma

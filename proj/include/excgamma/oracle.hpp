#pragma once

// Brute-force generating functions: sum a monomial weight over every element
// of a GroupSpec. This is the ground truth the closed forms are checked against.

#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "excgamma/groups.hpp"
#include "excgamma/poly.hpp"

namespace excgamma {

enum class Stat {
    // S_n
    exc, nexc, des, asc, inv, cyc, fixed_points,
    // any window
    pos_n,
    // signed windows
    exc_b, nexc_b, wkexc_b, des_b, asc_b, inv_b, negs,
    exc_d, nexc_d, wkexc_d, inv_d,
};

inline const char* name(Stat s) {
    switch (s) {
    case Stat::exc: return "exc";
    case Stat::nexc: return "nexc";
    case Stat::des: return "des";
    case Stat::asc: return "asc";
    case Stat::inv: return "inv";
    case Stat::cyc: return "cyc";
    case Stat::fixed_points: return "fixed_points";
    case Stat::pos_n: return "pos_n";
    case Stat::exc_b: return "exc_B";
    case Stat::nexc_b: return "nexc_B";
    case Stat::wkexc_b: return "wkexc_B";
    case Stat::des_b: return "des_B";
    case Stat::asc_b: return "asc_B";
    case Stat::inv_b: return "inv_B";
    case Stat::negs: return "negs";
    case Stat::exc_d: return "exc_D";
    case Stat::nexc_d: return "nexc_D";
    case Stat::wkexc_d: return "wkexc_D";
    case Stat::inv_d: return "inv_D";
    }
    return "?";
}

inline bool defined_on(Stat s, GroupKind kind) {
    const bool is_signed = kind != GroupKind::symmetric;
    switch (s) {
    case Stat::exc: case Stat::nexc: case Stat::des: case Stat::asc:
    case Stat::inv: case Stat::cyc: case Stat::fixed_points:
        return !is_signed;
    case Stat::pos_n:
        return true;
    case Stat::exc_d: case Stat::nexc_d: case Stat::wkexc_d: case Stat::inv_d:
        return kind == GroupKind::type_d || kind == GroupKind::b_minus_d ||
               kind == GroupKind::hyperoctahedral;
    default:
        return is_signed;
    }
}

inline unsigned evaluate(Stat s, WindowView w) {
    const auto n = static_cast<unsigned>(w.size());
    switch (s) {
    case Stat::exc: return stat::exc(w);
    case Stat::nexc: return n - stat::exc(w);
    case Stat::des: return stat::des(w);
    case Stat::asc: return n == 0 ? 0 : n - 1 - stat::des(w);
    case Stat::inv: return stat::inv(w);
    case Stat::cyc: return stat::cyc(w);
    case Stat::fixed_points: return stat::fixed_points(w);
    case Stat::pos_n: return stat::pos_max(w);
    case Stat::exc_b: case Stat::exc_d: return stat::exc_b(w);
    case Stat::nexc_b: case Stat::nexc_d: return n - stat::exc_b(w);
    case Stat::wkexc_b: case Stat::wkexc_d: return stat::wkexc_b(w);
    case Stat::des_b: return stat::des_b(w);
    case Stat::asc_b: return n - stat::des_b(w);
    case Stat::inv_b: return stat::inv_b(w);
    case Stat::negs: return stat::negs(w);
    case Stat::inv_d: return stat::inv_d(w);
    }
    return 0;
}

/// var^(stat + offset); the offset is how s^{nexc-1} is expressed.
struct VarWeight {
    std::string var;
    Stat stat;
    int offset = 0;
};

/// Monomial weight prod var^(stat+offset), optionally times (-1)^{sign_stat}.
struct WeightSpec {
    std::vector<VarWeight> vars;
    std::optional<Stat> sign;
};

struct OracleOptions {
    EnumerationOptions enumeration;
    unsigned jobs = 1;
};

namespace detail {

inline void validate(const GroupSpec& g, const WeightSpec& w) {
    for (const auto& v : w.vars)
        if (!defined_on(v.stat, g.kind))
            throw UndefinedStatistic(std::string(name(v.stat)) + " is not defined on this group");
    if (w.sign && !defined_on(*w.sign, g.kind))
        throw UndefinedStatistic(std::string(name(*w.sign)) + " is not defined on this group");
}

using Tally = std::map<std::vector<unsigned>, std::int64_t>;

struct Accumulator {
    const WeightSpec& weight;
    Tally tally;
    std::vector<unsigned> key;

    explicit Accumulator(const WeightSpec& w) : weight(w), key(w.vars.size()) {}

    void operator()(WindowView w) {
        for (std::size_t i = 0; i < weight.vars.size(); ++i) {
            const long e = static_cast<long>(evaluate(weight.vars[i].stat, w)) + weight.vars[i].offset;
            if (e < 0)
                throw InvalidSpec("weight exponent for '" + weight.vars[i].var + "' is negative at " +
                                  to_string(w));
            key[i] = static_cast<unsigned>(e);
        }
        const bool negative = weight.sign && evaluate(*weight.sign, w) % 2 != 0;
        tally[key] += negative ? -1 : 1;
    }
};

inline Poly to_poly(const WeightSpec& weight, const Tally& tally) {
    std::vector<std::string> vars;
    for (const auto& v : weight.vars) vars.push_back(v.var);
    std::vector<std::pair<Exponents, Integer>> terms;
    terms.reserve(tally.size());
    for (const auto& [k, c] : tally)
        if (c != 0) terms.emplace_back(k, Integer(c));
    return Poly::from_terms(vars, terms);
}

}  // namespace detail

/// Exact sum of the weight monomial over the group.
inline Poly dist_poly(const GroupSpec& group, const WeightSpec& weight, const OracleOptions& opts = {}) {
    detail::validate(group, weight);
    if (opts.jobs <= 1 || group.n < 2) {
        detail::Accumulator acc(weight);
        for_each_element(group, acc, opts.enumeration);
        return detail::to_poly(weight, acc.tally);
    }
    // Disjoint ranges by first window entry, merged by addition.
    detail::check_budget(group, opts.enumeration);
    const std::vector<int> keys = partition_keys(group);
    std::vector<Poly> parts(keys.size());
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(opts.jobs);
    for (unsigned j = 0; j < opts.jobs; ++j) {
        workers.emplace_back([&, j] {
            try {
                for (std::size_t k = j; k < keys.size(); k += opts.jobs) {
                    detail::Accumulator acc(weight);
                    for_each_element_in_partition(group, keys[k], acc, opts.enumeration);
                    parts[k] = detail::to_poly(weight, acc.tally);
                }
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<std::string> vars;
    for (const auto& v : weight.vars) vars.push_back(v.var);
    Poly total(vars);
    for (const auto& p : parts) total += p;
    return total;
}

// ---------------------------------------------------------------------------
// Named families

enum class FamilyName {
    a_des, aexc, aderexc, aderexc_fixed, conj_exc,
    b_des, bexc, dexc, bdexc,
    sgn_aexc, sgn_bexc, sgn_dexc, sgnb_des_u,
    q_refined,
};

enum class ClassFilter { all, plus, minus };

inline Parity to_parity(ClassFilter c) {
    switch (c) {
    case ClassFilter::plus: return Parity::even;
    case ClassFilter::minus: return Parity::odd;
    default: return Parity::any;
    }
}

inline const char* name(ClassFilter c) {
    switch (c) {
    case ClassFilter::plus: return "plus";
    case ClassFilter::minus: return "minus";
    default: return "all";
    }
}

struct FamilyInfo {
    FamilyName family;
    const char* name;
    bool splits;  // plus/minus classes defined
};

inline const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {FamilyName::a_des, "a_des", false},
        {FamilyName::aexc, "aexc", true},
        {FamilyName::aderexc, "aderexc", true},
        {FamilyName::aderexc_fixed, "aderexc_fixed", true},
        {FamilyName::conj_exc, "conj_exc", false},
        {FamilyName::b_des, "b_des", true},
        {FamilyName::bexc, "bexc", true},
        {FamilyName::dexc, "dexc", true},
        {FamilyName::bdexc, "bdexc", false},
        {FamilyName::sgn_aexc, "sgn_aexc", false},
        {FamilyName::sgn_bexc, "sgn_bexc", false},
        {FamilyName::sgn_dexc, "sgn_dexc", false},
        {FamilyName::sgnb_des_u, "sgnb_des_u", false},
        {FamilyName::q_refined, "q_refined", true},
    };
    return table;
}

inline const FamilyInfo& info(FamilyName f) {
    for (const auto& i : family_table())
        if (i.family == f) return i;
    throw InvalidSpec("unknown family");
}

inline FamilyName parse_family(const std::string& text) {
    for (const auto& i : family_table())
        if (text == i.name) return i.family;
    throw ParseError("unknown family '" + text + "'");
}

/// One polynomial family at one n, e.g. (aexc, 5, plus).
struct FamilySpec {
    FamilyName family = FamilyName::aexc;
    unsigned n = 0;
    ClassFilter cls = ClassFilter::all;
    unsigned fixed = 0;                // aderexc_fixed: number of fixed points
    std::optional<CycleType> lambda;   // conj_exc
    Stat q_stat = Stat::inv;           // q_refined: inv or cyc
};

/// The (GroupSpec, WeightSpec) pair each family sums.
inline std::pair<GroupSpec, WeightSpec> canonical_pairing(const FamilySpec& spec) {
    if (spec.cls != ClassFilter::all && !info(spec.family).splits)
        throw UnsupportedClass(std::string(info(spec.family).name) + " has no plus/minus split");
    const Parity parity = to_parity(spec.cls);
    const unsigned n = spec.n;
    const VarWeight t_exc{"t", Stat::exc}, s_nexc1{"s", Stat::nexc, -1};
    const VarWeight t_excb{"t", Stat::exc_b}, s_nexcb{"s", Stat::nexc_b};
    const VarWeight t_excd{"t", Stat::exc_d}, s_nexcd{"s", Stat::nexc_d};
    switch (spec.family) {
    case FamilyName::a_des:
        return {GroupSpec::symmetric(n), {{{"t", Stat::des}, {"s", Stat::asc}}}};
    case FamilyName::aexc:
        if (n == 0) throw InvalidSpec("aexc needs n >= 1");
        return {GroupSpec::symmetric(n, parity), {{t_exc, s_nexc1}}};
    case FamilyName::aderexc:
        return {GroupSpec::derangements(n, parity), {{t_exc}}};
    case FamilyName::aderexc_fixed:
        return {GroupSpec::with_fixed_points(n, spec.fixed, parity), {{t_exc}}};
    case FamilyName::conj_exc: {
        if (!spec.lambda) throw InvalidSpec("conj_exc needs a cycle type");
        if (spec.lambda->n() != n) throw InvalidSpec("cycle type is not a partition of n");
        return {GroupSpec::conjugacy_class(*spec.lambda), {{t_exc}}};
    }
    case FamilyName::b_des:
        return {GroupSpec::type_b(n, parity), {{{"t", Stat::des_b}, {"s", Stat::asc_b}}}};
    case FamilyName::bexc:
        return {GroupSpec::type_b(n, parity), {{t_excb, s_nexcb}}};
    case FamilyName::dexc:
        return {GroupSpec::type_d(n, parity), {{t_excd, s_nexcd}}};
    case FamilyName::bdexc:
        return {GroupSpec::b_minus_d(n), {{t_excd, s_nexcd}}};
    case FamilyName::sgn_aexc:
        if (n == 0) throw InvalidSpec("sgn_aexc needs n >= 1");
        return {GroupSpec::symmetric(n), {{t_exc, s_nexc1}, Stat::inv}};
    case FamilyName::sgn_bexc:
        return {GroupSpec::type_b(n), {{t_excb, s_nexcb}, Stat::inv_b}};
    case FamilyName::sgn_dexc:
        return {GroupSpec::type_d(n), {{t_excd, s_nexcd}, Stat::inv_d}};
    case FamilyName::sgnb_des_u:
        return {GroupSpec::type_b(n),
                {{{"t", Stat::des_b}, {"s", Stat::asc_b}, {"u", Stat::pos_n}}, Stat::inv_b}};
    case FamilyName::q_refined:
        if (spec.q_stat != Stat::inv && spec.q_stat != Stat::cyc)
            throw InvalidSpec("q refinement supports inv and cyc");
        return {GroupSpec::derangements(n, parity), {{t_exc, {"q", spec.q_stat}}}};
    }
    throw InvalidSpec("unknown family");
}

inline Poly family_poly(const FamilySpec& spec, const OracleOptions& opts = {}) {
    const auto [group, weight] = canonical_pairing(spec);
    return dist_poly(group, weight, opts);
}

enum class MaxPosition { any, at_end, not_at_end };

/// Signed trivariate descent sum over B on the letters a_1 < ... < a_n:
/// sum (-1)^{inv_B} t^{des_B} s^{asc_B} u^{pos_{a_n}}.
inline Poly sgnb_des_u(unsigned n, std::vector<int> letters = {}, MaxPosition filter = MaxPosition::any,
                       const EnumerationOptions& opts = {}) {
    if (letters.empty())
        for (unsigned i = 1; i <= n; ++i) letters.push_back(static_cast<int>(i));
    if (letters.size() != n) throw InvalidSpec("expected " + std::to_string(n) + " letters");
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] <= 0) throw NonIncreasingLetters("letters must be positive");
        if (i > 0 && letters[i] <= letters[i - 1])
            throw NonIncreasingLetters("letters must be strictly increasing");
    }
    detail::Tally tally;
    Window mapped(n);
    std::vector<unsigned> key(3);
    for_each_element(GroupSpec::type_b(n), [&](WindowView w) {
        unsigned pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int a = letters[static_cast<std::size_t>(std::abs(w[i])) - 1];
            mapped[i] = w[i] < 0 ? -a : a;
            if (a == letters.back()) pos = static_cast<unsigned>(i + 1);
        }
        if (filter == MaxPosition::at_end && pos != n) return;
        if (filter == MaxPosition::not_at_end && pos == n) return;
        const unsigned des = stat::des_b(mapped);
        key = {des, n - des, pos};
        tally[key] += stat::inv_b(mapped) % 2 ? -1 : 1;
    }, opts);
    WeightSpec layout{{{"t", Stat::des_b}, {"s", Stat::asc_b}, {"u", Stat::pos_n}}};
    return detail::to_poly(layout, tally);
}

/// sum over SD_n^class of q^{stat} t^{exc}.
inline Poly q_refined(unsigned n, Stat stat, ClassFilter cls, const OracleOptions& opts = {}) {
    FamilySpec spec{FamilyName::q_refined, n, cls};
    spec.q_stat = stat;
    return family_poly(spec, opts);
}

}  // namespace excgamma

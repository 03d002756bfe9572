#pragma once

// Elements of S_n, B_n and D_n in window notation, their statistics, cycle
// types, and exhaustive enumeration of the subsets generating functions sum over.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "excgamma/errors.hpp"
#include "excgamma/poly.hpp"

namespace excgamma {

using Window = std::vector<int>;
using WindowView = std::span<const int>;

/// Parses "3,1,2" or "-2,1". Empty input is the empty window.
inline Window parse_window(std::string_view text) {
    Window out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    std::size_t pos = 0;
    std::size_t index = 1;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string token(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - pos));
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token.empty())
            throw ParseError("position " + std::to_string(index) + ": empty entry");
        char* end = nullptr;
        const long value = std::strtol(token.c_str(), &end, 10);
        if (*end != '\0')
            throw ParseError("position " + std::to_string(index) + ": '" + token +
                             "' is not an integer");
        out.push_back(static_cast<int>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        ++index;
    }
    return out;
}

namespace detail {

inline void validate_window(WindowView w, bool allow_signs) {
    const std::size_t n = w.size();
    std::vector<std::size_t> seen(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = w[i];
        const std::string where = "position " + std::to_string(i + 1) + ": ";
        if (v == 0) throw ParseError(where + "0 is not a valid entry");
        if (v < 0 && !allow_signs) throw ParseError(where + "negative entry in an unsigned permutation");
        const auto a = static_cast<std::size_t>(std::abs(v));
        if (a > n)
            throw ParseError(where + "|" + std::to_string(v) + "| exceeds n=" + std::to_string(n));
        if (seen[a] != 0)
            throw ParseError(where + "value " + std::to_string(a) + " already used at position " +
                             std::to_string(seen[a]));
        seen[a] = i + 1;
    }
}

}  // namespace detail

/// A permutation of [n] in one-line notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(Window window) : window_(std::move(window)) {
        detail::validate_window(window_, false);
    }
    static Perm identity(std::size_t n) {
        Window w(n);
        std::iota(w.begin(), w.end(), 1);
        return Perm(std::move(w));
    }
    static Perm parse(std::string_view text) { return Perm(parse_window(text)); }

    std::size_t size() const { return window_.size(); }
    /// pi(i) for 1 <= i <= n.
    int operator()(std::size_t i) const { return window_[i - 1]; }
    WindowView window() const { return window_; }

    Perm inverse() const {
        Window inv(window_.size());
        for (std::size_t i = 0; i < window_.size(); ++i) inv[window_[i] - 1] = static_cast<int>(i + 1);
        return Perm(std::move(inv));
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    Window window_;
};

/// A signed permutation; sigma(-i) = -sigma(i) is implicit.
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(Window window) : window_(std::move(window)) {
        detail::validate_window(window_, true);
    }
    static SignedPerm parse(std::string_view text) { return SignedPerm(parse_window(text)); }

    std::size_t size() const { return window_.size(); }
    int operator()(std::size_t i) const { return window_[i - 1]; }
    WindowView window() const { return window_; }
    std::size_t negatives() const {
        return static_cast<std::size_t>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
    }
    bool in_type_d() const { return negatives() % 2 == 0; }

    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

private:
    Window window_;
};

inline std::string to_string(WindowView w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}
inline std::string to_string(const Perm& p) { return to_string(p.window()); }
inline std::string to_string(const SignedPerm& p) { return to_string(p.window()); }

// ---------------------------------------------------------------------------
// Statistics on raw windows. All positions are 1-based in the definitions.

namespace stat {

inline unsigned exc(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += w[i] > static_cast<int>(i + 1);
    return c;
}

inline unsigned des(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) c += w[i] > w[i + 1];
    return c;
}

inline unsigned inv(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

inline unsigned fixed_points(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += w[i] == static_cast<int>(i + 1);
    return c;
}

inline unsigned cyc(WindowView w) {
    std::vector<char> seen(w.size(), 0);
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(std::abs(w[j])) - 1) seen[j] = 1;
    }
    return c;
}

/// Position (1-based) of the entry with largest absolute value; 0 for n = 0.
inline unsigned pos_max(WindowView w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (static_cast<std::size_t>(std::abs(w[i])) == w.size()) return static_cast<unsigned>(i + 1);
    return 0;
}

inline unsigned negs(WindowView w) {
    unsigned c = 0;
    for (int v : w) c += v < 0;
    return c;
}

/// #{i : sigma_{|sigma_i|} > sigma_i} + #{i : sigma_i = -i}.
inline unsigned exc_b(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int v = w[i];
        c += w[static_cast<std::size_t>(std::abs(v)) - 1] > v;
        c += v == -static_cast<int>(i + 1);
    }
    return c;
}

/// #{i : sigma_{|sigma_i|} > sigma_i} + #{i : sigma_i = i}.
inline unsigned wkexc_b(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int v = w[i];
        c += w[static_cast<std::size_t>(std::abs(v)) - 1] > v;
        c += v == static_cast<int>(i + 1);
    }
    return c;
}

/// Descents over positions 0..n-1 with sigma_0 = 0.
inline unsigned des_b(WindowView w) {
    if (w.empty()) return 0;
    return (0 > w[0]) + des(w);
}

inline unsigned neg_pairs(WindowView w) {
    unsigned c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += -w[i] > w[j];
    return c;
}

/// Pairwise type-B length: inv + #{i<j : -sigma_i > sigma_j} + |Negs|.
inline unsigned inv_b(WindowView w) { return inv(w) + neg_pairs(w) + negs(w); }

/// Alternative type-B length inv + sum of |negative entries|; compared only for parity.
inline unsigned inv_b_negsum(WindowView w) {
    unsigned c = inv(w);
    for (int v : w)
        if (v < 0) c += static_cast<unsigned>(-v);
    return c;
}

inline unsigned inv_d(WindowView w) { return inv(w) + neg_pairs(w); }

}  // namespace stat

struct StatsA {
    unsigned exc, nexc, des, asc, inv, cyc, fixed_points;
    int sign;
    unsigned pos_n;
    friend bool operator==(const StatsA&, const StatsA&) = default;
};

inline StatsA stats_a(const Perm& p) {
    const auto w = p.window();
    const unsigned n = static_cast<unsigned>(w.size());
    StatsA s{};
    s.exc = stat::exc(w);
    s.nexc = n - s.exc;
    s.des = stat::des(w);
    s.asc = n == 0 ? 0 : n - 1 - s.des;
    s.inv = stat::inv(w);
    s.cyc = stat::cyc(w);
    s.fixed_points = stat::fixed_points(w);
    s.sign = s.inv % 2 ? -1 : 1;
    s.pos_n = stat::pos_max(w);
    return s;
}

struct StatsB {
    unsigned exc, nexc, wkexc, des, asc, inv, negs;
    int sign;
    friend bool operator==(const StatsB&, const StatsB&) = default;
};

inline StatsB stats_b(const SignedPerm& p) {
    const auto w = p.window();
    const unsigned n = static_cast<unsigned>(w.size());
    StatsB s{};
    s.exc = stat::exc_b(w);
    s.nexc = n - s.exc;
    s.wkexc = stat::wkexc_b(w);
    s.des = stat::des_b(w);
    s.asc = n - s.des;
    s.inv = stat::inv_b(w);
    s.negs = stat::negs(w);
    s.sign = s.inv % 2 ? -1 : 1;
    return s;
}

struct StatsD {
    unsigned exc, nexc, wkexc, inv;
    int sign;
    friend bool operator==(const StatsD&, const StatsD&) = default;
};

inline StatsD stats_d(const SignedPerm& p) {
    const auto w = p.window();
    const unsigned n = static_cast<unsigned>(w.size());
    StatsD s{};
    s.exc = stat::exc_b(w);
    s.nexc = n - s.exc;
    s.wkexc = stat::wkexc_b(w);
    s.inv = stat::inv_d(w);
    s.sign = s.inv % 2 ? -1 : 1;
    return s;
}

// ---------------------------------------------------------------------------
// Cycle types

/// An integer partition used as a cycle type; parts kept weakly decreasing.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (unsigned p : parts_)
            if (p == 0) throw InvalidSpec("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    /// Parses "3,2,1"; the empty string is the empty partition.
    static CycleType parse(std::string_view text) {
        std::vector<unsigned> parts;
        for (int v : parse_window(text)) {
            if (v <= 0) throw ParseError("partition parts must be positive");
            parts.push_back(static_cast<unsigned>(v));
        }
        return CycleType(std::move(parts));
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned n() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }

    /// m_i: number of parts equal to i.
    unsigned multiplicity(unsigned i) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
    }
    unsigned fixed_points() const { return multiplicity(1); }
    unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Sign of every permutation in the class: (-1)^{n - number of cycles}.
    int sign() const { return (n() - length()) % 2 ? -1 : 1; }

    /// |C_lambda| = n! / prod_i (i^{m_i} m_i!).
    Integer class_size() const {
        Integer num = 1;
        for (unsigned k = 2; k <= n(); ++k) num *= k;
        Integer den = 1;
        for (unsigned i = 1; i <= largest(); ++i) {
            const unsigned m = multiplicity(i);
            for (unsigned j = 1; j <= m; ++j) den *= Integer(i) * j;
        }
        return num / den;
    }

    /// Exponential notation, e.g. "2^2" or "3^1 1^1".
    std::string to_string() const {
        if (parts_.empty()) return "()";
        std::string out;
        for (unsigned i = largest(); i >= 1; --i) {
            const unsigned m = multiplicity(i);
            if (m == 0) continue;
            if (!out.empty()) out += ' ';
            out += std::to_string(i) + "^" + std::to_string(m);
        }
        return out;
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::vector<unsigned> parts_;
};

inline CycleType cycle_type(WindowView w) {
    std::vector<char> seen(w.size(), 0);
    std::vector<unsigned> parts;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j]) - 1) {
            seen[j] = 1;
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts));
}

inline CycleType cycle_type(const Perm& p) { return cycle_type(p.window()); }

struct PartitionFilter {
    bool no_part_1 = false;
    std::optional<unsigned> fixed_points;  // m_1 = i
    std::optional<int> sign;

    bool accepts(const CycleType& c) const {
        if (no_part_1 && c.fixed_points() != 0) return false;
        if (fixed_points && c.fixed_points() != *fixed_points) return false;
        if (sign && c.sign() != *sign) return false;
        return true;
    }
};

/// Partitions of n in descending lexicographic order, filtered.
inline std::vector<CycleType> partitions(unsigned n, const PartitionFilter& filter = {}) {
    std::vector<CycleType> out;
    std::vector<unsigned> current;
    auto recurse = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            CycleType c(current);
            if (filter.accepts(c)) out.push_back(std::move(c));
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class GroupKind { symmetric, hyperoctahedral, type_d, b_minus_d };
enum class Parity { any, even, odd };

/// One of the summation sets: S_n and its filtered subsets, B_n, D_n, B_n - D_n.
/// Parity is inv for S_n, inv_B for B_n and inv_D for D_n.
struct GroupSpec {
    GroupKind kind = GroupKind::symmetric;
    unsigned n = 0;
    Parity parity = Parity::any;
    std::optional<unsigned> pos_n;         // symmetric only
    std::optional<unsigned> fixed_points;  // symmetric only; 0 = derangements
    std::optional<CycleType> cycle_type;   // symmetric only

    static GroupSpec symmetric(unsigned n, Parity p = Parity::any) { return {GroupKind::symmetric, n, p}; }
    static GroupSpec alternating(unsigned n) { return symmetric(n, Parity::even); }
    static GroupSpec with_pos_n(unsigned n, unsigned r, Parity p = Parity::any) {
        GroupSpec g = symmetric(n, p);
        g.pos_n = r;
        return g;
    }
    static GroupSpec derangements(unsigned n, Parity p = Parity::any) { return with_fixed_points(n, 0, p); }
    static GroupSpec with_fixed_points(unsigned n, unsigned i, Parity p = Parity::any) {
        GroupSpec g = symmetric(n, p);
        g.fixed_points = i;
        return g;
    }
    static GroupSpec conjugacy_class(const CycleType& lambda) {
        GroupSpec g = symmetric(lambda.n());
        g.cycle_type = lambda;
        return g;
    }
    static GroupSpec type_b(unsigned n, Parity p = Parity::any) { return {GroupKind::hyperoctahedral, n, p}; }
    static GroupSpec type_d(unsigned n, Parity p = Parity::any) { return {GroupKind::type_d, n, p}; }
    static GroupSpec b_minus_d(unsigned n) { return {GroupKind::b_minus_d, n, Parity::any}; }

    bool is_signed() const { return kind != GroupKind::symmetric; }
};

struct EnumerationOptions {
    /// Cap on the number of windows visited before filtering.
    double budget = 1e9;
};

inline double search_space_size(const GroupSpec& g) {
    double size = 1;
    for (unsigned k = 2; k <= g.n; ++k) size *= k;
    if (g.is_signed()) size *= std::pow(2.0, g.n);
    return size;
}

inline void validate(const GroupSpec& g) {
    if (g.is_signed() && (g.pos_n || g.fixed_points || g.cycle_type))
        throw InvalidSpec("pos_n, fixed-point and cycle-type filters apply to S_n only");
    if (g.kind == GroupKind::b_minus_d && g.parity != Parity::any)
        throw InvalidSpec("B_n - D_n has no parity split");
    if (g.pos_n && (*g.pos_n < 1 || *g.pos_n > g.n))
        throw InvalidSpec("pos_n = " + std::to_string(*g.pos_n) + " outside 1.." + std::to_string(g.n));
    if (g.fixed_points && *g.fixed_points > g.n)
        throw InvalidSpec("more fixed points than letters");
    if (g.cycle_type && g.cycle_type->n() != g.n)
        throw InvalidSpec("cycle type is not a partition of n");
}

namespace detail {

inline bool admits(const GroupSpec& g, WindowView w) {
    switch (g.kind) {
    case GroupKind::symmetric: {
        if (g.pos_n && stat::pos_max(w) != *g.pos_n) return false;
        if (g.fixed_points && stat::fixed_points(w) != *g.fixed_points) return false;
        if (g.cycle_type && cycle_type(w) != *g.cycle_type) return false;
        if (g.parity != Parity::any && (stat::inv(w) % 2 == 0) != (g.parity == Parity::even)) return false;
        return true;
    }
    case GroupKind::hyperoctahedral:
        return g.parity == Parity::any || (stat::inv_b(w) % 2 == 0) == (g.parity == Parity::even);
    case GroupKind::type_d:
        if (stat::negs(w) % 2 != 0) return false;
        return g.parity == Parity::any || (stat::inv_d(w) % 2 == 0) == (g.parity == Parity::even);
    case GroupKind::b_minus_d:
        return stat::negs(w) % 2 != 0;
    }
    return false;
}

// Lexicographic generation of windows with the first entry optionally fixed.
template <class Visitor>
void generate(const GroupSpec& g, std::optional<int> first, Visitor& visit) {
    const int n = static_cast<int>(g.n);
    Window w(g.n);
    std::vector<char> used(g.n + 1, 0);
    std::vector<int> candidates;
    for (int v = g.is_signed() ? -n : 1; v <= n; ++v)
        if (v != 0) candidates.push_back(v);
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == w.size()) {
            if (admits(g, w)) visit(WindowView(w));
            return;
        }
        for (int v : candidates) {
            const int a = std::abs(v);
            if (used[a]) continue;
            if (depth == 0 && first && v != *first) continue;
            used[a] = 1;
            w[depth] = v;
            self(self, depth + 1);
            used[a] = 0;
        }
    };
    recurse(recurse, 0);
}

inline void check_budget(const GroupSpec& g, const EnumerationOptions& opts) {
    validate(g);
    const double size = search_space_size(g);
    if (size > opts.budget)
        throw BudgetExceeded("enumerating " + std::to_string(static_cast<long double>(size)) +
                             " windows exceeds budget " + std::to_string(opts.budget));
}

}  // namespace detail

/// Visits every element of the set exactly once, in lexicographic window order.
template <class Visitor>
void for_each_element(const GroupSpec& g, Visitor&& visit, const EnumerationOptions& opts = {}) {
    detail::check_budget(g, opts);
    detail::generate(g, std::nullopt, visit);
}

/// First-entry values that partition the enumeration into disjoint ranges.
inline std::vector<int> partition_keys(const GroupSpec& g) {
    std::vector<int> keys;
    const int n = static_cast<int>(g.n);
    for (int v = g.is_signed() ? -n : 1; v <= n; ++v)
        if (v != 0) keys.push_back(v);
    return keys;
}

/// Visits the elements whose first window entry equals `first`.
template <class Visitor>
void for_each_element_in_partition(const GroupSpec& g, int first, Visitor&& visit,
                                   const EnumerationOptions& opts = {}) {
    detail::check_budget(g, opts);
    detail::generate(g, first, visit);
}

inline std::uint64_t count_elements(const GroupSpec& g, const EnumerationOptions& opts = {}) {
    std::uint64_t c = 0;
    for_each_element(g, [&](WindowView) { ++c; }, opts);
    return c;
}

inline std::vector<Window> collect_elements(const GroupSpec& g, const EnumerationOptions& opts = {}) {
    std::vector<Window> out;
    for_each_element(g, [&](WindowView w) { out.emplace_back(w.begin(), w.end()); }, opts);
    return out;
}

}  // namespace excgamma

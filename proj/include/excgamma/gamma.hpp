#pragma once

// Palindromicity and gamma-basis expansions.
//
// Univariate basis:  t^{r+i} (1+t)^{n-r-2i},  0 <= i <= (n-r)/2
// Bivariate basis:   (st)^{r+i} (s+t)^{d-2(r+i)},  d the homogeneous degree
//
// In q-coefficient mode the coefficient of each t^j is a polynomial in q and
// the gammas are q-polynomials, stored densely.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "excgamma/poly.hpp"

namespace excgamma {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class GammaMode { univariate, bivariate, q_coefficients };

/// Dense polynomial in the coefficient variable, index = power. Empty means zero.
using DenseCoeffs = std::vector<Integer>;

namespace detail {

inline void trim(DenseCoeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline void add_scaled(DenseCoeffs& acc, const DenseCoeffs& x, const Integer& k) {
    if (acc.size() < x.size()) acc.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] += x[i] * k;
    trim(acc);
}

inline std::string dense_to_string(const DenseCoeffs& c, const std::string& var) {
    Poly p(std::vector<std::string>{var});
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<unsigned>(i)}, c[i]);
    return to_string(p);
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

struct PalindromeInfo {
    bool is_palindromic = false;
    unsigned r = 0;  // least t-exponent
    unsigned n = 0;  // greatest t-exponent
    Rational cos;    // (n + r) / 2
};

struct GammaExpansion {
    GammaMode mode = GammaMode::univariate;
    std::string var = "t";        // expansion variable (second of the pair when bivariate)
    std::string first_var = "s";  // bivariate only
    std::string coeff_var = "q";  // q-coefficient mode only
    unsigned offset = 0;          // r
    unsigned degree = 0;          // top t-degree, or homogeneous degree when bivariate
    std::vector<DenseCoeffs> gammas;

    /// Integer value of gamma_i (integer modes).
    Integer gamma(std::size_t i) const {
        if (i >= gammas.size() || gammas[i].empty()) return 0;
        return gammas[i][0];
    }

    Rational center() const {
        if (mode == GammaMode::bivariate) return Rational(degree, 2);
        return Rational(static_cast<std::int64_t>(degree) + offset, 2);
    }

    /// Length n - r of the univariate polynomial this expansion recomposes to.
    unsigned length() const {
        return mode == GammaMode::bivariate ? degree - 2 * offset : degree - offset;
    }

    bool all_gammas_nonnegative() const {
        for (const auto& g : gammas)
            for (const auto& c : g)
                if (c < 0) return false;
        return true;
    }

    friend bool operator==(const GammaExpansion&, const GammaExpansion&) = default;
};

namespace detail {

// Peels the palindromic coefficient sequence a[r..n] into gammas.
inline std::vector<DenseCoeffs> peel(std::vector<DenseCoeffs> a, unsigned r, unsigned n) {
    std::vector<DenseCoeffs> gammas;
    for (unsigned i = 0; r + 2 * i <= n; ++i) {
        DenseCoeffs g = a[r + i];
        const unsigned span = n - r - 2 * i;
        if (!g.empty()) {
            for (unsigned k = 0; k <= span; ++k) add_scaled(a[r + i + k], g, -binomial(span, k));
        }
        gammas.push_back(std::move(g));
    }
    for (const auto& rest : a)
        if (!rest.empty()) throw Error("internal error: gamma peeling left a remainder");
    return gammas;
}

inline void check_palindromic(const std::vector<DenseCoeffs>& a, unsigned r, unsigned n,
                              const std::string& coeff_var) {
    for (unsigned i = 0; r + 2 * i < n; ++i) {
        if (a[r + i] != a[n - i])
            throw NotPalindromic(r + i, n - i, dense_to_string(a[r + i], coeff_var),
                                 dense_to_string(a[n - i], coeff_var));
    }
}

// Coefficient of t^j as a dense q-polynomial, for every j.
inline std::vector<DenseCoeffs> sequence_in(const Poly& f, const std::string& var,
                                            const std::string& coeff_var) {
    std::vector<DenseCoeffs> a;
    for (const Poly& c : coefficients_in(f, var)) {
        if (c.is_zero()) {
            a.emplace_back();
            continue;
        }
        if (c.vars().empty()) {
            a.push_back({c.terms().begin()->second});
            continue;
        }
        DenseCoeffs d = dense_coefficients(c, c.vars().size() == 1 ? c.vars()[0] : coeff_var);
        trim(d);
        a.push_back(std::move(d));
    }
    return a;
}

inline void require_only(const Poly& f, std::initializer_list<const char*> allowed) {
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || f.vars()[i] == a;
        if (ok) continue;
        for (const auto& [exps, c] : f.terms())
            if (exps[i] != 0)
                throw InvalidInput("unexpected variable '" + f.vars()[i] + "' for this mode");
    }
}

inline std::vector<DenseCoeffs> integer_sequence(const Poly& f, const std::string& var) {
    std::vector<DenseCoeffs> a;
    Poly g = f;
    if (!g.has_var(var)) g = g.extended_to(detail::merge_variables(g.vars(), {var}));
    for (const Poly& c : coefficients_in(g, var)) {
        if (c.is_zero()) a.emplace_back();
        else a.push_back({c.terms().begin()->second});
    }
    return a;
}

inline unsigned homogeneous_degree(const Poly& f) {
    std::optional<unsigned> deg;
    for (const auto& [exps, c] : f.terms()) {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        if (deg && *deg != d)
            throw NotHomogeneous("terms of total degree " + std::to_string(*deg) + " and " +
                                 std::to_string(d));
        deg = d;
    }
    return deg.value_or(0);
}

}  // namespace detail

enum class PalindromeMode { univariate_t, bivariate_st };

inline PalindromeInfo palindrome_info(const Poly& f, PalindromeMode mode) {
    if (f.is_zero()) throw ZeroPolynomial();
    PalindromeInfo info;
    std::vector<DenseCoeffs> a;
    if (mode == PalindromeMode::univariate_t) {
        detail::require_only(f, {"t"});
        a = detail::integer_sequence(f, "t");
    } else {
        detail::require_only(f, {"s", "t"});
        const unsigned d = detail::homogeneous_degree(f);
        a = detail::integer_sequence(f, "t");
        a.resize(d + 1);
    }
    unsigned r = 0;
    while (a[r].empty()) ++r;
    unsigned n = static_cast<unsigned>(a.size()) - 1;
    while (a[n].empty()) --n;
    info.r = r;
    info.n = n;
    info.cos = Rational(static_cast<std::int64_t>(n) + r, 2);
    info.is_palindromic = true;
    for (unsigned i = 0; r + 2 * i < n; ++i)
        if (a[r + i] != a[n - i]) info.is_palindromic = false;
    if (mode == PalindromeMode::bivariate_st && r + n + 1 != a.size())
        info.is_palindromic = false;  // not symmetric under s <-> t
    return info;
}

/// Expands a palindromic polynomial in the gamma basis.
inline GammaExpansion gamma_decompose(const Poly& f, GammaMode mode) {
    GammaExpansion out;
    out.mode = mode;
    if (f.is_zero()) throw ZeroPolynomial();
    std::vector<DenseCoeffs> a;
    switch (mode) {
    case GammaMode::univariate:
        detail::require_only(f, {"t"});
        a = detail::integer_sequence(f, "t");
        break;
    case GammaMode::bivariate: {
        detail::require_only(f, {"s", "t"});
        const unsigned d = detail::homogeneous_degree(f);
        a = detail::integer_sequence(f, "t");
        a.resize(d + 1);
        out.degree = d;
        break;
    }
    case GammaMode::q_coefficients:
        detail::require_only(f, {"t", "q"});
        a = detail::sequence_in(f.has_var("t") ? f : f.extended_to(detail::merge_variables(f.vars(), {"t"})),
                                "t", "q");
        break;
    }
    unsigned r = 0;
    while (a[r].empty()) ++r;
    unsigned n = static_cast<unsigned>(a.size()) - 1;
    while (a[n].empty()) --n;
    if (mode == GammaMode::bivariate) {
        // Homogeneous symmetry: the lowest t-power and lowest s-power agree.
        const unsigned d = out.degree;
        if (r + n != d) {
            const unsigned hi = d - r;
            throw NotPalindromic(r, hi, a[r].empty() ? "0" : a[r][0].str(),
                                 hi < a.size() && !a[hi].empty() ? a[hi][0].str() : "0");
        }
    }
    detail::check_palindromic(a, r, n, out.coeff_var);
    out.offset = r;
    if (mode != GammaMode::bivariate) out.degree = n;
    out.gammas = detail::peel(std::move(a), r, n);
    return out;
}

/// Rebuilds the polynomial from its gamma expansion.
inline Poly gamma_recompose(const GammaExpansion& g) {
    const Poly t = Poly::variable(g.var);
    if (g.mode == GammaMode::bivariate) {
        const Poly s = Poly::variable(g.first_var);
        Poly out(detail::merge_variables({g.first_var}, {g.var}));
        const Poly st = s * t;
        const Poly sum = s + t;
        for (std::size_t i = 0; i < g.gammas.size(); ++i) {
            const Integer c = g.gamma(i);
            if (c == 0) continue;
            const unsigned k = g.offset + static_cast<unsigned>(i);
            out += pow(st, k) * pow(sum, g.degree - 2 * k) * c;
        }
        return out;
    }
    std::vector<std::string> vars{g.var};
    if (g.mode == GammaMode::q_coefficients) vars = detail::merge_variables(vars, {g.coeff_var});
    Poly out(vars);
    const Poly one_plus_t = Poly::constant(1) + t;
    for (std::size_t i = 0; i < g.gammas.size(); ++i) {
        if (g.gammas[i].empty()) continue;
        Poly coeff(std::vector<std::string>{});
        if (g.mode == GammaMode::q_coefficients) {
            coeff = Poly(std::vector<std::string>{g.coeff_var});
            for (std::size_t k = 0; k < g.gammas[i].size(); ++k)
                coeff.add_term({static_cast<unsigned>(k)}, g.gammas[i][k]);
        } else {
            coeff = Poly::constant(g.gammas[i][0]);
        }
        const unsigned low = g.offset + static_cast<unsigned>(i);
        out += coeff * pow(t, low) * pow(one_plus_t, g.degree - g.offset - 2 * static_cast<unsigned>(i));
    }
    return out;
}

/// Writes a gamma-positive expansion of odd length as p1 + p2 with centers
/// cos - 1/2 and cos + 1/2, splitting each basis element through
/// (1+t)^{2k+1} = (1+t)^{2k} + t(1+t)^{2k}.
inline std::pair<GammaExpansion, GammaExpansion> split_odd_length(const GammaExpansion& g) {
    if (g.mode == GammaMode::bivariate)
        throw InvalidInput("odd-length splitting applies to univariate expansions");
    if (g.length() % 2 == 0)
        throw EvenLength("length " + std::to_string(g.length()) + " is even");
    if (!g.all_gammas_nonnegative()) throw NotGammaPositive("expansion has a negative gamma");
    GammaExpansion p1 = g;
    GammaExpansion p2 = g;
    p1.degree = g.degree - 1;
    p2.offset = g.offset + 1;
    return {p1, p2};
}

inline nlohmann::json to_json(const GammaExpansion& g) {
    nlohmann::json gammas = nlohmann::json::array();
    for (const auto& c : g.gammas) {
        if (g.mode == GammaMode::q_coefficients) {
            nlohmann::json dense = nlohmann::json::array();
            for (const auto& x : c) dense.push_back(x.str());
            gammas.push_back(std::move(dense));
        } else {
            gammas.push_back(c.empty() ? std::string("0") : c[0].str());
        }
    }
    return {{"r", g.offset}, {"n", g.degree}, {"gammas", std::move(gammas)}};
}

inline std::string to_string(const GammaExpansion& g) {
    std::string out = "r=" + std::to_string(g.offset) + " n=" + std::to_string(g.degree) +
                      " cos=" + to_string(g.center()) + " gammas=[";
    for (std::size_t i = 0; i < g.gammas.size(); ++i) {
        if (i) out += ", ";
        if (g.mode == GammaMode::q_coefficients) out += detail::dense_to_string(g.gammas[i], g.coeff_var);
        else out += g.gamma(i).str();
    }
    out += "] gamma_positive=";
    out += g.all_gammas_nonnegative() ? "true" : "false";
    return out;
}

}  // namespace excgamma

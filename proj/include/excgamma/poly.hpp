#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//
// Variables are kept in a canonical order (s, t, u, q, then any other name
// lexicographically) and terms are stored in descending lexicographic order of
// their exponent vectors, so two equal polynomials are structurally equal and
// serialize identically.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "excgamma/errors.hpp"

namespace excgamma {

using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<unsigned>;

namespace detail {

inline int variable_rank(const std::string& name) {
    static const char* const kKnown[] = {"s", "t", "u", "q"};
    for (int i = 0; i < 4; ++i)
        if (name == kKnown[i]) return i;
    return 4;
}

inline bool variable_less(const std::string& a, const std::string& b) {
    const int ra = variable_rank(a);
    const int rb = variable_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}

inline std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), variable_less);
    return out;
}

}  // namespace detail

class Poly {
public:
    using TermMap = std::map<Exponents, Integer, std::greater<Exponents>>;

    Poly() = default;

    /// The zero polynomial over the given variables.
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end(), detail::variable_less);
        if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
            throw InvalidInput("duplicate variable in polynomial variable list");
    }

    static Poly constant(const Integer& c, std::vector<std::string> vars = {}) {
        Poly p(std::move(vars));
        p.add_term(Exponents(p.vars_.size(), 0), c);
        return p;
    }

    static Poly variable(const std::string& name) {
        return monomial({name}, {1}, 1);
    }

    /// Single term c * prod vars[i]^exps[i]; `exps` follows the order of `vars` as given.
    static Poly monomial(const std::vector<std::string>& vars, const Exponents& exps,
                         const Integer& c) {
        return from_terms(vars, {{exps, c}});
    }

    static Poly from_terms(const std::vector<std::string>& vars,
                           const std::vector<std::pair<Exponents, Integer>>& terms) {
        Poly p(vars);
        std::vector<std::size_t> slot(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) slot[i] = *p.var_index(vars[i]);
        for (const auto& [exps, c] : terms) {
            if (exps.size() != vars.size())
                throw InvalidInput("exponent vector length does not match variable count");
            Exponents canon(vars.size(), 0);
            for (std::size_t i = 0; i < exps.size(); ++i) canon[slot[i]] = exps[i];
            p.add_term(canon, c);
        }
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }
    bool has_var(const std::string& name) const { return var_index(name).has_value(); }

    std::size_t require_var(const std::string& name) const {
        auto idx = var_index(name);
        if (!idx) throw UnknownVariable(name);
        return *idx;
    }

    /// Coefficient of the monomial with canonical exponent vector `exps`.
    Integer coefficient(const Exponents& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds c * x^exps in place; `exps` is in canonical variable order.
    void add_term(const Exponents& exps, const Integer& c) {
        if (exps.size() != vars_.size())
            throw InvalidInput("exponent vector length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Re-expresses the polynomial over a canonical superset of its variables.
    Poly extended_to(const std::vector<std::string>& target) const {
        if (target == vars_) return *this;
        Poly out(target);
        std::vector<std::size_t> slot(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto idx = out.var_index(vars_[i]);
            if (!idx) throw UnknownVariable(vars_[i]);
            slot[i] = *idx;
        }
        for (const auto& [exps, c] : terms_) {
            Exponents e(out.vars_.size(), 0);
            for (std::size_t i = 0; i < exps.size(); ++i) e[slot[i]] = exps[i];
            out.terms_.emplace(std::move(e), c);
        }
        return out;
    }

    unsigned max_degree(const std::string& var) const {
        const std::size_t i = require_var(var);
        unsigned d = 0;
        for (const auto& [exps, c] : terms_) d = std::max(d, exps[i]);
        return d;
    }

    unsigned min_degree(const std::string& var) const {
        const std::size_t i = require_var(var);
        if (terms_.empty()) return 0;
        unsigned d = ~0u;
        for (const auto& [exps, c] : terms_) d = std::min(d, exps[i]);
        return d;
    }

    Poly operator-() const {
        Poly out = *this;
        for (auto& [exps, c] : out.terms_) c = -c;
        return out;
    }

    Poly& operator+=(const Poly& other) { return accumulate(other, 1); }
    Poly& operator-=(const Poly& other) { return accumulate(other, -1); }

    Poly& operator*=(const Integer& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [exps, c] : terms_) c *= k;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Integer& k) { return a *= k; }
    friend Poly operator*(const Integer& k, Poly a) { return a *= k; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        const auto vars = detail::merge_variables(a.vars_, b.vars_);
        const Poly x = a.extended_to(vars);
        const Poly y = b.extended_to(vars);
        Poly out(vars);
        Exponents e(vars.size());
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    Poly& accumulate(const Poly& other, int sign) {
        if (other.vars_ != vars_) {
            const auto vars = detail::merge_variables(vars_, other.vars_);
            *this = extended_to(vars);
            const Poly y = other.extended_to(vars);
            for (const auto& [e, c] : y.terms_) add_term(e, sign > 0 ? c : Integer(-c));
            return *this;
        }
        for (const auto& [e, c] : other.terms_) add_term(e, sign > 0 ? c : Integer(-c));
        return *this;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Poly pow(Poly base, unsigned k) {
    Poly result = Poly::constant(1, base.vars());
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

/// Sets `var` to 1 and drops it from the variable list.
inline Poly substitute_one(const Poly& f, const std::string& var) {
    const std::size_t idx = f.require_var(var);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        if (i != idx) vars.push_back(f.vars()[i]);
    Poly out(vars);
    for (const auto& [exps, c] : f.terms()) {
        Exponents e;
        e.reserve(vars.size());
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (i != idx) e.push_back(exps[i]);
        out.add_term(e, c);
    }
    return out;
}

inline Poly derivative(const Poly& f, const std::string& var) {
    const std::size_t idx = f.require_var(var);
    Poly out(f.vars());
    for (const auto& [exps, c] : f.terms()) {
        if (exps[idx] == 0) continue;
        Exponents e = exps;
        --e[idx];
        out.add_term(e, c * exps[idx]);
    }
    return out;
}

/// The operator d/ds + d/dt.
inline Poly apply_D(const Poly& f) {
    f.require_var("s");
    f.require_var("t");
    return derivative(f, "s") + derivative(f, "t");
}

inline Poly apply_D(Poly f, unsigned times) {
    for (unsigned i = 0; i < times; ++i) f = apply_D(f);
    return f;
}

inline Integer evaluate_at_ones(const Poly& f) {
    Integer sum = 0;
    for (const auto& [exps, c] : f.terms()) sum += c;
    return sum;
}

/// Exact division by 2; an odd coefficient raises OddCoefficient.
inline Poly halve(const Poly& f) {
    Poly out(f.vars());
    for (const auto& [exps, c] : f.terms()) {
        if (boost::multiprecision::bit_test(c, 0))
            throw OddCoefficient("halving hit odd coefficient " + c.str());
        out.add_term(exps, c / 2);
    }
    return out;
}

/// Coefficients of `var`^0..deg in a polynomial whose only variable with
/// nonzero exponents is `var`.
inline std::vector<Integer> dense_coefficients(const Poly& f, const std::string& var) {
    if (f.is_zero()) return {};
    const std::size_t idx = f.require_var(var);
    std::vector<Integer> out(f.max_degree(var) + 1);
    for (const auto& [exps, c] : f.terms()) {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (i != idx && exps[i] != 0)
                throw InvalidInput("polynomial is not univariate in '" + var + "'");
        out[exps[idx]] = c;
    }
    return out;
}

/// Builds sum coeffs[k] * var^k.
inline Poly from_dense(const std::vector<Integer>& coeffs, const std::string& var) {
    Poly out(std::vector<std::string>{var});
    for (std::size_t k = 0; k < coeffs.size(); ++k) out.add_term({static_cast<unsigned>(k)}, coeffs[k]);
    return out;
}

/// Splits f by powers of `var`: entry k is the coefficient of var^k, a
/// polynomial in the remaining variables.
inline std::vector<Poly> coefficients_in(const Poly& f, const std::string& var) {
    const std::size_t idx = f.require_var(var);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        if (i != idx) rest.push_back(f.vars()[i]);
    std::vector<Poly> out(f.is_zero() ? 0 : f.max_degree(var) + 1, Poly(rest));
    for (const auto& [exps, c] : f.terms()) {
        Exponents e;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (i != idx) e.push_back(exps[i]);
        out[exps[idx]].add_term(e, c);
    }
    return out;
}

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : f.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        const bool constant_term =
            std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
        if (mag != 1 || constant_term) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (wrote) os << '*';
            os << f.vars()[i];
            if (exps[i] > 1) os << '^' << exps[i];
            wrote = true;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

inline nlohmann::json to_json(const Poly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, c] : f.terms())
        terms.push_back({{"exp", exps}, {"coeff", c.str()}});
    return {{"vars", f.vars()}, {"terms", std::move(terms)}};
}

inline Poly poly_from_json(const nlohmann::json& j) {
    try {
        const auto vars = j.at("vars").get<std::vector<std::string>>();
        std::vector<std::pair<Exponents, Integer>> terms;
        for (const auto& term : j.at("terms"))
            terms.emplace_back(term.at("exp").get<Exponents>(),
                               Integer(term.at("coeff").get<std::string>()));
        return Poly::from_terms(vars, terms);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw ParseError(std::string("malformed polynomial coefficient: ") + e.what());
    }
}

/// Convenience handles for the usual generating-function variables.
inline Poly var_s() { return Poly::variable("s"); }
inline Poly var_t() { return Poly::variable("t"); }
inline Poly var_u() { return Poly::variable("u"); }
inline Poly var_q() { return Poly::variable("q"); }

}  // namespace excgamma

#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over Q(i) with named variables.
 *
 * Terms live in a map ordered graded-lexicographically (descending) with the
 * declared variable order, so iteration order is the canonical print order
 * and begin() is the leading term. The term order always uses the plain
 * total degree; per-variable weights only affect total_degree, leading_form
 * and is_homogeneous.
 *
 * A polynomial built without a VarSet is a floating constant that combines
 * with a polynomial in any VarSet.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace s1e {

inline constexpr std::size_t kMaxVars = 4;

using Monomial = std::array<std::uint32_t, kMaxVars>;

inline unsigned long monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0UL);
}

inline Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (d[i] > m[i]) return false;
    return true;
}

/// m / d; requires divides(d, m).
inline Monomial operator-(const Monomial& m, const Monomial& d) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = m[i] - d[i];
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class VarSetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
public:
    explicit UnknownVariable(const std::string& name) : std::invalid_argument("unknown variable '" + name + "'") {}
};

class VarSet {
public:
    VarSet(std::vector<std::string> names, std::vector<long> weights = {})
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.empty()) throw std::invalid_argument("empty variable set");
        if (names_.size() > kMaxVars) throw std::invalid_argument("more than 4 variables");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("empty variable name");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
        }
        if (weights_.empty()) weights_.assign(names_.size(), 1);
        if (weights_.size() != names_.size()) throw std::invalid_argument("weight count does not match variables");
    }

    std::size_t arity() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<long>& weights() const noexcept { return weights_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw UnknownVariable(name);
    }
    bool contains(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    long weight(const Monomial& m) const {
        long w = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) w += weights_[i] * static_cast<long>(m[i]);
        return w;
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<std::string> names_;
    std::vector<long> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names, std::vector<long> weights = {}) {
    return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

class MultiPoly {
public:
    using Terms = std::map<Monomial, GaussianRational, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(GaussianRational c) { add_term(Monomial{}, std::move(c)); }
    MultiPoly(Rational c) : MultiPoly(GaussianRational(std::move(c))) {}
    template <std::integral I>
    MultiPoly(I c) : MultiPoly(GaussianRational(c)) {}
    explicit MultiPoly(VarSetPtr vs) : vs_(std::move(vs)) {}

    static MultiPoly constant(VarSetPtr vs, GaussianRational c) {
        MultiPoly p(std::move(vs));
        p.add_term(Monomial{}, std::move(c));
        return p;
    }
    static MultiPoly variable(VarSetPtr vs, const std::string& name) {
        Monomial m{};
        m[vs->index_of(name)] = 1;
        return monomial(std::move(vs), m);
    }
    static MultiPoly monomial(VarSetPtr vs, const Monomial& m, GaussianRational c = GaussianRational(1)) {
        if (vs) {
            for (std::size_t i = vs->arity(); i < kMaxVars; ++i)
                if (m[i]) throw std::invalid_argument("monomial exceeds variable set arity");
        }
        MultiPoly p(std::move(vs));
        p.add_term(m, std::move(c));
        return p;
    }

    const VarSetPtr& varset() const noexcept { return vs_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }
    GaussianRational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }
    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    /// Leading term in the graded-lex order; throws on zero.
    const Terms::value_type& leading_term() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return *terms_.begin();
    }
    const Monomial& leading_monomial() const { return leading_term().first; }
    const GaussianRational& leading_coeff() const { return leading_term().second; }

    /// Accumulates c*m into the polynomial, dropping cancelled terms.
    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Adopts vs when this polynomial is a floating constant.
    void bind(const VarSetPtr& vs) {
        if (!vs_) vs_ = vs;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        unify(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        unify(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const GaussianRational& s) { return a *= s; }
    friend MultiPoly operator*(const GaussianRational& s, MultiPoly a) { return a *= s; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.vs_ ? a.vs_ : b.vs_);
        r.check_compatible(b);
        r.check_compatible(a);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.vs_ && b.vs_ && !same_varset(a.vs_, b.vs_)) return false;
        return a.terms_ == b.terms_;
    }

private:
    void check_compatible(const MultiPoly& o) const {
        if (vs_ && o.vs_ && !same_varset(vs_, o.vs_)) throw VarSetMismatch("polynomials over different variable sets");
    }
    void unify(const MultiPoly& o) {
        check_compatible(o);
        bind(o.vs_);
    }

    VarSetPtr vs_;
    Terms terms_;
};

inline MultiPoly pow(const MultiPoly& base, unsigned long e) {
    MultiPoly result = MultiPoly::constant(base.varset(), GaussianRational(1));
    MultiPoly b = base;
    for (; e; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

inline MultiPoly conjugate(const MultiPoly& p) {
    MultiPoly r(p.varset());
    for (const auto& [m, c] : p.terms()) r.add_term(m, conjugate(c));
    return r;
}

inline bool is_real(const MultiPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_real(); });
}

/// (f1, f2) with p = f1 + i*f2 and both parts real.
inline std::pair<MultiPoly, MultiPoly> real_imag_parts(const MultiPoly& p) {
    MultiPoly re(p.varset()), im(p.varset());
    for (const auto& [m, c] : p.terms()) {
        re.add_term(m, c.re());
        im.add_term(m, c.im());
    }
    return {re, im};
}

inline constexpr long kDegreeOfZero = std::numeric_limits<long>::min();

inline long weighted_degree(const MultiPoly& p, const Monomial& m) {
    if (!p.varset()) return 0;
    return p.varset()->weight(m);
}

/// Weighted total degree; kDegreeOfZero for the zero polynomial.
inline long total_degree(const MultiPoly& p) {
    long d = kDegreeOfZero;
    for (const auto& [m, c] : p.terms()) d = std::max(d, weighted_degree(p, m));
    return d;
}

/// Sum of the terms of maximal weighted degree.
inline MultiPoly leading_form(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("leading form of the zero polynomial");
    long d = total_degree(p);
    MultiPoly r(p.varset());
    for (const auto& [m, c] : p.terms())
        if (weighted_degree(p, m) == d) r.add_term(m, c);
    return r;
}

inline bool is_homogeneous(const MultiPoly& p) {
    if (p.is_zero()) return true;
    long d = total_degree(p);
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const auto& t) { return weighted_degree(p, t.first) == d; });
}

inline long degree_in(const MultiPoly& p, std::size_t var) {
    long d = p.is_zero() ? -1 : 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<long>(m[var]));
    return d;
}

inline MultiPoly derivative(const MultiPoly& p, std::size_t var) {
    MultiPoly r(p.varset());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, c * GaussianRational(static_cast<long>(m[var])));
    }
    return r;
}

/// Coefficients of p as a polynomial in `var`: result[j] is the coefficient of var^j.
inline std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(p, var), -1L) + 1), MultiPoly(p.varset()));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        rest[var] = 0;
        out[m[var]].add_term(rest, c);
    }
    return out;
}

/// Inverse of coefficients_in.
inline MultiPoly from_coefficients(const VarSetPtr& vs, const std::vector<MultiPoly>& coeffs, std::size_t var) {
    MultiPoly r(vs);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (const auto& [m, c] : coeffs[j].terms()) {
            Monomial shifted = m;
            shifted[var] += static_cast<std::uint32_t>(j);
            r.add_term(shifted, c);
        }
    return r;
}

/// Re-expresses p over `target`, matching variables by name.
inline MultiPoly change_varset(const MultiPoly& p, const VarSetPtr& target) {
    if (!p.varset() || same_varset(p.varset(), target)) {
        MultiPoly r(target);
        for (const auto& [m, c] : p.terms()) r.add_term(m, c);
        return r;
    }
    const VarSet& src = *p.varset();
    std::vector<std::size_t> map(src.arity());
    std::vector<bool> used(src.arity(), false);
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < src.arity(); ++i)
            if (m[i]) used[i] = true;
    for (std::size_t i = 0; i < src.arity(); ++i)
        if (used[i]) map[i] = target->index_of(src.name(i));
    MultiPoly r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial t{};
        for (std::size_t i = 0; i < src.arity(); ++i)
            if (m[i]) t[map[i]] = m[i];
        r.add_term(t, c);
    }
    return r;
}

/// Replaces each named variable by a polynomial. All images share one target
/// VarSet; unassigned variables map to the same-named variable there.
inline MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment) {
    if (!p.varset()) return p;
    const VarSet& src = *p.varset();
    VarSetPtr target;
    for (const auto& [name, image] : assignment) {
        if (!src.contains(name)) throw UnknownVariable(name);
        if (!image.varset()) continue;
        if (target && !same_varset(target, image.varset()))
            throw VarSetMismatch("substitution images over different variable sets");
        if (!target) target = image.varset();
    }
    if (!target) target = p.varset();

    std::vector<std::vector<MultiPoly>> powers(src.arity());
    for (std::size_t i = 0; i < src.arity(); ++i) {
        auto it = assignment.find(src.name(i));
        MultiPoly img = it != assignment.end() ? it->second : MultiPoly();
        if (it == assignment.end()) {
            if (degree_in(p, i) > 0) img = MultiPoly::variable(target, src.name(i));
        } else {
            img.bind(target);
        }
        powers[i].push_back(MultiPoly::constant(target, GaussianRational(1)));
        for (long e = 1; e <= degree_in(p, i); ++e) powers[i].push_back(powers[i].back() * img);
    }
    MultiPoly r(target);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < src.arity(); ++i)
            if (m[i]) t *= powers[i][m[i]];
        r += t;
    }
    return r;
}

/// Evaluates p with every variable assigned a scalar.
inline GaussianRational evaluate(const MultiPoly& p, const std::vector<GaussianRational>& point) {
    GaussianRational acc(0);
    for (const auto& [m, c] : p.terms()) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (m[i]) t *= pow(point[i], static_cast<long>(m[i]));
        acc += t;
    }
    return acc;
}

}  // namespace s1e

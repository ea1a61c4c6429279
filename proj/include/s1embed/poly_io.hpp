#pragma once

/**
 * @file poly_io.hpp
 * @brief Text form of MultiPoly.
 *
 *     poly     := ['-'] term (('+'|'-') term)*
 *     term     := coeff ('*' monomial)? | monomial
 *     monomial := var ('^' uint)? ('*' var ('^' uint)?)*
 *     coeff    := rational | '(' rational ('+'|'-') rational '*i' ')'
 *
 * format_poly prints terms in graded-lex descending order with no spaces.
 */

#include <string>
#include <string_view>
#include <vector>

#include "exactnum.hpp"
#include "poly.hpp"

namespace s1e {

namespace detail {

inline Monomial parse_monomial(Cursor& cur, const VarSet& vs) {
    Monomial m{};
    do {
        std::size_t at = cur.position();
        std::string name = cur.identifier();
        if (!vs.contains(name)) throw ParseError("unknown variable '" + name + "'", at);
        std::uint32_t e = 1;
        if (cur.accept('^')) e = static_cast<std::uint32_t>(std::stoul(cur.digits()));
        m[vs.index_of(name)] += e;
    } while (cur.accept('*'));
    return m;
}

inline void parse_term(Cursor& cur, const VarSet& vs, bool negate, MultiPoly& out) {
    char c = cur.peek();
    GaussianRational coeff(1);
    Monomial m{};
    if (c == '(' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        coeff = parse_gaussian(cur);
        if (cur.accept('*')) m = parse_monomial(cur, vs);
    } else {
        m = parse_monomial(cur, vs);
    }
    out.add_term(m, negate ? -coeff : coeff);
}

inline std::string format_monomial(const Monomial& m, const VarSet& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.arity(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += vs.name(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

}  // namespace detail

inline MultiPoly parse_poly(std::string_view text, const VarSetPtr& vs) {
    detail::Cursor cur(text);
    MultiPoly p(vs);
    bool negate = cur.accept('-');
    detail::parse_term(cur, *vs, negate, p);
    while (!cur.eof()) {
        if (cur.accept('+'))
            negate = false;
        else if (cur.accept('-'))
            negate = true;
        else
            cur.fail("expected '+' or '-'");
        detail::parse_term(cur, *vs, negate, p);
    }
    return p;
}

inline MultiPoly parse_poly(std::string_view text, std::vector<std::string> names) {
    return parse_poly(text, make_varset(std::move(names)));
}

inline std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    static const VarSet kNone({"_"});
    const VarSet& vs = p.varset() ? *p.varset() : kNone;
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        std::string mono = detail::format_monomial(m, vs);
        std::string coeff;
        bool negative = c.is_real() && c.re().sign() < 0;
        if (c.is_real()) {
            Rational a = abs(c.re());
            if (!(mono.size() && a == Rational(1))) coeff = a.str();
        } else {
            coeff = to_string(c);
        }
        if (negative)
            s += '-';
        else if (!s.empty())
            s += '+';
        s += coeff;
        if (!coeff.empty() && !mono.empty()) s += '*';
        s += mono;
    }
    return s;
}

}  // namespace s1e

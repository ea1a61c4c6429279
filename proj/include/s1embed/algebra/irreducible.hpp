#pragma once

/**
 * @file irreducible.hpp
 * @brief Certified factorization and irreducibility of bivariate polynomials.
 *
 * 1. Shear y -> y + c*x so the polynomial becomes monic in x of x-degree
 *    equal to its total degree.
 * 2. Specialize y = y0 (0, 1, -1, 2, ...) until the image is squarefree.
 * 3. Factor the image over the coefficient field.
 * 4. Lift the factors in powers of z = y - y0 beyond the y-degree.
 * 5. Recombine subsets, accepting a factor only by exact division.
 *
 * The returned factorization always satisfies unit * prod(factors) == P,
 * checked before returning.
 */

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../poly.hpp"
#include "divide.hpp"
#include "gcd.hpp"
#include "qfactor.hpp"

namespace s1e {

enum class CoefficientField { GaussianRationals, Rationals };

struct IrreducibilityOptions {
    CoefficientField field = CoefficientField::GaussianRationals;
    long degree_cap = 24;
};

class DegreeCapExceeded : public std::runtime_error {
public:
    DegreeCapExceeded(long degree, long cap)
        : std::runtime_error("total degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap)),
          degree_(degree), cap_(cap) {}
    long degree() const noexcept { return degree_; }
    long cap() const noexcept { return cap_; }

private:
    long degree_, cap_;
};

struct Factorization {
    GaussianRational unit;
    /// Irreducible factors with graded-lex leading coefficient 1, sorted by
    /// degree then by canonical text. Repeated factors appear repeatedly.
    std::vector<MultiPoly> factors;

    bool irreducible() const { return factors.size() == 1; }
};

namespace detail {

// Univariate image helpers over the two-variable VarSet (x index 0, y index 1).
inline GPoly to_upoly_in_x(const MultiPoly& p) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(std::max(degree_in(p, 0), -1L) + 1), GaussianRational(0));
    for (const auto& [m, v] : p.terms()) {
        if (m[1] != 0) throw std::logic_error("expected a polynomial in x only");
        c[m[0]] += v;
    }
    return GPoly(std::move(c));
}

inline MultiPoly from_upoly_in_x(const GPoly& p, const VarSetPtr& vs, std::uint32_t y_power = 0) {
    MultiPoly r(vs);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        Monomial m{};
        m[0] = static_cast<std::uint32_t>(i);
        m[1] = y_power;
        r.add_term(m, p.coeffs()[i]);
    }
    return r;
}

// Lifts monic g_1..g_r with prod g_i = Pz[0] to G_i with prod G_i == sum Pz[j] z^j mod z^N.
inline std::vector<std::vector<GPoly>> hensel_lift_series(const std::vector<GPoly>& Pz, const std::vector<GPoly>& g,
                                                           std::size_t N) {
    const std::size_t r = g.size();
    std::vector<GPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        GPoly others(GaussianRational(1));
        for (std::size_t l = 0; l < r; ++l)
            if (l != i) others = (others * g[l]) % g[i];
        auto [h, si, ti] = ext_gcd(others, g[i]);
        if (h.degree() != 0) throw std::logic_error("lifted factors are not coprime");
        s[i] = si % g[i];
    }
    std::vector<std::vector<GPoly>> G(r, std::vector<GPoly>(N));
    for (std::size_t i = 0; i < r; ++i) G[i][0] = g[i];
    // Q[m][j] is the z^j coefficient of G_0 * ... * G_m.
    std::vector<std::vector<GPoly>> Q(r, std::vector<GPoly>(N));
    auto refresh = [&](std::size_t j) {
        Q[0][j] = G[0][j];
        for (std::size_t m = 1; m < r; ++m) {
            GPoly acc;
            for (std::size_t a = 0; a <= j; ++a) {
                if (Q[m - 1][a].is_zero() || G[m][j - a].is_zero()) continue;
                acc += Q[m - 1][a] * G[m][j - a];
            }
            Q[m][j] = std::move(acc);
        }
    };
    refresh(0);
    for (std::size_t j = 1; j < N; ++j) {
        refresh(j);
        GPoly e = (j < Pz.size() ? Pz[j] : GPoly()) - Q[r - 1][j];
        if (e.is_zero()) continue;
        for (std::size_t i = 0; i < r; ++i) G[i][j] = (s[i] * e) % g[i];
        refresh(j);
    }
    return G;
}

inline bool poly_text_less(const MultiPoly& a, const MultiPoly& b);

inline Factorization factor_monic(const MultiPoly& P1, const IrreducibilityOptions& opt);

}  // namespace detail

/// Irreducible factorization over the chosen field of a nonconstant
/// polynomial in at most two variables.
inline Factorization factor_bivariate(const MultiPoly& P, const IrreducibilityOptions& opt = {});

inline bool is_irreducible(const MultiPoly& P, const IrreducibilityOptions& opt = {}) {
    return factor_bivariate(P, opt).irreducible();
}

namespace detail {

inline long plain_degree(const MultiPoly& p) {
    long d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<long>(monomial_degree(m)));
    return d;
}

inline bool poly_text_less(const MultiPoly& a, const MultiPoly& b) {
    long da = plain_degree(a), db = plain_degree(b);
    if (da != db) return da < db;
    return format_poly(a) < format_poly(b);
}

// Factors a polynomial over [x, y] that is monic in x with x-degree equal to its total degree.
inline Factorization factor_monic(const MultiPoly& P1, const IrreducibilityOptions& opt) {
    const VarSetPtr& vs = P1.varset();
    const long d = plain_degree(P1);
    if (d <= 1) return {GaussianRational(1), {P1}};
    const long dy = degree_in(P1, 1);
    const MultiPoly X = MultiPoly::variable(vs, vs->name(0)), Y = MultiPoly::variable(vs, vs->name(1));
    const std::string& yname = vs->name(1);

    std::optional<long> y0;
    GPoly image;
    const long tries = d * (2 * d - 1) + 1;
    for (long k = 0; k < tries && !y0; ++k) {
        long cand = (k + 1) / 2 * (k % 2 ? 1 : -1);
        image = to_upoly_in_x(substitute(P1, {{yname, MultiPoly::constant(vs, GaussianRational(cand))}}));
        if (is_squarefree(image)) y0 = cand;
    }
    if (!y0) {
        // Every specialization is singular, so P1 has a repeated factor.
        MultiPoly g = mv_gcd(P1, derivative(P1, 0));
        Factorization a = factor_monic(normalize_leading(g), opt);
        Factorization b = factor_monic(normalize_leading(exact_divide(P1, g)), opt);
        a.factors.insert(a.factors.end(), b.factors.begin(), b.factors.end());
        return {GaussianRational(1), a.factors};
    }

    std::vector<GPoly> g;
    if (opt.field == CoefficientField::Rationals) {
        for (const auto& q : factor_over_rationals(real_part_poly(image))) g.push_back(to_gaussian(q));
    } else {
        g = factor_over_gaussian(image);
    }
    if (g.size() == 1) return {GaussianRational(1), {P1}};

    // P1 in z = y - y0
    MultiPoly Pz = substitute(P1, {{yname, Y + MultiPoly::constant(vs, GaussianRational(*y0))}});
    std::vector<GPoly> coeffs;
    for (const auto& c : coefficients_in(Pz, 1)) coeffs.push_back(to_upoly_in_x(c));
    const std::size_t N = static_cast<std::size_t>(dy) + 1;
    auto G = hensel_lift_series(coeffs, g, N);

    auto to_poly = [&](const std::vector<GPoly>& series) {
        MultiPoly r(vs);
        for (std::size_t j = 0; j < series.size(); ++j) r += from_upoly_in_x(series[j], vs, static_cast<std::uint32_t>(j));
        return r;
    };
    auto truncated_product = [&](const std::vector<std::size_t>& idx) {
        std::vector<GPoly> acc(N);
        acc[0] = GPoly(GaussianRational(1));
        for (auto i : idx) {
            std::vector<GPoly> next(N);
            for (std::size_t a = 0; a < N; ++a) {
                if (acc[a].is_zero()) continue;
                for (std::size_t b = 0; a + b < N; ++b)
                    if (!G[i][b].is_zero()) next[a + b] += acc[a] * G[i][b];
            }
            acc = std::move(next);
        }
        return acc;
    };

    std::vector<MultiPoly> found;
    std::vector<std::size_t> T(G.size());
    for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
    MultiPoly cur = Pz;
    std::size_t s = 1;
    while (2 * s <= T.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<std::size_t> chosen;
            for (auto i : idx) chosen.push_back(T[i]);
            MultiPoly cand = to_poly(truncated_product(chosen));
            try {
                MultiPoly q = exact_divide(cur, cand);
                found.push_back(cand);
                cur = std::move(q);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, t = 0; i < T.size(); ++i) {
                    if (t < s && idx[t] == i)
                        ++t;
                    else
                        keep.push_back(T[i]);
                }
                T = std::move(keep);
                hit = true;
                break;
            } catch (const NotDivisible&) {
            }
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == T.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (!cur.is_constant()) found.push_back(cur);

    MultiPoly back = Y - MultiPoly::constant(vs, GaussianRational(*y0));
    Factorization out{GaussianRational(1), {}};
    for (const auto& f : found) out.factors.push_back(substitute(f, {{yname, back}}));
    (void)X;
    return out;
}

}  // namespace detail

inline Factorization factor_bivariate(const MultiPoly& P, const IrreducibilityOptions& opt) {
    if (!P.varset() || P.is_constant()) throw std::invalid_argument("irreducibility needs a nonconstant polynomial");
    const VarSet& src = *P.varset();
    if (src.arity() > 2) throw std::invalid_argument("irreducibility is implemented for at most two variables");
    if (opt.field == CoefficientField::Rationals && !is_real(P))
        throw std::invalid_argument("rational irreducibility requested for a polynomial with non-real coefficients");
    const long d = detail::plain_degree(P);
    if (d > opt.degree_cap) throw DegreeCapExceeded(d, opt.degree_cap);

    // Work over two variables named after the source.
    VarSetPtr vs = src.arity() == 2 ? make_varset(src.names()) : make_varset({src.name(0), src.name(0) + "_aux"});
    MultiPoly Q = change_varset(P, vs);
    const MultiPoly X = MultiPoly::variable(vs, vs->name(0)), Y = MultiPoly::variable(vs, vs->name(1));

    // shear so that eta(Q)(1, c) != 0
    MultiPoly top(vs);
    for (const auto& [m, c] : Q.terms())
        if (static_cast<long>(monomial_degree(m)) == d) top.add_term(m, c);
    long c = 0;
    for (long k = 0;; ++k) {
        c = (k + 1) / 2 * (k % 2 ? 1 : -1);
        if (!evaluate(top, {GaussianRational(1), GaussianRational(c)}).is_zero()) break;
    }
    MultiPoly P1 = c == 0 ? Q : substitute(Q, {{vs->name(1), Y + X * GaussianRational(c)}});
    Monomial xd{};
    xd[0] = static_cast<std::uint32_t>(d);
    P1 *= P1.coeff(xd).inverse();

    Factorization raw = detail::factor_monic(P1, opt);
    Factorization out{GaussianRational(1), {}};
    for (const auto& f : raw.factors) {
        MultiPoly un = c == 0 ? f : substitute(f, {{vs->name(1), Y - X * GaussianRational(c)}});
        out.factors.push_back(change_varset(normalize_leading(un), P.varset()));
    }
    std::sort(out.factors.begin(), out.factors.end(), detail::poly_text_less);

    MultiPoly prod = MultiPoly::constant(P.varset(), GaussianRational(1));
    for (const auto& f : out.factors) prod *= f;
    out.unit = P.leading_coeff() / prod.leading_coeff();
    if (prod * out.unit != P) throw std::logic_error("factorization failed its certification");
    return out;
}

}  // namespace s1e

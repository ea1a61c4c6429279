#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials over Q(i) in one variable t.
 *
 * Stored as an offset plus a coefficient run whose first and last entries are
 * nonzero. The S^1 real structure sends t to 1/t and conjugates coefficients.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "exactnum.hpp"
#include "poly.hpp"
#include "upoly.hpp"

namespace s1e {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(GaussianRational c) : c_{std::move(c)} { normalize(); }
    template <std::integral I>
    LaurentPoly(I c) : LaurentPoly(GaussianRational(c)) {}
    LaurentPoly(long lowest, std::vector<GaussianRational> coeffs) : lowest_(lowest), c_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPoly monomial(GaussianRational c, long exponent) { return LaurentPoly(exponent, {std::move(c)}); }
    static LaurentPoly t() { return monomial(GaussianRational(1), 1); }

    /// t^shift * p(t)
    static LaurentPoly from_upoly(const UPoly<GaussianRational>& p, long shift = 0) {
        return LaurentPoly(shift, p.coeffs());
    }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_unit() const noexcept { return c_.size() == 1; }
    /// Lowest exponent; 0 for the zero polynomial.
    long order() const noexcept { return lowest_; }
    /// Highest exponent; order() - 1 for the zero polynomial.
    long degree() const noexcept { return lowest_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const noexcept { return c_; }

    GaussianRational coeff(long exponent) const {
        long i = exponent - lowest_;
        if (i < 0 || i >= static_cast<long>(c_.size())) return GaussianRational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const GaussianRational& leading_coeff() const { return c_.back(); }
    const GaussianRational& trailing_coeff() const { return c_.front(); }

    /// The ordinary polynomial t^(-order) * f, which has nonzero constant term.
    UPoly<GaussianRational> shifted_to_poly() const { return UPoly<GaussianRational>(c_); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = combine(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = combine(*this, o, true); }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1, GaussianRational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentPoly(a.lowest_ + b.lowest_, std::move(r));
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        long lo = std::min(a.lowest_, b.lowest_);
        long hi = std::max(a.degree(), b.degree());
        std::vector<GaussianRational> r(static_cast<std::size_t>(hi - lo + 1), GaussianRational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[static_cast<std::size_t>(a.lowest_ - lo) + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            auto& slot = r[static_cast<std::size_t>(b.lowest_ - lo) + i];
            if (subtract)
                slot -= b.c_[i];
            else
                slot += b.c_[i];
        }
        return LaurentPoly(lo, std::move(r));
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        auto first = std::find_if(c_.begin(), c_.end(), [](const GaussianRational& z) { return !z.is_zero(); });
        lowest_ += first - c_.begin();
        c_.erase(c_.begin(), first);
        if (c_.empty()) lowest_ = 0;
    }

    long lowest_ = 0;
    std::vector<GaussianRational> c_;
};

/// Power; negative exponents are allowed for units only.
inline LaurentPoly pow(const LaurentPoly& base, long e) {
    if (e < 0) {
        if (!base.is_unit()) throw std::domain_error("negative power of a non-unit Laurent polynomial");
        return LaurentPoly::monomial(pow(base.leading_coeff(), e), base.order() * e);
    }
    LaurentPoly result(1), b = base;
    for (auto k = static_cast<unsigned long>(e); k; k >>= 1) {
        if (k & 1) result *= b;
        if (k > 1) b *= b;
    }
    return result;
}

/// sum c_j t^j  ->  sum conj(c_j) t^-j
inline LaurentPoly s1_conjugate(const LaurentPoly& f) {
    std::vector<GaussianRational> r(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& c : r) c = conjugate(c);
    return LaurentPoly(-f.degree(), std::move(r));
}

/// Monic gcd with order 0; units c*t^k are quotiented away.
inline LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero Laurent polynomials");
    return LaurentPoly::from_upoly(gcd(f.shifted_to_poly(), g.shifted_to_poly()));
}

/// f / g in C[t, 1/t]; throws NotDivisible when g does not divide f.
inline LaurentPoly laurent_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    if (f.is_zero()) return {};
    auto [q, r] = divmod(f.shifted_to_poly(), g.shifted_to_poly());
    if (!r.is_zero()) throw NotDivisible("Laurent polynomial does not divide");
    return LaurentPoly::from_upoly(q, f.order() - g.order());
}

/// P(X, Y) for P over a two-variable VarSet (first variable -> X, second -> Y).
inline LaurentPoly bivariate_eval(const MultiPoly& P, const LaurentPoly& X, const LaurentPoly& Y) {
    if (P.varset() && P.varset()->arity() != 2)
        throw std::invalid_argument("bivariate_eval needs a polynomial in exactly two variables");
    if (!P.varset()) return LaurentPoly(P.constant_term());
    std::vector<LaurentPoly> xp{LaurentPoly(1)}, yp{LaurentPoly(1)};
    for (long e = 1; e <= degree_in(P, 0); ++e) xp.push_back(xp.back() * X);
    for (long e = 1; e <= degree_in(P, 1); ++e) yp.push_back(yp.back() * Y);
    LaurentPoly acc;
    for (const auto& [m, c] : P.terms()) acc += LaurentPoly(c) * xp[m[0]] * yp[m[1]];
    return acc;
}

namespace detail {

// h with f ~ h^b and g ~ h^a up to units, by repeatedly splitting off gcd(f, g).
inline LaurentPoly cusp_core(LaurentPoly f, LaurentPoly g, long a, long b) {
    while (a != 1 && b != 1) {
        LaurentPoly d = laurent_gcd(f, g);
        if (a < b) {
            f = laurent_divide(f, d);
            g = d;
            b -= a;
        } else {
            g = laurent_divide(g, d);
            f = d;
            a -= b;
        }
    }
    return a == 1 ? g : f;
}

// (r, s) with a*r + b*s = 1.
inline std::pair<long, long> bezout(long a, long b) {
    long r0 = 1, s0 = 0, r1 = 0, s1 = 1, x = a, y = b;
    while (y) {
        long q = x / y;
        std::tie(x, y) = std::make_pair(y, x - q * y);
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return {r0, s0};
}

}  // namespace detail

/// H with H^b = f and H^a = g, given f^a = g^b and gcd(a, b) = 1.
inline LaurentPoly cusp_extract(const LaurentPoly& f, const LaurentPoly& g, long a, long b) {
    if (a < 1 || b < 1) throw PreconditionError("cusp_extract: exponents must be positive");
    if (std::gcd(a, b) != 1) throw PreconditionError("cusp_extract: gcd(a,b) != 1");
    if (f.is_zero() || g.is_zero()) throw PreconditionError("cusp_extract: zero input");
    if (pow(f, a) != pow(g, b)) throw PreconditionError("cusp_extract: f^a != g^b");

    LaurentPoly h = detail::cusp_core(f, g, a, b);
    LaurentPoly uf = laurent_divide(f, pow(h, b));  // omega * t^m
    LaurentPoly ug = laurent_divide(g, pow(h, a));  // zeta * t^n
    if (!uf.is_unit() || !ug.is_unit()) throw std::logic_error("cusp_extract: cofactor is not a unit");
    long m = uf.order();
    if (m % b != 0) throw std::logic_error("cusp_extract: unit exponent not divisible by b");
    auto [r, s] = detail::bezout(a, b);
    GaussianRational lambda = pow(uf.leading_coeff(), s) * pow(ug.leading_coeff(), r);
    LaurentPoly H = LaurentPoly::monomial(lambda, m / b) * h;
    if (pow(H, b) != f || pow(H, a) != g) throw std::logic_error("cusp_extract: self-check failed");
    return H;
}

/// Text form: poly grammar with the single variable t and signed exponents.
inline LaurentPoly parse_laurent(std::string_view text) {
    detail::Cursor cur(text);
    LaurentPoly acc;
    auto term = [&](bool negate) {
        char c = cur.peek();
        GaussianRational coeff(1);
        long e = 0;
        bool want_var = true;
        if (c == '(' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            coeff = detail::parse_gaussian(cur);
            want_var = cur.accept('*');
        }
        if (want_var) {
            do {
                std::size_t at = cur.position();
                if (cur.identifier() != "t") throw ParseError("expected variable 't'", at);
                long k = 1;
                if (cur.accept('^')) {
                    bool neg = cur.accept('-');
                    k = std::stol(cur.digits());
                    if (neg) k = -k;
                }
                e += k;
            } while (cur.accept('*'));
        }
        acc += LaurentPoly::monomial(negate ? -coeff : coeff, e);
    };
    term(cur.accept('-'));
    while (!cur.eof()) {
        if (cur.accept('+'))
            term(false);
        else if (cur.accept('-'))
            term(true);
        else
            cur.fail("expected '+' or '-'");
    }
    return acc;
}

/// Highest exponent first.
inline std::string format_laurent(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (long e = f.degree(); e >= f.order(); --e) {
        GaussianRational c = f.coeff(e);
        if (c.is_zero()) continue;
        std::string mono;
        if (e != 0) mono = e == 1 ? "t" : "t^" + std::to_string(e);
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

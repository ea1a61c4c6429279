#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over an exact field (Q or Q(i)).
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so the
 * zero polynomial is the empty vector and has degree -1.
 */

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace s1e {

template <class T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(T constant) {
        if (!s1e::is_zero(constant)) c_.push_back(std::move(constant));
    }

    static UPoly monomial(T coeff, std::size_t exponent) {
        if (s1e::is_zero(coeff)) return {};
        std::vector<T> c(exponent + 1, T(0));
        c[exponent] = std::move(coeff);
        return UPoly(std::move(c));
    }
    static UPoly x() { return monomial(T(1), 1); }

    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& lead() const { return c_.back(); }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const T& s) {
        if (s1e::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const T& s) { return a *= s; }
    friend UPoly operator*(const T& s, UPoly a) { return a *= s; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (s1e::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly&, const UPoly&) = default;

    T operator()(const T& at) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// Keeps only the terms of degree < n.
    UPoly truncated(std::size_t n) const {
        if (c_.size() <= n) return *this;
        return UPoly(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    /// Multiplies by x^k.
    UPoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return UPoly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && s1e::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
UPoly<T> pow(const UPoly<T>& base, unsigned long e) {
    UPoly<T> result(T(1)), b = base;
    for (; e; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

/// Quotient and remainder over a field.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {UPoly<T>(), a};
    std::vector<T> rem = a.coeffs();
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), T(0));
    T inv = T(1) / b.lead();
    const auto& bc = b.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        T q = rem[k + db] * inv;
        if (is_zero(q)) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
        quot[k] = std::move(q);
    }
    rem.resize(db);
    return {UPoly<T>(std::move(quot)), UPoly<T>(std::move(rem))};
}

template <class T>
UPoly<T> operator%(const UPoly<T>& a, const UPoly<T>& b) {
    return divmod(a, b).second;
}

/// Quotient a / b; throws std::domain_error unless b divides a.
template <class T>
UPoly<T> exact_quotient(const UPoly<T>& a, const UPoly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("univariate division is not exact");
    return q;
}

template <class T>
UPoly<T> monic(const UPoly<T>& p) {
    if (p.is_zero()) return p;
    return p * (T(1) / p.lead());
}

template <class T>
UPoly<T> derivative(const UPoly<T>& p) {
    if (p.degree() <= 0) return {};
    std::vector<T> d(p.coeffs().size() - 1, T(0));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * T(static_cast<long>(i));
    return UPoly<T>(std::move(d));
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
template <class T>
UPoly<T> pseudo_remainder(const UPoly<T>& a, const UPoly<T>& b) {
    long delta = a.degree() - b.degree();
    if (delta < 0) return a;
    T scale(1);
    for (long k = 0; k <= delta; ++k) scale *= b.lead();
    return divmod(a * scale, b).second;
}

/// Monic gcd via the subresultant polynomial remainder sequence.
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return monic(a);
    T g(1), h(1);
    while (true) {
        long delta = a.degree() - b.degree();
        UPoly<T> r = pseudo_remainder(a, b);
        if (r.is_zero()) return monic(b);
        if (r.degree() == 0) return UPoly<T>(T(1));
        T denom = g * pow(h, delta);
        a = std::move(b);
        b = r * (T(1) / denom);
        g = a.lead();
        // h <- g^delta / h^(delta - 1)
        h = pow(g, delta) / pow(h, delta - 1);
    }
}

/// Returns (g, s, t) with s*a + t*b = g = monic gcd(a, b).
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> ext_gcd(const UPoly<T>& a, const UPoly<T>& b) {
    UPoly<T> r0 = a, r1 = b;
    UPoly<T> s0(T(1)), s1, t0, t1(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly<T> s2 = s0 - q * s1;
        UPoly<T> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = T(1) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// p(x + c).
template <class T>
UPoly<T> taylor_shift(const UPoly<T>& p, const T& c) {
    UPoly<T> lin(std::vector<T>{c, T(1)});
    UPoly<T> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + UPoly<T>(*it);
    return acc;
}

template <class T>
bool is_squarefree(const UPoly<T>& p) {
    if (p.degree() <= 0) return true;
    return gcd(p, derivative(p)).degree() == 0;
}

}  // namespace s1e

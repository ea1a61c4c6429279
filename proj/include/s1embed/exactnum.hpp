#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact rationals and Gaussian rationals (elements of Q(i)).
 *
 * Both types are canonical on construction: rationals are reduced with a
 * positive denominator, so structural equality is value equality. All
 * arithmetic is exact; a zero divisor raises DivisionByZero.
 *
 * Text syntax: `p/q` (or `p`) for rationals and `(p/q+r/s*i)` for Gaussian
 * rationals, `-` permitted on either component.
 */

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace s1e {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised by exact division when the divisor does not divide.
class NotDivisible : public std::domain_error {
public:
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Character cursor shared by the coefficient, polynomial and Laurent parsers.
// Whitespace is insignificant everywhere, so every peek skips it.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char get() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        ++pos_;
        return c;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() &&
            (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }
    std::size_t position() const noexcept { return pos_; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I value) : q_(static_cast<long>(value)) {}
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZero();
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational parse(std::string_view text);

    const mpq_class& get() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    int sign() const noexcept { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1 / q_));
    }

    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact power; negative exponents invert (and so require a nonzero base).
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace detail {

inline Rational parse_rational(Cursor& cur) {
    bool negative = cur.accept('-');
    mpz_class num(cur.digits());
    mpz_class den(1);
    if (cur.accept('/')) {
        std::size_t at = cur.position();
        den = mpz_class(cur.digits());
        if (den == 0) throw ParseError("zero denominator", at);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    detail::Cursor cur(text);
    Rational r = detail::parse_rational(cur);
    if (!cur.eof()) cur.fail("trailing input");
    return r;
}

/// Element of Q(i), stored as (re, im).
class GaussianRational {
public:
    GaussianRational() = default;
    template <std::integral I>
    GaussianRational(I value) : re_(value) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational parse(std::string_view text);

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        if (!o.im_.is_zero()) im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        if (!o.im_.is_zero()) im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (o.im_.is_zero()) {
            re_ *= o.re_;
            if (!im_.is_zero()) im_ *= o.re_;
        } else if (im_.is_zero()) {
            im_ = re_ * o.im_;
            re_ *= o.re_;
        } else {
            Rational re = re_ * o.re_ - im_ * o.im_;
            im_ = re_ * o.im_ + im_ * o.re_;
            re_ = std::move(re);
        }
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.im_.is_zero()) {
            re_ /= o.re_;
            if (!im_.is_zero()) im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    /// conj(z) / |z|^2
    GaussianRational inverse() const {
        Rational n = re_ * re_ + im_ * im_;
        if (n.is_zero()) throw DivisionByZero();
        return {re_ / n, -im_ / n};
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conjugate(const GaussianRational& z) { return {z.re(), -z.im()}; }

inline Rational norm(const GaussianRational& z) { return z.re() * z.re() + z.im() * z.im(); }

inline GaussianRational pow(const GaussianRational& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    if (base.is_real()) return pow(base.re(), e);
    GaussianRational result(1), b = base;
    for (auto k = static_cast<unsigned long>(e); k; k >>= 1) {
        if (k & 1) result *= b;
        if (k > 1) b *= b;
    }
    return result;
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return z.re().str();
    std::string s = "(" + z.re().str();
    s += z.im().sign() < 0 ? "-" : "+";
    s += abs(z.im()).str() + "*i)";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

namespace detail {

inline GaussianRational parse_gaussian(Cursor& cur) {
    if (!cur.accept('(')) return GaussianRational(parse_rational(cur));
    Rational re = parse_rational(cur);
    bool minus;
    if (cur.accept('+'))
        minus = false;
    else if (cur.accept('-'))
        minus = true;
    else
        cur.fail("expected '+' or '-' before imaginary part");
    Rational im = parse_rational(cur);
    cur.expect('*');
    if (cur.get() != 'i') cur.fail("expected 'i'");
    cur.expect(')');
    return {re, minus ? -im : im};
}

}  // namespace detail

inline GaussianRational GaussianRational::parse(std::string_view text) {
    detail::Cursor cur(text);
    GaussianRational z = detail::parse_gaussian(cur);
    if (!cur.eof()) cur.fail("trailing input");
    return z;
}

}  // namespace s1e

#pragma once

/**
 * @file probes.hpp
 * @brief The Delta(B) membership test, the principal polar class probe, and
 * standardization of the real circle case.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "../algebra/coordpair.hpp"
#include "../algebra/gcd.hpp"
#include "../poly.hpp"

namespace s1e {

struct DeltaMembership {
    bool member;
    MultiPoly gcd;  // gcd(f, conj f), leading coefficient 1
};

/// f is in Delta(B) iff gcd(f, conj f) is constant.
inline DeltaMembership delta_membership(const MultiPoly& f) {
    if (f.is_zero()) throw PreconditionError("delta_membership of the zero polynomial");
    MultiPoly g = mv_gcd(f, conjugate(f));
    return {g.is_constant(), g};
}

struct PolarFactorization {
    GaussianRational omega;
    MultiPoly alpha;  // real, first canonical coefficient 1
};

/// v = omega * alpha with alpha real, or nullopt when no such split exists.
inline std::optional<PolarFactorization> polar_class_trivial(const MultiPoly& v) {
    if (v.is_zero()) throw PreconditionError("polar_class_trivial of the zero polynomial");
    GaussianRational omega = v.leading_coeff();
    MultiPoly alpha = v * omega.inverse();
    if (!is_real(alpha)) return std::nullopt;
    return PolarFactorization{omega, alpha};
}

struct StandardizedCircle {
    Rational lambda;
    MultiPoly v1, v2;
    CoordPairWitness witness;  // for (v1, v2)
    /// (sqrt(lambda) v1, sqrt(lambda) v2) when lambda is a rational square.
    std::optional<PolyPair> scaled;
    std::optional<CoordPairWitness> scaled_witness;
    std::string identity;  // P as a sum of squares minus 1, in text
};

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    mpz_class n = q.numerator(), d = q.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

}  // namespace detail

/// Rewrites a real P = v^a - u v - 1, given the coordinates (u, v), as
/// lambda (v1^2 + v2^2) - 1 with v = v1 + i v2.
inline StandardizedCircle standardize_circle(const MultiPoly& P, const MultiPoly& u, const MultiPoly& v, long a) {
    if (a < 1) throw PreconditionError("standardize_circle: a must be positive");
    if (!is_coordinate_pair(u, v)) throw PreconditionError("standardize_circle: (u, v) is not a coordinate pair");
    if (!is_real(P)) throw PreconditionError("standardize_circle: P is not real");
    const MultiPoly one(1);
    if (P != pow(v, static_cast<unsigned long>(a)) - u * v - one)
        throw PreconditionError("standardize_circle: P != v^a-uv-1 in the given coordinates");
    if (polar_class_trivial(v)) throw PreconditionError("standardize_circle: polar class of v is trivial");

    MultiPoly F = pow(v, static_cast<unsigned long>(a - 1)) - u;
    auto lam = detail::proportional(F, conjugate(v));
    if (!lam) throw PreconditionError("standardize_circle: v^{a-1}-u is not a scalar multiple of conj(v)");
    if (!lam->is_real()) throw PreconditionError("standardize_circle: lambda is not real");

    StandardizedCircle out;
    out.lambda = lam->re();
    std::tie(out.v1, out.v2) = real_imag_parts(v);
    auto w = is_coordinate_pair(out.v1, out.v2);
    if (!w) throw std::logic_error("standardize_circle: real and imaginary parts of v are not a coordinate pair");
    out.witness = std::move(*w);
    if (P != (out.v1 * out.v1 + out.v2 * out.v2) * GaussianRational(out.lambda) - one)
        throw std::logic_error("standardize_circle: P != lambda(v1^2+v2^2)-1");

    std::string l = out.lambda.str();
    if (auto r = detail::rational_sqrt(out.lambda)) {
        PolyPair fg{out.v1 * GaussianRational(*r), out.v2 * GaussianRational(*r)};
        if (P != fg.first * fg.first + fg.second * fg.second - one)
            throw std::logic_error("standardize_circle: rescaled pair does not give f^2+g^2-1");
        out.scaled_witness = is_coordinate_pair(fg.first, fg.second);
        out.scaled = std::move(fg);
        out.identity = "P=f^2+g^2-1 with (f,g)=(" + r->str() + "*v1," + r->str() + "*v2)";
    } else {
        out.identity = "P=" + l + "*(v1^2+v2^2)-1 (sqrt(" + l + ") is irrational)";
    }
    return out;
}

}  // namespace s1e

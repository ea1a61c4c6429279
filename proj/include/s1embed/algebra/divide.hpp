#pragma once

/// @file divide.hpp
/// @brief Exact multivariate division.

#include <string>

#include "../exactnum.hpp"
#include "../poly.hpp"
#include "../poly_io.hpp"

namespace s1e {

/// Q with P = D * Q, or NotDivisible naming the leading term of the stuck remainder.
inline MultiPoly exact_divide(const MultiPoly& P, const MultiPoly& D) {
    if (D.is_zero()) throw DivisionByZero();
    const auto& [dm, dc] = D.leading_term();
    GaussianRational dinv = dc.inverse();
    VarSetPtr vs = P.varset() ? P.varset() : D.varset();
    MultiPoly R = P, Q(vs);
    R.bind(vs);
    while (!R.is_zero()) {
        const auto& [rm, rc] = R.leading_term();
        if (!divides(dm, rm)) {
            MultiPoly lt = MultiPoly::monomial(vs, rm, rc);
            throw NotDivisible("does not divide; remainder leading term " + format_poly(lt));
        }
        MultiPoly q = MultiPoly::monomial(vs, rm - dm, rc * dinv);
        R -= q * D;
        Q += q;
    }
    return Q;
}

/// True when D divides P exactly.
inline bool divides(const MultiPoly& D, const MultiPoly& P) {
    try {
        exact_divide(P, D);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

}  // namespace s1e

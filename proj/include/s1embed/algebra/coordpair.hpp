#pragma once

/**
 * @file coordpair.hpp
 * @brief Recognition of plane polynomial automorphisms (coordinate pairs).
 *
 * Degree reduction: while one component has degree > 1, its leading form must
 * be c times a power of the other component's leading form, and subtracting
 * c * other^k lowers the degree. Once both components are affine the linear
 * part must be invertible. Every plane automorphism in characteristic 0 is
 * tame, so a stuck reduction means the pair is not an automorphism.
 */

#include <optional>
#include <utility>
#include <vector>

#include "../poly.hpp"
#include "divide.hpp"

namespace s1e {

using PolyPair = std::pair<MultiPoly, MultiPoly>;

/// One move of the reduction, written as the map (x, y) -> (first, second)
/// applied to the current pair. The closing Affine move holds the inverse of
/// the affine pair the reduction ends on.
struct CoordMove {
    enum class Kind { Elementary, Affine };
    Kind kind;
    PolyPair map;
};

struct CoordPairWitness {
    PolyPair forward;
    PolyPair inverse;
    std::vector<CoordMove> steps;
};

/// (p(f, g), q(f, g)) for a pair (p, q) over the same two variables.
inline PolyPair compose(const PolyPair& outer, const PolyPair& inner) {
    const VarSet& vs = *outer.first.varset();
    std::map<std::string, MultiPoly> at{{vs.name(0), inner.first}, {vs.name(1), inner.second}};
    return {substitute(outer.first, at), substitute(outer.second, at)};
}

inline MultiPoly jacobian_determinant(const PolyPair& p) {
    return derivative(p.first, 0) * derivative(p.second, 1) - derivative(p.first, 1) * derivative(p.second, 0);
}

namespace detail {

// Some c with a == c * b, if one exists.
inline std::optional<GaussianRational> proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.size() != b.size() || b.is_zero()) return std::nullopt;
    GaussianRational c = a.leading_coeff() / b.leading_coeff();
    if (a != b * c) return std::nullopt;
    return c;
}

}  // namespace detail

/// Witness that x -> f, y -> g is an automorphism of Q(i)[x, y], or nullopt.
inline std::optional<CoordPairWitness> is_coordinate_pair(const MultiPoly& f, const MultiPoly& g) {
    VarSetPtr vs = f.varset() ? f.varset() : g.varset();
    if (!vs || vs->arity() != 2) throw std::invalid_argument("coordinate pair needs a two-variable ring");
    MultiPoly cur[2] = {f, g};
    cur[0].bind(vs);
    cur[1].bind(vs);
    if (!same_varset(cur[0].varset(), cur[1].varset())) throw VarSetMismatch("coordinate pair over different rings");
    const MultiPoly X = MultiPoly::variable(vs, vs->name(0)), Y = MultiPoly::variable(vs, vs->name(1));
    // Plain total degree drives the reduction regardless of VarSet weights.
    auto deg = [](const MultiPoly& p) { return p.is_zero() ? -1L : static_cast<long>(monomial_degree(p.leading_monomial())); };
    auto top = [&](const MultiPoly& p) {
        MultiPoly r(p.varset());
        long d = deg(p);
        for (const auto& [m, c] : p.terms())
            if (static_cast<long>(monomial_degree(m)) == d) r.add_term(m, c);
        return r;
    };

    CoordPairWitness w{{cur[0], cur[1]}, {}, {}};
    while (deg(cur[0]) > 1 || deg(cur[1]) > 1) {
        std::size_t hi = deg(cur[0]) >= deg(cur[1]) ? 0 : 1, lo = 1 - hi;
        long dh = deg(cur[hi]), dl = deg(cur[lo]);
        if (dl < 1 || dh % dl != 0) return std::nullopt;
        auto k = static_cast<unsigned long>(dh / dl);
        auto c = detail::proportional(top(cur[hi]), pow(top(cur[lo]), k));
        if (!c) return std::nullopt;
        cur[hi] -= pow(cur[lo], k) * *c;
        // Move on the current pair: component hi becomes hi - c * lo^k.
        MultiPoly vars[2] = {X, Y};
        MultiPoly moved = vars[hi] - pow(vars[lo], k) * *c;
        PolyPair map = hi == 0 ? PolyPair{moved, Y} : PolyPair{X, moved};
        w.steps.push_back({CoordMove::Kind::Elementary, map});
    }
    if (deg(cur[0]) < 1 || deg(cur[1]) < 1) return std::nullopt;

    // cur = M (x, y)^T + b
    Monomial mx{}, my{};
    mx[0] = 1;
    my[1] = 1;
    GaussianRational a11 = cur[0].coeff(mx), a12 = cur[0].coeff(my);
    GaussianRational a21 = cur[1].coeff(mx), a22 = cur[1].coeff(my);
    GaussianRational det = a11 * a22 - a12 * a21;
    if (det.is_zero()) return std::nullopt;
    MultiPoly sx = X - cur[0].constant_term(), sy = Y - cur[1].constant_term();
    GaussianRational inv = det.inverse();
    PolyPair affine_inverse{(sx * a22 - sy * a12) * inv, (sy * a11 - sx * a21) * inv};
    w.steps.push_back({CoordMove::Kind::Affine, affine_inverse});

    // inverse = L^-1 o E_n o ... o E_1 applied to (x, y)
    PolyPair acc{X, Y};
    for (const auto& move : w.steps) acc = compose(move.map, acc);
    w.inverse = acc;

    PolyPair id{X, Y};
    if (compose(w.forward, w.inverse) != id || compose(w.inverse, w.forward) != id) return std::nullopt;
    MultiPoly J = jacobian_determinant(w.forward);
    if (!J.is_constant() || J.is_zero()) return std::nullopt;
    return w;
}

}  // namespace s1e

#pragma once

/**
 * @file torus.hpp
 * @brief The circle bundle T over S^1 with fibers x^2+y^2=(a+2)^2: normal
 * forms in its coordinate ring, the eliminant in (b,x,y), fibers, and the
 * Z-grading of the complexification.
 */

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra/coordpair.hpp"
#include "algebra/resultant.hpp"
#include "algebra/rewrite.hpp"
#include "classification/check.hpp"
#include "poly_io.hpp"

namespace s1e {

/// [x,y,a,b]; x comes first so that x^2 -> (a+2)^2-y^2 decreases in graded-lex.
inline VarSetPtr torus_varset() {
    static const VarSetPtr vs = make_varset({"x", "y", "a", "b"});
    return vs;
}

/// a^2 -> 1-b^2, x^2 -> (a+2)^2-y^2.
inline const RewriteSystem& torus_rewrite() {
    static const RewriteSystem rs = [] {
        auto vs = torus_varset();
        auto x = MultiPoly::variable(vs, "x"), y = MultiPoly::variable(vs, "y");
        auto a = MultiPoly::variable(vs, "a"), b = MultiPoly::variable(vs, "b");
        return RewriteSystem::from_relations(
            vs, {a * a + b * b - MultiPoly(1), x * x + y * y - (a + MultiPoly(2)) * (a + MultiPoly(2))});
    }();
    return rs;
}

/// Normal form in R[a,b,x,y]/(a^2+b^2-1, x^2+y^2-(a+2)^2). Accepts any
/// variable order over (a,b,x,y); the result is over torus_varset().
inline MultiPoly torus_normal_form(const MultiPoly& P) {
    return normal_form(change_varset(P, torus_varset()), torus_rewrite());
}

/// [u,v,a,b] with deg u = 1, deg v = -1, deg a = deg b = 0.
inline VarSetPtr graded_torus_varset() {
    static const VarSetPtr vs = make_varset({"u", "v", "a", "b"}, {1, -1, 0, 0});
    return vs;
}

struct TorusEliminant {
    MultiPoly eliminant;  // over [b,x,y]
    MultiPoly displayed;  // (x^2+y^2+b^2)^2-16(x^2+y^2)
    MultiPoly textbook;   // (x^2+y^2+b^2+3)^2-16(x^2+y^2)
    std::vector<CheckResult> checks;
};

namespace detail {

inline std::string torus_id(const std::string& subject, const std::string& name, const std::string& params = {}) {
    return check_id("torus", subject, name, params);
}

inline bool proportional_polys(const MultiPoly& a, const MultiPoly& b) {
    return !a.is_zero() && !b.is_zero() && proportional(a, b).has_value();
}

}  // namespace detail

/// res_a(a^2+b^2-1, 4a-(x^2+y^2+b^2-5)) with its comparison checks.
inline TorusEliminant torus_eliminant() {
    auto vs = torus_varset();
    auto x = MultiPoly::variable(vs, "x"), y = MultiPoly::variable(vs, "y");
    auto a = MultiPoly::variable(vs, "a"), b = MultiPoly::variable(vs, "b");
    const MultiPoly one(1);
    MultiPoly r2 = x * x + y * y;
    MultiPoly E4 = resultant(a * a + b * b - one, MultiPoly(4) * a - (r2 + b * b - MultiPoly(5)), "a");

    auto bxy = make_varset({"b", "x", "y"});
    TorusEliminant out;
    out.eliminant = change_varset(E4, bxy);
    out.displayed = change_varset(pow(r2 + b * b, 2) - MultiPoly(16) * r2, bxy);
    out.textbook = change_varset(pow(r2 + b * b + MultiPoly(3), 2) - MultiPoly(16) * r2, bxy);
    const std::string E = format_poly(out.eliminant);

    MultiPoly nf = torus_normal_form(E4);
    out.checks.push_back(contract_check(detail::torus_id("eliminant", "vanishes-on-T"),
                                        "the eliminant vanishes when x^2+y^2=(a+2)^2 and a^2+b^2=1", nf.is_zero(),
                                        nf.is_zero() ? "" : "normal form " + format_poly(nf), {{"eliminant", E}}));
    bool disp = detail::proportional_polys(out.eliminant, out.displayed);
    out.checks.push_back(claim_check(detail::torus_id("eliminant", "vs-displayed"), "(x^2+y^2+b^2)^2=16(x^2+y^2)", disp,
                                     disp ? "proportional" : "computed eliminant is not a multiple of the displayed one",
                                     {{"computed", E}, {"displayed", format_poly(out.displayed)}}));
    bool text = detail::proportional_polys(out.eliminant, out.textbook);
    out.checks.push_back(claim_check(detail::torus_id("eliminant", "vs-revolution"),
                                     "T is obtained by revolving the circle (y-2)^2+b^2=1", text,
                                     text ? "proportional to (x^2+y^2+b^2+3)^2-16(x^2+y^2)" : "not proportional",
                                     {{"computed", E}, {"revolution", format_poly(out.textbook)}}));
    auto yx = substitute(out.eliminant, {{"x", MultiPoly::variable(bxy, "y")}, {"y", MultiPoly::variable(bxy, "x")}});
    out.checks.push_back(contract_check(detail::torus_id("eliminant", "rotation-symmetric"),
                                        "the eliminant is unchanged by (x,y) -> (y,x)", yx == out.eliminant));
    bool points = evaluate(out.eliminant, {0, 3, 0}).is_zero() && evaluate(out.eliminant, {1, 2, 0}).is_zero();
    out.checks.push_back(contract_check(detail::torus_id("eliminant", "sanity-points"),
                                        "(b,x,y)=(0,3,0) and (1,2,0) lie on T", points));
    return out;
}

struct TorusFiber {
    MultiPoly relation;  // over [x,y]
    CheckResult check;
};

/// The fiber over (r, s) in S^1: x^2+y^2-(r+2)^2.
inline TorusFiber torus_fiber_relation(const Rational& r, const Rational& s) {
    if (r * r + s * s != Rational(1)) throw PreconditionError("(" + r.str() + "," + s.str() + ") is not on the unit circle");
    auto vs = torus_varset();
    auto x = MultiPoly::variable(vs, "x"), y = MultiPoly::variable(vs, "y"), a = MultiPoly::variable(vs, "a");
    MultiPoly rel = x * x + y * y - (a + MultiPoly(2)) * (a + MultiPoly(2));
    MultiPoly at = substitute(rel, {{"a", MultiPoly(r)}, {"b", MultiPoly(s)}});
    TorusFiber out{change_varset(at, make_varset({"x", "y"})), {}};
    Rational c = (r + Rational(2)) * (r + Rational(2));
    out.check = contract_check(detail::torus_id("fiber", "circle", "r=" + r.str() + ",s=" + s.str()),
                               "the fiber over (r,s) is x^2+y^2-(r+2)^2 with (r+2)^2>0", c.sign() > 0,
                               "", {{"fiber", format_poly(out.relation)}});
    return out;
}

/// Rational points ((1-t^2)/(1+t^2), 2t/(1+t^2)) of the unit circle for t = p/q, 0 <= p, 1 <= q <= count.
inline std::vector<std::pair<Rational, Rational>> rational_circle_points(std::size_t count) {
    std::vector<std::pair<Rational, Rational>> out;
    std::set<std::pair<Rational, Rational>> seen;
    for (long q = 1; out.size() < count; ++q)
        for (long p = 0; p <= 2 * q && out.size() < count; ++p) {
            Rational t(p, q);
            Rational d = Rational(1) + t * t;
            std::pair<Rational, Rational> pt{(Rational(1) - t * t) / d, Rational(2) * t / d};
            if (seen.insert(pt).second) out.push_back(pt);
        }
    return out;
}

/// Points (b, x, y) of T: b = s and (x, y) = (r+2)(c, d) for circle points (r, s), (c, d).
inline std::vector<std::vector<GaussianRational>> torus_sample_points(std::size_t count) {
    auto circle = rational_circle_points(count + 1);
    std::vector<std::vector<GaussianRational>> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& [r, s] = circle[i];
        const auto& [c, d] = circle[(i * 7 + 3) % circle.size()];
        Rational R = r + Rational(2);
        out.push_back({s, R * c, R * d});
    }
    return out;
}

/// Homogeneity of the relation and the shape of the graded pieces B_n.
inline std::vector<CheckResult> torus_grading_check() {
    auto vs = graded_torus_varset();
    auto u = MultiPoly::variable(vs, "u"), v = MultiPoly::variable(vs, "v");
    auto a = MultiPoly::variable(vs, "a"), b = MultiPoly::variable(vs, "b");
    MultiPoly a2 = (a + MultiPoly(2)) * (a + MultiPoly(2));
    MultiPoly rel = u * v - a2;
    std::vector<CheckResult> out;

    bool homog = is_homogeneous(rel) && weighted_degree(rel, rel.leading_monomial()) == 0;
    out.push_back(claim_check(detail::torus_id("grading", "relation-homogeneous"),
                              "deg u=1 and deg v=-1 make uv-(a+2)^2 homogeneous of degree 0", homog));

    RewriteSystem rs = RewriteSystem::from_relations(vs, {rel});
    auto in_ab = [](const MultiPoly& p) { return degree_in(p, 0) <= 0 && degree_in(p, 1) <= 0; };
    MultiPoly nf = normal_form(u * v, rs);
    out.push_back(claim_check(detail::torus_id("grading", "degree-zero-part"), "B_0=C[a,b,uv]=C[a,b]",
                              in_ab(nf) && nf == a2, "", {{"NF(uv)", format_poly(nf)}}));

    // u^i v^j a^e b^f reduces to u^{i-j} (a+2)^{2j} a^e b^f when i >= j, symmetrically otherwise.
    bool basket = true;
    std::string bad;
    for (unsigned i = 0; i <= 3; ++i)
        for (unsigned j = 0; j <= 3; ++j)
            for (unsigned e = 0; e <= 1; ++e) {
                MultiPoly m = pow(u, i) * pow(v, j) * pow(a, e) * pow(b, 1 - e);
                MultiPoly r = normal_form(m, rs);
                long n = static_cast<long>(i) - static_cast<long>(j);
                MultiPoly expect = (n >= 0 ? pow(u, static_cast<unsigned long>(n)) : pow(v, static_cast<unsigned long>(-n))) *
                                   pow(a2, std::min(i, j)) * pow(a, e) * pow(b, 1 - e);
                bool ok = r == expect && is_homogeneous(r) && weighted_degree(r, r.leading_monomial()) == n;
                if (!ok && bad.empty()) bad = format_poly(m);
                basket = basket && ok;
            }
    out.push_back(claim_check(detail::torus_id("grading", "graded-pieces"), "B_n=u^nB_0 and B_{-n}=v^nB_0 for n>=1",
                              basket, bad.empty() ? "32 monomials" : "first mismatch at " + bad));
    return out;
}

/// Every torus check: ring identities, eliminant, fibers, samples and grading.
inline std::vector<CheckResult> torus_checks(std::size_t samples = 24) {
    auto vs = torus_varset();
    auto x = MultiPoly::variable(vs, "x"), y = MultiPoly::variable(vs, "y");
    auto a = MultiPoly::variable(vs, "a"), b = MultiPoly::variable(vs, "b");
    std::vector<CheckResult> out;
    auto ring_identity = [&](const char* name, const char* claim, const MultiPoly& p) {
        MultiPoly nf = torus_normal_form(p);
        out.push_back(claim_check(detail::torus_id("ring", name), claim, nf.is_zero(),
                                  nf.is_zero() ? "normal form 0" : "normal form " + format_poly(nf)));
    };
    ring_identity("4a-identity", "4a=x^2+y^2-a^2-4", MultiPoly(4) * a - (x * x + y * y - a * a - MultiPoly(4)));
    ring_identity("4a-identity-b", "x^2+y^2-a^2-4=x^2+y^2+b^2-5",
                  (x * x + y * y - a * a - MultiPoly(4)) - (x * x + y * y + b * b - MultiPoly(5)));

    auto E = torus_eliminant();
    out.insert(out.end(), E.checks.begin(), E.checks.end());

    std::size_t zero = 0;
    auto pts = torus_sample_points(samples);
    for (const auto& p : pts) zero += evaluate(E.eliminant, p).is_zero();
    out.push_back(contract_check(detail::torus_id("eliminant", "rational-points"),
                                 "the eliminant vanishes at rational points (s,(r+2)c,(r+2)d) of T", zero == pts.size(),
                                 std::to_string(zero) + "/" + std::to_string(pts.size()) + " points"));

    for (const auto& [r, s] : std::vector<std::pair<Rational, Rational>>{{1, 0}, {Rational(3, 5), Rational(4, 5)},
                                                                         {-1, 0}, {Rational(-5, 13), Rational(12, 13)}})
        out.push_back(torus_fiber_relation(r, s).check);

    auto g = torus_grading_check();
    out.insert(out.end(), g.begin(), g.end());
    return out;
}

}  // namespace s1e

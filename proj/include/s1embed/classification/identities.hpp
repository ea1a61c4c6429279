#pragma once

/**
 * @file identities.hpp
 * @brief Per-form proof identities and degree relations, checked exactly.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "../algebra/divide.hpp"
#include "../algebra/gcd.hpp"
#include "../poly_io.hpp"
#include "check.hpp"
#include "family.hpp"

namespace s1e {

inline std::string section_of(FamilyForm f) {
    if (f == FamilyForm::I1 || f == FamilyForm::I2) return "very-good";
    if (is_good_form(f)) return "good";
    return "sporadic";
}

namespace detail {

struct FormContext {
    const FamilyInstance& inst;
    MultiPoly u, v, P;
    std::vector<CheckResult> out;

    explicit FormContext(const FamilyInstance& i)
        : inst(i),
          u(MultiPoly::variable(family_varset(), "u")),
          v(MultiPoly::variable(family_varset(), "v")),
          P(i.P) {}

    std::string id(const std::string& name) const {
        return check_id(section_of(inst.form), to_string(inst.form), name, inst.params.key());
    }
    MultiPoly vpow(long e) const { return pow(v, static_cast<unsigned long>(e)); }
    const MultiPoly& aux(const char* name) const { return inst.aux.at(name); }

    void identity(const std::string& name, const std::string& claim, const MultiPoly& lhs, const MultiPoly& rhs) {
        MultiPoly diff = lhs - rhs;
        out.push_back(claim_check(id(name), claim, diff.is_zero(), diff.is_zero() ? "exact" : "lhs-rhs=" + format_poly(diff),
                                  {{"lhs", format_poly(lhs)}, {"rhs", format_poly(rhs)}}));
    }
    void degree_eq(const std::string& name, const std::string& claim, long computed, long displayed) {
        out.push_back(claim_check(id(name), claim, computed == displayed,
                                  "computed " + std::to_string(computed) + ", formula " + std::to_string(displayed),
                                  {{"computed", std::to_string(computed)}, {"formula", std::to_string(displayed)}}));
    }
    void degree_chain(const std::string& name, const std::string& claim, std::vector<long> degs) {
        bool ok = std::adjacent_find(degs.begin(), degs.end(), std::less_equal<>()) == degs.end();
        std::string text;
        for (std::size_t i = 0; i < degs.size(); ++i) text += (i ? " > " : "") + std::to_string(degs[i]);
        out.push_back(claim_check(id(name), claim, ok, text, {{"degrees", text}}));
    }
};

inline long deg(const MultiPoly& p) { return total_degree(p); }

}  // namespace detail

/// Exact checks of the identities used in the argument for the instance's form.
inline std::vector<CheckResult> verify_form_identities(const FamilyInstance& inst) {
    detail::FormContext c(inst);
    const auto& prm = inst.params;
    const MultiPoly one(1);
    c.out.push_back(contract_check(c.id("defining-relation"), "P satisfies the defining relation of " + to_string(inst.form),
                                   defining_relation_holds(inst)));
    c.out.push_back(contract_check(c.id("real"), "P has rational coefficients", is_real(inst.P)));

    switch (inst.form) {
        case FamilyForm::II1:
            if (*prm.s == 1 && *prm.p == 1) {
                const MultiPoly &F = c.aux("F"), &G = c.aux("G");
                c.identity("vkP-expansion", "v^kP=v+F-F^2=v-vFG", c.vpow(*prm.k) * c.P, c.v + F - F * F);
                c.identity("vkP-via-G", "v+F-F^2=v-vFG", c.v + F - F * F, c.v - c.v * F * G);
                c.identity("identity", "v^{k-1}P=1-FG", c.vpow(*prm.k - 1) * c.P, one - F * G);
            }
            break;
        case FamilyForm::II2: {
            const MultiPoly& F = c.aux("F");
            long s = *prm.s, p = *prm.p, k = *prm.k;
            if (s == 2 && p == 1) {
                const MultiPoly& G = c.aux("G");
                c.identity("vkP-expansion", "v^kP=v+F(F-1)", c.vpow(k) * c.P, c.v + F * (F - one));
                c.identity("identity", "v^{k-1}P=1+FG", c.vpow(k - 1) * c.P, one + F * G);
            } else if (s == 1 && p == 2 && k >= 2) {
                const MultiPoly& G = c.aux("G");
                MultiPoly G2 = G + MultiPoly(2);
                bool poly_h = divides(c.v, G2);
                c.out.push_back(claim_check(c.id("H-polynomial"), "G=vH-2 for some polynomial H", poly_h,
                                            poly_h ? "" : "v does not divide G+2"));
                if (poly_h) {
                    MultiPoly H = exact_divide(G2, c.v);
                    c.identity("vk1P", "v^{k-1}P=v+2F+F(vH-2)", c.vpow(k - 1) * c.P, c.v + MultiPoly(2) * F + F * (c.v * H - MultiPoly(2)));
                    c.identity("identity", "v^{k-2}P=1+FH", c.vpow(k - 2) * c.P, one + F * H);
                }
            } else if (s == 1 && p == 2 && k == 1) {
                c.identity("F-value", "F=uv+1", F, c.u * c.v + one);
                c.identity("P-expansion", "P=v+2F+uF", c.P, c.v + MultiPoly(2) * F + c.u * F);
                MultiPoly h = c.v + F;
                c.identity("P-via-h", "P=h+(1+u)F", c.P, h + (one + c.u) * F);
                // Which unit constant, if any, is congruent to h(1+u) modulo P.
                MultiPoly hu = h * (one + c.u);
                std::string found = "none";
                for (long cand : {1L, -1L})
                    if (divides(c.P, hu - MultiPoly(cand))) {
                        found = std::to_string(cand);
                        break;
                    }
                c.out.push_back(claim_check(c.id("congruence"), "h(1+u)=1 mod P", found == "1",
                                            "h(1+u) is congruent to " + found + " modulo P",
                                            {{"constant", found}, {"h(1+u)-P", format_poly(hu - c.P)}}));
            }
            break;
        }
        case FamilyForm::II3: {
            const MultiPoly &F = c.aux("F"), &H = c.aux("H");
            long k = *prm.k;
            MultiPoly S = F * F + MultiPoly(4) * c.v;
            c.out.push_back(claim_check(c.id("H-polynomial"), "H=v^{-1}(F^2+4v-F) is a polynomial", c.v * H == S - F));
            c.identity("vH-expansion", "vH(F^2+4v)=F^4-F^3+8vF^2-4vF+16v^2", c.v * H * S,
                       pow(F, 4) - pow(F, 3) + MultiPoly(8) * c.v * F * F - MultiPoly(4) * c.v * F + MultiPoly(16) * c.v * c.v);
            c.identity("vH-value", "vH(F^2+4v)=v-v^kP", c.v * H * S, c.v - c.vpow(k) * c.P);
            c.identity("identity", "H(F^2+4v)=1-v^{k-1}P", H * S, one - c.vpow(k - 1) * c.P);
            c.identity("H-closed-form", "H=uF+4", H, c.u * F + MultiPoly(4));
            break;
        }
        case FamilyForm::II4: {
            const MultiPoly& F = c.aux("F");
            MultiPoly unit = pow(one + c.v * pow(F, static_cast<unsigned long>(*prm.s + 1)), static_cast<unsigned long>(*prm.p));
            bool ok = divides(c.P, unit * F - one);
            c.out.push_back(claim_check(c.id("F-unit"), "F is a unit modulo P", ok, "(1+vF^{s+1})^p F-1 divisible by P"));
            break;
        }
        case FamilyForm::II5: {
            const MultiPoly &F = c.aux("F"), &Q = c.aux("Q");
            c.identity("identity", "v^{k-1}P=FQ+1", c.vpow(*prm.k - 1) * c.P, F * Q + one);
            break;
        }
        case FamilyForm::III1: {
            const MultiPoly& F = c.aux("F");
            auto n = static_cast<unsigned long>(*prm.n);
            MultiPoly lhs = c.v - c.u * pow(F, n + 1);
            c.identity("relation", "P=(v-uF^{n+1})^4-16F^{2n+3}", c.P, pow(lhs, 4) - MultiPoly(16) * pow(F, 2 * n + 3));
            MultiPoly g = mv_gcd(lhs, F);
            c.out.push_back(claim_check(c.id("gcd"), "gcd(v-uF^{n+1},F)=1", g.is_constant(), "", {{"gcd", format_poly(g)}}));
            long e = 2 * *prm.n + 3;
            c.out.push_back(claim_check(c.id("exponent-gcd"), "gcd(4,2n+3)=1", std::gcd(4L, e) == 1));
            break;
        }
        case FamilyForm::III2: {
            const MultiPoly &F = c.aux("F"), &G = c.aux("G"), &H = c.aux("H");
            MultiPoly inner = (c.u - G * G) * H + F * G - one;
            c.identity("chain-F", "F=-3(uv-1)", F, MultiPoly(-3) * (c.u * c.v - one));
            c.identity("chain-G", "G=uF+4/9", G, c.u * F + MultiPoly(Rational(4, 9)));
            c.identity("chain-H", "H=4v-3F^2", H, MultiPoly(4) * c.v - MultiPoly(3) * F * F);
            c.identity("relation", "P=H-27((u-G^2)H+FG-1)^3", c.P, H - MultiPoly(27) * pow(inner, 3));
            break;
        }
        default: break;
    }
    return std::move(c.out);
}

/// The degree equalities and inequalities of the argument, with computed degrees.
inline std::vector<CheckResult> degree_relations(const FamilyInstance& inst) {
    using detail::deg;
    detail::FormContext c(inst);
    const auto& prm = inst.params;
    const long dP = deg(inst.P), du = 1, dv = 1;
    switch (inst.form) {
        case FamilyForm::I1: {
            long a = *prm.a, b = *prm.b, k = *prm.k;
            c.degree_eq("degree", "deg P=max{a deg v,deg u+bk deg v}", dP, std::max(a * dv, du + b * k * dv));
            break;
        }
        case FamilyForm::II1: {
            long dF = deg(c.aux("F")), s = *prm.s, p = *prm.p;
            c.degree_eq("degree", "deg P=sp deg F+deg u", dP, s * p * dF + du);
            if (s == 1 && p == 1) {
                long dG = deg(c.aux("G"));
                c.degree_eq("degree-G", "deg G=deg F-deg v", dG, dF - dv);
                c.degree_eq("degree-conj", "deg conj(F)=deg F", deg(conjugate(c.aux("F"))), dF);
                c.degree_chain("degree-chain", "deg P>deg conj(F)>deg G", {dP, dF, dG});
            }
            break;
        }
        case FamilyForm::II2: {
            long dF = deg(c.aux("F")), s = *prm.s, p = *prm.p, k = *prm.k;
            c.degree_eq("degree", "deg P=(sp-1)deg F+deg u", dP, (s * p - 1) * dF + du);
            if (s == 2 && p == 1) {
                long dG = deg(c.aux("G"));
                c.degree_eq("degree-G", "deg G=deg F-deg v", dG, dF - dv);
                c.degree_chain("degree-chain", "deg P>deg conj(F)>deg G", {dP, dF, dG});
            } else if (s == 1 && p == 2 && k >= 2) {
                MultiPoly G2 = c.aux("G") + MultiPoly(2);
                if (divides(c.v, G2)) {
                    long dH = deg(exact_divide(G2, c.v));
                    c.degree_eq("degree-H", "deg H=deg F-2deg v", dH, dF - 2 * dv);
                    c.degree_chain("degree-chain", "deg P>deg conj(F)>deg H", {dP, dF, dH});
                }
            } else if (s == 1 && p == 2 && k == 1) {
                c.degree_eq("degree-k1", "deg P=2deg u+deg v", dP, 2 * du + dv);
                c.degree_chain("degree-unit", "deg P>2deg(1+u)", {dP, 2 * deg(MultiPoly(1) + c.u)});
            }
            break;
        }
        case FamilyForm::II3: {
            long k = *prm.k, dH = deg(c.aux("H"));
            c.degree_eq("degree", "deg P=4deg u+3k deg v", dP, 4 * du + 3 * k * dv);
            c.degree_eq("degree-H", "2deg H=4deg u+2k deg v", 2 * dH, 4 * du + 2 * k * dv);
            c.degree_chain("degree-unit", "deg P>2deg H", {dP, 2 * dH});
            break;
        }
        case FamilyForm::II4: {
            const MultiPoly& F = c.aux("F");
            long dF = deg(F), s = *prm.s, p = *prm.p, k = *prm.k;
            long dvF = deg(c.v * pow(F, static_cast<unsigned long>(s + 1)));
            c.degree_eq("degree", "deg P=p deg(vF^{s+1})+deg F-(k-1)deg v", dP, p * dvF + dF - (k - 1) * dv);
            c.degree_eq("degree-u", "deg P=p deg(vF^{s+1})+deg u", dP, p * dvF + du);
            c.degree_chain("degree-unit", "deg P>2deg F", {dP, 2 * dF});
            break;
        }
        case FamilyForm::II5: {
            const MultiPoly &F = c.aux("F"), &Q = c.aux("Q");
            long dF = deg(F), s = *prm.s, p = *prm.p;
            long dpow = deg(pow(c.v * pow(F, static_cast<unsigned long>(s + 1)), static_cast<unsigned long>(p)));
            c.degree_eq("degree", "deg P=deg(vF^{s+1})^p-deg F+deg u", dP, dpow - dF + du);
            c.degree_eq("degree-Q", "deg Q=deg(vF^{s+1})^p-deg F", deg(Q), dpow - dF);
            c.degree_chain("degree-chain", "deg P>deg Q>deg conj(F)", {dP, deg(Q), deg(conjugate(F))});
            break;
        }
        case FamilyForm::III1: {
            const MultiPoly& F = c.aux("F");
            auto n = static_cast<unsigned long>(*prm.n);
            c.degree_eq("degree", "deg P=4deg(uF^{n+1})", dP, 4 * deg(c.u * pow(F, n + 1)));
            c.degree_eq("degree-closed", "deg P=8n+12", dP, 8 * static_cast<long>(n) + 12);
            c.degree_chain("degree-unit", "deg P>2deg F", {dP, 2 * deg(F)});
            break;
        }
        case FamilyForm::III2: {
            long dH = deg(c.aux("H"));
            c.degree_eq("degree", "deg P=6deg u+4deg v", dP, 6 * du + 4 * dv);
            c.degree_eq("degree-H", "deg H=2deg u+2deg v", dH, 2 * du + 2 * dv);
            c.degree_chain("degree-unit", "deg P>2deg H", {dP, 2 * dH});
            MultiPoly top = leading_form(inst.P);
            MultiPoly expected = pow(c.u, 6) * pow(c.v, 4);
            c.out.push_back(claim_check(c.id("leading-form"), "highest-degree homogeneous summand of P is u^6v^4",
                                        top == expected, "", {{"leading_form", format_poly(top)}}));
            break;
        }
        default: break;
    }
    return std::move(c.out);
}

}  // namespace s1e

#pragma once

/**
 * @file sporadic.hpp
 * @brief Laurent parametrizations of the two sporadic families and the
 * identities they satisfy.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../algebra/irreducible.hpp"
#include "../laurent.hpp"
#include "../poly_io.hpp"
#include "check.hpp"
#include "family.hpp"

namespace s1e {

/// (X, Y) for family 1 (needs n >= 1) or the single member of family 2.
inline std::pair<LaurentPoly, LaurentPoly> sporadic_parametrization(int family, std::optional<long> n = std::nullopt) {
    if (family == 1) {
        if (!n || *n < 1) throw PreconditionError("sporadic family 1 needs n >= 1");
        return {LaurentPoly(2 * *n, {Rational(1, 2), 1, 1}), LaurentPoly(-2 * *n - 4, {Rational(1, 2), -1, 1})};
    }
    if (family == 2) {
        if (n) throw PreconditionError("sporadic family 2 has no parameter");
        return {LaurentPoly(4, {Rational(2, 3), 1, 1}), LaurentPoly(-8, {Rational(1, 3), -1, 1})};
    }
    throw PreconditionError("sporadic family must be 1 or 2");
}

/// Pass iff P(X, Y) = 0 as a Laurent polynomial.
inline CheckResult verify_vanishing(const MultiPoly& P, const LaurentPoly& X, const LaurentPoly& Y,
                                    std::string id = "vanishing") {
    LaurentPoly r = bivariate_eval(P, X, Y);
    return contract_check(std::move(id), "P vanishes on t -> (X(t), Y(t))", r.is_zero(),
                          r.is_zero() ? "" : "P(X,Y)=" + format_laurent(r),
                          {{"X", format_laurent(X)}, {"Y", format_laurent(Y)}, {"P(X,Y)", format_laurent(r)}});
}

namespace detail {

inline CheckResult laurent_identity(std::string id, std::string claim, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    bool ok = lhs == rhs;
    return claim_check(std::move(id), std::move(claim), ok, ok ? "" : "difference " + format_laurent(lhs - rhs),
                       {{"lhs", format_laurent(lhs)}, {"rhs", format_laurent(rhs)}});
}

}  // namespace detail

/// Laurent identities of the family, the cusp root, and vanishing of the
/// corresponding sporadic-form polynomial.
inline std::vector<CheckResult> sporadic_identities(int family, std::optional<long> n = std::nullopt) {
    auto [X, Y] = sporadic_parametrization(family, n);
    const LaurentPoly one(1), t = LaurentPoly::t();
    std::vector<CheckResult> out;
    const std::string subject = "family" + std::to_string(family);
    const std::string key = n ? "n=" + std::to_string(*n) : "";
    auto id = [&](const char* name) { return check_id("sporadic", subject, name, key); };
    if (family == 1) {
        LaurentPoly F = LaurentPoly(4) * (X * Y - one);
        LaurentPoly XF = X * pow(F, *n + 1);
        out.push_back(detail::laurent_identity(id("F-value"), "F=4(XY-1)=t^-4", F, pow(t, -4)));
        out.push_back(detail::laurent_identity(id("XF-value"), "XF^{n+1}=Y+2t^{-2n-3}", XF,
                                               Y + LaurentPoly(2) * pow(t, -2 * *n - 3)));
        out.push_back(detail::laurent_identity(id("half-difference"), "(1/2)(XF^{n+1}-Y)=t^{-2n-3}",
                                               LaurentPoly(Rational(1, 2)) * (XF - Y), pow(t, -2 * *n - 3)));
        out.push_back(detail::laurent_identity(id("relation"), "(Y-XF^{n+1})^4=16F^{2n+3}", pow(Y - XF, 4),
                                               LaurentPoly(16) * pow(F, 2 * *n + 3)));
        // F^{2n+3} = ((Y - XF^{n+1})/2)^4 with coprime exponents, so both are powers of one h.
        LaurentPoly g = LaurentPoly(Rational(1, 2)) * (Y - XF);
        try {
            LaurentPoly h = cusp_extract(F, g, 2 * *n + 3, 4);
            out.push_back(contract_check(id("cusp-root"), "F=h^4 and (Y-XF^{n+1})/2=h^{2n+3} for some h", true, "",
                                         {{"h", format_laurent(h)}}));
        } catch (const std::exception& e) {
            out.push_back(contract_check(id("cusp-root"), "F=h^4 and (Y-XF^{n+1})/2=h^{2n+3} for some h", false, e.what()));
        }
        out.push_back(verify_vanishing(gen_family(FamilyForm::III1, FamilyParams{.n = n}).P, X, Y, id("vanishing")));
    } else {
        LaurentPoly F = LaurentPoly(-3) * (X * Y - one);
        LaurentPoly G = X * F + LaurentPoly(Rational(4, 9));
        LaurentPoly H = LaurentPoly(4) * Y - LaurentPoly(3) * F * F;
        out.push_back(detail::laurent_identity(id("H-value"), "H=4Y-3F^2=t^-6", H, pow(t, -6)));
        out.push_back(detail::laurent_identity(id("t-2"), "3(X-G^2)H-3(1-FG)=t^-2",
                                               LaurentPoly(3) * (X - G * G) * H - LaurentPoly(3) * (one - F * G),
                                               pow(t, -2)));
        out.push_back(detail::laurent_identity(id("relation"), "H=27((X-G^2)H+FG-1)^3", H,
                                               LaurentPoly(27) * pow((X - G * G) * H + F * G - one, 3)));
        out.push_back(verify_vanishing(gen_family(FamilyForm::III2, {}).P, X, Y, id("vanishing")));
    }
    return out;
}

/// Irreducibility of a sporadic-form P over Q(i); skipped above the degree cap.
inline CheckResult sporadic_irreducibility(const FamilyInstance& inst, long degree_cap) {
    std::string claim = inst.form == FamilyForm::III1 ? "(v-uF^{n+1})^4-16F^{2n+3} is a prime relation"
                                                      : "P is irreducible";
    std::string id = check_id("sporadic", to_string(inst.form), "irreducible", inst.params.key());
    try {
        Factorization f = factor_bivariate(inst.P, {CoefficientField::GaussianRationals, degree_cap});
        std::map<std::string, std::string> w;
        for (std::size_t i = 0; i < f.factors.size(); ++i) w[(i < 9 ? "factor0" : "factor") + std::to_string(i + 1)] = format_poly(f.factors[i]);
        w["unit"] = to_string(f.unit);
        return claim_check(id, claim, f.irreducible(),
                           std::to_string(f.factors.size()) + " irreducible factor(s) over Q(i)", std::move(w));
    } catch (const DegreeCapExceeded& e) {
        return {id, claim, CheckStatus::Skipped, e.what(), {}};
    }
}

}  // namespace s1e

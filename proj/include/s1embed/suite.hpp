#pragma once

/**
 * @file suite.hpp
 * @brief Runs every classification and torus check over a parameter sweep and
 * serializes the report.
 */

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "classification/check.hpp"
#include "classification/family.hpp"
#include "classification/identities.hpp"
#include "classification/probes.hpp"
#include "classification/sporadic.hpp"
#include "laurent.hpp"
#include "poly_io.hpp"
#include "torus.hpp"
#include "version.hpp"

namespace s1e {

struct SuiteConfig {
    long max_ab = 5;
    long max_k = 3;
    long max_sp = 6;
    long max_n = 3;
    long irred_cap = 24;
    std::optional<std::string> section;
};

inline const std::vector<std::string>& suite_sections() {
    static const std::vector<std::string> s{"prelim", "very-good", "good", "sporadic", "torus"};
    return s;
}

struct SuiteReport {
    std::string version;
    SuiteConfig config;
    std::vector<CheckResult> checks;  // sorted by id

    std::map<std::string, std::size_t> summary() const {
        std::map<std::string, std::size_t> out{{"pass", 0}, {"fail", 0}, {"discrepancy", 0}, {"skipped", 0}};
        for (const auto& c : checks) ++out[to_string(c.status)];
        out["total"] = checks.size();
        return out;
    }
    bool any_fail() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return true;
        return false;
    }
};

namespace detail {

inline void run_instance(CheckSink& sink, FamilyForm form, const FamilyParams& prm) {
    const std::string section = section_of(form), key = prm.key();
    try {
        if (is_good_form(form)) {
            MultiPoly g = solve_g(form, prm);
            sink.add(contract_check(check_id(section, to_string(form), "solve-g", key),
                                    "g is uniquely determined by polynomiality of P", true,
                                    "nonsingular at every order", {{"g", format_poly(g)}}));
        }
        FamilyInstance inst = gen_family(form, prm);
        sink.add_all(verify_form_identities(inst));
        sink.add_all(degree_relations(inst));
    } catch (const std::exception& e) {
        sink.add(contract_check(check_id(section, to_string(form), "generate", key),
                                "the instance can be constructed", false, e.what()));
    }
}

inline void validation_example(CheckSink& sink, FamilyForm form, const FamilyParams& prm, const std::string& expected) {
    auto errors = validate_params(form, prm);
    bool ok = std::find(errors.begin(), errors.end(), expected) != errors.end();
    sink.add(contract_check(check_id(section_of(form), to_string(form), "validate", prm.key()),
                            "side condition " + expected.substr(0, expected.size() - 9) + " is enforced", ok,
                            ok ? "rejected" : "not rejected"));
}

inline void prelim_checks(CheckSink& sink) {
    auto vs = make_varset({"x", "y"});
    auto x = MultiPoly::variable(vs, "x"), y = MultiPoly::variable(vs, "y");
    const GaussianRational i = GaussianRational::i();
    auto id = [](const char* subject, const char* name, const std::string& params = {}) {
        return check_id("prelim", subject, name, params);
    };

    struct DeltaCase {
        const char* key;
        MultiPoly f;
        bool member;
    };
    for (const auto& c : {DeltaCase{"x+iy", x + y * i, true}, DeltaCase{"x", x, false},
                          DeltaCase{"(1+i)x", x * GaussianRational(1, 1), false}}) {
        auto d = delta_membership(c.f);
        bool sym = delta_membership(conjugate(c.f)).member == d.member;
        sink.add(contract_check(id("delta", "membership", c.key), "f in Delta(B) iff gcd(f,conj f)=1",
                                d.member == c.member && sym, d.member ? "member" : "not a member",
                                {{"gcd", format_poly(d.gcd)}}));
    }

    auto polar = polar_class_trivial(x * GaussianRational(1, 1) + y * GaussianRational(2, 2));
    sink.add(contract_check(id("polar", "trivial", "(1+i)x+(2+2i)y"), "[v]=1 means v=omega*alpha with alpha real",
                            polar && polar->omega == GaussianRational(1, 1) && polar->alpha == x + MultiPoly(2) * y,
                            polar ? "omega=" + to_string(polar->omega) + ", alpha=" + format_poly(polar->alpha) : "nontrivial"));
    sink.add(contract_check(id("polar", "nontrivial", "x+iy"), "[v]=1 means v=omega*alpha with alpha real",
                            !polar_class_trivial(x + y * i)));

    // Degree is conjugation invariant.
    MultiPoly f = x * x * y * i + x * GaussianRational(3, -2) - MultiPoly(7);
    sink.add(contract_check(id("degree", "conjugate"), "deg conj(f)=deg f", total_degree(conjugate(f)) == total_degree(f)));

    // f^a = g^b with gcd(a,b)=1 forces f=h^b, g=h^a; here with a unit twist.
    LaurentPoly h(0, {1, 1});
    LaurentPoly fa = LaurentPoly::monomial(GaussianRational(0, 1), 3) * pow(h, 3);
    LaurentPoly gb = LaurentPoly::monomial(-1, 2) * pow(h, 2);
    try {
        LaurentPoly H = cusp_extract(fa, gb, 2, 3);
        sink.add(contract_check(id("cusp", "root", "a=2,b=3"), "f^a=g^b and gcd(a,b)=1 give f=h^b and g=h^a",
                                pow(H, 3) == fa && pow(H, 2) == gb, "", {{"h", format_laurent(H)}}));
    } catch (const std::exception& e) {
        sink.add(contract_check(id("cusp", "root", "a=2,b=3"), "f^a=g^b and gcd(a,b)=1 give f=h^b and g=h^a", false,
                                e.what()));
    }

    // Units of the Laurent ring satisfy f * conj(f) in R_{>0}.
    LaurentPoly unit = LaurentPoly::monomial(GaussianRational(Rational(-2, 3)), 5);
    LaurentPoly n = unit * s1_conjugate(unit);
    bool positive = n.is_unit() && n.order() == 0 && n.coeff(0).is_real() && n.coeff(0).re().sign() > 0;
    sink.add(contract_check(id("units", "norm-positive"), "f conj(f) is a positive real for a unit f", positive, "",
                            {{"f*conj(f)", format_laurent(n)}}));
}

inline void very_good_checks(CheckSink& sink, const SuiteConfig& cfg) {
    for (long a = 1; a <= cfg.max_ab; ++a)
        for (long b = 1; b <= cfg.max_ab; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long k = 1; k <= cfg.max_k; ++k) {
                run_instance(sink, FamilyForm::I1, FamilyParams{.a = a, .b = b, .k = k});
                if (b > a) run_instance(sink, FamilyForm::I2, FamilyParams{.a = a, .b = b, .k = k});
            }
        }
    validation_example(sink, FamilyForm::I1, FamilyParams{.a = 2, .b = 4, .k = 1}, "gcd(a,b)=1 violated");
    validation_example(sink, FamilyForm::I2, FamilyParams{.a = 3, .b = 2, .k = 1}, "b>a violated");

    // With b=k=1 the form is P = v^a - uv - 1.
    auto inst = gen_family(FamilyForm::I1, FamilyParams{.a = 2, .b = 1, .k = 1});
    auto uv = family_varset();
    auto u = MultiPoly::variable(uv, "u"), v = MultiPoly::variable(uv, "v");
    sink.add(claim_check(check_id("very-good", "I1", "b=k=1-shape", "a=2,b=1,k=1"), "P=v^a-uv-1",
                         inst.P == v * v - u * v - MultiPoly(1), format_poly(inst.P)));

    // The standard circle in coordinates u = 2iy, v = x+iy and the conjugate variant.
    auto xy = make_varset({"x", "y"});
    auto x = MultiPoly::variable(xy, "x"), y = MultiPoly::variable(xy, "y");
    const GaussianRational i = GaussianRational::i();
    MultiPoly P = x * x + y * y - MultiPoly(1);
    struct Case {
        const char* key;
        MultiPoly u, v, v1, v2;
    };
    for (const auto& c : {Case{"u=2iy,v=x+iy", y * GaussianRational(0, 2), x + y * i, x, y},
                          Case{"u=-2iy,v=x-iy", y * GaussianRational(0, -2), x - y * i, x, -y}}) {
        std::string cid = check_id("very-good", "I1", "standardize", c.key);
        const std::string claim = "P=lambda*v*conj(v)-1=lambda(v1^2+v2^2)-1 and A=R[v1,v2]";
        try {
            auto sc = standardize_circle(P, c.u, c.v, 2);
            bool ok = sc.lambda == Rational(1) && sc.v1 == c.v1 && sc.v2 == c.v2 && sc.scaled.has_value() &&
                      sc.scaled_witness.has_value();
            sink.add(contract_check(cid, claim, ok, sc.identity,
                                    {{"lambda", sc.lambda.str()}, {"v1", format_poly(sc.v1)}, {"v2", format_poly(sc.v2)},
                                     {"inverse", format_poly(sc.witness.inverse.first) + "," +
                                                     format_poly(sc.witness.inverse.second)}}));
        } catch (const std::exception& e) {
            sink.add(contract_check(cid, claim, false, e.what()));
        }
    }
    MultiPoly v0 = x + y * i;
    MultiPoly g = mv_gcd(v0, conjugate(v0));
    sink.add(claim_check(check_id("very-good", "I1", "gcd-v-conj", "v=x+iy"), "gcd(v,conj v)=1", g.is_constant(), "",
                         {{"gcd", format_poly(g)}}));
    sink.add(claim_check(check_id("very-good", "I1", "circle-product", "v=x+iy"), "v*conj(v)-1=x^2+y^2-1",
                         v0 * conjugate(v0) - MultiPoly(1) == P));
}

inline void good_checks(CheckSink& sink, const SuiteConfig& cfg) {
    for (long k = 1; k <= cfg.max_k; ++k) {
        run_instance(sink, FamilyForm::II3, FamilyParams{.k = k});
        for (long s = 1; s <= cfg.max_sp; ++s)
            for (long p = 1; s * p <= cfg.max_sp; ++p) {
                FamilyParams prm{.k = k, .s = s, .p = p};
                run_instance(sink, FamilyForm::II1, prm);
                if (s * p >= 2) run_instance(sink, FamilyForm::II2, prm);
                run_instance(sink, FamilyForm::II4, prm);
                run_instance(sink, FamilyForm::II5, prm);
            }
    }
    validation_example(sink, FamilyForm::II2, FamilyParams{.k = 1, .s = 1, .p = 1}, "sp>=2 violated");
}

inline void sporadic_checks(CheckSink& sink, const SuiteConfig& cfg) {
    for (long n = 1; n <= cfg.max_n; ++n) {
        sink.add_all(sporadic_identities(1, n));
        run_instance(sink, FamilyForm::III1, FamilyParams{.n = n});
        sink.add(sporadic_irreducibility(gen_family(FamilyForm::III1, FamilyParams{.n = n}), cfg.irred_cap));
    }
    sink.add_all(sporadic_identities(2));
    run_instance(sink, FamilyForm::III2, {});
    sink.add(sporadic_irreducibility(gen_family(FamilyForm::III2, {}), cfg.irred_cap));
}

}  // namespace detail

/// Runs the selected sections; the report is sorted by check id.
inline SuiteReport run_paper_suite(const SuiteConfig& cfg = {}) {
    if (cfg.section) {
        const auto& all = suite_sections();
        if (std::find(all.begin(), all.end(), *cfg.section) == all.end())
            throw PreconditionError("unknown section '" + *cfg.section + "'");
    }
    if (cfg.max_ab < 1 || cfg.max_k < 1 || cfg.max_sp < 1 || cfg.max_n < 1 || cfg.irred_cap < 0)
        throw PreconditionError("sweep bounds must be positive");
    auto want = [&](const char* s) { return !cfg.section || *cfg.section == s; };
    CheckSink sink;
    if (want("prelim")) detail::prelim_checks(sink);
    if (want("very-good")) detail::very_good_checks(sink, cfg);
    if (want("good")) detail::good_checks(sink, cfg);
    if (want("sporadic")) detail::sporadic_checks(sink, cfg);
    if (want("torus")) sink.add_all(torus_checks());
    return {kVersion, cfg, sink.sorted()};
}

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j{{"id", c.id}, {"claim", c.claim}, {"status", to_string(c.status)}, {"details", c.details}};
    j["witness"] = nlohmann::json::object();
    for (const auto& [k, v] : c.witness) j["witness"][k] = v;
    return j;
}

inline nlohmann::json to_json(const SuiteConfig& cfg) {
    return {{"max_ab", cfg.max_ab},
            {"max_k", cfg.max_k},
            {"max_sp", cfg.max_sp},
            {"max_n", cfg.max_n},
            {"irred_cap", cfg.irred_cap},
            {"section", cfg.section ? nlohmann::json(*cfg.section) : nlohmann::json(nullptr)}};
}

inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& [k, v] : r.summary()) summary[k] = v;
    return {{"version", r.version}, {"config", to_json(r.config)}, {"checks", checks}, {"summary", summary}};
}

inline nlohmann::json to_json(const FamilyParams& p) {
    nlohmann::json j = nlohmann::json::object();
    auto put = [&](const char* name, const std::optional<long>& x) {
        if (x) j[name] = *x;
    };
    put("a", p.a);
    put("b", p.b);
    put("k", p.k);
    put("s", p.s);
    put("p", p.p);
    put("n", p.n);
    if (!p.gcoeffs.empty()) {
        j["gcoeffs"] = nlohmann::json::array();
        for (const auto& c : p.gcoeffs) j["gcoeffs"].push_back(c.str());
    }
    return j;
}

inline nlohmann::json to_json(const FamilyInstance& inst) {
    nlohmann::json aux = nlohmann::json::object();
    for (const auto& [k, v] : inst.aux) aux[k] = format_poly(v);
    return {{"form", to_string(inst.form)},
            {"params", to_json(inst.params)},
            {"g", inst.g ? nlohmann::json(format_poly(*inst.g)) : nlohmann::json(nullptr)},
            {"P", format_poly(inst.P)},
            {"aux", aux}};
}

}  // namespace s1e

#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace s1e;

namespace {

const VarSetPtr UV = family_varset();
MultiPoly UVP(const char* s) { return parse_poly(s, UV); }

const VarSetPtr XY = make_varset({"x", "y"});
MultiPoly P(const char* s) { return parse_poly(s, XY); }

MultiPoly g_from(const std::vector<Rational>& c) {
    MultiPoly g(UV);
    const MultiPoly v = MultiPoly::variable(UV, "v");
    for (std::size_t j = 0; j < c.size(); ++j) g += pow(v, j) * GaussianRational(c[j]);
    return g;
}

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    throw std::out_of_range("no check " + id);
}

// Parameter sets of the good forms in the default sweep.
std::vector<std::pair<FamilyForm, FamilyParams>> good_sweep() {
    std::vector<std::pair<FamilyForm, FamilyParams>> out;
    SuiteConfig cfg;
    for (long k = 1; k <= cfg.max_k; ++k) {
        out.push_back({FamilyForm::II3, FamilyParams{.k = k}});
        for (long s = 1; s <= cfg.max_sp; ++s)
            for (long p = 1; s * p <= cfg.max_sp; ++p) {
                FamilyParams prm{.k = k, .s = s, .p = p};
                out.push_back({FamilyForm::II1, prm});
                if (s * p >= 2) out.push_back({FamilyForm::II2, prm});
                out.push_back({FamilyForm::II4, prm});
                out.push_back({FamilyForm::II5, prm});
            }
    }
    return out;
}

}  // namespace

TEST(Family, FormNamesAndKeys) {
    for (FamilyForm f : all_forms()) EXPECT_EQ(parse_family_form(to_string(f)), f);
    EXPECT_THROW(parse_family_form("IV"), PreconditionError);
    EXPECT_EQ((FamilyParams{.a = 2, .b = 1, .k = 1}).key(), "a=2,b=1,k=1");
    EXPECT_EQ((FamilyParams{.a = 1, .b = 2, .k = 3, .gcoeffs = {Rational(1, 2), 3}}).key(), "a=1,b=2,g=1/2;3,k=3");
    EXPECT_EQ((FamilyParams{.k = 2, .s = 1, .p = 3}).key(), "k=2,p=3,s=1");
}

TEST(Family, Validation) {
    auto has = [](FamilyForm f, const FamilyParams& p, const std::string& msg) {
        auto e = validate_params(f, p);
        return std::find(e.begin(), e.end(), msg) != e.end();
    };
    EXPECT_TRUE(has(FamilyForm::I1, {.a = 2, .b = 4, .k = 1}, "gcd(a,b)=1 violated"));
    EXPECT_TRUE(has(FamilyForm::I2, {.a = 3, .b = 2, .k = 1}, "b>a violated"));
    EXPECT_TRUE(has(FamilyForm::II2, {.k = 1, .s = 1, .p = 1}, "sp>=2 violated"));
    EXPECT_TRUE(has(FamilyForm::II1, {.s = 1, .p = 1}, "k is required"));
    EXPECT_TRUE(has(FamilyForm::II1, {.k = 1, .s = 1, .p = 1, .n = 2}, "n is not a parameter of II1"));
    EXPECT_TRUE(has(FamilyForm::I1, {.a = 1, .b = 1, .k = 2, .gcoeffs = {1, 2}}, "deg g<=k-1 violated"));
    EXPECT_TRUE(has(FamilyForm::III1, {.n = 0}, "n>=1 violated"));
    EXPECT_TRUE(validate_params(FamilyForm::III2, {}).empty());
    EXPECT_THROW(gen_family(FamilyForm::I1, {.a = 2, .b = 4, .k = 1}), PreconditionError);
}

TEST(SolveG, KnownValues) {
    EXPECT_EQ(solve_g(FamilyForm::II1, {.k = 1, .s = 1, .p = 1}), UVP("1"));
    EXPECT_EQ(solve_g(FamilyForm::II1, {.k = 2, .s = 1, .p = 1}), UVP("1+v"));
    EXPECT_EQ(solve_g(FamilyForm::II2, {.k = 2, .s = 1, .p = 2}), UVP("1-2*v"));
    EXPECT_THROW(solve_g(FamilyForm::I1, {.a = 1, .b = 1, .k = 1}), PreconditionError);
}

// Order-by-order solve against Newton iteration; then v^K divides the numerator.
TEST(SolveG, MatchesNewtonOracleOnSweep) {
    for (const auto& [form, prm] : good_sweep()) {
        SCOPED_TRACE(to_string(form) + " " + prm.key());
        MultiPoly g = solve_g(form, prm);
        EXPECT_EQ(g, g_from(oracle::newton_g(form, prm)));
        FamilyInstance inst = gen_family(form, prm);
        ASSERT_TRUE(inst.g.has_value());
        EXPECT_EQ(*inst.g, g);
        EXPECT_TRUE(defining_relation_holds(inst));
        EXPECT_TRUE(is_real(inst.P));
    }
}

TEST(GenFamily, Examples) {
    auto i1 = gen_family(FamilyForm::I1, {.a = 2, .b = 1, .k = 1});
    EXPECT_EQ(i1.P, UVP("v^2-u*v-1"));
    auto i1g = gen_family(FamilyForm::I1, {.a = 1, .b = 2, .k = 3, .gcoeffs = {Rational(1, 2), 3}});
    EXPECT_EQ(*i1g.g, UVP("1+1/2*v+3*v^2"));
    auto i2 = gen_family(FamilyForm::I2, {.a = 1, .b = 2, .k = 1});
    EXPECT_EQ(i2.P, UVP("1-v*u^2"));

    auto iii1 = gen_family(FamilyForm::III1, {.n = 1});
    EXPECT_EQ(total_degree(iii1.P), 20);
    EXPECT_FALSE(iii1.g.has_value());
    EXPECT_EQ(iii1.aux.at("F"), UVP("4*u*v-4"));

    auto iii2 = gen_family(FamilyForm::III2, {});
    EXPECT_EQ(iii2.aux.at("F"), UVP("-3*u*v+3"));
    EXPECT_EQ(iii2.aux.at("G"), UVP("-3*u^2*v+3*u+4/9"));
    EXPECT_EQ(iii2.aux.at("H"), UVP("-27*u^2*v^2+54*u*v+4*v-27"));
    EXPECT_TRUE(defining_relation_holds(iii2));

    auto ii5 = gen_family(FamilyForm::II5, {.k = 2, .s = 1, .p = 1});
    EXPECT_TRUE(ii5.aux.count("Q"));
}

TEST(Identities, GoodForms) {
    auto ii3 = gen_family(FamilyForm::II3, {.k = 1});
    EXPECT_EQ(ii3.aux.at("H"), UVP("u^2*v+u+4"));
    for (const auto& r : verify_form_identities(ii3)) EXPECT_EQ(r.status, CheckStatus::Pass) << r.id;

    auto ii1 = gen_family(FamilyForm::II1, {.k = 2, .s = 1, .p = 1});
    auto rs = verify_form_identities(ii1);
    EXPECT_EQ(find(rs, "good.II1.identity.k=2,p=1,s=1").status, CheckStatus::Pass);
    for (const auto& r : rs) EXPECT_EQ(r.status, CheckStatus::Pass) << r.id;

    // The unit constant of the k=1 branch is recorded rather than assumed.
    auto ii2 = gen_family(FamilyForm::II2, {.k = 1, .s = 1, .p = 2});
    const auto& cong = find(verify_form_identities(ii2), "good.II2.congruence.k=1,p=2,s=1");
    EXPECT_EQ(cong.status, CheckStatus::Discrepancy);
    EXPECT_EQ(cong.witness.at("constant"), "-1");

    auto ii3k2 = gen_family(FamilyForm::II3, {.k = 2});
    auto r3 = verify_form_identities(ii3k2);
    EXPECT_EQ(find(r3, "good.II3.identity.k=2").status, CheckStatus::Pass);
    EXPECT_EQ(find(r3, "good.II3.H-closed-form.k=2").status, CheckStatus::Discrepancy);
}

TEST(Identities, DegreesOfSporadicForms) {
    auto rs = degree_relations(gen_family(FamilyForm::III1, {.n = 2}));
    EXPECT_EQ(find(rs, "sporadic.III1.degree-closed.n=2").status, CheckStatus::Pass);
    EXPECT_EQ(find(rs, "sporadic.III1.degree-closed.n=2").witness.at("computed"), "28");
    auto r2 = degree_relations(gen_family(FamilyForm::III2, {}));
    const auto& lf = find(r2, "sporadic.III2.leading-form.-");
    EXPECT_NE(lf.status, CheckStatus::Fail);
    EXPECT_FALSE(lf.witness.at("leading_form").empty());
}

TEST(Sporadic, Parametrization) {
    auto [X, Y] = sporadic_parametrization(1, 1);
    EXPECT_EQ(X, parse_laurent("t^4+t^3+1/2*t^2"));
    EXPECT_EQ(Y, parse_laurent("t^-4-t^-5+1/2*t^-6"));
    EXPECT_THROW(sporadic_parametrization(1, 0), PreconditionError);
    EXPECT_THROW(sporadic_parametrization(1), PreconditionError);
    EXPECT_THROW(sporadic_parametrization(2, 1), PreconditionError);
    EXPECT_THROW(sporadic_parametrization(3), PreconditionError);
    for (long n = 1; n <= 3; ++n)
        for (const auto& r : sporadic_identities(1, n)) EXPECT_EQ(r.status, CheckStatus::Pass) << r.id;
    for (const auto& r : sporadic_identities(2)) EXPECT_EQ(r.status, CheckStatus::Pass) << r.id;
}

TEST(Sporadic, Vanishing) {
    auto t = LaurentPoly::t();
    EXPECT_EQ(verify_vanishing(UVP("v^2-u*v-1"), t - pow(t, -1), t).status, CheckStatus::Pass);
    EXPECT_EQ(verify_vanishing(UVP("v^2-u*v"), t - pow(t, -1), t).status, CheckStatus::Fail);
}

TEST(Sporadic, IrreducibilityCap) {
    auto r = sporadic_irreducibility(gen_family(FamilyForm::III1, {.n = 1}), 4);
    EXPECT_EQ(r.status, CheckStatus::Skipped);
}

TEST(Probes, DeltaAndPolar) {
    const GaussianRational i = GaussianRational::i();
    EXPECT_TRUE(delta_membership(P("x+(0+1*i)*y")).member);
    auto d = delta_membership(P("x^2+x*y"));
    EXPECT_FALSE(d.member);
    EXPECT_EQ(d.gcd, P("x^2+x*y"));
    EXPECT_FALSE(delta_membership(P("(1+1*i)*x")).member);
    EXPECT_THROW(delta_membership(MultiPoly(XY)), PreconditionError);

    auto pol = polar_class_trivial(P("(1+1*i)*x+(2+2*i)*y"));
    ASSERT_TRUE(pol.has_value());
    EXPECT_EQ(pol->omega, GaussianRational(1, 1));
    EXPECT_EQ(pol->alpha, P("x+2*y"));
    EXPECT_FALSE(polar_class_trivial(P("x") + P("y") * i).has_value());
}

TEST(Probes, StandardizeCircle) {
    MultiPoly circle = P("x^2+y^2-1");
    auto sc = standardize_circle(circle, P("(0+2*i)*y"), P("x+(0+1*i)*y"), 2);
    EXPECT_EQ(sc.lambda, Rational(1));
    EXPECT_EQ(sc.v1, P("x"));
    EXPECT_EQ(sc.v2, P("y"));
    EXPECT_TRUE(sc.scaled.has_value());
    EXPECT_EQ(compose(PolyPair{sc.v1, sc.v2}, sc.witness.inverse), (PolyPair{P("x"), P("y")}));

    auto conj = standardize_circle(circle, P("(0-2*i)*y"), P("x-(0+1*i)*y"), 2);
    EXPECT_EQ(conj.v2, P("-y"));

    // Scaled circle: 4x^2+4y^2-1 with v = x+iy, u = v - 4 conj(v).
    auto sc4 = standardize_circle(P("4*x^2+4*y^2-1"), P("-3*x+(0+5*i)*y"), P("x+(0+1*i)*y"), 2);
    EXPECT_EQ(sc4.lambda, Rational(4));

    EXPECT_THROW(standardize_circle(P("x^2-y*x-1"), P("y"), P("x"), 2), PreconditionError);  // v real
    EXPECT_THROW(standardize_circle(circle, P("x"), P("x"), 2), PreconditionError);
    EXPECT_THROW(standardize_circle(circle, P("(0+2*i)*y"), P("x+(0+1*i)*y"), 0), PreconditionError);
}

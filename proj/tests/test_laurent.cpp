#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace s1e;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }
const LaurentPoly t = LaurentPoly::t();

}  // namespace

TEST(Laurent, TextAndBasics) {
    LaurentPoly f = L("t^-3+2*t-1/2");
    EXPECT_EQ(f.order(), -3);
    EXPECT_EQ(f.degree(), 1);
    EXPECT_EQ(format_laurent(f), "2*t-1/2+t^-3");
    EXPECT_EQ(L(format_laurent(f).c_str()), f);
    EXPECT_TRUE(L("5*t^-2").is_unit());
    EXPECT_EQ(pow(L("2*t"), -2), L("1/4*t^-2"));
    EXPECT_THROW(pow(L("1+t"), -1), std::domain_error);
}

TEST(Laurent, ConjugateAndGcd) {
    EXPECT_EQ(s1_conjugate(L("(0+1*i)*t^2+3")), L("(0-1*i)*t^-2+3"));
    EXPECT_EQ(laurent_gcd(L("t^3-t"), L("t^-1+t^-2")), L("t+1"));
    EXPECT_EQ(laurent_divide(L("t^2-1"), L("t^-1-t^-2")), L("t^3+t^2"));
    EXPECT_THROW(laurent_divide(L("t^2+1"), L("t+1")), NotDivisible);
}

TEST(Laurent, BivariateEval) {
    auto uv = make_varset({"u", "v"});
    auto X = L("t^4+t^3+1/2*t^2"), Y = L("t^-4-t^-5+1/2*t^-6");
    EXPECT_EQ(bivariate_eval(parse_poly("4*u*v-4", uv), X, Y), L("t^-4"));
    EXPECT_TRUE(bivariate_eval(parse_poly("v^2-u*v-1", uv), L("t-t^-1"), t).is_zero());
    EXPECT_THROW(bivariate_eval(parse_poly("x*y*z", {"x", "y", "z"}), t, t), std::invalid_argument);
}

TEST(Laurent, CuspExtractExamples) {
    LaurentPoly h = L("1+t^-1");
    // f = 8 t^6 h^3 = (2 t^2 h)^3, g = 4 t^4 h^2 = (2 t^2 h)^2
    LaurentPoly H = cusp_extract(L("8*t^6") * pow(h, 3), L("4*t^4") * pow(h, 2), 2, 3);
    EXPECT_EQ(H, L("2*t^2+2*t"));
    EXPECT_THROW(cusp_extract(t, t, 2, 4), PreconditionError);
    EXPECT_THROW(cusp_extract(t, L("t+1"), 1, 1), PreconditionError);
}

// H^b = f and H^a = g for random h, coprime (a, b) and unit twists.
TEST(LaurentProperty, CuspExtractPostconditions) {
    oracle::Gen gen(2024);
    int done = 0;
    while (done < 200) {
        LaurentPoly h = gen.laurent(-2, 2);
        if (h.is_zero()) continue;
        long a = gen.integer(1, 6), b = gen.integer(1, 6);
        if (std::gcd(a, b) != 1) continue;
        LaurentPoly f = pow(h, b), g = pow(h, a);
        if (gen.coin()) {
            // Twist h by a unit lambda t^m: f and g change by lambda^b t^{mb} and lambda^a t^{ma}.
            LaurentPoly unit = LaurentPoly::monomial(gen.nonzero_gaussian(), gen.integer(-3, 3));
            f = f * pow(unit, b);
            g = g * pow(unit, a);
        }
        LaurentPoly H = cusp_extract(f, g, a, b);
        EXPECT_EQ(pow(H, b), f);
        EXPECT_EQ(pow(H, a), g);
        ++done;
    }
}

// Units c t^k with rational c: f * conj(f) is a positive rational.
TEST(LaurentProperty, UnitNormIsPositive) {
    oracle::Gen gen(5);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly f = LaurentPoly::monomial(gen.nonzero_rational(), gen.integer(-6, 6));
        LaurentPoly n = f * s1_conjugate(f);
        ASSERT_TRUE(n.is_unit());
        EXPECT_EQ(n.order(), 0);
        EXPECT_TRUE(n.coeff(0).is_real());
        EXPECT_GT(n.coeff(0).re(), Rational(0));
    }
}

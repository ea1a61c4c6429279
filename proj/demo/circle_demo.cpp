// Walks the standard circle x^2+y^2-1 through the checks used for the real
// circle case, then prints one sporadic parametrization.

#include <iostream>

#include <s1embed/s1embed.hpp>

int main() {
    using namespace s1e;
    auto vs = make_varset({"x", "y"});
    MultiPoly P = parse_poly("x^2+y^2-1", vs);
    MultiPoly u = parse_poly("(0+2*i)*y", vs);
    MultiPoly v = parse_poly("x+(0+1*i)*y", vs);

    std::cout << "P = " << format_poly(P) << "\n";
    std::cout << "v*conj(v)-1 = " << format_poly(v * conjugate(v) - MultiPoly(1)) << "\n";
    auto d = delta_membership(v);
    std::cout << "v in Delta(B): " << (d.member ? "yes" : "no") << ", gcd(v,conj v) = " << format_poly(d.gcd) << "\n";

    auto sc = standardize_circle(P, u, v, 2);
    std::cout << "lambda = " << sc.lambda << ", v1 = " << format_poly(sc.v1) << ", v2 = " << format_poly(sc.v2) << "\n";
    std::cout << sc.identity << "\n";
    std::cout << "inverse of (v1,v2): (" << format_poly(sc.witness.inverse.first) << ", "
              << format_poly(sc.witness.inverse.second) << ")\n";

    auto [X, Y] = sporadic_parametrization(1, 1);
    auto inst = gen_family(FamilyForm::III1, FamilyParams{.n = 1});
    std::cout << "family 1, n=1: X = " << format_laurent(X) << ", Y = " << format_laurent(Y) << "\n";
    std::cout << "deg P = " << total_degree(inst.P) << ", P(X,Y) = " << format_laurent(bivariate_eval(inst.P, X, Y))
              << "\n";
}

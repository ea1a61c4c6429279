// Acceptance criteria 1-10. `acceptance` runs all of them; `acceptance N`
// runs criterion N only and exits nonzero when it fails. Criterion 10 also
// runs the CLI twice when its path is given as a second argument.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/oracles.hpp"

using namespace s1e;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string params_text(FamilyForm f, const FamilyParams& p) { return to_string(f) + "(" + p.key() + ")"; }

std::vector<std::pair<FamilyForm, FamilyParams>> good_sweep(const SuiteConfig& cfg = {}) {
    std::vector<std::pair<FamilyForm, FamilyParams>> out;
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

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& name) {
    for (const auto& r : rs) {
        auto first = r.id.find('.'), second = r.id.find('.', first + 1), third = r.id.find('.', second + 1);
        if (r.id.substr(second + 1, third - second - 1) == name) return &r;
    }
    return nullptr;
}

Outcome criterion1() {
    Outcome o;
    auto xy = make_varset({"x", "y"});
    auto P = [&](const char* s) { return parse_poly(s, xy); };
    MultiPoly v = P("x+(0+1*i)*y"), vb = conjugate(v);
    o.require(v * vb - MultiPoly(1) == P("x^2+y^2-1"), "(x+iy)(x-iy)-1=x^2+y^2-1");
    o.require(mv_gcd(v, vb) == P("1"), "gcd(x+iy,x-iy)=1");
    o.require(is_real(P("x^2+y^2-1")), "is_real(x^2+y^2-1)");
    o.require(delta_membership(v).member, "x+iy in Delta");
    try {
        auto sc = standardize_circle(P("x^2+y^2-1"), P("(0+2*i)*y"), v, 2);
        o.require(sc.lambda == Rational(1), "lambda=1");
        o.require(sc.v1 == P("x") && sc.v2 == P("y"), "(v1,v2)=(x,y)");
        PolyPair id{P("x"), P("y")};
        o.require(compose(sc.witness.forward, sc.witness.inverse) == id &&
                      compose(sc.witness.inverse, sc.witness.forward) == id,
                  "coordinate-pair witness composes to the identity");
        o.note("lambda=" + sc.lambda.str() + ", v1=" + format_poly(sc.v1) + ", v2=" + format_poly(sc.v2));
    } catch (const std::exception& e) {
        o.require(false, std::string("standardize_circle threw: ") + e.what());
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    const LaurentPoly one(1), t = LaurentPoly::t();
    for (long n = 1; n <= 3; ++n) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        auto [X, Y] = sporadic_parametrization(1, n);
        LaurentPoly F = LaurentPoly(4) * (X * Y - one);
        LaurentPoly XF = X * pow(F, n + 1);
        o.require(F == pow(t, -4), tag + "F=t^-4");
        o.require(LaurentPoly(Rational(1, 2)) * (XF - Y) == pow(t, -2 * n - 3), tag + "(1/2)(XF^{n+1}-Y)=t^{-2n-3}");
        o.require((pow(Y - XF, 4) - LaurentPoly(16) * pow(F, 2 * n + 3)).is_zero(), tag + "(Y-XF^{n+1})^4-16F^{2n+3}=0");
        auto inst = gen_family(FamilyForm::III1, FamilyParams{.n = n});
        o.require(bivariate_eval(inst.P, X, Y).is_zero(), tag + "P(X,Y)=0");
        const MultiPoly u = MultiPoly::variable(family_varset(), "u"), v = MultiPoly::variable(family_varset(), "v");
        const MultiPoly& Fp = inst.aux.at("F");
        MultiPoly g = mv_gcd(v - u * pow(Fp, static_cast<unsigned long>(n + 1)), Fp);
        o.require(g.is_constant(), tag + "gcd(v-uF^{n+1},F)=1, got " + format_poly(g));
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    const LaurentPoly one(1), t = LaurentPoly::t();
    auto [X, Y] = sporadic_parametrization(2);
    LaurentPoly F = LaurentPoly(-3) * (X * Y - one);
    LaurentPoly G = X * F + LaurentPoly(Rational(4, 9));
    LaurentPoly H = LaurentPoly(4) * Y - LaurentPoly(3) * F * F;
    o.require(H == pow(t, -6), "H=t^-6");
    o.require(LaurentPoly(3) * (X - G * G) * H - LaurentPoly(3) * (one - F * G) == pow(t, -2), "3(X-G^2)H-3(1-FG)=t^-2");
    o.require(bivariate_eval(gen_family(FamilyForm::III2, {}).P, X, Y).is_zero(), "P(X,Y)=0");
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& [form, prm] : good_sweep()) {
        const std::string tag = params_text(form, prm);
        try {
            MultiPoly g = solve_g(form, prm);
            MultiPoly expect(family_varset());
            const MultiPoly v = MultiPoly::variable(family_varset(), "v");
            auto c = oracle::newton_g(form, prm);
            for (std::size_t j = 0; j < c.size(); ++j) expect += pow(v, j) * GaussianRational(c[j]);
            o.require(g == expect, tag + ": g=" + format_poly(g) + " but the oracle gives " + format_poly(expect));
            // gen_family divides the numerator by v^K exactly and throws otherwise.
            auto inst = gen_family(form, prm);
            o.require(defining_relation_holds(inst), tag + ": defining relation");
        } catch (const std::exception& e) {
            o.require(false, tag + ": " + e.what());
        }
        ++n;
    }
    const MultiPoly one = MultiPoly::constant(family_varset(), 1);
    const MultiPoly v = MultiPoly::variable(family_varset(), "v");
    o.require(solve_g(FamilyForm::II1, {.k = 1, .s = 1, .p = 1}) == one, "II1 k=1: g=1");
    o.require(solve_g(FamilyForm::II1, {.k = 2, .s = 1, .p = 1}) == one + v, "II1 s=p=1 k=2: g=1+v");
    o.require(solve_g(FamilyForm::II2, {.k = 2, .s = 1, .p = 2}) == one - MultiPoly(2) * v, "II2 s=1 p=2 k=2: g=1-2v");
    o.note(std::to_string(n) + " parameter sets");
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::size_t checks = 0, recorded = 0;
    for (const auto& [form, prm] : good_sweep()) {
        const std::string tag = params_text(form, prm);
        auto rs = verify_form_identities(gen_family(form, prm));
        checks += rs.size();
        for (const auto& r : rs) o.require(r.status != CheckStatus::Fail, r.id + " " + r.details);
        auto must_pass = [&](const char* name) {
            const CheckResult* r = find(rs, name);
            o.require(r && r->status == CheckStatus::Pass, tag + " " + name);
        };
        long s = prm.s.value_or(0), p = prm.p.value_or(0), k = *prm.k;
        if (form == FamilyForm::II1 && s == 1 && p == 1) must_pass("identity");
        if (form == FamilyForm::II2 && s == 2 && p == 1) must_pass("identity");
        if (form == FamilyForm::II2 && s == 1 && p == 2 && k >= 2) {
            must_pass("H-polynomial");
            must_pass("identity");
        }
        if (form == FamilyForm::II2 && s == 1 && p == 2 && k == 1) {
            const CheckResult* r = find(rs, "congruence");
            o.require(r && r->witness.count("constant"), tag + " congruence constant recorded");
            if (r) {
                o.note(tag + " h(1+u) mod P = " + r->witness.at("constant") + " (" + to_string(r->status) + ")");
                ++recorded;
            }
        }
        if (form == FamilyForm::II3) {
            must_pass("H-polynomial");
            must_pass("identity");
            const CheckResult* closed = find(rs, "H-closed-form");
            if (closed && closed->status != CheckStatus::Pass) {
                o.note(tag + " H=uF+4 recorded as " + to_string(closed->status));
                ++recorded;
            }
        }
    }
    o.note(std::to_string(checks) + " identity checks, " + std::to_string(recorded) + " recorded mismatches");
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto sweep = good_sweep();
    for (long n = 1; n <= SuiteConfig{}.max_n; ++n) sweep.push_back({FamilyForm::III1, FamilyParams{.n = n}});
    std::size_t total = 0, bad = 0;
    for (const auto& [form, prm] : sweep) {
        for (const auto& r : degree_relations(gen_family(form, prm))) {
            ++total;
            if (r.status != CheckStatus::Pass) {
                ++bad;
                o.require(false, r.id + " (" + r.claim + "): " + r.details);
            }
        }
    }
    o.note(std::to_string(total - bad) + "/" + std::to_string(total) + " degree relations hold for II1-II5 and III1");
    auto rs = degree_relations(gen_family(FamilyForm::III2, {}));
    const CheckResult* lf = find(rs, "leading-form");
    const CheckResult* dg = find(rs, "degree");
    o.require(lf && dg, "III2 degree and leading-form verdicts computed");
    if (lf && dg)
        o.note("III2 verdict: degree " + to_string(dg->status) + " (" + dg->details + "), leading form " +
               to_string(lf->status) + " (" + lf->witness.at("leading_form") + ")");
    return o;
}

Outcome criterion7() {
    Outcome o;
    auto xy = make_varset({"x", "y"});
    o.require(is_irreducible(parse_poly("x*y-1", xy)), "xy-1 irreducible");
    o.require(!is_irreducible(parse_poly("x^2+y^2", xy)), "x^2+y^2 reducible over Q(i)");

    auto inst = gen_family(FamilyForm::III1, FamilyParams{.n = 1});
    auto f = factor_bivariate(inst.P);
    MultiPoly prod = MultiPoly::constant(inst.P.varset(), f.unit);
    for (const auto& g : f.factors) prod *= g;
    o.require(f.irreducible(), "III1 n=1 (degree " + std::to_string(total_degree(inst.P)) + ") irreducible; found " +
                                   std::to_string(f.factors.size()) + " factors");
    if (!f.irreducible()) {
        o.note("product of factors equals P: " + std::string(prod == inst.P ? "yes" : "no"));
        auto [X, Y] = sporadic_parametrization(1, 1);
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            o.note("factor " + std::to_string(i + 1) + " (degree " + std::to_string(total_degree(f.factors[i])) +
                   (bivariate_eval(f.factors[i], X, Y).is_zero() ? ", vanishes on (X(t),Y(t))" : "") +
                   "): " + format_poly(f.factors[i]));
    }

    oracle::Gen gen(77);
    std::size_t cases = 0, agree = 0;
    while (cases < 200) {
        MultiPoly p(xy);
        if (gen.coin(0.5)) {
            MultiPoly a = gen.poly(xy, 2, 3, false, true), b = gen.poly(xy, 2, 3, false, true);
            if (a.is_constant() || b.is_constant()) continue;
            p = a * b;
        } else {
            p = gen.poly(xy, 4, 5, false, true);
        }
        if (p.is_constant() || monomial_degree(p.leading_monomial()) > 4) continue;
        bool oracle = oracle::kronecker_reducible(p);
        bool ours = !is_irreducible(p);
        if (oracle == ours)
            ++agree;
        else
            o.require(false, "disagreement on " + format_poly(p));
        ++cases;
    }
    o.note(std::to_string(agree) + "/" + std::to_string(cases) + " corpus polynomials agree with the oracle");
    return o;
}

Outcome criterion8() {
    Outcome o;
    oracle::Gen gen(8);
    auto xy = make_varset({"x", "y"});
    std::size_t deg_cases = 0;
    while (deg_cases < 1000) {
        MultiPoly f = gen.poly(xy, 6, 5);
        if (f.is_zero()) continue;
        o.require(total_degree(conjugate(f)) == total_degree(f), "deg conj f = deg f for " + format_poly(f));
        ++deg_cases;
    }
    std::size_t cusp_cases = 0, twisted = 0;
    while (cusp_cases < 200) {
        LaurentPoly h = gen.laurent(-2, 2);
        long a = gen.integer(1, 6), b = gen.integer(1, 6);
        if (h.is_zero() || std::gcd(a, b) != 1) continue;
        LaurentPoly f = pow(h, b), g = pow(h, a);
        if (gen.coin()) {
            LaurentPoly unit = LaurentPoly::monomial(gen.nonzero_gaussian(), gen.integer(-3, 3));
            f = f * pow(unit, b);
            g = g * pow(unit, a);
            ++twisted;
        }
        try {
            LaurentPoly H = cusp_extract(f, g, a, b);
            o.require(pow(H, b) == f && pow(H, a) == g, "cusp postcondition");
        } catch (const std::exception& e) {
            o.require(false, std::string("cusp_extract threw: ") + e.what());
        }
        ++cusp_cases;
    }
    for (int i = 0; i < 200; ++i) {
        LaurentPoly f = LaurentPoly::monomial(gen.nonzero_rational(), gen.integer(-6, 6));
        LaurentPoly n = f * s1_conjugate(f);
        o.require(n.is_unit() && n.order() == 0 && n.coeff(0).is_real() && n.coeff(0).re().sign() > 0,
                  "f*conj(f) positive for " + format_laurent(f));
    }
    o.note(std::to_string(deg_cases) + " degree cases, " + std::to_string(cusp_cases) + " cusp cases (" +
           std::to_string(twisted) + " unit-twisted), 200 unit norms");
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto vs = torus_varset();
    o.require(torus_normal_form(parse_poly("4*a-x^2-y^2-b^2+5", vs)).is_zero(), "NF(4a-(x^2+y^2+b^2-5))=0");
    auto E = torus_eliminant();
    auto pts = torus_sample_points(24);
    std::size_t zero = 0;
    for (const auto& p : pts) zero += evaluate(E.eliminant, p).is_zero();
    o.require(pts.size() >= 20 && zero == pts.size(), "eliminant vanishes on the sample points");
    for (const auto& c : torus_grading_check()) o.require(c.status == CheckStatus::Pass, c.id);
    const CheckResult* disp = nullptr;
    for (const auto& c : E.checks)
        if (c.id == "torus.eliminant.vs-displayed.-") disp = &c;
    o.require(disp && (disp->status == CheckStatus::Pass || disp->status == CheckStatus::Discrepancy),
              "definitive verdict on (x^2+y^2+b^2)^2=16(x^2+y^2)");
    if (disp) o.note("displayed equation: " + to_string(disp->status) + "; computed " + format_poly(E.eliminant));
    o.note(std::to_string(zero) + "/" + std::to_string(pts.size()) + " sample points");
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion10(const char* cli) {
    Outcome o;
    std::string a = to_json(run_paper_suite()).dump(2), b = to_json(run_paper_suite()).dump(2);
    o.require(a == b, "two in-process runs give identical JSON");
    o.note("in-process report: " + std::to_string(a.size()) + " bytes");
    if (cli) {
        std::string r1 = "acceptance_report1.json", r2 = "acceptance_report2.json";
        int c1 = std::system((std::string(cli) + " verify-paper --out " + r1).c_str());
        int c2 = std::system((std::string(cli) + " verify-paper --out " + r2).c_str());
        o.require(c1 == 0 && c2 == 0, "CLI runs exit 0");
        std::string s1 = slurp(r1), s2 = slurp(r2);
        o.require(!s1.empty() && s1 == s2, "two CLI runs give byte-identical reports");
        o.note("CLI report: " + std::to_string(s1.size()) + " bytes");
        std::remove(r1.c_str());
        std::remove(r2.c_str());
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    const char* cli = argc > 2 ? argv[2] : nullptr;
    const std::vector<std::function<Outcome()>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, [cli] { return criterion10(cli); }};
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "usage: acceptance [1-10] [path-to-cli]\n";
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", secs);
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << buf << " s)\n";
        for (const auto& n : o.notes) std::cout << "  " << n << "\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}

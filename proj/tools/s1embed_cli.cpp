// Command-line front end for the s1embed library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <s1embed/s1embed.hpp>

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads the file when the argument names one, else uses the text itself.
std::string read_input(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (seps.find(c) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

void print(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

struct FamilyArgs {
    std::string form;
    std::optional<long> a, b, k, s, p, n;
    std::string gcoeffs;

    s1e::FamilyParams params() const {
        s1e::FamilyParams prm{a, b, k, s, p, n, {}};
        for (const auto& c : split(gcoeffs, ",")) prm.gcoeffs.push_back(s1e::Rational::parse(trim(c)));
        return prm;
    }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool with_ab) {
    cmd->add_option("--form", fa.form, "form tag: I1 I2 II1..II5 III1 III2")->required();
    if (with_ab) {
        cmd->add_option("--a", fa.a);
        cmd->add_option("--b", fa.b);
    }
    cmd->add_option("--k", fa.k);
    cmd->add_option("--s", fa.s);
    cmd->add_option("--p", fa.p);
    if (with_ab) {
        cmd->add_option("--n", fa.n);
        cmd->add_option("--gcoeffs", fa.gcoeffs, "free coefficients of g, comma separated");
    }
}

int run_gen(const FamilyArgs& fa, bool as_json) {
    auto form = s1e::parse_family_form(fa.form);
    auto inst = s1e::gen_family(form, fa.params());
    std::string text = "P = " + s1e::format_poly(inst.P) + "\n";
    if (inst.g) text += "g = " + s1e::format_poly(*inst.g) + "\n";
    for (const auto& [name, poly] : inst.aux) text += name + " = " + s1e::format_poly(poly) + "\n";
    print(s1e::to_json(inst), as_json, text);
    return 0;
}

int run_solve_g(const FamilyArgs& fa, bool as_json) {
    auto form = s1e::parse_family_form(fa.form);
    auto g = s1e::solve_g(form, fa.params());
    print(json{{"form", fa.form}, {"g", s1e::format_poly(g)}}, as_json, s1e::format_poly(g) + "\n");
    return 0;
}

int run_check(const std::string& what, const std::string& input, const std::string& vars, const std::string& field,
              long cap, bool as_json) {
    auto names = split(vars, ",");
    auto vs = s1e::make_varset(names);
    auto parts = split(read_input(input), ";\n");
    for (auto& p : parts) p = trim(p);
    parts.erase(std::remove(parts.begin(), parts.end(), std::string{}), parts.end());
    if (parts.empty()) throw UsageError("empty input");
    std::vector<s1e::MultiPoly> polys;
    for (const auto& p : parts) polys.push_back(s1e::parse_poly(p, vs));
    if (what == "coordpair" ? polys.size() != 2 : polys.size() != 1)
        throw UsageError(what == "coordpair" ? "coordpair needs two polynomials separated by ';'"
                                             : "expected a single polynomial");
    const auto& f = polys[0];
    json j{{"check", what}, {"input", parts}};
    std::string text;
    bool verdict = false;
    if (what == "real") {
        verdict = s1e::is_real(f);
        text = verdict ? "real\n" : "not real\n";
    } else if (what == "delta") {
        auto d = s1e::delta_membership(f);
        verdict = d.member;
        j["gcd"] = s1e::format_poly(d.gcd);
        text = std::string(verdict ? "in Delta(B)" : "not in Delta(B)") + ", gcd(f,conj f) = " + s1e::format_poly(d.gcd) + "\n";
    } else if (what == "irreducible") {
        s1e::IrreducibilityOptions opt;
        if (field == "q")
            opt.field = s1e::CoefficientField::Rationals;
        else if (field != "qi")
            throw UsageError("--field must be q or qi");
        opt.degree_cap = cap;
        auto fac = s1e::factor_bivariate(f, opt);
        verdict = fac.irreducible();
        j["unit"] = s1e::to_string(fac.unit);
        j["factors"] = json::array();
        text = verdict ? "irreducible\n" : "reducible\n";
        text += "unit " + s1e::to_string(fac.unit) + "\n";
        for (const auto& g : fac.factors) {
            j["factors"].push_back(s1e::format_poly(g));
            text += "  " + s1e::format_poly(g) + "\n";
        }
    } else if (what == "coordpair") {
        auto w = s1e::is_coordinate_pair(polys[0], polys[1]);
        verdict = w.has_value();
        text = verdict ? "coordinate pair\n" : "not a coordinate pair\n";
        if (w) {
            std::string inv = s1e::format_poly(w->inverse.first) + ";" + s1e::format_poly(w->inverse.second);
            j["inverse"] = {s1e::format_poly(w->inverse.first), s1e::format_poly(w->inverse.second)};
            text += "inverse " + inv + "\n";
        }
    } else if (what == "polar") {
        auto pc = s1e::polar_class_trivial(f);
        verdict = pc.has_value();
        if (pc) {
            j["omega"] = s1e::to_string(pc->omega);
            j["alpha"] = s1e::format_poly(pc->alpha);
            text = "trivial: omega = " + s1e::to_string(pc->omega) + ", alpha = " + s1e::format_poly(pc->alpha) + "\n";
        } else {
            text = "nontrivial\n";
        }
    } else {
        throw UsageError("unknown check '" + what + "'");
    }
    j["verdict"] = verdict;
    print(j, as_json, text);
    return verdict ? 0 : 1;
}

int run_eval(const std::string& poly, const std::string& X, const std::string& Y, const std::string& vars, bool as_json) {
    auto P = s1e::parse_poly(poly, split(vars, ","));
    auto r = s1e::bivariate_eval(P, s1e::parse_laurent(X), s1e::parse_laurent(Y));
    std::string out = s1e::format_laurent(r);
    print(json{{"P(X,Y)", out}}, as_json, out + "\n");
    return 0;
}

int run_torus(bool as_json) {
    auto E = s1e::torus_eliminant();
    const s1e::CheckResult* verdict = nullptr;
    for (const auto& c : E.checks)
        if (c.id == "torus.eliminant.vs-displayed.-") verdict = &c;
    json j{{"eliminant", s1e::format_poly(E.eliminant)},
           {"displayed", s1e::format_poly(E.displayed)},
           {"revolution", s1e::format_poly(E.textbook)},
           {"checks", json::array()}};
    std::string text = "computed eliminant: " + s1e::format_poly(E.eliminant) + "\n" +
                       "displayed equation: " + s1e::format_poly(E.displayed) + "\n" +
                       "verdict: " + s1e::to_string(verdict->status) + "\n";
    bool fail = false;
    for (const auto& c : E.checks) {
        j["checks"].push_back(s1e::to_json(c));
        text += "  " + c.id + ": " + s1e::to_string(c.status) + "\n";
        fail = fail || c.status == s1e::CheckStatus::Fail;
    }
    print(j, as_json, text);
    return fail ? 1 : 0;
}

int run_verify(const s1e::SuiteConfig& cfg, const std::string& out_path) {
    auto report = s1e::run_paper_suite(cfg);
    std::string body = s1e::to_json(report).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << body;
        for (const auto& [k, v] : report.summary()) std::cout << k << ": " << v << "\n";
    }
    return report.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the polynomial embeddings of the real circle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(s1e::kVersion));
    bool as_json = false;

    FamilyArgs gen_args;
    auto* gen = app.add_subcommand("gen", "construct a family instance");
    add_family_options(gen, gen_args, true);
    gen->add_flag("--json", as_json);

    FamilyArgs sg_args;
    auto* sg = app.add_subcommand("solve-g", "solve for g in a good-asymptote form");
    add_family_options(sg, sg_args, false);
    sg->add_flag("--json", as_json);

    std::string check_kind, check_input, check_vars = "x,y", check_field = "qi";
    long check_cap = 24;
    auto* check = app.add_subcommand("check", "run a single predicate on a polynomial");
    check->add_option("kind", check_kind, "real | delta | irreducible | coordpair | polar")
        ->required()
        ->check(CLI::IsMember({"real", "delta", "irreducible", "coordpair", "polar"}));
    check->add_option("--input", check_input, "polynomial text or file; coordpair takes 'f;g'")->required();
    check->add_option("--vars", check_vars, "comma separated variable names");
    check->add_option("--field", check_field, "q or qi (irreducible only)");
    check->add_option("--irred-cap", check_cap, "degree cap for irreducibility");
    check->add_flag("--json", as_json);

    std::string eval_poly, eval_X, eval_Y, eval_vars = "u,v";
    auto* ev = app.add_subcommand("eval", "evaluate P(X(t), Y(t)) for Laurent X, Y");
    ev->add_option("--poly", eval_poly)->required();
    ev->add_option("--X", eval_X)->required();
    ev->add_option("--Y", eval_Y)->required();
    ev->add_option("--vars", eval_vars, "the two variable names of P");
    ev->add_flag("--json", as_json);

    auto* torus = app.add_subcommand("torus", "eliminant of the circle bundle and its comparison");
    torus->add_flag("--json", as_json);

    s1e::SuiteConfig cfg;
    std::string section, out_path;
    auto* verify = app.add_subcommand("verify-paper", "run the full check suite and emit a JSON report");
    verify->add_option("--section", section, "prelim | very-good | good | sporadic | torus")
        ->check(CLI::IsMember(s1e::suite_sections()));
    verify->add_option("--max-a,--max-ab", cfg.max_ab, "bound on a and b")->check(CLI::PositiveNumber);
    verify->add_option("--max-k", cfg.max_k)->check(CLI::PositiveNumber);
    verify->add_option("--max-sp", cfg.max_sp)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", cfg.max_n)->check(CLI::PositiveNumber);
    verify->add_option("--irred-cap", cfg.irred_cap)->check(CLI::NonNegativeNumber);
    verify->add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) return run_gen(gen_args, as_json);
        if (*sg) return run_solve_g(sg_args, as_json);
        if (*check) return run_check(check_kind, check_input, check_vars, check_field, check_cap, as_json);
        if (*ev) return run_eval(eval_poly, eval_X, eval_Y, eval_vars, as_json);
        if (*torus) return run_torus(as_json);
        if (*verify) {
            if (!section.empty()) cfg.section = section;
            return run_verify(cfg, out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

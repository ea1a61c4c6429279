#pragma once

/**
 * @file family.hpp
 * @brief The classified families of C*-embeddings: parameters, the g solver,
 * and construction of P over [u,v].
 */

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../algebra/divide.hpp"
#include "../exactnum.hpp"
#include "../poly.hpp"
#include "../poly_io.hpp"
#include "../upoly.hpp"

namespace s1e {

enum class FamilyForm { I1, I2, II1, II2, II3, II4, II5, III1, III2 };

inline const std::vector<FamilyForm>& all_forms() {
    static const std::vector<FamilyForm> forms{FamilyForm::I1,  FamilyForm::I2,  FamilyForm::II1,
                                               FamilyForm::II2, FamilyForm::II3, FamilyForm::II4,
                                               FamilyForm::II5, FamilyForm::III1, FamilyForm::III2};
    return forms;
}

inline std::string to_string(FamilyForm f) {
    static const char* names[] = {"I1", "I2", "II1", "II2", "II3", "II4", "II5", "III1", "III2"};
    return names[static_cast<int>(f)];
}

inline FamilyForm parse_family_form(const std::string& tag) {
    for (auto f : all_forms())
        if (to_string(f) == tag) return f;
    throw PreconditionError("unknown form tag '" + tag + "'");
}

inline bool is_good_form(FamilyForm f) { return f >= FamilyForm::II1 && f <= FamilyForm::II5; }

struct FamilyParams {
    std::optional<long> a, b, k, s, p, n;
    std::vector<Rational> gcoeffs;

    /// "a=2,b=1,k=1" style key, fields in alphabetical order.
    std::string key() const {
        std::string out;
        auto put = [&](const char* name, const std::optional<long>& x) {
            if (!x) return;
            if (!out.empty()) out += ",";
            out += std::string(name) + "=" + std::to_string(*x);
        };
        put("a", a);
        put("b", b);
        if (!gcoeffs.empty()) {
            if (!out.empty()) out += ",";
            out += "g=";
            for (std::size_t i = 0; i < gcoeffs.size(); ++i) out += (i ? ";" : "") + gcoeffs[i].str();
        }
        put("k", k);
        put("n", n);
        put("p", p);
        put("s", s);
        return out;
    }
};

/// Every violated side condition of the form; empty when the parameters are valid.
inline std::vector<std::string> validate_params(FamilyForm form, const FamilyParams& prm) {
    std::vector<std::string> errors;
    struct Field {
        const char* name;
        const std::optional<long>* value;
    };
    const Field fields[] = {{"a", &prm.a}, {"b", &prm.b}, {"k", &prm.k}, {"s", &prm.s}, {"p", &prm.p}, {"n", &prm.n}};
    std::string needed;
    switch (form) {
        case FamilyForm::I1:
        case FamilyForm::I2: needed = "abk"; break;
        case FamilyForm::II1:
        case FamilyForm::II2:
        case FamilyForm::II4:
        case FamilyForm::II5: needed = "ksp"; break;
        case FamilyForm::II3: needed = "k"; break;
        case FamilyForm::III1: needed = "n"; break;
        case FamilyForm::III2: break;
    }
    for (const auto& f : fields) {
        bool want = needed.find(f.name[0]) != std::string::npos;
        if (want && !*f.value) errors.push_back(std::string(f.name) + " is required");
        if (!want && *f.value) errors.push_back(std::string(f.name) + " is not a parameter of " + to_string(form));
        if (want && *f.value && **f.value < 1) errors.push_back(std::string(f.name) + ">=1 violated");
    }
    if (!errors.empty()) return errors;

    bool takes_g = form == FamilyForm::I1 || form == FamilyForm::I2;
    if (!takes_g && !prm.gcoeffs.empty()) errors.push_back("g is not free data for " + to_string(form));
    switch (form) {
        case FamilyForm::I1:
        case FamilyForm::I2: {
            long a = *prm.a, b = *prm.b, k = *prm.k;
            if (std::gcd(a, b) != 1) errors.push_back("gcd(a,b)=1 violated");
            if (form == FamilyForm::I2 && b <= a) errors.push_back("b>a violated");
            // I1: g = 1 + c1 v + ... + c_{k-1} v^{k-1}; I2: g = c0 + ... + c_{k-2} v^{k-2}.
            if (static_cast<long>(prm.gcoeffs.size()) > k - 1)
                errors.push_back(form == FamilyForm::I1 ? "deg g<=k-1 violated" : "deg g<=k-2 violated");
            break;
        }
        case FamilyForm::II2:
            if (*prm.s * *prm.p < 2) errors.push_back("sp>=2 violated");
            break;
        default: break;
    }
    return errors;
}

inline VarSetPtr family_varset() {
    static const VarSetPtr vs = make_varset({"u", "v"});
    return vs;
}

struct FamilyInstance {
    FamilyForm form;
    FamilyParams params;
    MultiPoly P;
    std::optional<MultiPoly> g;  // absent for the sporadic forms
    std::map<std::string, MultiPoly> aux;
};

namespace detail {

/// Truncated power series in v with coefficients in Q[c], c the unknown.
class CSeries {
public:
    using Coeff = UPoly<Rational>;
    explicit CSeries(std::size_t len, Coeff c0 = {}) : c_(len) {
        if (len) c_[0] = std::move(c0);
    }
    static CSeries v(std::size_t len) {
        CSeries r(len);
        if (len > 1) r.c_[1] = Coeff(Rational(1));
        return r;
    }
    Coeff& operator[](std::size_t i) { return c_[i]; }
    const Coeff& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }

    friend CSeries operator+(CSeries a, const CSeries& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend CSeries operator-(CSeries a, const CSeries& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend CSeries operator*(const CSeries& a, const CSeries& b) {
        CSeries r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; i + j < a.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

private:
    std::vector<Coeff> c_;
};

inline CSeries pow(const CSeries& base, unsigned long e) {
    CSeries r(base.size(), CSeries::Coeff(Rational(1)));
    CSeries b = base;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

/// Right-hand side N(F, v) of v^K P = N for the good-asymptote forms.
template <class R, class Cst>
R defining_numerator(FamilyForm form, const FamilyParams& prm, const R& F, const R& v, Cst cst) {
    auto s = static_cast<unsigned long>(prm.s.value_or(1)), p = static_cast<unsigned long>(prm.p.value_or(1));
    switch (form) {
        case FamilyForm::II1: return pow(v + pow(F, s), p) - pow(F, s * p + 1);
        case FamilyForm::II2: return pow(v + pow(F, s), p) - pow(F, s * p - 1);
        case FamilyForm::II3:
            return v - cst(16) * v * v + cst(4) * v * F - cst(8) * v * F * F + pow(F, 3) - pow(F, 4);
        case FamilyForm::II4: return pow(cst(1) + v * pow(F, s + 1), p) * F - cst(1);
        case FamilyForm::II5: return pow(cst(1) + v * pow(F, s + 1), p) - F;
        default: throw PreconditionError("no defining numerator for " + to_string(form));
    }
}

// Power of v dividing the numerator, which is also the power of v in F = u v^K + g.
inline long v_power(FamilyForm form, const FamilyParams& prm) {
    return form == FamilyForm::II4 || form == FamilyForm::II5 ? *prm.k - 1 : *prm.k;
}

inline void require_valid(FamilyForm form, const FamilyParams& prm) {
    auto errors = validate_params(form, prm);
    if (errors.empty()) return;
    std::string msg = to_string(form) + ": ";
    for (std::size_t i = 0; i < errors.size(); ++i) msg += (i ? "; " : "") + errors[i];
    throw PreconditionError(msg);
}

inline MultiPoly poly_in_v(const std::vector<Rational>& c, std::size_t first_power = 0) {
    const auto vs = family_varset();
    MultiPoly g(vs);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Monomial m{};
        m[1] = static_cast<std::uint32_t>(i + first_power);
        g.add_term(m, c[i]);
    }
    return g;
}

}  // namespace detail

/// The unique g of a good-asymptote form, solved order by order in v.
inline MultiPoly solve_g(FamilyForm form, const FamilyParams& prm) {
    if (!is_good_form(form)) throw PreconditionError("solve_g applies to forms II1-II5, not " + to_string(form));
    detail::require_valid(form, prm);
    const long K = detail::v_power(form, prm);
    const bool fixed_c0 = form != FamilyForm::II4 && form != FamilyForm::II5;
    using Coeff = detail::CSeries::Coeff;
    std::vector<Rational> c;
    for (long j = 0; j < K; ++j) {
        const auto len = static_cast<std::size_t>(j + 1);
        detail::CSeries g(len);
        for (long i = 0; i < j; ++i) g[static_cast<std::size_t>(i)] = Coeff(c[static_cast<std::size_t>(i)]);
        // Mod v^{j+1} the u v^K term of F vanishes, so F is g here.
        g[len - 1] = (j == 0 && fixed_c0) ? Coeff(Rational(1)) : Coeff::x();
        auto cst = [len](long x) { return detail::CSeries(len, Coeff(Rational(x))); };
        Coeff e = detail::defining_numerator(form, prm, g, detail::CSeries::v(len), cst)[len - 1];
        const std::string where = to_string(form) + " solve_g at order " + std::to_string(j) + ": ";
        if (j == 0 && fixed_c0) {
            if (!e.is_zero()) throw std::runtime_error(where + "g(0)=1 does not satisfy the order-0 condition");
            c.emplace_back(1);
            continue;
        }
        if (e.degree() != 1) {
            if (e.is_zero()) throw std::runtime_error(where + "condition is vacuous, g not unique");
            if (e.degree() == 0) throw std::runtime_error(where + "no solution");
            throw std::runtime_error(where + "condition is not linear in the unknown coefficient");
        }
        c.push_back(-e.coeff(0) / e.coeff(1));
    }
    return detail::poly_in_v(c);
}

/// Builds P with its auxiliary polynomials; the defining relation is re-checked
/// by exact division before returning.
inline FamilyInstance gen_family(FamilyForm form, const FamilyParams& prm) {
    detail::require_valid(form, prm);
    const auto vs = family_varset();
    const MultiPoly u = MultiPoly::variable(vs, "u"), v = MultiPoly::variable(vs, "v");
    auto vpow = [&](long e) { return pow(v, static_cast<unsigned long>(e)); };
    FamilyInstance inst{form, prm, MultiPoly(vs), std::nullopt, {}};

    switch (form) {
        case FamilyForm::I1: {
            std::vector<Rational> c{Rational(1)};
            c.insert(c.end(), prm.gcoeffs.begin(), prm.gcoeffs.end());
            MultiPoly g = detail::poly_in_v(c);
            MultiPoly F = u * vpow(*prm.k) + g;
            inst.P = vpow(*prm.a) - pow(F, static_cast<unsigned long>(*prm.b));
            inst.g = g;
            inst.aux.emplace("F", F);
            break;
        }
        case FamilyForm::I2: {
            MultiPoly g = detail::poly_in_v(prm.gcoeffs);
            MultiPoly F = u * vpow(*prm.k - 1) + g;
            inst.P = MultiPoly::constant(vs, 1) - vpow(*prm.b - *prm.a) * pow(F, static_cast<unsigned long>(*prm.b));
            inst.g = g;
            inst.aux.emplace("F", F);
            break;
        }
        case FamilyForm::III1: {
            auto n = static_cast<unsigned long>(*prm.n);
            MultiPoly F = MultiPoly(4) * (u * v - MultiPoly(1));
            inst.P = pow(v - u * pow(F, n + 1), 4) - MultiPoly(16) * pow(F, 2 * n + 3);
            inst.aux.emplace("F", F);
            break;
        }
        case FamilyForm::III2: {
            MultiPoly F = MultiPoly(-3) * (u * v - MultiPoly(1));
            MultiPoly G = u * F + MultiPoly(Rational(4, 9));
            MultiPoly H = MultiPoly(4) * v - MultiPoly(3) * F * F;
            inst.P = MultiPoly(4) * v - MultiPoly(3) * F * F - MultiPoly(27) * pow((u - G * G) * H + F * G - MultiPoly(1), 3);
            inst.aux.emplace("F", F);
            inst.aux.emplace("G", G);
            inst.aux.emplace("H", H);
            break;
        }
        default: {
            MultiPoly g = solve_g(form, prm);
            const long K = detail::v_power(form, prm);
            MultiPoly F = u * vpow(K) + g;
            MultiPoly N = detail::defining_numerator(form, prm, F, v, [](long x) { return MultiPoly(x); });
            try {
                inst.P = exact_divide(N, vpow(K));
            } catch (const NotDivisible& e) {
                throw std::logic_error(to_string(form) + " " + prm.key() + ": v^" + std::to_string(K) +
                                       " does not divide the defining numerator (" + e.what() + ")");
            }
            inst.g = g;
            inst.aux.emplace("F", F);
            MultiPoly Fm1 = F - MultiPoly(1);
            if (divides(v, Fm1)) inst.aux.emplace("G", exact_divide(Fm1, v));
            if (form == FamilyForm::II3) inst.aux.emplace("H", exact_divide(F * F + MultiPoly(4) * v - F, v));
            if (form == FamilyForm::II5) inst.aux.emplace("Q", exact_divide(vpow(K) * inst.P - MultiPoly(1), F));
            break;
        }
    }
    inst.P.bind(vs);
    if (!is_real(inst.P)) throw std::logic_error(to_string(form) + " " + prm.key() + ": generated P is not real");
    return inst;
}

/// Regenerates P from its defining relation and compares.
inline bool defining_relation_holds(const FamilyInstance& inst) {
    const auto vs = family_varset();
    const MultiPoly u = MultiPoly::variable(vs, "u"), v = MultiPoly::variable(vs, "v");
    const auto& prm = inst.params;
    if (is_good_form(inst.form)) {
        const MultiPoly& F = inst.aux.at("F");
        long K = detail::v_power(inst.form, prm);
        if (F != u * pow(v, static_cast<unsigned long>(K)) + *inst.g) return false;
        MultiPoly N = detail::defining_numerator(inst.form, prm, F, v, [](long x) { return MultiPoly(x); });
        return pow(v, static_cast<unsigned long>(K)) * inst.P == N;
    }
    return gen_family(inst.form, prm).P == inst.P;
}

}  // namespace s1e

#pragma once

/**
 * @file zfactor.hpp
 * @brief Factorization of squarefree polynomials over Z (Zassenhaus).
 *
 * Factor modulo a small odd prime (distinct-degree then Cantor-Zassenhaus
 * equal-degree splitting), Hensel-lift linearly to a modulus exceeding twice
 * the Mignotte bound, and recombine subsets of the lifted factors. A candidate
 * is accepted only after exact division over Z.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace s1e::zx {

/// Dense integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;
/// Dense polynomial over F_p with entries in [0, p).
using FpPoly = std::vector<std::uint64_t>;

inline void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline long degree(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }
inline long degree(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(ZPoly f) {
    trim(f);
    if (f.empty()) return f;
    mpz_class c = content(f);
    if (f.back() < 0) c = -c;
    for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return f;
}

/// a / b over Z when b divides a exactly; empty optional semantics via bool.
inline bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.empty()) throw std::domain_error("division by the zero polynomial");
    if (a.size() < b.size()) {
        quotient.clear();
        return a.empty();
    }
    ZPoly rem = a;
    quotient.assign(a.size() - b.size() + 1, 0);
    const mpz_class& lb = b.back();
    for (std::size_t k = quotient.size(); k-- > 0;) {
        mpz_class& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
        quotient[k] = q;
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    trim(quotient);
    return true;
}

// ---- arithmetic in F_p[x] --------------------------------------------------

struct Fp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (a %= p; e; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw std::domain_error("inverse of zero mod p");
        return pow(a, p - 2);
    }
    std::uint64_t reduce(const mpz_class& c) const {
        return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
    }

    FpPoly reduce(const ZPoly& f) const {
        FpPoly r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) r[i] = reduce(f[i]);
        trim(r);
        return r;
    }

    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    FpPoly scale(FpPoly a, std::uint64_t s) const {
        for (auto& c : a) c = mul(c, s);
        trim(a);
        return a;
    }
    FpPoly monic(const FpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

    std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
        if (b.empty()) throw std::domain_error("division by the zero polynomial mod p");
        if (a.size() < b.size()) return {{}, a};
        FpPoly rem = a, quot(a.size() - b.size() + 1, 0);
        std::uint64_t il = inv(b.back());
        for (std::size_t k = quot.size(); k-- > 0;) {
            std::uint64_t q = mul(rem[k + b.size() - 1], il);
            if (!q) continue;
            for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = sub(rem[k + j], mul(q, b[j]));
            quot[k] = q;
        }
        trim(rem);
        trim(quot);
        return {quot, rem};
    }
    FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }

    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    /// s with s*a == 1 mod m, assuming gcd(a, m) = 1.
    FpPoly inverse_mod(const FpPoly& a, const FpPoly& m) const {
        FpPoly r0 = m, r1 = rem(a, m), s0, s1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            FpPoly s2 = sub(s0, mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.size() != 1) throw std::domain_error("polynomial not invertible mod p");
        return rem(scale(s0, inv(r0[0])), m);
    }

    FpPoly powmod(FpPoly base, mpz_class e, const FpPoly& m) const {
        FpPoly r{1};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
            e >>= 1;
            if (e > 0) base = rem(mul(base, base), m);
        }
        return r;
    }

    FpPoly derivative(const FpPoly& a) const {
        if (a.size() <= 1) return {};
        FpPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
};

/// Monic irreducible factors of a monic squarefree f over F_p, p odd.
inline std::vector<FpPoly> factor_mod_p(const FpPoly& f, const Fp& F, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    // distinct-degree
    std::vector<std::pair<FpPoly, long>> dd;
    FpPoly rest = f, h{0, 1}, x{0, 1};
    for (long d = 1; 2 * d <= degree(rest); ++d) {
        h = F.powmod(h, mpz_class(static_cast<unsigned long>(F.p)), rest);
        FpPoly g = F.gcd(F.sub(h, x), rest);
        if (degree(g) > 0) {
            dd.emplace_back(g, d);
            rest = F.divmod(rest, g).first;
            h = F.rem(h, rest);
        }
    }
    if (degree(rest) > 0) dd.emplace_back(rest, degree(rest));

    // equal-degree (Cantor-Zassenhaus)
    for (auto& [g, d] : dd) {
        std::vector<FpPoly> work{g};
        while (!work.empty()) {
            FpPoly cur = work.back();
            work.pop_back();
            if (degree(cur) == d) {
                out.push_back(F.monic(cur));
                continue;
            }
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
            mpz_class e = (q - 1) / 2;
            while (true) {
                std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
                FpPoly a(static_cast<std::size_t>(degree(cur)));
                for (auto& c : a) c = dist(rng);
                trim(a);
                if (degree(a) < 1) continue;
                FpPoly b = F.sub(F.powmod(a, e, cur), FpPoly{1});
                FpPoly g1 = F.gcd(b, cur);
                if (degree(g1) > 0 && degree(g1) < degree(cur)) {
                    work.push_back(g1);
                    work.push_back(F.divmod(cur, g1).first);
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/// Symmetric residue of c modulo m, in (-m/2, m/2].
inline mpz_class symmetric_mod(const mpz_class& c, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

/// Lifts f == lc * prod g_i (mod p) to the same shape modulo p^k.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& g, const Fp& F, unsigned long k) {
    const std::size_t r = g.size();
    std::vector<FpPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        FpPoly others{1};
        for (std::size_t l = 0; l < r; ++l)
            if (l != i) others = F.rem(F.mul(others, g[l]), g[i]);
        s[i] = F.inverse_mod(others, g[i]);
    }
    std::uint64_t lc_inv = F.inv(F.reduce(f.back()));
    std::vector<ZPoly> G(r);
    for (std::size_t i = 0; i < r; ++i)
        for (auto c : g[i]) G[i].push_back(mpz_class(static_cast<unsigned long>(c)));

    mpz_class pj = static_cast<unsigned long>(F.p);
    for (unsigned long j = 1; j < k; ++j) {
        ZPoly prod{f.back()};
        for (const auto& Gi : G) prod = mul(prod, Gi);
        ZPoly e(std::max(f.size(), prod.size()), 0);
        for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
        for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
        FpPoly ep = F.scale(F.reduce(e), lc_inv);
        if (!ep.empty()) {
            for (std::size_t i = 0; i < r; ++i) {
                FpPoly delta = F.rem(F.mul(s[i], ep), g[i]);
                for (std::size_t t = 0; t < delta.size(); ++t) G[i][t] += pj * static_cast<unsigned long>(delta[t]);
            }
        }
        pj *= static_cast<unsigned long>(F.p);
    }
    return G;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Irreducible factors over Z of a primitive squarefree f with positive
/// leading coefficient; the product of the result equals f.
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f_in) {
    ZPoly f = primitive_part(f_in);
    const long n = degree(f);
    if (n <= 1) return {f};

    std::mt19937_64 rng(0x5eed1234abcdULL);
    // pick the prime giving the fewest modular factors among the first few good ones
    std::vector<FpPoly> best;
    Fp bestF{0};
    int good = 0;
    for (std::uint64_t p = 3; good < 5; p += 2) {
        if (!is_prime(p)) continue;
        Fp F{p};
        if (F.reduce(f.back()) == 0) continue;
        FpPoly fp = F.monic(F.reduce(f));
        if (degree(F.gcd(fp, F.derivative(fp))) != 0) continue;
        ++good;
        auto fac = factor_mod_p(fp, F, rng);
        if (bestF.p == 0 || fac.size() < best.size()) {
            best = std::move(fac);
            bestF = F;
        }
        if (best.size() == 1) return {f};
    }

    // Mignotte: coefficients of any factor g of f satisfy |c| <= 2^n ||f||_2.
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    mpz_class bound = root * abs(f.back());
    bound <<= static_cast<mp_bitcnt_t>(n);
    bound *= 2;
    mpz_class m = static_cast<unsigned long>(bestF.p);
    unsigned long k = 1;
    while (m <= bound) {
        m *= static_cast<unsigned long>(bestF.p);
        ++k;
    }
    std::vector<ZPoly> G = hensel_lift(f, best, bestF, k);

    auto sym = [&](ZPoly a) {
        for (auto& c : a) c = symmetric_mod(c, m);
        trim(a);
        return a;
    };

    std::vector<ZPoly> factors;
    std::vector<std::size_t> T(G.size());
    for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
    ZPoly cur = f;
    std::size_t s = 1;
    while (2 * s <= T.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{cur.back()};
            for (auto i : idx) cand = sym(mul(cand, G[T[i]]));
            cand = primitive_part(cand);
            ZPoly q;
            if (degree(cand) > 0 && divide_exact(cur, cand, q)) {
                factors.push_back(cand);
                cur = primitive_part(q);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, t = 0; i < T.size(); ++i) {
                    if (t < s && idx[t] == i)
                        ++t;
                    else
                        keep.push_back(T[i]);
                }
                T = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == T.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (degree(cur) > 0) factors.push_back(cur);
    return factors;
}

}  // namespace s1e::zx

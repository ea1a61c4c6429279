#pragma once

/**
 * @file rewrite.hpp
 * @brief Normal forms modulo relations with pairwise coprime leading monomials.
 *
 * Coprime leading monomials make the relations a Groebner basis under the
 * graded-lex order, so exhaustive rewriting gives unique normal forms.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "../poly.hpp"
#include "../poly_io.hpp"

namespace s1e {

struct RewriteRule {
    Monomial lead;
    MultiPoly replacement;
};

class RewriteSystem {
public:
    /// Rules lead -> replacement; validated on construction.
    RewriteSystem(VarSetPtr vs, std::vector<RewriteRule> rules) : vs_(std::move(vs)), rules_(std::move(rules)) {
        GrlexGreater greater;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            auto& r = rules_[i];
            r.replacement.bind(vs_);
            if (!same_varset(r.replacement.varset(), vs_))
                throw std::invalid_argument("rewrite rule over a different variable set");
            if (!r.replacement.is_zero() && !greater(r.lead, r.replacement.leading_monomial()))
                throw std::invalid_argument("rewrite rule replacement is not smaller than its leading monomial: " +
                                            format_poly(MultiPoly::monomial(vs_, r.lead)));
            for (std::size_t j = 0; j < i; ++j)
                if (!coprime(rules_[j].lead, r.lead))
                    throw std::invalid_argument("rewrite rule leading monomials are not coprime");
        }
    }

    /// Orients each relation r = 0 as LM(r) -> -(r - LT(r)) / LC(r).
    static RewriteSystem from_relations(VarSetPtr vs, const std::vector<MultiPoly>& relations) {
        std::vector<RewriteRule> rules;
        for (const auto& rel : relations) {
            const auto& [m, c] = rel.leading_term();
            MultiPoly rest = rel - MultiPoly::monomial(vs, m, c);
            rules.push_back({m, -rest * c.inverse()});
        }
        return RewriteSystem(std::move(vs), std::move(rules));
    }

    const VarSetPtr& varset() const noexcept { return vs_; }
    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

    /// The relation polynomial lead - replacement of rule i.
    MultiPoly relation(std::size_t i) const {
        return MultiPoly::monomial(vs_, rules_.at(i).lead) - rules_.at(i).replacement;
    }

private:
    VarSetPtr vs_;
    std::vector<RewriteRule> rules_;
};

inline MultiPoly normal_form(const MultiPoly& P, const RewriteSystem& R) {
    MultiPoly work = P;
    work.bind(R.varset());
    if (!same_varset(work.varset(), R.varset())) throw VarSetMismatch("normal form over a different variable set");
    MultiPoly done(R.varset());
    while (!work.is_zero()) {
        auto [m, c] = work.leading_term();
        const RewriteRule* hit = nullptr;
        for (const auto& rule : R.rules())
            if (divides(rule.lead, m)) {
                hit = &rule;
                break;
            }
        MultiPoly lt = MultiPoly::monomial(R.varset(), m, c);
        work -= lt;
        if (hit)
            work += MultiPoly::monomial(R.varset(), m - hit->lead, c) * hit->replacement;
        else
            done += lt;
    }
    return done;
}

}  // namespace s1e

#ifndef SOSF_DIVISION_HPP
#define SOSF_DIVISION_HPP

#include <cstddef>
#include <vector>

#include "sosf/polynomial.hpp"

namespace sosf {

/// Result of dividing f by g_1..g_t: f = sum factor_u * g_{index_u} + remainder,
/// where no monomial of the remainder is divisible by any in(g_i) and
/// in(f) >= in(factor_u * g_{index_u}) for every u.
template <CoefficientField F>
struct StandardExpression {
    struct QuotientTerm {
        std::size_t index; // which divisor
        Term<F> factor;    // single term multiplied onto it
    };

    std::vector<QuotientTerm> quotients;
    Polynomial<F> remainder;
};

/// The division loop: while some term of the running remainder is divisible
/// by an initial term of the basis, cancel the largest such term, preferring
/// the divisor with the smallest index. Terms that fail every divisibility
/// test are final, because each cancellation only introduces strictly
/// smaller monomials.
template <CoefficientField F>
StandardExpression<F> divide(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
    for (const auto& g : basis) {
        if (g.is_zero()) throw bad_argument("division by a zero polynomial");
        if (g.nvars() != f.nvars() || !(g.field() == f.field()))
            throw field_mismatch("division across different rings");
    }

    StandardExpression<F> out{{}, Polynomial<F>(f.field(), f.nvars())};
    std::vector<Term<F>> finished; // strictly decreasing across the whole run
    Polynomial<F> work = f;

    while (!work.is_zero()) {
        const auto& terms = work.terms();
        std::size_t ti = 0;
        std::size_t chosen = basis.size();
        for (; ti < terms.size(); ++ti) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (basis[b].initial_term().mono.divides(terms[ti].mono)) {
                    chosen = b;
                    break;
                }
            }
            if (chosen != basis.size()) break;
            finished.push_back(terms[ti]);
        }
        if (chosen == basis.size()) break; // every remaining term was finalized

        const Term<F>& m = terms[ti];
        const Term<F>& lead = basis[chosen].initial_term();
        Term<F> factor{m.coeff / lead.coeff, m.mono / lead.mono};

        // rebuild the unfinished tail and cancel m
        std::vector<Term<F>> tail(terms.begin() + static_cast<std::ptrdiff_t>(ti), terms.end());
        Polynomial<F> rest(f.field(), f.nvars(), std::move(tail));
        work = rest - basis[chosen].scaled(factor);
        out.quotients.push_back({chosen, std::move(factor)});
    }

    out.remainder = Polynomial<F>(f.field(), f.nvars(), std::move(finished));
    return out;
}

/// Convenience wrapper returning only the remainder.
template <CoefficientField F>
Polynomial<F> remainder(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
    return divide(f, basis).remainder;
}

} // namespace sosf

#endif

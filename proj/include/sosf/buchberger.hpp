#ifndef SOSF_BUCHBERGER_HPP
#define SOSF_BUCHBERGER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <type_traits>
#include <vector>

#include "sosf/division.hpp"
#include "sosf/integer.hpp"
#include "sosf/polynomial.hpp"

namespace sosf {

/// Outcome of reducing the cancellation combination of one basis pair:
/// m_ji * g_i - m_ij * g_j divided to completion, where
/// m_ij = in(g_i) / gcd(in(g_i), in(g_j)) with the gcd taken monic.
template <CoefficientField F>
struct SPairRecord {
    std::size_t i = 0, j = 0;
    Term<F> m_ij, m_ji;
    Polynomial<F> remainder;
};

/// One basis extension: which pair produced the new element and how large
/// the basis coefficients were at that point (rational runs only).
struct TraceStep {
    std::size_t step = 0; // 1-based extension index
    std::size_t pair_i = 0, pair_j = 0;
    std::uint64_t remainder_degree = 0;
    std::optional<BigInt> max_p;       // max P over all basis coefficients after this step
    std::uint64_t pairs_processed = 0; // cumulative S-pair reductions when the step happened
};

struct GroebnerTrace {
    std::optional<BigInt> initial_max_p; // step 0: the generators themselves
    std::vector<TraceStep> steps;
    std::uint64_t pairs_processed = 0;
    std::uint64_t pairs_skipped_coprime = 0;

    std::size_t extension_steps() const { return steps.size(); }
};

template <CoefficientField F>
struct GroebnerBasis {
    std::vector<Polynomial<F>> basis;
    GroebnerTrace trace;
};

struct BuchbergerOptions {
    /// Skip pairs with coprime initial monomials (Buchberger's product
    /// criterion). Off by default: the instrumented trace then reflects the
    /// plain algorithm.
    bool product_criterion = false;

    /// Inter-reduce the final basis. Off by default.
    bool interreduce = false;

    /// Normalize new basis elements to monic. Defaults to "finite fields
    /// only"; rational runs are left unnormalized so the trace shows the
    /// true coefficient growth.
    std::optional<bool> monic;

    /// Abort with budget_exceeded after this many S-pair reductions.
    std::optional<std::uint64_t> max_pair_reductions;
};

template <CoefficientField F>
SPairRecord<F> s_pair_reduce(std::size_t i, std::size_t j, const std::vector<Polynomial<F>>& basis) {
    const auto& gi = basis.at(i);
    const auto& gj = basis.at(j);
    if (gi.is_zero() || gj.is_zero()) throw bad_argument("s-pair of a zero polynomial");

    Monomial g = gcd(gi.initial_term().mono, gj.initial_term().mono); // taken monic
    Term<F> m_ij{gi.initial_term().coeff, gi.initial_term().mono / g};
    Term<F> m_ji{gj.initial_term().coeff, gj.initial_term().mono / g};

    Polynomial<F> s = gi.scaled(m_ji) - gj.scaled(m_ij);
    auto expr = divide(s, basis);
    return SPairRecord<F>{i, j, std::move(m_ij), std::move(m_ji), std::move(expr.remainder)};
}

namespace detail {

template <CoefficientField F>
std::optional<BigInt> basis_max_p(const std::vector<Polynomial<F>>& basis) {
    if constexpr (std::is_same_v<F, RationalField>) {
        BigInt m = 1;
        for (const auto& g : basis) {
            BigInt p = max_p_measure(g).value;
            if (p > m) m = p;
        }
        return m;
    } else {
        (void)basis;
        return std::nullopt;
    }
}

} // namespace detail

/// Buchberger's algorithm. Zero generators are dropped; the returned basis
/// satisfies Buchberger's criterion (every S-pair reduces to zero) and
/// contains every input generator's reduction trail, so each input divides
/// to zero remainder against it.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& generators,
                            const BuchbergerOptions& opts = {}) {
    GroebnerBasis<F> out;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!out.basis.empty() &&
            (g.nvars() != out.basis[0].nvars() || !(g.field() == out.basis[0].field())))
            throw field_mismatch("generators from different rings");
        out.basis.push_back(g);
    }
    if (out.basis.empty()) return out;

    const bool monic = opts.monic.value_or(out.basis[0].field().is_finite());
    if (monic)
        for (auto& g : out.basis) g = g.monic();

    out.trace.initial_max_p = detail::basis_max_p(out.basis);

    // pairs ordered by (degree of lcm of initial monomials, i, j)
    using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            std::uint64_t d =
                lcm(out.basis[i].initial_term().mono, out.basis[j].initial_term().mono).degree();
            queue.insert({d, i, j});
        }
    };
    for (std::size_t j = 1; j < out.basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());

        if (opts.product_criterion &&
            gcd(out.basis[i].initial_term().mono, out.basis[j].initial_term().mono).is_one()) {
            ++out.trace.pairs_skipped_coprime;
            continue;
        }

        if (opts.max_pair_reductions && out.trace.pairs_processed >= *opts.max_pair_reductions)
            throw budget_exceeded("buchberger: pair reduction cap reached");
        ++out.trace.pairs_processed;

        auto rec = s_pair_reduce(i, j, out.basis);
        if (rec.remainder.is_zero()) continue;

        Polynomial<F> h = monic ? rec.remainder.monic() : rec.remainder;
        out.basis.push_back(std::move(h));
        push_pairs_for(out.basis.size() - 1);

        TraceStep step;
        step.step = out.trace.steps.size() + 1;
        step.pair_i = i;
        step.pair_j = j;
        step.remainder_degree = rec.remainder.degree();
        step.max_p = detail::basis_max_p(out.basis);
        step.pairs_processed = out.trace.pairs_processed;
        out.trace.steps.push_back(std::move(step));
    }

    if (opts.interreduce) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < out.basis.size(); ++i) {
                std::vector<Polynomial<F>> others;
                others.reserve(out.basis.size() - 1);
                for (std::size_t j = 0; j < out.basis.size(); ++j)
                    if (j != i) others.push_back(out.basis[j]);
                auto r = remainder(out.basis[i], others);
                if (r != out.basis[i]) {
                    changed = true;
                    if (r.is_zero()) {
                        out.basis.erase(out.basis.begin() + static_cast<std::ptrdiff_t>(i));
                        --i;
                    } else {
                        out.basis[i] = monic ? r.monic() : r;
                    }
                }
            }
        }
    }

    return out;
}

/// A basis describes the unit ideal exactly when it contains a nonzero
/// constant (the order is degree-compatible, so a constant initial term
/// means a constant polynomial).
template <CoefficientField F>
bool contains_nonzero_constant(const std::vector<Polynomial<F>>& basis) {
    for (const auto& g : basis)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

template <CoefficientField F>
bool is_proper(const GroebnerBasis<F>& gb) {
    return !contains_nonzero_constant(gb.basis);
}

/// Decides properness of the ideal the generators span. Properness over F
/// is equivalent to solvability over the algebraic closure of F.
template <CoefficientField F>
bool is_proper(const std::vector<Polynomial<F>>& generators, const BuchbergerOptions& opts = {}) {
    return is_proper(buchberger(generators, opts));
}

/// Largest coefficient measure seen at any step of a rational run.
inline BigInt trace_max_p(const GroebnerTrace& trace) {
    if (!trace.initial_max_p)
        throw bad_argument("trace has no P data: run was over a finite field");
    BigInt m = *trace.initial_max_p;
    for (const auto& s : trace.steps)
        if (s.max_p && *s.max_p > m) m = *s.max_p;
    return m;
}

} // namespace sosf

#endif

#ifndef SOSF_SEARCH_HPP
#define SOSF_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "sosf/sos_ideal.hpp"

namespace sosf {

enum class SearchStrategy { naive, backtracking };
enum class EmitMode { first, all, count };
enum class SearchStatus { found, exhausted_none, budget_exceeded };

template <FiniteField F>
struct SearchConfig {
    SosType type;
    F field;
    SearchStrategy strategy = SearchStrategy::backtracking;
    EmitMode emit = EmitMode::all;
    std::optional<std::uint64_t> node_budget;
    /// Soft secondary cap, checked every few thousand nodes. Node budgets are
    /// the reproducible limit; wall time is advisory.
    std::optional<double> time_budget_seconds;
    unsigned threads = 1; // > 1 parallelizes full backtracking runs over the first vector

    SearchConfig(SosType t, F f) : type(t), field(std::move(f)) {}
};

template <FiniteField F>
struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_none;
    std::vector<SosFormula<F>> formulas; // empty in count mode
    std::uint64_t found_count = 0;
    std::uint64_t nodes_visited = 0;
};

namespace detail {

/// q^e with overflow guard.
inline std::uint64_t checked_pow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / q) throw budget_exceeded("search space exceeds 2^64");
        r *= q;
    }
    return r;
}

struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    template <FiniteField F>
    static Deadline from(const SearchConfig<F>& cfg) {
        Deadline d;
        if (cfg.time_budget_seconds)
            d.at = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*cfg.time_budget_seconds));
        return d;
    }

    /// Sampled every few thousand nodes to keep the hot loop cheap.
    bool expired(std::uint64_t nodes) const {
        return at && (nodes % 4096 == 0) && std::chrono::steady_clock::now() > *at;
    }
};

} // namespace detail

/// The tensor as rs column vectors v_{jk} in F^n with (v_{jk})_i = alpha_{ijk}:
/// checks <v_jk, v_jk> = 1, <v_jk, v_j'k> = 0, <v_jk, v_jk'> = 0 and
/// <v_jk, v_j'k'> + <v_jk', v_j'k> = 0. Equivalent to the defining ideal
/// vanishing at the tensor.
template <FiniteField F>
bool satisfies_vector_constraints(const SosFormula<F>& f) {
    const auto& t = f.type();
    const F& field = f.field();
    auto dot = [&](std::uint32_t j1, std::uint32_t k1, std::uint32_t j2, std::uint32_t k2) {
        auto acc = field.zero();
        for (std::uint32_t i = 1; i <= t.n; ++i) acc = acc + f.at(i, j1, k1) * f.at(i, j2, k2);
        return acc;
    };
    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t k = 1; k <= t.s; ++k)
            if (!dot(j, k, j, k).is_one()) return false;
    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t jp = j + 1; jp <= t.r; ++jp)
            for (std::uint32_t k = 1; k <= t.s; ++k)
                if (!dot(j, k, jp, k).is_zero()) return false;
    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t k = 1; k <= t.s; ++k)
            for (std::uint32_t kp = k + 1; kp <= t.s; ++kp)
                if (!dot(j, k, j, kp).is_zero()) return false;
    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t jp = j + 1; jp <= t.r; ++jp)
            for (std::uint32_t k = 1; k <= t.s; ++k)
                for (std::uint32_t kp = k + 1; kp <= t.s; ++kp)
                    if (!(dot(j, k, jp, kp) + dot(j, kp, jp, k)).is_zero()) return false;
    return true;
}

/// Exhaustive scan: every coefficient tensor in deterministic
/// field-enumeration order (last flat index fastest), filtered by
/// verify_formula. One enumerated tensor is one node.
template <FiniteField F>
SearchOutcome<F> search_naive(const SearchConfig<F>& cfg) {
    const std::size_t nv = cfg.type.nvars();
    const std::uint64_t q = cfg.field.size();
    const std::uint64_t total = detail::checked_pow(q, nv);

    SearchOutcome<F> out;
    std::vector<std::uint64_t> digits(nv, 0);
    auto elements = cfg.field.enumerate();
    auto deadline = detail::Deadline::from(cfg);

    for (std::uint64_t node = 0; node < total; ++node) {
        if ((cfg.node_budget && out.nodes_visited >= *cfg.node_budget) ||
            deadline.expired(out.nodes_visited)) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
        ++out.nodes_visited;

        SosFormula<F> f(cfg.type, cfg.field);
        for (std::size_t idx = 0; idx < nv; ++idx) f.set_flat(idx, elements[digits[idx]]);
        if (verify_formula(f)) {
            ++out.found_count;
            if (cfg.emit != EmitMode::count) out.formulas.push_back(std::move(f));
            if (cfg.emit == EmitMode::first) {
                out.status = SearchStatus::found;
                return out;
            }
        }

        // odometer: last index fastest
        std::size_t pos = nv;
        while (pos-- > 0) {
            if (++digits[pos] < q) break;
            digits[pos] = 0;
        }
    }
    out.status = out.found_count > 0 ? SearchStatus::found : SearchStatus::exhausted_none;
    return out;
}

namespace detail {

template <FiniteField F>
struct BacktrackState {
    const SearchConfig<F>* cfg;
    std::vector<std::vector<typename F::Element>> candidates; // all q^n vectors, code order
    std::vector<std::size_t> placed;                          // candidate index per position
    SearchOutcome<F>* out;
    Deadline deadline;
    bool stop = false;
};

template <FiniteField F>
typename F::Element placed_dot(const BacktrackState<F>& st, std::size_t pa, std::size_t pb) {
    const auto& va = st.candidates[st.placed[pa]];
    const auto& vb = st.candidates[st.placed[pb]];
    auto acc = st.cfg->field.zero();
    for (std::size_t i = 0; i < va.size(); ++i) acc = acc + va[i] * vb[i];
    return acc;
}

/// Positions are (j, k) in lexicographic order: pos = (j-1)*s + (k-1).
/// All constraints touching the newly placed position involve only smaller
/// positions, so checking at placement time covers the full system at the
/// leaves.
template <FiniteField F>
bool placement_ok(const BacktrackState<F>& st, std::size_t pos) {
    const auto& t = st.cfg->type;
    const std::uint32_t s = t.s;
    const std::uint32_t j = static_cast<std::uint32_t>(pos / s) + 1;
    const std::uint32_t k = static_cast<std::uint32_t>(pos % s) + 1;
    auto at = [&](std::uint32_t jj, std::uint32_t kk) {
        return static_cast<std::size_t>(jj - 1) * s + (kk - 1);
    };

    if (!placed_dot(st, pos, pos).is_one()) return false;
    for (std::uint32_t jp = 1; jp < j; ++jp)
        if (!placed_dot(st, pos, at(jp, k)).is_zero()) return false;
    for (std::uint32_t kp = 1; kp < k; ++kp)
        if (!placed_dot(st, pos, at(j, kp)).is_zero()) return false;
    for (std::uint32_t jp = 1; jp < j; ++jp)
        for (std::uint32_t kp = 1; kp < k; ++kp) {
            auto sum = placed_dot(st, pos, at(jp, kp)) + placed_dot(st, at(j, kp), at(jp, k));
            if (!sum.is_zero()) return false;
        }
    return true;
}

template <FiniteField F>
SosFormula<F> assemble(const BacktrackState<F>& st) {
    const auto& t = st.cfg->type;
    SosFormula<F> f(t, st.cfg->field);
    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t k = 1; k <= t.s; ++k) {
            const auto& v = st.candidates[st.placed[static_cast<std::size_t>(j - 1) * t.s + (k - 1)]];
            for (std::uint32_t i = 1; i <= t.n; ++i) f.set(i, j, k, v[i - 1]);
        }
    return f;
}

template <FiniteField F>
void backtrack(BacktrackState<F>& st, std::size_t pos, std::size_t from, std::size_t to) {
    if (st.stop) return;
    const std::size_t npos = static_cast<std::size_t>(st.cfg->type.r) * st.cfg->type.s;
    for (std::size_t c = from; c < to; ++c) {
        if (st.stop) return;
        if ((st.cfg->node_budget && st.out->nodes_visited >= *st.cfg->node_budget) ||
            st.deadline.expired(st.out->nodes_visited)) {
            st.out->status = SearchStatus::budget_exceeded;
            st.stop = true;
            return;
        }
        ++st.out->nodes_visited;
        st.placed[pos] = c;
        if (!placement_ok(st, pos)) continue;
        if (pos + 1 == npos) {
            SosFormula<F> f = assemble(st);
            if (!verify_formula(f)) throw error("search produced a non-formula"); // cannot happen
            ++st.out->found_count;
            if (st.cfg->emit != EmitMode::count) st.out->formulas.push_back(std::move(f));
            if (st.cfg->emit == EmitMode::first) {
                st.out->status = SearchStatus::found;
                st.stop = true;
                return;
            }
        } else {
            backtrack(st, pos + 1, 0, st.candidates.size());
        }
    }
}

template <FiniteField F>
std::vector<std::vector<typename F::Element>> candidate_vectors(const F& field, std::uint32_t n) {
    const std::uint64_t q = field.size();
    const std::uint64_t total = checked_pow(q, n);
    auto elements = field.enumerate();
    std::vector<std::vector<typename F::Element>> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<typename F::Element> v;
        v.reserve(n);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < n; ++i) {
            v.push_back(elements[c % q]);
            c /= q;
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// Depth-first placement of the rs column vectors with constraint pruning.
/// A node is one candidate vector tried at one position. Full runs return
/// exactly the naive result set. Runs with threads > 1 partition the root
/// over the first vector and merge branch results in order; budgeted or
/// emit-first runs stay sequential so outcomes are reproducible.
template <FiniteField F>
SearchOutcome<F> search_backtracking(const SearchConfig<F>& cfg) {
    SearchOutcome<F> out;
    auto candidates = detail::candidate_vectors(cfg.field, cfg.type.n);

    const bool parallel = cfg.threads > 1 && !cfg.node_budget && !cfg.time_budget_seconds &&
                          cfg.emit != EmitMode::first && candidates.size() > 1;

    if (!parallel) {
        detail::BacktrackState<F> st{&cfg, std::move(candidates),
                                     std::vector<std::size_t>(static_cast<std::size_t>(cfg.type.r) * cfg.type.s, 0),
                                     &out, detail::Deadline::from(cfg), false};
        detail::backtrack(st, 0, 0, st.candidates.size());
        if (out.status != SearchStatus::budget_exceeded && !(cfg.emit == EmitMode::first && out.found_count > 0))
            out.status = out.found_count > 0 ? SearchStatus::found : SearchStatus::exhausted_none;
        return out;
    }

    const unsigned workers = std::min<unsigned>(cfg.threads, static_cast<unsigned>(candidates.size()));
    std::vector<SearchOutcome<F>> parts(workers);
    std::vector<std::thread> pool;
    const std::size_t per = (candidates.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t lo = static_cast<std::size_t>(w) * per;
            std::size_t hi = std::min(candidates.size(), lo + per);
            if (lo >= hi) return;
            detail::BacktrackState<F> st{&cfg, candidates,
                                         std::vector<std::size_t>(static_cast<std::size_t>(cfg.type.r) * cfg.type.s, 0),
                                         &parts[w], detail::Deadline{}, false};
            detail::backtrack(st, 0, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts) {
        out.nodes_visited += p.nodes_visited;
        out.found_count += p.found_count;
        for (auto& f : p.formulas) out.formulas.push_back(std::move(f));
    }
    out.status = out.found_count > 0 ? SearchStatus::found : SearchStatus::exhausted_none;
    return out;
}

template <FiniteField F>
SearchOutcome<F> run_search(const SearchConfig<F>& cfg) {
    return cfg.strategy == SearchStrategy::naive ? search_naive(cfg) : search_backtracking(cfg);
}

} // namespace sosf

#endif

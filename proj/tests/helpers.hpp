#ifndef SOSF_TEST_HELPERS_HPP
#define SOSF_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "sosf/field.hpp"
#include "sosf/polynomial.hpp"

namespace sosf::testing {

/// Deterministic RNG for all randomized suites. Seed overridable via
/// SOSF_TEST_SEED so failures can be replayed.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    std::uint64_t seed = 0x5eed505f00dULL;
    if (const char* env = std::getenv("SOSF_TEST_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed ^ salt);
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound = 1000000000) {
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, bound);
    return Rational(num(rng), den(rng));
}

/// Small random polynomial for ring-axiom and division properties.
template <CoefficientField F>
Polynomial<F> random_polynomial(std::mt19937_64& rng, const F& field, std::size_t nvars,
                                unsigned max_deg, int coeff_bound, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::vector<Term<F>> terms;
    std::size_t n = nterms(rng);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::uint32_t> exps(nvars, 0);
        unsigned budget = deg(rng);
        std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
        for (unsigned i = 0; i < budget; ++i) ++exps[var(rng)];
        terms.push_back(Term<F>{field.from_int(coeff(rng)), Monomial(std::move(exps))});
    }
    return Polynomial<F>(field, nvars, std::move(terms));
}

} // namespace sosf::testing

#endif

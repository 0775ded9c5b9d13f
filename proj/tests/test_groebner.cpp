#include "doctest.h"

#include "helpers.hpp"
#include "sosf/buchberger.hpp"

using namespace sosf;

namespace {

using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

QPoly qp(std::size_t nvars, std::vector<std::pair<std::int64_t, std::vector<std::uint32_t>>> terms) {
    RationalField q;
    std::vector<Term<RationalField>> ts;
    for (auto& [c, e] : terms) ts.push_back({Rational(c), Monomial(std::move(e))});
    return QPoly(q, nvars, std::move(ts));
}

FpPoly fpp(const PrimeField& f, std::size_t nvars,
           std::vector<std::pair<std::int64_t, std::vector<std::uint32_t>>> terms) {
    std::vector<Term<PrimeField>> ts;
    for (auto& [c, e] : terms) ts.push_back({f.from_int(c), Monomial(std::move(e))});
    return FpPoly(f, nvars, std::move(ts));
}

/// Independent restatement of the division loop, with none of the library's
/// bookkeeping: rescan the whole working polynomial for the maximal
/// divisible term on every pass.
template <CoefficientField F>
Polynomial<F> naive_remainder(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gs) {
    Polynomial<F> work = f;
    for (;;) {
        std::size_t ti = work.terms().size(), gi = gs.size();
        for (std::size_t t = 0; t < work.terms().size() && ti == work.terms().size(); ++t)
            for (std::size_t b = 0; b < gs.size(); ++b)
                if (gs[b].initial_term().mono.divides(work.terms()[t].mono)) {
                    ti = t;
                    gi = b;
                    break;
                }
        if (ti == work.terms().size()) return work;
        const auto& m = work.terms()[ti];
        const auto& lead = gs[gi].initial_term();
        work = work - gs[gi].scaled(Term<F>{m.coeff / lead.coeff, m.mono / lead.mono});
    }
}

/// Rebuilds f from a standard expression and checks its defining properties.
template <CoefficientField F>
void check_standard_expression(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gs,
                               const StandardExpression<F>& se) {
    Polynomial<F> rebuilt = se.remainder;
    for (const auto& q : se.quotients) {
        rebuilt = rebuilt + gs[q.index].scaled(q.factor);
        // in(f) >= in(factor * g)
        auto prod_lead = q.factor.mono * gs[q.index].initial_term().mono;
        REQUIRE(!f.is_zero());
        CHECK(degrevlex_cmp(f.initial_term().mono, prod_lead) >= 0);
    }
    CHECK(rebuilt == f);
    for (const auto& t : se.remainder.terms())
        for (const auto& g : gs) CHECK_FALSE(g.initial_term().mono.divides(t.mono));
}

} // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("division: single power divisor") {
    auto f = qp(1, {{1, {2}}}); // x^2
    std::vector<QPoly> g = {qp(1, {{1, {1}}})};
    auto se = divide(f, g);
    CHECK(se.remainder.is_zero());
    REQUIRE(se.quotients.size() == 1); // x^2 = x * (x) in one step
    CHECK(se.quotients[0].factor.mono == Monomial({1}));
    CHECK(se.quotients[0].factor.coeff == Rational(1));
}

TEST_CASE("division: worked multivariate example") {
    // f = x^2 y + x y^2 + y^2 against [xy-1, y^2-1]; the loop gives x+y+1
    auto f = qp(2, {{1, {2, 1}}, {1, {1, 2}}, {1, {0, 2}}});
    std::vector<QPoly> g = {qp(2, {{1, {1, 1}}, {-1, {0, 0}}}), qp(2, {{1, {0, 2}}, {-1, {0, 0}}})};
    auto se = divide(f, g);
    CHECK(se.remainder == qp(2, {{1, {1, 0}}, {1, {0, 1}}, {1, {0, 0}}}));
    check_standard_expression(f, g, se);
    CHECK(naive_remainder(f, g) == se.remainder);
}

TEST_CASE("division: nothing divisible") {
    auto f = qp(1, {{1, {0}}});
    std::vector<QPoly> g = {qp(1, {{1, {2}}, {-1, {0}}})};
    auto se = divide(f, g);
    CHECK(se.remainder == f);
    CHECK(se.quotients.empty());
}

TEST_CASE("division rejects zero divisors") {
    auto f = qp(1, {{1, {1}}});
    std::vector<QPoly> g = {QPoly(RationalField{}, 1)};
    CHECK_THROWS_AS(divide(f, g), bad_argument);
}

TEST_CASE("s-pair reduction examples") {
    SUBCASE("x^2-1 against xy") {
        std::vector<QPoly> g = {qp(2, {{1, {2, 0}}, {-1, {0, 0}}}), qp(2, {{1, {1, 1}}})};
        auto rec = s_pair_reduce<RationalField>(0, 1, g);
        CHECK(rec.m_ij.mono == Monomial({1, 0})); // x^2/x
        CHECK(rec.m_ji.mono == Monomial({0, 1})); // xy/x
        CHECK(rec.remainder == qp(2, {{-1, {0, 1}}})); // -y
    }
    SUBCASE("identical pair") {
        std::vector<QPoly> g = {qp(1, {{1, {1}}}), qp(1, {{1, {1}}})};
        auto rec = s_pair_reduce<RationalField>(0, 1, g);
        CHECK(rec.remainder.is_zero());
    }
    SUBCASE("coprime leads reduce to zero") {
        std::vector<QPoly> g = {qp(2, {{1, {2, 0}}, {-1, {0, 0}}}), qp(2, {{1, {0, 2}}, {-1, {0, 0}}})};
        auto rec = s_pair_reduce<RationalField>(0, 1, g);
        // S-combination is x^2 - y^2 = (x^2-1) - (y^2-1)
        CHECK(rec.remainder.is_zero());
    }
}

TEST_CASE("buchberger: single generator is already a basis") {
    auto gb = buchberger<RationalField>({qp(1, {{1, {2}}, {-1, {0}}})});
    CHECK(gb.basis.size() == 1);
    CHECK(gb.trace.extension_steps() == 0);
    CHECK(is_proper(gb));
}

TEST_CASE("buchberger: the unit ideal is exposed by a constant") {
    // x^2-1, y^2-1, xy has no common zero in any field of char != 2
    std::vector<QPoly> gens = {qp(2, {{1, {2, 0}}, {-1, {0, 0}}}),
                               qp(2, {{1, {0, 2}}, {-1, {0, 0}}}),
                               qp(2, {{1, {1, 1}}})};
    auto gb = buchberger(gens);
    CHECK(contains_nonzero_constant(gb.basis));
    CHECK_FALSE(is_proper(gb));
    CHECK(trace_max_p(gb.trace) == 1); // every intermediate coefficient is +-1
}

TEST_CASE("buchberger: hyperbola pair") {
    std::vector<QPoly> gens = {qp(2, {{1, {1, 1}}, {-1, {0, 0}}}), qp(2, {{1, {0, 2}}, {-1, {0, 0}}})};
    auto gb = buchberger(gens);
    std::vector<QPoly> expected = {qp(2, {{1, {1, 1}}, {-1, {0, 0}}}),
                                   qp(2, {{1, {0, 2}}, {-1, {0, 0}}}),
                                   qp(2, {{1, {1, 0}}, {-1, {0, 1}}})};
    CHECK(gb.basis == expected);
    CHECK(is_proper(gb));
    CHECK(trace_max_p(gb.trace) == 1);

    // initial ideal is generated by {x, y^2}: every lead is divisible by one
    // of them and vice versa
    for (const auto& g : gb.basis) {
        bool covered = Monomial({1, 0}).divides(g.initial_term().mono) ||
                       Monomial({0, 2}).divides(g.initial_term().mono);
        CHECK(covered);
    }
}

TEST_CASE("buchberger drops zero generators") {
    std::vector<QPoly> gens = {QPoly(RationalField{}, 1), qp(1, {{1, {2}}, {-1, {0}}})};
    auto gb = buchberger(gens);
    CHECK(gb.basis.size() == 1);
}

TEST_CASE("is_proper over a finite field: no [2,2,1] formula") {
    PrimeField f5(5);
    // variables a11, a12, a21, a22 (single i index suppressed)
    std::vector<FpPoly> gens = {
        fpp(f5, 4, {{1, {2, 0, 0, 0}}, {-1, {0, 0, 0, 0}}}),
        fpp(f5, 4, {{1, {0, 2, 0, 0}}, {-1, {0, 0, 0, 0}}}),
        fpp(f5, 4, {{1, {0, 0, 2, 0}}, {-1, {0, 0, 0, 0}}}),
        fpp(f5, 4, {{1, {0, 0, 0, 2}}, {-1, {0, 0, 0, 0}}}),
        fpp(f5, 4, {{1, {1, 0, 1, 0}}}),
        fpp(f5, 4, {{1, {0, 1, 0, 1}}}),
        fpp(f5, 4, {{1, {1, 1, 0, 0}}}),
        fpp(f5, 4, {{1, {0, 0, 1, 1}}}),
        fpp(f5, 4, {{1, {1, 0, 0, 1}}, {1, {0, 1, 1, 0}}}),
    };
    CHECK_FALSE(is_proper(gens));
}

TEST_CASE("trace P data is refused for finite fields") {
    PrimeField f5(5);
    auto gb = buchberger<PrimeField>({fpp(f5, 1, {{1, {2}}, {-1, {0}}})});
    CHECK_THROWS_AS(trace_max_p(gb.trace), bad_argument);
}

TEST_CASE("resource cap aborts with budget_exceeded") {
    std::vector<QPoly> gens = {qp(2, {{1, {2, 0}}, {-1, {0, 0}}}),
                               qp(2, {{1, {0, 2}}, {-1, {0, 0}}}),
                               qp(2, {{1, {1, 1}}})};
    BuchbergerOptions opts;
    opts.max_pair_reductions = 1;
    CHECK_THROWS_AS(buchberger(gens, opts), budget_exceeded);
}

TEST_CASE("random standard expressions reconstruct exactly") {
    auto rng = testing::make_rng(10);
    RationalField q;
    int done = 0;
    while (done < 300) {
        auto f = testing::random_polynomial(rng, q, 4, 3, 3, 6);
        std::vector<QPoly> gs;
        std::uniform_int_distribution<int> ngen(1, 3);
        int n = ngen(rng);
        for (int i = 0; i < n; ++i) {
            auto g = testing::random_polynomial(rng, q, 4, 3, 3, 4);
            if (!g.is_zero()) gs.push_back(g);
        }
        if (gs.empty() || f.is_zero()) continue;
        auto se = divide(f, gs);
        check_standard_expression(f, gs, se);
        CHECK(naive_remainder(f, gs) == se.remainder);
        ++done;
    }
}

TEST_CASE("criterion round-trip and membership on random bases") {
    auto rng = testing::make_rng(11);
    RationalField q;
    int done = 0;
    while (done < 60) {
        std::vector<QPoly> gens;
        std::uniform_int_distribution<int> ngen(1, 3);
        int n = ngen(rng);
        for (int i = 0; i < n; ++i) {
            auto g = testing::random_polynomial(rng, q, 3, 2, 3, 3);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto gb = buchberger(gens);
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
                CHECK(s_pair_reduce(i, j, gb.basis).remainder.is_zero());
        for (const auto& g : gens) CHECK(remainder(g, gb.basis).is_zero());

        // each extension strictly grows the initial-term ideal: a new lead is
        // never divisible by an earlier one
        std::size_t original = gens.size();
        for (std::size_t k = original; k < gb.basis.size(); ++k)
            for (std::size_t i = 0; i < k; ++i)
                CHECK_FALSE(
                    gb.basis[i].initial_term().mono.divides(gb.basis[k].initial_term().mono));
        ++done;
    }
}

TEST_CASE("buchberger over an extension field") {
    // in F_9 = F_3[t]/(t^2+1), x^2 + 1 = (x - t)(x + t)
    auto f9 = make_extension_field(3, 2);
    using EPoly = Polynomial<ExtensionField>;
    auto t = f9.generator();
    EPoly xsq_plus_1(f9, 1, {{f9.one(), Monomial({2})}, {f9.one(), Monomial({0})}});
    EPoly x_minus_t(f9, 1, {{f9.one(), Monomial({1})}, {-t, Monomial({0})}});
    EPoly x_plus_t(f9, 1, {{f9.one(), Monomial({1})}, {t, Monomial({0})}});

    // the factor generates everything: x^2+1 reduces to zero against it
    auto gb = buchberger<ExtensionField>({xsq_plus_1, x_minus_t});
    CHECK(is_proper(gb));
    CHECK(remainder(xsq_plus_1, gb.basis).is_zero());

    // both factors together cut out nothing: 2t is a unit
    auto unit = buchberger<ExtensionField>({x_minus_t, x_plus_t});
    CHECK_FALSE(is_proper(unit));
}

TEST_CASE("degenerate inputs") {
    auto gb = buchberger<RationalField>({});
    CHECK(gb.basis.empty());
    CHECK(is_proper(gb)); // the zero ideal is proper

    QPoly zero(RationalField{}, 2);
    std::vector<QPoly> g = {qp(2, {{1, {1, 0}}})};
    auto se = divide(zero, g);
    CHECK(se.remainder.is_zero());
    CHECK(se.quotients.empty());
}

TEST_CASE("basis normalization follows the field") {
    PrimeField f5(5);
    std::vector<FpPoly> fgens = {fpp(f5, 2, {{3, {1, 1}}, {-1, {0, 0}}}),
                                 fpp(f5, 2, {{2, {0, 2}}, {-1, {0, 0}}})};
    auto fgb = buchberger(fgens);
    for (const auto& g : fgb.basis) CHECK(g.initial_term().coeff.is_one());

    // rational runs stay unnormalized so the trace shows true growth
    std::vector<QPoly> qgens = {qp(2, {{3, {1, 1}}, {-1, {0, 0}}}), qp(2, {{2, {0, 2}}, {-1, {0, 0}}})};
    auto qgb = buchberger(qgens);
    CHECK(qgb.basis[0].initial_term().coeff == Rational(3));
}

TEST_CASE("inter-reduction produces a smaller equivalent basis") {
    std::vector<QPoly> gens = {qp(2, {{1, {1, 1}}, {-1, {0, 0}}}), qp(2, {{1, {0, 2}}, {-1, {0, 0}}})};
    BuchbergerOptions opts;
    opts.interreduce = true;
    auto plain = buchberger(gens);
    auto reduced = buchberger(gens, opts);
    CHECK(reduced.basis.size() <= plain.basis.size());
    for (const auto& g : plain.basis) CHECK(remainder(g, reduced.basis).is_zero());
    for (const auto& g : reduced.basis) CHECK(remainder(g, plain.basis).is_zero());
    // still a basis by the criterion
    for (std::size_t i = 0; i < reduced.basis.size(); ++i)
        for (std::size_t j = i + 1; j < reduced.basis.size(); ++j)
            CHECK(s_pair_reduce(i, j, reduced.basis).remainder.is_zero());
}

TEST_CASE("product criterion does not change the computed ideal") {
    std::vector<QPoly> gens = {qp(2, {{1, {1, 1}}, {-1, {0, 0}}}), qp(2, {{1, {0, 2}}, {-1, {0, 0}}})};
    BuchbergerOptions with;
    with.product_criterion = true;
    auto a = buchberger(gens);
    auto b = buchberger(gens, with);
    // same normal forms: cross-check membership both ways
    for (const auto& g : a.basis) CHECK(remainder(g, b.basis).is_zero());
    for (const auto& g : b.basis) CHECK(remainder(g, a.basis).is_zero());
}

TEST_SUITE_END();

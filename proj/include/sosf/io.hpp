#ifndef SOSF_IO_HPP
#define SOSF_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sosf/bounds.hpp"
#include "sosf/buchberger.hpp"
#include "sosf/search.hpp"
#include "sosf/sos_ideal.hpp"
#include "sosf/zeta.hpp"

namespace sosf::io {

/// All interchange files use insertion-ordered keys and a fixed layout, so
/// serialization is canonical: load followed by re-serialization is
/// byte-identical. Big integers and rationals are decimal strings.
using ojson = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

inline std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::string& path, const ojson& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bad_argument("cannot open for writing: " + path);
    out << dump(j);
}

inline ojson read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bad_argument("cannot open for reading: " + path);
    ojson j = ojson::parse(in, nullptr, false);
    if (j.is_discarded()) throw bad_argument("malformed JSON in " + path);
    return j;
}

inline void require_format(const ojson& j, const std::string& kind) {
    if (!j.is_object() || !j.contains("format") || j["format"] != kFormatVersion)
        throw bad_argument("missing or unsupported format marker");
    if (!j.contains("kind") || j["kind"] != kind)
        throw bad_argument("expected a '" + kind + "' document");
}

// ---- fields ----------------------------------------------------------

struct FieldDescriptor {
    enum class Kind { rational, prime, extension } kind = Kind::rational;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::vector<std::uint64_t> modulus; // empty means "use the canonical one"
};

inline ojson field_to_json(const RationalField&) { return ojson{{"kind", "rational"}}; }

inline ojson field_to_json(const PrimeField& f) {
    return ojson{{"kind", "prime"}, {"p", std::to_string(f.p())}};
}

inline ojson field_to_json(const ExtensionField& f) {
    ojson mod = ojson::array();
    for (auto c : f.modulus()) mod.push_back(std::to_string(c));
    return ojson{{"kind", "extension"}, {"p", std::to_string(f.p())}, {"k", f.k()}, {"modulus", mod}};
}

inline std::uint64_t parse_u64(const ojson& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_string()) {
        BigInt v = big_from_string(j.get<std::string>());
        if (v < 0 || !mpz_fits_ulong_p(v.get_mpz_t())) throw bad_argument(std::string(what) + " out of range");
        return v.get_ui();
    }
    throw bad_argument(std::string("expected an integer for ") + what);
}

inline FieldDescriptor parse_field(const ojson& j) {
    FieldDescriptor d;
    if (!j.is_object() || !j.contains("kind")) throw bad_argument("field descriptor missing 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") {
        d.kind = FieldDescriptor::Kind::rational;
    } else if (kind == "prime") {
        d.kind = FieldDescriptor::Kind::prime;
        d.p = parse_u64(j.at("p"), "p");
    } else if (kind == "extension") {
        d.kind = FieldDescriptor::Kind::extension;
        d.p = parse_u64(j.at("p"), "p");
        d.k = static_cast<unsigned>(parse_u64(j.at("k"), "k"));
        if (j.contains("modulus"))
            for (const auto& c : j.at("modulus")) d.modulus.push_back(parse_u64(c, "modulus coefficient"));
    } else {
        throw bad_argument("unknown field kind '" + kind + "'");
    }
    return d;
}

inline ExtensionField make_field(const FieldDescriptor& d) {
    if (d.kind != FieldDescriptor::Kind::extension) throw bad_argument("not an extension field");
    if (d.modulus.empty()) return make_extension_field(d.p, d.k);
    return ExtensionField(d.p, d.k, d.modulus);
}

// ---- coefficients ----------------------------------------------------

inline ojson coeff_json(const Rational& c) { return c.str(); }
inline ojson coeff_json(const FpElement& c) { return std::to_string(c.value()); }
inline ojson coeff_json(const FqElement& c) {
    ojson a = ojson::array();
    for (auto v : c.coeffs()) a.push_back(std::to_string(v));
    return a;
}

inline Rational parse_coeff(const ojson& j, const RationalField&) {
    if (!j.is_string()) throw bad_argument("rational coefficients must be strings");
    return Rational::from_string(j.get<std::string>());
}

inline FpElement parse_coeff(const ojson& j, const PrimeField& f) {
    if (j.is_string()) {
        // accept "a/b" so rational files reduce cleanly
        Rational r = Rational::from_string(j.get<std::string>());
        auto den = f.from_bigint(r.den());
        if (den.is_zero()) throw bad_argument("denominator divisible by the field characteristic");
        return f.from_bigint(r.num()) / den;
    }
    return f.element(parse_u64(j, "coefficient"));
}

inline FqElement parse_coeff(const ojson& j, const ExtensionField& f) {
    if (!j.is_array()) throw bad_argument("extension coefficients must be residue arrays");
    std::vector<std::uint64_t> c;
    for (const auto& v : j) c.push_back(parse_u64(v, "residue"));
    return f.element_from_coeffs(std::move(c));
}

// ---- polynomials -----------------------------------------------------

template <CoefficientField F>
ojson poly_to_json(const Polynomial<F>& p) {
    ojson terms = ojson::array();
    for (const auto& t : p.terms()) {
        ojson e = ojson::array();
        for (auto x : t.mono.exps()) e.push_back(x);
        terms.push_back(ojson{{"c", coeff_json(t.coeff)}, {"e", e}});
    }
    return ojson{{"vars", p.nvars()}, {"terms", terms}};
}

template <CoefficientField F>
Polynomial<F> parse_poly(const ojson& j, const F& field) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw bad_argument("polynomial needs 'vars' and 'terms'");
    std::size_t nvars = parse_u64(j["vars"], "vars");
    std::vector<Term<F>> terms;
    for (const auto& t : j["terms"]) {
        std::vector<std::uint32_t> e;
        for (const auto& x : t.at("e")) {
            std::uint64_t v = parse_u64(x, "exponent");
            if (v > UINT32_MAX) throw bad_argument("exponent out of range");
            e.push_back(static_cast<std::uint32_t>(v));
        }
        if (e.size() != nvars) throw bad_argument("exponent vector length mismatch");
        terms.push_back({parse_coeff(t.at("c"), field), Monomial(std::move(e))});
    }
    return Polynomial<F>(field, nvars, std::move(terms));
}

// ---- ideals ----------------------------------------------------------

inline ojson ideal_to_json(const SosIdealSpec<RationalField>& spec) {
    ojson gens = ojson::array();
    for (const auto& g : spec.generators) gens.push_back(poly_to_json(g));
    return ojson{{"format", kFormatVersion},
                 {"kind", "ideal"},
                 {"type", ojson{{"r", spec.type.r}, {"s", spec.type.s}, {"n", spec.type.n}}},
                 {"vars", spec.type.nvars()},
                 {"generators", gens}};
}

inline SosIdealSpec<RationalField> parse_ideal(const ojson& j) {
    require_format(j, "ideal");
    const auto& t = j.at("type");
    SosType type(static_cast<std::uint32_t>(parse_u64(t.at("r"), "r")),
                 static_cast<std::uint32_t>(parse_u64(t.at("s"), "s")),
                 static_cast<std::uint32_t>(parse_u64(t.at("n"), "n")));
    RationalField q;
    SosIdealSpec<RationalField> spec{type, {}};
    for (const auto& g : j.at("generators")) spec.generators.push_back(parse_poly(g, q));
    return spec;
}

/// Reduction of a rational ideal file mod p, term by term.
inline std::vector<Polynomial<PrimeField>> reduce_ideal_mod_p(const SosIdealSpec<RationalField>& spec,
                                                              const PrimeField& f) {
    std::vector<Polynomial<PrimeField>> out;
    out.reserve(spec.generators.size());
    for (const auto& g : spec.generators) {
        std::vector<Term<PrimeField>> ts;
        for (const auto& t : g.terms()) {
            auto den = f.from_bigint(t.coeff.den());
            if (den.is_zero()) throw bad_argument("generator denominator divisible by p");
            ts.push_back({f.from_bigint(t.coeff.num()) / den, t.mono});
        }
        out.emplace_back(f, g.nvars(), std::move(ts));
    }
    return out;
}

// ---- formulas --------------------------------------------------------

template <CoefficientField F>
ojson formula_to_json(const SosFormula<F>& f) {
    const auto& t = f.type();
    ojson alpha = ojson::array();
    for (std::uint32_t i = 1; i <= t.n; ++i) {
        ojson ji = ojson::array();
        for (std::uint32_t j = 1; j <= t.r; ++j) {
            ojson kj = ojson::array();
            for (std::uint32_t k = 1; k <= t.s; ++k) kj.push_back(coeff_json(f.at(i, j, k)));
            ji.push_back(kj);
        }
        alpha.push_back(ji);
    }
    return ojson{{"format", kFormatVersion},
                 {"kind", "formula"},
                 {"r", t.r},
                 {"s", t.s},
                 {"n", t.n},
                 {"field", field_to_json(f.field())},
                 {"alpha", alpha}};
}

template <CoefficientField F>
SosFormula<F> parse_formula_over(const ojson& j, const F& field) {
    require_format(j, "formula");
    SosType t(static_cast<std::uint32_t>(parse_u64(j.at("r"), "r")),
              static_cast<std::uint32_t>(parse_u64(j.at("s"), "s")),
              static_cast<std::uint32_t>(parse_u64(j.at("n"), "n")));
    SosFormula<F> f(t, field);
    const auto& alpha = j.at("alpha");
    if (alpha.size() != t.n) throw bad_argument("alpha has the wrong outer dimension");
    for (std::uint32_t i = 1; i <= t.n; ++i) {
        const auto& ji = alpha[i - 1];
        if (ji.size() != t.r) throw bad_argument("alpha has the wrong middle dimension");
        for (std::uint32_t jx = 1; jx <= t.r; ++jx) {
            const auto& kj = ji[jx - 1];
            if (kj.size() != t.s) throw bad_argument("alpha has the wrong inner dimension");
            for (std::uint32_t k = 1; k <= t.s; ++k) f.set(i, jx, k, parse_coeff(kj[k - 1], field));
        }
    }
    return f;
}

// ---- point counts ----------------------------------------------------

inline ojson counts_to_json(const PointCounts& pc) {
    ojson counts = ojson::array();
    for (const auto& c : pc.counts) counts.push_back(to_string(c));
    return ojson{{"format", kFormatVersion},
                 {"kind", "counts"},
                 {"p", std::to_string(pc.p)},
                 {"counts", counts}};
}

inline PointCounts parse_counts(const ojson& j) {
    require_format(j, "counts");
    PointCounts pc;
    pc.p = parse_u64(j.at("p"), "p");
    if (pc.p == 2 || !detail::is_prime_u64(pc.p))
        throw bad_argument("counts file needs an odd prime p");
    for (const auto& c : j.at("counts")) {
        if (c.is_string())
            pc.counts.push_back(big_from_string(c.get<std::string>()));
        else
            pc.counts.push_back(BigInt(static_cast<unsigned long>(parse_u64(c, "count"))));
    }
    return pc;
}

// ---- groebner output -------------------------------------------------

template <CoefficientField F>
ojson groebner_to_json(const GroebnerBasis<F>& gb, const F& field) {
    ojson basis = ojson::array();
    for (const auto& g : gb.basis) basis.push_back(poly_to_json(g));
    ojson steps = ojson::array();
    for (const auto& s : gb.trace.steps) {
        ojson step{{"step", s.step},
                   {"i", s.pair_i},
                   {"j", s.pair_j},
                   {"remainder_degree", s.remainder_degree},
                   {"pairs_processed", s.pairs_processed}};
        if (s.max_p) step["max_p"] = to_string(*s.max_p);
        steps.push_back(step);
    }
    ojson trace{{"pairs_processed", gb.trace.pairs_processed},
                {"pairs_skipped_coprime", gb.trace.pairs_skipped_coprime},
                {"extension_steps", gb.trace.extension_steps()},
                {"steps", steps}};
    if (gb.trace.initial_max_p) {
        trace["initial_max_p"] = to_string(*gb.trace.initial_max_p);
        trace["max_p"] = to_string(trace_max_p(gb.trace));
    }
    return ojson{{"format", kFormatVersion},
                 {"kind", "groebner"},
                 {"field", field_to_json(field)},
                 {"proper", is_proper(gb)},
                 {"basis", basis},
                 {"trace", trace}};
}

// ---- search outcome --------------------------------------------------

inline const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_none: return "exhausted-none";
        default: return "budget-exceeded";
    }
}

template <FiniteField F>
ojson outcome_to_json(const SearchConfig<F>& cfg, const SearchOutcome<F>& out) {
    ojson formulas = ojson::array();
    for (const auto& f : out.formulas) formulas.push_back(formula_to_json(f));
    return ojson{{"format", kFormatVersion},
                 {"kind", "search-outcome"},
                 {"type", ojson{{"r", cfg.type.r}, {"s", cfg.type.s}, {"n", cfg.type.n}}},
                 {"field", field_to_json(cfg.field)},
                 {"strategy", cfg.strategy == SearchStrategy::naive ? "naive" : "backtracking"},
                 {"status", status_name(out.status)},
                 {"nodes", std::to_string(out.nodes_visited)},
                 {"found_count", std::to_string(out.found_count)},
                 {"formulas", formulas}};
}

// ---- zeta output -----------------------------------------------------

inline ojson zeta_to_json(std::uint64_t p, const PointCounts& counts, const ZetaSeries& series,
                          std::size_t d1, std::size_t d2, const ZetaFunction& zf,
                          const std::vector<BigInt>& predicted) {
    auto poly = [](const IntPoly& q) {
        ojson a = ojson::array();
        for (const auto& c : q.c) a.push_back(to_string(c));
        return a;
    };
    ojson cj = ojson::array();
    for (const auto& c : counts.counts) cj.push_back(to_string(c));
    ojson sj = ojson::array();
    for (const auto& z : series.z) sj.push_back(to_string(z));
    ojson pj = ojson::array();
    for (const auto& n : predicted) pj.push_back(to_string(n));
    return ojson{{"format", kFormatVersion},
                 {"kind", "zeta"},
                 {"p", std::to_string(p)},
                 {"counts", cj},
                 {"series", sj},
                 {"d1", d1},
                 {"d2", d2},
                 {"r1", poly(zf.r1)},
                 {"r2", poly(zf.r2)},
                 {"predicted", pj}};
}

// ---- bound report ----------------------------------------------------

inline ojson bound_to_json(const BoundValue& b) {
    ojson j{{"tier", tier_name(b.tier)}};
    if (b.tier == BoundTier::loglog2_approx) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", b.approx);
        j["payload"] = buf;
    } else {
        j["payload"] = to_string(b.payload);
    }
    return j;
}

inline ojson bounds_report(const SosType& t, ExponentMode mode, std::size_t bit_cap = kDefaultBitCap) {
    BoundParams params{t, mode, bit_cap};
    ojson pj{{"r", t.r}, {"s", t.s}, {"n", t.n}, {"v", t.nvars()}, {"e", params.e()}};
    auto q = params.lemma_binomial();
    auto m = params.step_binomial();
    if (q.exact) pj["q"] = to_string(*q.exact);
    if (m.exact) pj["m"] = to_string(*m.exact);
    return ojson{
        {"format", kFormatVersion},
        {"kind", "bounds"},
        {"mode", mode_name(mode)},
        {"params", pj},
        {"bounds",
         ojson{// degree cap driven by the same exponent variable as the mode
               {"dube_degree", bound_to_json(dube_bound(2, params.e(), bit_cap))},
               {"buchberger_steps", bound_to_json(buchberger_step_bound(params))},
               {"charp_threshold", bound_to_json(charp_threshold(params))},
               {"field_degree", bound_to_json(field_degree_bound(t, bit_cap))},
               {"bombieri",
                bound_to_json(BoundValue::make_exact(
                    bombieri_bound(2, t.nvars(), t.generator_count())))}}}};
}

} // namespace sosf::io

#endif

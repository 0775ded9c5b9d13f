// sosf - command line front end for the sums-of-squares formula toolkit.
//
// Exit codes, used consistently by every subcommand:
//   0  success / positive mathematical result
//   2  usage error or violated precondition
//   3  negative mathematical result (unit ideal, failed verification,
//      exhausted search)
//   4  undecided: a resource cap was hit
//   5  input data is internally inconsistent

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "sosf/sosf.hpp"

namespace {

using namespace sosf;
using io::ojson;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;
constexpr int kExitUndecided = 4;
constexpr int kExitInconsistent = 5;

void emit(const ojson& doc, const std::string& out_path) {
    if (out_path.empty())
        std::cout << io::dump(doc);
    else
        io::write_file(out_path, doc);
}

struct IdealArgs {
    std::uint32_t r = 0, s = 0, n = 0;
    std::string out;
};

int cmd_ideal(const IdealArgs& a) {
    auto spec = gen_sos_ideal(SosType(a.r, a.s, a.n), RationalField{});
    emit(io::ideal_to_json(spec), a.out);
    return kExitOk;
}

struct GroebnerArgs {
    std::string input;
    std::string field = "q";
    std::uint64_t p = 0;
    std::string trace_out;
    std::optional<std::uint64_t> cap;
    bool product_criterion = false;
    bool interreduce = false;
};

template <CoefficientField F>
int run_groebner(const std::vector<Polynomial<F>>& gens, const F& field, const GroebnerArgs& a) {
    BuchbergerOptions opts;
    opts.product_criterion = a.product_criterion;
    opts.interreduce = a.interreduce;
    opts.max_pair_reductions = a.cap;
    auto gb = buchberger(gens, opts);
    if (!a.trace_out.empty()) io::write_file(a.trace_out, io::groebner_to_json(gb, field));
    bool proper = is_proper(gb);
    std::cout << "basis size " << gb.basis.size() << ", extension steps "
              << gb.trace.extension_steps() << ", pairs " << gb.trace.pairs_processed << ", "
              << (proper ? "proper ideal" : "unit ideal") << "\n";
    return proper ? kExitOk : kExitNegative;
}

int cmd_groebner(const GroebnerArgs& a) {
    auto spec = io::parse_ideal(io::read_file(a.input));
    if (a.field == "q") return run_groebner(spec.generators, RationalField{}, a);
    if (a.field == "fp") {
        PrimeField f(a.p);
        return run_groebner(io::reduce_ideal_mod_p(spec, f), f, a);
    }
    throw bad_argument("--field must be q or fp");
}

struct SearchArgs {
    std::uint32_t r = 0, s = 0, n = 0;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::string strategy = "backtracking";
    std::string emit_mode = "all";
    std::optional<std::uint64_t> nodes;
    std::optional<double> time_budget;
    unsigned threads = 1;
    std::string out;
};

template <FiniteField F>
int run_search_cmd(const F& field, const SearchArgs& a) {
    SearchConfig<F> cfg{SosType(a.r, a.s, a.n), field};
    if (a.strategy == "naive")
        cfg.strategy = SearchStrategy::naive;
    else if (a.strategy == "backtracking")
        cfg.strategy = SearchStrategy::backtracking;
    else
        throw bad_argument("--strategy must be naive or backtracking");
    if (a.emit_mode == "first")
        cfg.emit = EmitMode::first;
    else if (a.emit_mode == "all")
        cfg.emit = EmitMode::all;
    else if (a.emit_mode == "count")
        cfg.emit = EmitMode::count;
    else
        throw bad_argument("--emit must be first, all or count");
    cfg.node_budget = a.nodes;
    cfg.time_budget_seconds = a.time_budget;
    cfg.threads = a.threads;

    auto outcome = run_search(cfg);
    if (!a.out.empty()) io::write_file(a.out, io::outcome_to_json(cfg, outcome));
    std::cout << io::status_name(outcome.status) << ": " << outcome.found_count << " formula(s), "
              << outcome.nodes_visited << " nodes\n";
    switch (outcome.status) {
        case SearchStatus::found: return kExitOk;
        case SearchStatus::exhausted_none: return kExitNegative;
        default: return kExitUndecided;
    }
}

int cmd_search(const SearchArgs& a) {
    if (a.k == 1) return run_search_cmd(PrimeField(a.p), a);
    return run_search_cmd(make_extension_field(a.p, a.k), a);
}

struct ZetaArgs {
    std::string input;
    std::string counts_path;
    std::uint64_t p = 0;
    unsigned kmax = 0;
    std::size_t d1 = 0, d2 = 0;
    std::uint64_t budget = 10000000;
    unsigned threads = 1;
    std::string out;
};

int cmd_zeta(const ZetaArgs& a) {
    PointCounts counts;
    if (!a.counts_path.empty()) {
        counts = io::parse_counts(io::read_file(a.counts_path));
        validate_counts(counts);
    } else {
        if (a.input.empty()) throw bad_argument("need --input with --p and --kmax, or --counts");
        auto spec = io::parse_ideal(io::read_file(a.input));
        PrimeField f(a.p);
        counts = count_points_range(io::reduce_ideal_mod_p(spec, f), a.kmax, a.budget, a.threads);
    }
    if (counts.counts.size() < a.d1 + a.d2)
        throw bad_argument("need at least d1 + d2 point counts");

    auto series = series_from_counts(counts, counts.counts.size());
    auto zf = reconstruct_zeta(series, a.d1, a.d2);
    auto predicted = predict_counts(zf, counts.counts.size());
    emit(io::zeta_to_json(counts.p, counts, series, a.d1, a.d2, zf, predicted), a.out);
    return kExitOk;
}

struct BoundsArgs {
    std::uint32_t r = 0, s = 0, n = 0;
    std::string mode = "as-stated";
    std::size_t bit_cap = kDefaultBitCap;
    std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
    ExponentMode mode;
    if (a.mode == "as-stated")
        mode = ExponentMode::as_stated;
    else if (a.mode == "dube-consistent")
        mode = ExponentMode::dube_consistent;
    else
        throw bad_argument("--mode must be as-stated or dube-consistent");
    emit(io::bounds_report(SosType(a.r, a.s, a.n), mode, a.bit_cap), a.out);
    return kExitOk;
}

struct VerifyArgs {
    std::string formula;
    std::uint64_t p = 0;
};

int cmd_verify(const VerifyArgs& a) {
    ojson j = io::read_file(a.formula);
    auto desc = io::parse_field(j.at("field"));
    bool ok = false;
    if (a.p != 0) {
        // verify over F_p, reducing a rational formula if needed
        PrimeField f(a.p);
        if (desc.kind == io::FieldDescriptor::Kind::rational)
            ok = verify_formula(reduce_formula_mod_p(io::parse_formula_over(j, RationalField{}), a.p));
        else if (desc.kind == io::FieldDescriptor::Kind::prime && desc.p == a.p)
            ok = verify_formula(io::parse_formula_over(j, f));
        else
            throw bad_argument("--p conflicts with the formula's field");
    } else {
        switch (desc.kind) {
            case io::FieldDescriptor::Kind::rational:
                ok = verify_formula(io::parse_formula_over(j, RationalField{}));
                break;
            case io::FieldDescriptor::Kind::prime:
                ok = verify_formula(io::parse_formula_over(j, PrimeField(desc.p)));
                break;
            case io::FieldDescriptor::Kind::extension:
                ok = verify_formula(io::parse_formula_over(j, io::make_field(desc)));
                break;
        }
    }
    std::cout << (ok ? "valid formula" : "not a formula") << "\n";
    return ok ? kExitOk : kExitNegative;
}

struct CatalogArgs {
    std::uint32_t n = 0;
    std::uint64_t p = 0;
    std::string out;
};

int cmd_catalog(const CatalogArgs& a) {
    if (a.p != 0)
        emit(io::formula_to_json(catalog(a.n, PrimeField(a.p))), a.out);
    else
        emit(io::formula_to_json(catalog(a.n, RationalField{})), a.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sums-of-squares formula toolkit"};
    app.require_subcommand(1);

    IdealArgs ideal_args;
    auto* ideal = app.add_subcommand("ideal", "emit the defining ideal of a formula type");
    ideal->add_option("--r", ideal_args.r)->required();
    ideal->add_option("--s", ideal_args.s)->required();
    ideal->add_option("--n", ideal_args.n)->required();
    ideal->add_option("--out", ideal_args.out);

    GroebnerArgs groebner_args;
    auto* groebner = app.add_subcommand("groebner", "run Buchberger's algorithm on an ideal file");
    groebner->add_option("--input", groebner_args.input)->required();
    groebner->add_option("--field", groebner_args.field)->check(CLI::IsMember({"q", "fp"}));
    groebner->add_option("--p", groebner_args.p);
    groebner->add_option("--trace", groebner_args.trace_out);
    std::uint64_t cap_raw = 0;
    auto* cap_opt = groebner->add_option("--cap", cap_raw, "pair-reduction cap");
    groebner->add_flag("--product-criterion", groebner_args.product_criterion);
    groebner->add_flag("--interreduce", groebner_args.interreduce);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "search a finite field for formulas");
    search->add_option("--r", search_args.r)->required();
    search->add_option("--s", search_args.s)->required();
    search->add_option("--n", search_args.n)->required();
    search->add_option("--p", search_args.p)->required();
    search->add_option("--k", search_args.k);
    search->add_option("--strategy", search_args.strategy);
    search->add_option("--emit", search_args.emit_mode);
    std::uint64_t nodes_raw = 0;
    auto* nodes_opt = search->add_option("--nodes", nodes_raw, "node budget");
    double time_raw = 0.0;
    auto* time_opt = search->add_option("--time-budget", time_raw, "soft wall-time cap in seconds");
    search->add_option("--threads", search_args.threads);
    search->add_option("--out", search_args.out);

    ZetaArgs zeta_args;
    auto* zeta = app.add_subcommand("zeta", "count points and reconstruct the zeta function");
    zeta->add_option("--input", zeta_args.input);
    zeta->add_option("--counts", zeta_args.counts_path);
    zeta->add_option("--p", zeta_args.p);
    zeta->add_option("--kmax", zeta_args.kmax);
    zeta->add_option("--d1", zeta_args.d1)->required();
    zeta->add_option("--d2", zeta_args.d2)->required();
    zeta->add_option("--budget", zeta_args.budget);
    zeta->add_option("--threads", zeta_args.threads);
    zeta->add_option("--out", zeta_args.out);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds for a type");
    bounds->add_option("--r", bounds_args.r)->required();
    bounds->add_option("--s", bounds_args.s)->required();
    bounds->add_option("--n", bounds_args.n)->required();
    bounds->add_option("--mode", bounds_args.mode);
    bounds->add_option("--bit-cap", bounds_args.bit_cap);
    bounds->add_option("--out", bounds_args.out);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a formula file");
    verify->add_option("--formula", verify_args.formula)->required();
    verify->add_option("--p", verify_args.p);

    CatalogArgs catalog_args;
    auto* catalog_cmd = app.add_subcommand("catalog", "emit a classical identity as a formula file");
    catalog_cmd->add_option("--n", catalog_args.n)->required();
    catalog_cmd->add_option("--p", catalog_args.p);
    catalog_cmd->add_option("--out", catalog_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ideal) return cmd_ideal(ideal_args);
        if (*groebner) {
            if (*cap_opt) groebner_args.cap = cap_raw;
            return cmd_groebner(groebner_args);
        }
        if (*search) {
            if (*nodes_opt) search_args.nodes = nodes_raw;
            if (*time_opt) search_args.time_budget = time_raw;
            return cmd_search(search_args);
        }
        if (*zeta) return cmd_zeta(zeta_args);
        if (*bounds) return cmd_bounds(bounds_args);
        if (*verify) return cmd_verify(verify_args);
        if (*catalog_cmd) return cmd_catalog(catalog_args);
    } catch (const budget_exceeded& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const inconsistent_data& e) {
        std::cerr << "inconsistent data: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

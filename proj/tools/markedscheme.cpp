// Command-line front end: analyze / truncate / reduce / check-basis /
// scheme / compare-truncations over strongly stable ideals.
//
// Exit codes: 0 success, 1 domain error (non-strongly-stable input,
// non-truncation where one is required, exhausted reduction budget),
// 2 usage error (bad arguments or parse failures).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "marked/errors.hpp"
#include "marked/io.hpp"
#include "marked/oracle.hpp"
#include "marked/scheme.hpp"

using json = nlohmann::ordered_json;
using namespace marked;

namespace {

struct CommonOpts {
    std::optional<std::size_t> nvars;
    int threads = 1;
    long max_steps = 1'000'000;
    std::string format = "text";
};

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long r = std::strtol(v, &end, 10);
    return (end && *end == '\0' && r > 0) ? r : fallback;
}

StronglyStableIdeal load_ideal(const std::string& text, const CommonOpts& opts) {
    auto j = parse_ideal(text, opts.nvars);
    if (auto bad = strong_stability_violation(j))
        throw DomainError("not strongly stable: e+ move x" + std::to_string(bad->from) + "->x" +
                          std::to_string(bad->to) + " of " + to_string(bad->generator) +
                          " leaves the ideal");
    return j;
}

MarkedSet load_marked_set(const std::string& path, const StronglyStableIdeal& j) {
    if (path == "-") return parse_marked_set(std::cin, j);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open marked-set file " + path);
    return parse_marked_set(in, j);
}

json ideal_json(const StronglyStableIdeal& j) {
    json a = json::array();
    for (const auto& g : j.basis()) a.push_back(to_string(g));
    return a;
}

json pair_json(const PairKind& p) {
    return json{{"tag", to_string(p.tag)},
                {"head1", to_string(p.head1)},
                {"head2", to_string(p.head2)},
                {"mult1", to_string(p.mult1)},
                {"mult2", to_string(p.mult2)}};
}

int run_analyze(const std::string& ideal_text, const CommonOpts& opts) {
    auto j = load_ideal(ideal_text, opts);
    const auto sat = saturation(j);
    const auto rep = embedding_report(sat);
    const auto trunc = is_m_truncation(j);
    const int rho_minus_1 = rep.rho ? *rep.rho - 1 : -1;

    if (opts.format == "json") {
        json out{{"ideal", ideal_json(j)},
                 {"nvars", j.nvars()},
                 {"strongly_stable", true},
                 {"saturated", j.is_saturated()},
                 {"initial_degree", j.initial_degree()},
                 {"regularity", j.regularity()},
                 {"satiety", j.satiety()},
                 {"basis_size", j.basis().size()},
                 {"m_truncation", trunc ? json(*trunc) : json(nullptr)},
                 {"saturation", ideal_json(sat)},
                 {"hilbert_polynomial", rep.p.str()},
                 {"gotzmann_number", rep.gotzmann},
                 {"rho_minus_1", rho_minus_1},
                 {"embedding_bound", rep.bound},
                 {"n_reduced_parameters", rep.n_tilde_params}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "ideal: " << to_string(j) << "\n"
              << "nvars: " << j.nvars() << "\n"
              << "strongly stable: yes\n"
              << "saturated: " << (j.is_saturated() ? "yes" : "no") << "\n"
              << "initial degree: " << j.initial_degree() << "\n"
              << "regularity: " << j.regularity() << "\n"
              << "satiety: " << j.satiety() << "\n"
              << "basis size: " << j.basis().size() << "\n";
    if (trunc)
        std::cout << "m-truncation: m = " << *trunc << "\n";
    else
        std::cout << "m-truncation: no\n";
    if (!j.is_saturated()) std::cout << "saturation: " << to_string(sat) << "\n";
    std::cout << "hilbert polynomial: p(t) = " << rep.p.str() << "\n"
              << "gotzmann number: " << rep.gotzmann << "\n"
              << "rho - 1: " << rho_minus_1 << "\n"
              << "sigma * p(reg): " << rep.bound << "\n"
              << "reduced parameters |C~[rho-1]|: " << rep.n_tilde_params << "\n";
    return 0;
}

int run_truncate(const std::string& ideal_text, int m, const CommonOpts& opts) {
    auto j = load_ideal(ideal_text, opts);
    auto t = truncate(saturation(j), m);
    if (opts.format == "json") {
        std::cout << json{{"ideal", ideal_json(j)}, {"m", m}, {"truncation", ideal_json(t)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << to_string(t) << "\n";
    return 0;
}

int run_reduce(const std::string& ideal_text, const std::string& poly_text,
               const std::string& set_path, const std::string& mode, bool want_trace,
               int force_lift, const CommonOpts& opts) {
    auto j = load_ideal(ideal_text, opts);
    XPoly h = parse_xpoly(poly_text, j.nvars());

    MarkedSet full = set_path.empty()
                         ? [&] {
                               std::vector<MarkedPoly> polys;
                               for (const auto& b : j.basis()) polys.push_back(MarkedPoly{b, XPoly{}});
                               return MarkedSet(j, std::move(polys), false);
                           }()
                         : load_marked_set(set_path, j);

    std::vector<SmTraceEntry> trace;
    XPoly reduced;
    int t = 0;
    long steps = 0;
    if (mode == "sm") {
        SmOptions smo;
        smo.max_steps = opts.max_steps;
        smo.keep_trace = want_trace;
        smo.force_lift = force_lift;
        auto r = sm_reduce(h, full.superminimal_subset(), smo);
        reduced = std::move(r.reduced);
        t = r.t;
        steps = r.steps;
        if (r.trace) trace = std::move(*r.trace);
    } else {
        reduced = v_reduce(h, full, Selection::LexGreatest, want_trace ? &trace : nullptr);
        steps = static_cast<long>(trace.size());
    }

    const ParamTable* table = full.params().get();
    if (opts.format == "json") {
        json steps_json = json::array();
        for (const auto& e : trace)
            steps_json.push_back(json{{"monomial", to_string(e.replaced)},
                                      {"head", to_string(e.head_used)},
                                      {"cofactor", to_string(e.cofactor)},
                                      {"lift", e.lift}});
        json out{{"ideal", ideal_json(j)}, {"mode", mode},
                 {"input", h.str(table)},   {"t", t},
                 {"reduced", reduced.str(table)}, {"steps", steps}};
        if (want_trace) out["trace"] = steps_json;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : trace) {
        std::cout << to_string(e.replaced) << " => " << to_string(e.head_used) << " * "
                  << to_string(e.cofactor);
        if (e.lift > 0) std::cout << "   (lift x0^" << e.lift << ")";
        std::cout << "\n";
    }
    std::cout << "t = " << t << "\n"
              << "reduced = " << reduced.str(table) << "\n";
    return 0;
}

int run_check_basis(const std::string& ideal_text, const std::string& set_path,
                    const std::string& mode, bool with_oracle, int window,
                    const CommonOpts& opts) {
    auto j = load_ideal(ideal_text, opts);
    auto set = load_marked_set(set_path, j);

    BasisCheckResult res;
    if (mode == "v-ek")
        res = check_marked_basis_v(set, VPairMode::EK, opts.threads);
    else if (mode == "v-all")
        res = check_marked_basis_v(set, VPairMode::AllPairs, opts.threads);
    else if (mode == "sm-l1l2")
        res = check_marked_basis_sm(set, SmPairMode::L1L2, opts.threads, opts.max_steps);
    else if (mode == "sm-ek")
        res = check_marked_basis_sm(set, SmPairMode::EK, opts.threads, opts.max_steps);
    else if (mode == "sm-all")
        res = check_marked_basis_sm(set, SmPairMode::AllPairs, opts.threads, opts.max_steps);
    else
        throw CLI::ValidationError("--mode", "unknown mode " + mode);

    std::optional<bool> oracle_verdict;
    if (with_oracle)
        oracle_verdict = hilbert_rank_check(set, window > 0 ? window : default_rank_window(j));

    if (opts.format == "json") {
        json out{{"ideal", ideal_json(j)}, {"mode", mode}, {"marked_basis", res.ok}};
        if (!res.ok) {
            out["failing_pair"] = pair_json(*res.failing);
            out["residual"] = res.residual.str(nullptr);
            out["lift"] = res.lift;
        }
        if (oracle_verdict) out["oracle"] = *oracle_verdict;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mode: " << mode << "\n"
                  << "marked basis: " << (res.ok ? "yes" : "no") << "\n";
        if (!res.ok) {
            std::cout << "failing pair (" << to_string(res.failing->tag) << "): S(f_{"
                      << to_string(res.failing->head1) << "}, f_{" << to_string(res.failing->head2)
                      << "})\n";
            if (res.lift > 0) std::cout << "lift: x0^" << res.lift << "\n";
            std::cout << "residual: " << res.residual.str(nullptr) << "\n";
        }
        if (oracle_verdict)
            std::cout << "rank oracle: " << (*oracle_verdict ? "agrees (yes)" : "agrees (no)")
                      << "\n";
    }
    if (oracle_verdict && *oracle_verdict != res.ok)
        throw InternalError("rank oracle disagrees with the criterion");
    return 0;
}

int run_scheme(const std::string& ideal_text, std::optional<int> m, const std::string& pairs,
               bool selfcheck, std::uint64_t seed, const CommonOpts& opts) {
    auto j = load_ideal(ideal_text, opts);
    if (m) j = truncate(saturation(j), *m);

    SchemeOptions sopts;
    sopts.threads = opts.threads;
    sopts.max_steps = opts.max_steps;
    if (pairs == "l1")
        sopts.family = PairFamily::L1;
    else if (pairs == "l1l2")
        sopts.family = PairFamily::L1L2;
    else if (pairs == "ek")
        sopts.family = PairFamily::EK;
    else if (pairs == "all")
        sopts.family = PairFamily::AllPairs;
    else
        throw CLI::ValidationError("--pairs", "unknown pair family " + pairs);

    auto r = marked_scheme(j, sopts);

    std::optional<SampleReport> sample;
    if (selfcheck) sample = sample_check(r, seed);

    if (opts.format == "json") {
        json params = json::array();
        for (const auto& p : r.params->parameters()) params.push_back(to_string(p));
        json eqs = json::array();
        for (const auto& e : r.equations) eqs.push_back(e.str(*r.params));
        json out{{"ideal", ideal_json(r.ideal)},
                 {"m", r.m},
                 {"parameters", params},
                 {"equations", eqs},
                 {"stats",
                  json{{"n_params", r.stats.n_params},
                       {"n_equations", r.stats.n_equations},
                       {"n_equations_raw", r.stats.n_equations_raw},
                       {"n_d1_raw", r.stats.n_d1_raw},
                       {"n_d2_raw", r.stats.n_d2_raw},
                       {"n_pairs", r.stats.n_pairs},
                       {"elapsed_ms", r.stats.elapsed_ms}}}};
        if (sample)
            out["selfcheck"] = json{{"seed", seed},
                                    {"n_points", sample->n_points},
                                    {"n_on_scheme", sample->n_on_scheme},
                                    {"n_off_scheme", sample->n_off_scheme},
                                    {"sound", sample->sound},
                                    {"complete", sample->complete}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ideal: " << to_string(r.ideal) << "\n"
                  << "m: " << r.m << "\n"
                  << "parameters (" << r.stats.n_params << "):\n";
        for (const auto& p : r.params->parameters()) std::cout << "  " << to_string(p) << "\n";
        std::cout << "equations (" << r.stats.n_equations << " normalized, "
                  << r.stats.n_equations_raw << " raw):\n";
        for (const auto& e : r.equations) std::cout << "  " << e.str(*r.params) << " = 0\n";
        std::cout << "pairs: " << r.stats.n_pairs << "  d1: " << r.stats.n_d1_raw
                  << "  d2: " << r.stats.n_d2_raw << "  elapsed: " << r.stats.elapsed_ms
                  << " ms\n";
        if (sample)
            std::cout << "selfcheck (seed " << seed << "): " << sample->n_points << " points, "
                      << sample->n_on_scheme << " on / " << sample->n_off_scheme
                      << " off the scheme, sound = " << (sample->sound ? "yes" : "no")
                      << ", complete = " << (sample->complete ? "yes" : "no") << "\n";
    }
    if (sample && !(sample->sound && sample->complete))
        throw InternalError("selfcheck sampling found a soundness/completeness violation");
    return 0;
}

int run_compare(const std::string& ideal_text, std::optional<int> level, std::optional<int> max_level,
                const CommonOpts& opts) {
    auto j = saturation(load_ideal(ideal_text, opts));
    int lo = level.value_or(1);
    int hi = level ? *level : max_level.value_or(std::max(rho(j).value_or(0), j.regularity()) + 1);

    json levels = json::array();
    for (int m = lo; m <= hi; ++m) {
        auto map = phi_embedding(j, m);
        json identified = json::array();
        for (const auto& [p, q] : map.identified)
            identified.push_back(json::array({to_string(p), to_string(q)}));
        json extra = json::array();
        for (const auto& p : map.extra) extra.push_back(to_string(p));
        levels.push_back(json{{"m", m},
                              {"isomorphism", is_truncation_isomorphism(j, m)},
                              {"n_identified", map.identified.size()},
                              {"n_extra", map.extra.size()},
                              {"identified", identified},
                              {"extra", extra}});
    }
    json out{{"ideal", ideal_json(j)}, {"levels", levels}};
    if (opts.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "saturated ideal: " << to_string(j) << "\n";
        for (const auto& l : levels)
            std::cout << "m = " << l["m"] << ": Mf(J_{>=" << (l["m"].get<int>() - 1)
                      << "}) -> Mf(J_{>=" << l["m"] << "})  identified " << l["n_identified"]
                      << ", extra " << l["n_extra"] << ", isomorphism "
                      << (l["isomorphism"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"marked families and marked schemes over strongly stable monomial ideals"};
    app.require_subcommand(1);

    CommonOpts common;
    common.threads = static_cast<int>(env_long("MARKED_THREADS", 1));
    common.max_steps = env_long("MARKED_STEP_BUDGET", 1'000'000);

    std::string ideal_text, poly_text, set_path = "-", mode, pairs = "l1";
    int m_level = 0, force_lift = 0, window = 0;
    std::optional<int> scheme_m, compare_m, compare_max;
    bool want_trace = false, with_oracle = false, selfcheck = false;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("ideal", ideal_text, "comma-separated monomial generators")->required();
        cmd->add_option("--nvars", common.nvars,
                        "ambient variable count (default: highest index + 1)");
        cmd->add_option("--threads", common.threads, "worker threads (env MARKED_THREADS)");
        if (with_format)
            cmd->add_option("--format", common.format, "text or json")
                ->check(CLI::IsMember({"text", "json"}));
    };

    auto* analyze = app.add_subcommand("analyze", "invariants and embedding report");
    add_common(analyze);

    auto* trunc = app.add_subcommand("truncate", "m-truncation of the saturation");
    add_common(trunc);
    trunc->add_option("--m", m_level, "truncation degree")->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a polynomial to its normal form");
    add_common(reduce);
    reduce->add_option("--poly", poly_text, "polynomial to reduce")->required();
    reduce->add_option("--set", set_path,
                       "marked-set file, '-' for stdin (default: zero tails)")
        ->default_val("");
    reduce->add_option("--mode", mode, "sm (superminimal) or v (V_l)")
        ->default_val("sm")
        ->check(CLI::IsMember({"sm", "v"}));
    reduce->add_flag("--trace", want_trace, "print each rewriting step");
    reduce->add_option("--lift", force_lift, "force an extra x0 lift (sm mode)");
    reduce->add_option("--max-steps", common.max_steps,
                       "step budget (env MARKED_STEP_BUDGET)");

    auto* check = app.add_subcommand("check-basis", "decide the marked-basis property");
    add_common(check);
    check->add_option("--set", set_path, "marked-set file, '-' for stdin")->required();
    check->add_option("--mode", mode, "v-ek, v-all, sm-l1l2, sm-ek, sm-all")
        ->default_val("v-ek")
        ->check(CLI::IsMember({"v-ek", "v-all", "sm-l1l2", "sm-ek", "sm-all"}));
    check->add_flag("--oracle", with_oracle, "also run the linear-algebra rank oracle");
    check->add_option("--window", window, "rank oracle degree window (default reg + n + 1)");
    check->add_option("--max-steps", common.max_steps, "step budget (env MARKED_STEP_BUDGET)");

    auto* scheme = app.add_subcommand("scheme", "equations of the marked scheme");
    add_common(scheme);
    scheme->add_option("--m", scheme_m, "truncate the saturation at this degree first");
    scheme->add_option("--pairs", pairs, "S-polynomial family: l1, l1l2, ek, all")
        ->check(CLI::IsMember({"l1", "l1l2", "ek", "all"}));
    scheme->add_flag("--selfcheck", selfcheck,
                     "sample points and verify soundness/completeness");
    scheme->add_option("--seed", seed, "seed for --selfcheck sampling");
    scheme->add_option("--max-steps", common.max_steps, "step budget (env MARKED_STEP_BUDGET)");

    auto* compare = app.add_subcommand("compare-truncations",
                                       "embeddings between consecutive truncation levels");
    add_common(compare);
    compare->add_option("--m", compare_m, "single level to report");
    compare->add_option("--max-level", compare_max, "last level (default max(rho, reg) + 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(ideal_text, common);
        if (*trunc) return run_truncate(ideal_text, m_level, common);
        if (*reduce)
            return run_reduce(ideal_text, poly_text, set_path, mode, want_trace, force_lift,
                              common);
        if (*check)
            return run_check_basis(ideal_text, set_path, mode, with_oracle, window, common);
        if (*scheme) return run_scheme(ideal_text, scheme_m, pairs, selfcheck, seed, common);
        if (*compare) return run_compare(ideal_text, compare_m, compare_max, common);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#ifndef QEXTREMAL_CLI_HPP
#define QEXTREMAL_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qextremal/cache.hpp"
#include "qextremal/canonical.hpp"
#include "qextremal/errors.hpp"
#include "qextremal/families.hpp"
#include "qextremal/graph6.hpp"
#include "qextremal/minor.hpp"
#include "qextremal/report.hpp"
#include "qextremal/search.hpp"
#include "qextremal/selftest.hpp"
#include "qextremal/spectral.hpp"
#include "qextremal/transforms.hpp"
#include "qextremal/trials.hpp"

namespace qext {

// Exit codes: 0 all assertions pass, 1 computation ran but an assertion
// failed or a capacity cap was hit, 2 usage error. Nothing else.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

class help_requested : public std::runtime_error {
public:
    explicit help_requested(const std::string& text) : std::runtime_error(text) {}
};

struct Command {
    std::string verb;
    std::optional<std::string> family;
    std::optional<std::string> n_text;  // integer, or "lo..hi" for lemma-suite
    std::optional<int> t, s, a1, u, v, workers;
    std::optional<std::string> g6, moved_text, prediction_g6, cache_dir, output;
    std::optional<double> tol, gap;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

namespace cli_detail {

inline void add_common(CLI::App* sub, Command& cmd) {
    sub->add_option("--format", cmd.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output", cmd.output, "write the report to this path instead of stdout");
}

}  // namespace cli_detail

// Parses argv (program name excluded). Throws usage_error on any malformed
// input and help_requested when -h/--help is given.
inline Command parse_args(std::vector<std::string> args) {
    Command cmd;
    CLI::App app{"Q-index extremal toolkit for star-minor-free graphs"};
    app.require_subcommand(1);

    CLI::App* construct = app.add_subcommand("construct", "build a named family member");
    construct->add_option("--family", cmd.family, "complete|bipartite|knme|knmm|sK|get|f|odd")->required();
    construct->add_option("--n", cmd.n_text, "order");
    construct->add_option("--t", cmd.t, "star parameter");
    construct->add_option("--s", cmd.s, "join parameter");
    construct->add_option("--a1", cmd.a1, "matched-part size (odd family)");
    cli_detail::add_common(construct, cmd);

    CLI::App* qindex = app.add_subcommand("qindex", "Q-index, Perron vector, residual");
    qindex->add_option("--g6", cmd.g6, "graph6 text");
    qindex->add_option("--family", cmd.family, "family name (alternative to --g6)");
    qindex->add_option("--n", cmd.n_text, "order");
    qindex->add_option("--t", cmd.t, "star parameter");
    qindex->add_option("--s", cmd.s, "join parameter");
    qindex->add_option("--a1", cmd.a1, "matched-part size");
    qindex->add_option("--tol", cmd.tol, "residual tolerance");
    cli_detail::add_common(qindex, cmd);

    CLI::App* minor = app.add_subcommand("minor-check", "star-minor certificate");
    minor->add_option("--g6", cmd.g6, "graph6 text");
    minor->add_option("--family", cmd.family, "family name (alternative to --g6)");
    minor->add_option("--n", cmd.n_text, "order");
    minor->add_option("--t", cmd.t, "star parameter")->required();
    minor->add_option("--s", cmd.s, "join parameter");
    minor->add_option("--a1", cmd.a1, "matched-part size");
    cli_detail::add_common(minor, cmd);

    CLI::App* rotate = app.add_subcommand("rotate", "rotate edges from v to u and compare Q-indices");
    rotate->add_option("--g6", cmd.g6, "graph6 text")->required();
    rotate->add_option("--u", cmd.u, "target vertex")->required();
    rotate->add_option("--v", cmd.v, "source vertex")->required();
    rotate->add_option("--moved", cmd.moved_text, "comma-separated vertex ids to move")->required();
    rotate->add_option("--tol", cmd.tol, "Perron hypothesis tolerance");
    cli_detail::add_common(rotate, cmd);

    CLI::App* search = app.add_subcommand("search", "exhaustive extremal search");
    search->add_option("--n", cmd.n_text, "order")->required();
    search->add_option("--t", cmd.t, "star parameter")->required();
    search->add_option("--tol", cmd.tol, "eigensolver tolerance");
    search->add_option("--gap", cmd.gap, "uniqueness margin");
    search->add_option("--workers", cmd.workers, "parallelism hint");
    search->add_option("--cache", cmd.cache_dir, "cache directory");
    cli_detail::add_common(search, cmd);

    CLI::App* verify = app.add_subcommand("verify-theorem", "search and compare with the prediction");
    verify->add_option("--n", cmd.n_text, "order")->required();
    verify->add_option("--t", cmd.t, "star parameter")->required();
    verify->add_option("--prediction-g6", cmd.prediction_g6, "override the predicted extremal graph");
    verify->add_option("--tol", cmd.tol, "eigensolver tolerance");
    verify->add_option("--gap", cmd.gap, "uniqueness margin");
    verify->add_option("--workers", cmd.workers, "parallelism hint");
    verify->add_option("--cache", cmd.cache_dir, "cache directory");
    cli_detail::add_common(verify, cmd);

    CLI::App* suite = app.add_subcommand("lemma-suite", "interval and structural audits over a range of orders");
    suite->add_option("--n", cmd.n_text, "order or range lo..hi")->required();
    suite->add_option("--t", cmd.t, "star parameter")->required();
    suite->add_option("--tol", cmd.tol, "eigensolver tolerance");
    suite->add_option("--gap", cmd.gap, "uniqueness margin");
    suite->add_option("--workers", cmd.workers, "parallelism hint");
    suite->add_option("--cache", cmd.cache_dir, "cache directory");
    cli_detail::add_common(suite, cmd);

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance battery");
    selftest->add_option("--seed", cmd.seed, "trial seed");
    selftest->add_option("--workers", cmd.workers, "parallelism hint");
    selftest->add_option("--cache", cmd.cache_dir, "cache directory");
    cli_detail::add_common(selftest, cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw help_requested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw help_requested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }
    cmd.verb = app.get_subcommands().front()->get_name();
    return cmd;
}

namespace cli_detail {

inline int require_int(const std::optional<std::string>& text, const char* flag) {
    if (!text) throw usage_error(std::string("missing required flag ") + flag);
    try {
        std::size_t used = 0;
        int value = std::stoi(*text, &used);
        if (used != text->size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw usage_error(std::string(flag) + " expects an integer, got '" + *text + "'");
    }
}

inline std::pair<int, int> parse_range(const std::optional<std::string>& text, const char* flag) {
    if (!text) throw usage_error(std::string("missing required flag ") + flag);
    std::size_t dots = text->find("..");
    if (dots == std::string::npos) {
        int single = require_int(text, flag);
        return {single, single};
    }
    std::optional<std::string> lo = text->substr(0, dots), hi = text->substr(dots + 2);
    return {require_int(lo, flag), require_int(hi, flag)};
}

inline int opt_int(const std::optional<int>& v, const char* flag) {
    if (!v) throw usage_error(std::string("missing required flag ") + flag);
    return *v;
}

inline Graph family_graph(const Command& cmd) {
    if (!cmd.family) throw usage_error("missing --family");
    const std::string& f = *cmd.family;
    if (f == "complete") return complete(require_int(cmd.n_text, "--n"));
    if (f == "bipartite") return complete_bipartite(opt_int(cmd.s, "--s"), opt_int(cmd.t, "--t"));
    if (f == "knme") return kn_minus_e(require_int(cmd.n_text, "--n"));
    if (f == "knmm") return kn_minus_perfect_matching(require_int(cmd.n_text, "--n"));
    if (f == "sK") return subdivided_clique(require_int(cmd.n_text, "--n"), opt_int(cmd.t, "--t"));
    if (f == "get") return double_pendant_clique(opt_int(cmd.t, "--t"));
    if (f == "f") return f_family(opt_int(cmd.s, "--s"), opt_int(cmd.t, "--t"), require_int(cmd.n_text, "--n"));
    if (f == "odd") return odd_case_family(opt_int(cmd.t, "--t"), opt_int(cmd.a1, "--a1"));
    throw usage_error("unknown family '" + f + "'");
}

inline Graph resolve_graph(const Command& cmd) {
    if (cmd.g6 && cmd.family) throw usage_error("--g6 conflicts with --family");
    if (cmd.g6) return graph6_decode(*cmd.g6);
    if (cmd.family) return family_graph(cmd);
    throw usage_error("need --g6 or --family");
}

inline VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out = 0;
    std::size_t at = 0;
    while (at < text.size()) {
        std::size_t comma = text.find(',', at);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(at, comma - at);
        std::optional<std::string> wrap = tok;
        int v = require_int(wrap, "--moved");
        if (v < 0 || v >= 64) throw usage_error("--moved vertex out of range: " + tok);
        out |= vs_bit(v);
        at = comma + 1;
    }
    return out;
}

inline Json graph_summary(const Graph& g) {
    Json degrees = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    return Json{{"graph6", graph6_encode(g)},
                {"canonical_hex", canonical_form(g).hex()},
                {"order", g.vertex_count()},
                {"size", g.edge_count()},
                {"max_degree", g.max_degree()},
                {"min_degree", g.min_degree()},
                {"connected", g.is_connected()},
                {"degrees", degrees}};
}

inline QIndexCache open_cache(const Command& cmd) {
    if (const char* env = std::getenv("QEXTREMAL_CACHE")) return QIndexCache(env);
    if (cmd.cache_dir) return QIndexCache(*cmd.cache_dir);
    return QIndexCache();
}

// Semantic parameters only: execution hints (workers, cache, format, output)
// stay out so repeated runs compare byte-identical.
inline Json params_echo(const Command& cmd) {
    Json params = Json::object();
    if (cmd.family) params["family"] = *cmd.family;
    if (cmd.n_text) params["n"] = *cmd.n_text;
    if (cmd.t) params["t"] = *cmd.t;
    if (cmd.s) params["s"] = *cmd.s;
    if (cmd.a1) params["a1"] = *cmd.a1;
    if (cmd.g6) params["g6"] = *cmd.g6;
    if (cmd.u) params["u"] = *cmd.u;
    if (cmd.v) params["v"] = *cmd.v;
    if (cmd.moved_text) params["moved"] = *cmd.moved_text;
    if (cmd.prediction_g6) params["prediction_g6"] = *cmd.prediction_g6;
    if (cmd.tol) params["tol"] = json_real(*cmd.tol);
    if (cmd.gap) params["gap"] = json_real(*cmd.gap);
    if (cmd.seed) params["seed"] = *cmd.seed;
    return params;
}

}  // namespace cli_detail

struct Execution {
    int exit_code = kExitPass;
    Json report;
};

inline Execution execute(const Command& cmd) {
    using namespace cli_detail;
    std::vector<Check> checks;
    Json results = Json::object();
    int code = kExitPass;

    try {
        if (cmd.verb == "construct") {
            results = graph_summary(family_graph(cmd));
        } else if (cmd.verb == "qindex") {
            Graph g = resolve_graph(cmd);
            double tol = cmd.tol.value_or(kDefaultEigTol);
            SpectralResult spectral = q_index(g, tol);
            Json perron = Json::array();
            for (double x : spectral.perron) perron.push_back(json_real(x));
            results = Json{{"graph6", graph6_encode(g)},
                           {"order", g.vertex_count()},
                           {"size", g.edge_count()},
                           {"q1", json_real(spectral.q1)},
                           {"residual", json_real(spectral.residual)},
                           {"iterations", spectral.iterations},
                           {"perron", perron}};
            checks.push_back({"residual_below_tol", "< " + real_text(tol), real_text(spectral.residual),
                              tol, spectral.residual < tol});
        } else if (cmd.verb == "minor-check") {
            Graph g = resolve_graph(cmd);
            MinorCertificate cert = has_k1t_minor(g, *cmd.t);
            bool witness = cert.kind == MinorCertificate::Kind::witness;
            results = Json{{"graph6", graph6_encode(g)},
                           {"t", *cmd.t},
                           {"minor", witness ? "witness" : "absent"},
                           {"witness_set", Json(vs_to_vector(cert.witness_set))},
                           {"boundary", Json(vs_to_vector(cert.boundary))},
                           {"scan_cap", cert.scan_cap},
                           {"certificate_valid", certificate_valid(g, cert)}};
        } else if (cmd.verb == "rotate") {
            Graph g = graph6_decode(*cmd.g6);
            RotationSpec spec{*cmd.u, *cmd.v, parse_vertex_list(*cmd.moved_text)};
            SpectralResult before = q_index(g);
            Graph rotated = rotate_edges(g, spec);
            double after = q_index_max_over_components(rotated);
            RotationOutcome outcome =
                check_rotation_increase(g, spec, cmd.tol.value_or(kPerronTol));
            results = Json{{"graph6", graph6_encode(g)},
                           {"rotated_graph6", graph6_encode(rotated)},
                           {"q1_before", json_real(before.q1)},
                           {"q1_after", json_real(after)},
                           {"perron_u", json_real(before.perron[static_cast<std::size_t>(*cmd.u)])},
                           {"perron_v", json_real(before.perron[static_cast<std::size_t>(*cmd.v)])},
                           {"outcome", to_string(outcome)}};
        } else if (cmd.verb == "search") {
            QIndexCache cache = open_cache(cmd);
            SearchConfig cfg{require_int(cmd.n_text, "--n"), *cmd.t, cmd.tol.value_or(kDefaultEigTol),
                             cmd.gap.value_or(1e-6), cmd.workers.value_or(1)};
            results = to_json(extremal_search(cfg, &cache));
        } else if (cmd.verb == "verify-theorem") {
            QIndexCache cache = open_cache(cmd);
            SearchConfig cfg{require_int(cmd.n_text, "--n"), *cmd.t, cmd.tol.value_or(kDefaultEigTol),
                             cmd.gap.value_or(1e-6), cmd.workers.value_or(1)};
            std::optional<Graph> prediction;
            if (cmd.prediction_g6) prediction = graph6_decode(*cmd.prediction_g6);
            VerifyResult vr = verify_theorem(cfg, &cache, std::move(prediction));
            checks = vr.checks;
            results = Json{{"verdict", vr.pass ? "pass" : "fail"}, {"search", to_json(vr.report)}};
            code = vr.pass ? kExitPass : kExitFail;
        } else if (cmd.verb == "lemma-suite") {
            QIndexCache cache = open_cache(cmd);
            auto [n_lo, n_hi] = parse_range(cmd.n_text, "--n");
            AuditSuiteReport suite =
                audit_suite(*cmd.t, n_lo, n_hi, cmd.tol.value_or(kDefaultEigTol),
                            cmd.gap.value_or(1e-6), cmd.workers.value_or(1), &cache);
            checks = suite.checks;
            results = to_json(suite);
            code = suite.pass ? kExitPass : kExitFail;
        } else if (cmd.verb == "selftest") {
            QIndexCache cache = open_cache(cmd);
            std::vector<CriterionResult> battery =
                run_acceptance(cmd.seed.value_or(kDefaultTrialSeed), cmd.workers.value_or(1), &cache);
            Json criteria = Json::array();
            bool all_pass = true;
            for (const CriterionResult& cr : battery) {
                criteria.push_back(Json{{"id", cr.id},
                                        {"title", cr.title},
                                        {"pass", cr.pass},
                                        {"seconds", json_real(cr.seconds)}});
                for (const Check& c : cr.checks)
                    checks.push_back({"c" + std::to_string(cr.id) + "." + c.name, c.expected, c.observed,
                                      c.margin, c.pass});
                all_pass = all_pass && cr.pass;
            }
            results = Json{{"criteria", criteria}, {"pass", all_pass}};
            code = all_pass ? kExitPass : kExitFail;
        } else {
            throw usage_error("unknown verb '" + cmd.verb + "'");
        }
    } catch (const usage_error&) {
        throw;
    } catch (const capacity_error& e) {
        return {kExitFail, make_report(cmd.verb, params_echo(cmd),
                                       Json{{"error", e.what()},
                                            {"error_kind", "capacity"},
                                            {"hint", "reduce n/t or use the documented caps"}},
                                       checks)};
    } catch (const parse_error& e) {
        return {kExitFail,
                make_report(cmd.verb, params_echo(cmd),
                            Json{{"error", e.what()}, {"error_kind", "parse"}}, checks)};
    } catch (const disconnected_error& e) {
        return {kExitFail,
                make_report(cmd.verb, params_echo(cmd),
                            Json{{"error", e.what()}, {"error_kind", "disconnected"}}, checks)};
    } catch (const domain_error& e) {
        return {kExitFail,
                make_report(cmd.verb, params_echo(cmd),
                            Json{{"error", e.what()}, {"error_kind", "domain"}}, checks)};
    } catch (const std::logic_error& e) {
        return {kExitFail, make_report(cmd.verb, params_echo(cmd),
                                       Json{{"error", e.what()},
                                            {"error_kind", "internal"},
                                            {"hint", "internal invariant violation; please file a bug"}},
                                       checks)};
    } catch (const std::exception& e) {
        return {kExitFail,
                make_report(cmd.verb, params_echo(cmd),
                            Json{{"error", e.what()}, {"error_kind", "computation"}}, checks)};
    }

    return {code, make_report(cmd.verb, params_echo(cmd), std::move(results), checks)};
}

}  // namespace qext

#endif

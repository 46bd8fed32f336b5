#ifndef QEXTREMAL_REPORT_HPP
#define QEXTREMAL_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "qextremal/search.hpp"
#include "qextremal/version.hpp"

namespace qext {

using Json = nlohmann::ordered_json;

// Reals carry 12 significant digits: format, then parse back so the JSON
// number serializes with no extra digits.
inline double round12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline Json json_real(double x) {
    if (std::isnan(x)) return nullptr;
    return round12(x);
}

inline Json to_json(const Check& c) {
    return Json{{"name", c.name},
                {"expected", c.expected},
                {"observed", c.observed},
                {"margin", json_real(c.margin)},
                {"pass", c.pass}};
}

inline Json to_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const Check& c : checks) arr.push_back(to_json(c));
    return arr;
}

inline Json to_json(const StructuralAudit& a) {
    return Json{{"max_degree", a.delta},
                {"max_degree_is_t_minus_1", a.delta_is_t_minus_1},
                {"a_size", a.a_size},
                {"b_size", a.b_size},
                {"max_db_over_a0", a.max_db_a0},
                {"max_db_over_a1", a.max_db_a1},
                {"max_db_over_b", a.max_db_b},
                {"db_zero_on_a0", a.db_zero_on_a0},
                {"db_le1_on_a1", a.db_le1_on_a1},
                {"db_le2_on_b", a.db_le2_on_b}};
}

// The config echo deliberately omits the worker count: it is an execution
// hint, and reports must be byte-identical across worker counts.
inline Json to_json(const SearchReport& r) {
    Json extremal = Json::array();
    for (const ExtremalEntry& e : r.extremal)
        extremal.push_back(Json{{"canonical_hex", e.form.hex()}, {"graph6", e.g6}, {"q1", json_real(e.q1)}});
    return Json{{"config", Json{{"n", r.config.n},
                                {"t", r.config.t},
                                {"tol", json_real(r.config.tol)},
                                {"gap", json_real(r.config.gap)}}},
                {"candidates_scanned", r.candidates_scanned},
                {"family_size", r.family_size},
                {"extremal", extremal},
                {"runner_up_q1", json_real(r.runner_up_q1)},
                {"predicted_graph6", r.predicted_g6},
                {"predicted_canonical_hex", r.predicted_form.hex()},
                {"prediction_minor_free", r.prediction_minor_free},
                {"matches_prediction", r.matches_prediction},
                {"unique", r.unique},
                {"structural", to_json(r.structural)},
                {"disconnected_best_q1", json_real(r.disconnected_best_q1)},
                {"disconnected_witness_graph6", r.disconnected_witness_g6}};
}

inline Json to_json(const AuditSuiteReport& r) {
    Json entries = Json::array();
    for (const AuditSuiteEntry& e : r.entries)
        entries.push_back(Json{{"n", e.n}, {"q_star", json_real(e.q_star)}, {"extremal_graph6", e.extremal_g6}});
    return Json{{"t", r.t}, {"n_lo", r.n_lo}, {"n_hi", r.n_hi}, {"entries", entries}, {"pass", r.pass}};
}

// Every report has the same envelope; `assertions` may be empty for pure
// queries.
inline Json make_report(const std::string& command, Json params, Json results,
                        const std::vector<Check>& checks) {
    return Json{{"tool_version", kToolVersion},
                {"command", command},
                {"params", std::move(params)},
                {"results", std::move(results)},
                {"assertions", to_json(checks)}};
}

// Human-readable flattening; carries no stability promise.
inline void render_table(const Json& node, const std::string& prefix, std::string& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            render_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& item : node) render_table(item, prefix + "[" + std::to_string(i++) + "]", out);
        if (node.empty()) out += prefix + ": []\n";
    } else {
        out += prefix + ": " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
    }
}

inline std::string to_table(const Json& report) {
    std::string out;
    render_table(report, "", out);
    return out;
}

}  // namespace qext

#endif

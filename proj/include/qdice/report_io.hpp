// Copyright 2026 The qdice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file
/// Stable machine-readable renderings of session reports.
///
/// JSON objects are emitted with sorted keys and shortest round-trip number
/// text, so identical reports serialize to identical bytes. CSV cells reuse
/// the same number-to-text conversion, which keeps the numeric values of the
/// two formats textually identical for the same run.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qdice/harness.hpp"

namespace qdice {

/// Shortest round-trip decimal text of a value, identical to its JSON form.
inline std::string number_text(double v) { return nlohmann::json(v).dump(); }

inline void to_json(nlohmann::json& j, const Protocol& p) {
    j = std::string(protocol_token(p));
}

inline void to_json(nlohmann::json& j, const RunConfig& cfg) {
    j = nlohmann::json{{"seed", cfg.seed},
                       {"trials", cfg.trials},
                       {"protocol", cfg.protocol},
                       {"sigma_level", cfg.sigma_level}};
}

inline void to_json(nlohmann::json& j, const FrequencyEstimate& e) {
    j = nlohmann::json{{"count", e.count},
                       {"n", e.n},
                       {"p_hat", e.p_hat},
                       {"ci_half_width", e.ci_half_width}};
}

inline void to_json(nlohmann::json& j, const ComparisonRow& r) {
    j = nlohmann::json{{"label", r.label},
                       {"analytic", r.analytic},
                       {"estimate", r.estimate},
                       {"pass", r.pass}};
}

inline void to_json(nlohmann::json& j, const ComparisonReport& report) {
    j = nlohmann::json{{"config", report.config},
                       {"rows", report.rows},
                       {"overall_pass", report.overall_pass}};
}

inline void to_json(nlohmann::json& j, const TotalProbabilityDecomposition& d) {
    j = nlohmann::json{{"marginal", d.marginal},
                       {"joint_then", d.joint_then},
                       {"joint_complement_then", d.joint_complement_then},
                       {"interference", d.interference},
                       {"closure_residual", d.closure_residual()}};
}

inline void to_json(nlohmann::json& j, const ChshReport& r) {
    j = nlohmann::json{{"e_ab", r.e_ab},
                       {"e_ab_prime", r.e_ab_prime},
                       {"e_aprime_b", r.e_aprime_b},
                       {"e_aprime_bprime", r.e_aprime_bprime},
                       {"i_value", r.i_value}};
}

inline void to_json(nlohmann::json& j, const DiePair& p) {
    j = nlohmann::json{{"a", std::string(die_state_token(p.a))},
                       {"b", std::string(die_state_token(p.b))}};
}

inline void to_json(nlohmann::json& j, const ChshSessionResult& r) {
    j = nlohmann::json{{"variant", std::string(chsh_variant_token(r.variant))},
                       {"report", r.report},
                       {"per_pair", r.per_pair},
                       {"e_estimates", r.e_estimates},
                       {"e_ci_half_widths", r.e_ci_half_widths},
                       {"estimated_i", r.estimated_i},
                       {"i_ci", r.i_ci},
                       {"tsirelson_bound", r.tsirelson_bound}};
    if (r.variant == ChshVariant::discovery) j["prepared"] = r.prepared;
}

/// Canonical JSON text of any serializable report: sorted keys, two-space
/// indent, trailing newline.
template <typename T>
std::string json_text(const T& value) {
    const nlohmann::json j = value;
    return j.dump(2) + "\n";
}

/// The CSV row header shared by all session renderings.
inline constexpr std::string_view kCsvRowHeader =
    "label,analytic,count,n,p_hat,ci_half_width,pass";

/// A `# key value` CSV comment line with the value in JSON text.
inline std::string csv_comment_line(std::string_view key,
                                    const nlohmann::json& value) {
    std::string line = "# ";
    line += key;
    line += ' ';
    line += value.dump();
    line += '\n';
    return line;
}

/// Header line plus one CSV row per outcome label (no comments).
inline std::string csv_rows_only(const ComparisonReport& report) {
    std::string out{kCsvRowHeader};
    out += '\n';
    for (const ComparisonRow& r : report.rows) {
        out += r.label;
        out += ',';
        out += number_text(r.analytic);
        out += ',';
        out += std::to_string(r.estimate.count);
        out += ',';
        out += std::to_string(r.estimate.n);
        out += ',';
        out += number_text(r.estimate.p_hat);
        out += ',';
        out += number_text(r.estimate.ci_half_width);
        out += ',';
        out += r.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

/// CSV rendering of a session report: a `# config {...}` comment carrying
/// the full RunConfig echo, a header line, one row per outcome label.
inline std::string csv_text(const ComparisonReport& report) {
    std::string out = csv_comment_line("config", nlohmann::json(report.config));
    out += csv_rows_only(report);
    return out;
}

/// CSV rendering of a CHSH session: scalar results as comments, then the
/// sixteen per-outcome rows.
inline std::string csv_text(const ChshSessionResult& r) {
    std::string out = csv_comment_line("config", nlohmann::json(r.per_pair.config));
    out += csv_comment_line("variant", nlohmann::json(chsh_variant_token(r.variant)));
    if (r.variant == ChshVariant::discovery) {
        out += csv_comment_line("prepared", nlohmann::json(r.prepared));
    }
    out += csv_comment_line("analytic", nlohmann::json(r.report));
    out += csv_comment_line("e_estimates", nlohmann::json(r.e_estimates));
    out += csv_comment_line("e_ci_half_widths", nlohmann::json(r.e_ci_half_widths));
    out += csv_comment_line("estimated_i", nlohmann::json(r.estimated_i));
    out += csv_comment_line("i_ci", nlohmann::json(r.i_ci));
    out += csv_comment_line("tsirelson_bound", nlohmann::json(r.tsirelson_bound));
    out += csv_rows_only(r.per_pair);
    return out;
}

}  // namespace qdice

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
/// Command-line front end.
///
/// Subcommands: probabilities, roll, interference, bell, oracle.
/// Formats: human (default), json, csv. Exit codes: 0 = success/pass,
/// 1 = a model check or statistical comparison failed, 2 = usage error.
/// Every machine-readable output embeds the full session config for replay;
/// the seed may also come from the QDICE_SEED environment variable and is
/// echoed either way.

#pragma once

#include <array>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdice/die.hpp"
#include "qdice/entangled.hpp"
#include "qdice/harness.hpp"
#include "qdice/hilbert.hpp"
#include "qdice/report_io.hpp"

namespace qdice::cli {

enum class Format { human, json, csv };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

using Matrix22 = std::array<std::array<double, 2>, 2>;

inline Matrix22 as_rows(const Observable& o) {
    return {{{o.m00(), o.m01()}, {o.m10(), o.m11()}}};
}

inline std::string matrix_text(const Observable& o) {
    return nlohmann::json(as_rows(o)).dump();
}

inline void render_rows_human(std::ostream& out, const ComparisonReport& report) {
    out << "  " << std::left << std::setw(20) << "label" << std::setw(22)
        << "analytic" << std::setw(10) << "count" << std::setw(22) << "p_hat"
        << std::setw(24) << "ci_half_width"
        << "pass\n";
    for (const ComparisonRow& r : report.rows) {
        out << "  " << std::left << std::setw(20) << r.label << std::setw(22)
            << number_text(r.analytic) << std::setw(10) << r.estimate.count
            << std::setw(22) << number_text(r.estimate.p_hat) << std::setw(24)
            << number_text(r.estimate.ci_half_width) << (r.pass ? "yes" : "NO")
            << "\n";
    }
}

inline void render_config_human(std::ostream& out, const RunConfig& cfg) {
    out << "  seed=" << cfg.seed << " trials=" << cfg.trials
        << " sigma=" << number_text(cfg.sigma_level)
        << " protocol=" << protocol_token(cfg.protocol) << "\n";
}

/// A 16-row Born table: one row per (state, direction, reading).
struct BornTableRow {
    DieState state;
    Axis direction;
    int reading;
    double probability;
};

inline std::vector<BornTableRow> born_table() {
    std::vector<BornTableRow> rows;
    rows.reserve(16);
    for (const DieState s : kAllDieStates) {
        for (const Axis d : kAllAxes) {
            for (const int r : {1, -1}) {
                rows.push_back(
                    {s, d, r,
                     born_probability(state_vector_of(s), projector_for(d, r))});
            }
        }
    }
    return rows;
}

/// One oracle cell: the closed-form lambda measure checked against the Born
/// rule (exactly) and against a midpoint lambda-grid sweep (within 1e-3).
struct OracleCell {
    DieState state;
    Axis direction;
    int reading;
    double closed_form;
    double born;
    double grid_estimate;
    bool exact_match;
    bool grid_match;
};

inline constexpr double kGridTolerance = 1e-3;

inline std::vector<OracleCell> oracle_cells(std::uint64_t grid_points) {
    std::vector<OracleCell> cells;
    cells.reserve(16);
    for (const DieState s : kAllDieStates) {
        for (const Axis d : kAllAxes) {
            std::uint64_t plus_hits = 0;
            for (std::uint64_t i = 0; i < grid_points; ++i) {
                const double lambda = (static_cast<double>(i) + 0.5) /
                                      static_cast<double>(grid_points);
                if (deterministic_roll(s, d, HiddenVariable{lambda}).reading == 1) {
                    ++plus_hits;
                }
            }
            const double plus_measure = static_cast<double>(plus_hits) /
                                        static_cast<double>(grid_points);
            for (const int r : {1, -1}) {
                const double closed = hidden_measurement_probability(s, d, r);
                const double born =
                    born_probability(state_vector_of(s), projector_for(d, r));
                const double grid = r == 1 ? plus_measure : 1.0 - plus_measure;
                const double grid_dev = grid - closed;
                cells.push_back({s, d, r, closed, born, grid,
                                 closed == born,
                                 (grid_dev < 0.0 ? -grid_dev : grid_dev) <=
                                     kGridTolerance});
            }
        }
    }
    return cells;
}

}  // namespace detail

/// --- probabilities ---------------------------------------------------

inline int cmd_probabilities(Format format, std::ostream& out) {
    const std::vector<detail::BornTableRow> table = detail::born_table();
    const Observable f_z = make_face_observable(Axis::z);
    const Observable f_x = make_face_observable(Axis::x);

    if (format == Format::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table) {
            rows.push_back({{"state", std::string(die_state_token(row.state))},
                            {"direction", std::string(axis_token(row.direction))},
                            {"reading", row.reading},
                            {"probability", row.probability}});
        }
        const nlohmann::json j = {
            {"command", "probabilities"},
            {"observables",
             {{"f_z", detail::as_rows(f_z)}, {"f_x", detail::as_rows(f_x)}}},
            {"projectors",
             {{"z+", detail::as_rows(projector_for(Axis::z, 1))},
              {"z-", detail::as_rows(projector_for(Axis::z, -1))},
              {"x+", detail::as_rows(projector_for(Axis::x, 1))},
              {"x-", detail::as_rows(projector_for(Axis::x, -1))}}},
            {"table", rows}};
        out << j.dump(2) << "\n";
        return kExitPass;
    }
    if (format == Format::csv) {
        out << "state,direction,reading,probability\n";
        for (const auto& row : table) {
            out << die_state_token(row.state) << ',' << axis_token(row.direction)
                << ',' << (row.reading > 0 ? "+1" : "-1") << ','
                << number_text(row.probability) << "\n";
        }
        return kExitPass;
    }
    out << "Born probabilities of a single roll\n";
    out << "  " << std::left << std::setw(7) << "state" << std::setw(11)
        << "direction" << std::setw(9) << "reading"
        << "probability\n";
    for (const auto& row : table) {
        out << "  " << std::left << std::setw(7) << die_state_token(row.state)
            << std::setw(11) << axis_token(row.direction) << std::setw(9)
            << (row.reading > 0 ? "+1" : "-1") << number_text(row.probability)
            << "\n";
    }
    out << "face observables (z-eigenbasis):\n";
    out << "  F_z = " << detail::matrix_text(f_z) << "\n";
    out << "  F_x = " << detail::matrix_text(f_x) << "\n";
    out << "projectors:\n";
    out << "  P_z+ = " << detail::matrix_text(projector_for(Axis::z, 1)) << "\n";
    out << "  P_z- = " << detail::matrix_text(projector_for(Axis::z, -1)) << "\n";
    out << "  P_x+ = " << detail::matrix_text(projector_for(Axis::x, 1)) << "\n";
    out << "  P_x- = " << detail::matrix_text(projector_for(Axis::x, -1)) << "\n";
    return kExitPass;
}

/// --- roll -------------------------------------------------------------

inline int cmd_roll(const RunConfig& cfg, DieState state, RollDirection direction,
                    unsigned lanes, Format format, std::ostream& out) {
    const ComparisonReport report = run_single_die_session(cfg, state, direction, lanes);
    if (format == Format::json) {
        nlohmann::json j = report;
        j["command"] = "roll";
        j["invocation"] = {{"state", std::string(die_state_token(state))},
                           {"direction", std::string(axis_token(direction))},
                           {"lanes", lanes}};
        out << j.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << csv_text(report);
    } else {
        out << "single-die roll session\n";
        out << "  state=" << die_state_token(state)
            << " direction=" << axis_token(direction) << "\n";
        detail::render_config_human(out, report.config);
        detail::render_rows_human(out, report);
        out << "overall: " << (report.overall_pass ? "PASS" : "FAIL") << "\n";
    }
    return report.overall_pass ? kExitPass : kExitFailure;
}

/// --- interference ------------------------------------------------------

inline int cmd_interference(const RunConfig& cfg, DieState state,
                            RollDirection condition, RollDirection target,
                            unsigned lanes, Format format, std::ostream& out) {
    const StateVector psi = state_vector_of(state);
    const Projector p_alpha = projector_for(condition, 1);
    const Projector p_beta = projector_for(target, 1);
    const TotalProbabilityDecomposition decomposition =
        total_probability_decomposition(psi, p_alpha, p_beta);
    const double classical_path_sum =
        decomposition.joint_then + decomposition.joint_complement_then;
    const double residual = decomposition.closure_residual();
    const bool closure_ok =
        (residual < 0.0 ? -residual : residual) <= kTolerance;

    const bool with_session = cfg.trials >= 1;
    ComparisonReport session;
    double empirical_paths = 0.0;
    double empirical_deficit = 0.0;
    if (with_session) {
        session = run_sequential_session(cfg, state, condition, target, lanes);
        // rows are ordered (+,+), (+,-), (-,+), (-,-); the two paths ending
        // on the +1 target face are rows 0 and 2.
        empirical_paths =
            session.rows[0].estimate.p_hat + session.rows[2].estimate.p_hat;
        empirical_deficit = decomposition.marginal - empirical_paths;
    }
    const bool pass = closure_ok && (!with_session || session.overall_pass);

    if (format == Format::json) {
        nlohmann::json j = {{"command", "interference"},
                            {"invocation",
                             {{"state", std::string(die_state_token(state))},
                              {"condition", std::string(axis_token(condition))},
                              {"target", std::string(axis_token(target))},
                              {"lanes", lanes}}},
                            {"config",
                             {{"seed", cfg.seed},
                              {"trials", cfg.trials},
                              {"protocol", Protocol::sequential_roll},
                              {"sigma_level", cfg.sigma_level}}},
                            {"analytic", decomposition},
                            {"classical_path_sum", classical_path_sum},
                            {"closure_ok", closure_ok},
                            {"overall_pass", pass}};
        if (with_session) {
            j["session"] = session;
            j["empirical_then_plus_total"] = empirical_paths;
            j["classical_deficit_empirical"] = empirical_deficit;
        }
        out << j.dump(2) << "\n";
    } else if (format == Format::csv) {
        const nlohmann::json config_echo = {{"seed", cfg.seed},
                                            {"trials", cfg.trials},
                                            {"protocol", Protocol::sequential_roll},
                                            {"sigma_level", cfg.sigma_level}};
        std::string text = csv_comment_line("config", config_echo);
        text += csv_comment_line("analytic", nlohmann::json(decomposition));
        text += csv_comment_line("classical_path_sum",
                                 nlohmann::json(classical_path_sum));
        if (with_session) {
            text += csv_comment_line("empirical_then_plus_total",
                                     nlohmann::json(empirical_paths));
            text += csv_comment_line("classical_deficit_empirical",
                                     nlohmann::json(empirical_deficit));
            text += csv_rows_only(session);
        } else {
            text += std::string(kCsvRowHeader) + "\n";
        }
        out << text;
    } else {
        out << "interference decomposition\n";
        out << "  state=" << die_state_token(state)
            << " condition-axis=" << axis_token(condition)
            << " target-axis=" << axis_token(target) << " (target face +1)\n";
        out << "analytic:\n";
        out << "  marginal P(then=+1)            = "
            << number_text(decomposition.marginal) << "\n";
        out << "  path (first=+1, then=+1)       = "
            << number_text(decomposition.joint_then) << "\n";
        out << "  path (first=-1, then=+1)       = "
            << number_text(decomposition.joint_complement_then) << "\n";
        out << "  interference term              = "
            << number_text(decomposition.interference) << "\n";
        out << "  classical path sum             = "
            << number_text(classical_path_sum) << "\n";
        out << "  closure residual               = " << number_text(residual)
            << "\n";
        if (with_session) {
            out << "empirical sequential session:\n";
            detail::render_config_human(out, session.config);
            detail::render_rows_human(out, session);
            out << "  empirical P(then=+1 via paths) = "
                << number_text(empirical_paths) << "\n";
            out << "  classical deficit (marginal - paths) = "
                << number_text(empirical_deficit) << "\n";
        }
        out << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFailure;
}

/// --- bell ---------------------------------------------------------------

inline int cmd_bell(const RunConfig& cfg, ChshVariant variant, DiePair prepared,
                    unsigned lanes, Format format, std::ostream& out) {
    const ChshSessionResult result = run_chsh_session(cfg, variant, prepared, lanes);
    const DeterministicChshRange range = enumerate_deterministic_chsh();
    const bool analytic_ok =
        variant == ChshVariant::rolled
            ? result.report.i_value == 4.0
            : result.report.i_value <= 2.0 + kTolerance;
    const bool bound_order_ok =
        4.0 > result.tsirelson_bound && result.tsirelson_bound > 2.0;
    const bool pass = analytic_ok && bound_order_ok && result.per_pair.overall_pass;

    if (format == Format::json) {
        nlohmann::json j = result;
        j["command"] = "bell";
        j["invocation"] = {{"variant", std::string(chsh_variant_token(variant))},
                           {"lanes", lanes}};
        j["bound_check"] = {{"classical_bound", 2.0},
                            {"tsirelson_bound", result.tsirelson_bound},
                            {"i_value", result.report.i_value},
                            {"exceeds_tsirelson",
                             result.report.i_value > result.tsirelson_bound},
                            {"tsirelson_exceeds_classical",
                             result.tsirelson_bound > 2.0}};
        j["deterministic_range"] = {{"min_i", range.min_i}, {"max_i", range.max_i}};
        j["overall_pass"] = pass;
        out << j.dump(2) << "\n";
    } else if (format == Format::csv) {
        std::string text = csv_text(result);
        // Keep every comment in the prologue: splice the extra metadata line
        // in just before the column header.
        const std::string header_line = std::string(kCsvRowHeader) + "\n";
        text.insert(text.find(header_line),
                    csv_comment_line("deterministic_range",
                                     nlohmann::json{{"min_i", range.min_i},
                                                    {"max_i", range.max_i}}));
        out << text;
    } else {
        out << "CHSH session (" << chsh_variant_token(variant) << " variant)\n";
        if (variant == ChshVariant::discovery) {
            out << "  prepared pair: a=" << die_state_token(prepared.a)
                << " b=" << die_state_token(prepared.b) << "\n";
        }
        detail::render_config_human(out, result.per_pair.config);
        out << "analytic correlators:\n";
        out << "  E(a,b)=" << number_text(result.report.e_ab)
            << "  E(a,b')=" << number_text(result.report.e_ab_prime)
            << "  E(a',b)=" << number_text(result.report.e_aprime_b)
            << "  E(a',b')=" << number_text(result.report.e_aprime_bprime) << "\n";
        out << "  I = |E_ab - E_ab'| + |E_a'b' + E_a'b| = "
            << number_text(result.report.i_value) << "\n";
        out << "  bounds: I=" << number_text(result.report.i_value)
            << " vs Tsirelson 2*sqrt(2)=" << number_text(result.tsirelson_bound)
            << " vs classical 2 (4 > 2*sqrt(2) > 2)\n";
        out << "  deterministic assignments: I in ["
            << number_text(range.min_i) << ", " << number_text(range.max_i)
            << "] (classical bound 2)\n";
        out << "estimated correlators:\n";
        for (std::size_t k = 0; k < kChshSettingPairs.size(); ++k) {
            out << "  E_hat(" << kChshSettingPairs[k].name
                << ") = " << number_text(result.e_estimates[k]) << " +- "
                << number_text(result.e_ci_half_widths[k]) << "\n";
        }
        out << "  I_hat = " << number_text(result.estimated_i) << " +- "
            << number_text(result.i_ci) << "\n";
        out << "per-outcome frequencies:\n";
        detail::render_rows_human(out, result.per_pair);
        out << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFailure;
}

/// --- oracle ---------------------------------------------------------------

inline int cmd_oracle(std::uint64_t grid_points, Format format, std::ostream& out) {
    const std::vector<detail::OracleCell> cells = detail::oracle_cells(grid_points);
    bool all_ok = true;
    for (const auto& c : cells) all_ok = all_ok && c.exact_match && c.grid_match;

    if (format == Format::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : cells) {
            rows.push_back({{"state", std::string(die_state_token(c.state))},
                            {"direction", std::string(axis_token(c.direction))},
                            {"reading", c.reading},
                            {"closed_form", c.closed_form},
                            {"born", c.born},
                            {"grid_estimate", c.grid_estimate},
                            {"exact_match", c.exact_match},
                            {"grid_match", c.grid_match}});
        }
        const nlohmann::json j = {{"command", "oracle"},
                                  {"grid_points", grid_points},
                                  {"cells", rows},
                                  {"overall_pass", all_ok}};
        out << j.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << "# grid_points " << grid_points << "\n";
        out << "state,direction,reading,closed_form,born,grid_estimate,exact_match,"
               "grid_match\n";
        for (const auto& c : cells) {
            out << die_state_token(c.state) << ',' << axis_token(c.direction) << ','
                << (c.reading > 0 ? "+1" : "-1") << ',' << number_text(c.closed_form)
                << ',' << number_text(c.born) << ',' << number_text(c.grid_estimate)
                << ',' << (c.exact_match ? "true" : "false") << ','
                << (c.grid_match ? "true" : "false") << "\n";
        }
    } else {
        out << "hidden-measurement oracle check (" << grid_points
            << "-point lambda grid)\n";
        out << "  " << std::left << std::setw(7) << "state" << std::setw(11)
            << "direction" << std::setw(9) << "reading" << std::setw(14)
            << "closed_form" << std::setw(12) << "born" << std::setw(16)
            << "grid_estimate"
            << "ok\n";
        for (const auto& c : cells) {
            out << "  " << std::left << std::setw(7) << die_state_token(c.state)
                << std::setw(11) << axis_token(c.direction) << std::setw(9)
                << (c.reading > 0 ? "+1" : "-1") << std::setw(14)
                << number_text(c.closed_form) << std::setw(12)
                << number_text(c.born) << std::setw(16)
                << number_text(c.grid_estimate)
                << ((c.exact_match && c.grid_match) ? "yes" : "NO") << "\n";
        }
        out << "overall: " << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? kExitPass : kExitFailure;
}

/// --- driver ---------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"magic-die statistics: Born tables, interference and CHSH sessions"};
    app.require_subcommand(1);

    const std::vector<std::string> state_tokens{"+z", "-z", "+x", "-x"};
    const std::vector<std::string> axis_tokens{"z", "x"};
    const std::map<std::string, Format> format_map{
        {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};

    struct CommonOpts {
        std::uint64_t seed = 1;
        std::uint64_t trials = 100000;
        double sigma = 3.0;
        unsigned lanes = 1;
        Format format = Format::human;
    };

    const auto add_format = [&](CLI::App* cmd, Format& slot) {
        cmd->add_option("--format", slot, "output format (human, json, csv)")
            ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
    };
    const auto add_session_opts = [&](CLI::App* cmd, CommonOpts& o,
                                      bool allow_zero_trials) {
        cmd->add_option("--seed", o.seed, "64-bit session seed")
            ->envname("QDICE_SEED");
        auto* trials_opt =
            cmd->add_option("--trials", o.trials, "Monte Carlo trials per setting");
        if (!allow_zero_trials) {
            trials_opt->check(CLI::Range(std::uint64_t{1},
                                         std::numeric_limits<std::uint64_t>::max()));
        }
        cmd->add_option("--sigma", o.sigma, "confidence level in sigmas")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--lanes", o.lanes, "worker lanes (result-invariant)")
            ->check(CLI::Range(1u, 64u));
        add_format(cmd, o.format);
    };

    // probabilities
    Format prob_format = Format::human;
    CLI::App* prob = app.add_subcommand(
        "probabilities", "print the analytic Born table and the face operators");
    add_format(prob, prob_format);

    // roll
    CommonOpts roll_opts;
    std::string roll_state;
    std::string roll_direction;
    CLI::App* roll = app.add_subcommand(
        "roll", "Monte Carlo single-die session vs the closed-form oracle");
    roll->add_option("--state", roll_state, "prepared die state (+z, -z, +x, -x)")
        ->required()
        ->check(CLI::IsMember(state_tokens));
    roll->add_option("--direction", roll_direction, "roll direction (z, x)")
        ->required()
        ->check(CLI::IsMember(axis_tokens));
    add_session_opts(roll, roll_opts, false);

    // interference
    CommonOpts intf_opts;
    std::string intf_state;
    std::string intf_condition;
    std::string intf_target;
    CLI::App* intf = app.add_subcommand(
        "interference",
        "total-probability decomposition with the interference term, plus an "
        "empirical sequential session (--trials 0 for analytic only)");
    intf->add_option("--state", intf_state, "prepared die state (+z, -z, +x, -x)")
        ->required()
        ->check(CLI::IsMember(state_tokens));
    intf->add_option("--condition", intf_condition,
                     "axis of the conditioning first roll (z, x)")
        ->required()
        ->check(CLI::IsMember(axis_tokens));
    intf->add_option("--target", intf_target, "axis of the target roll (z, x)")
        ->required()
        ->check(CLI::IsMember(axis_tokens));
    add_session_opts(intf, intf_opts, true);

    // bell
    CommonOpts bell_opts;
    std::string bell_variant = "rolled";
    std::string bell_prepare_a = "+x";
    std::string bell_prepare_b = "-x";
    CLI::App* bell = app.add_subcommand(
        "bell", "CHSH session of the rod-connected pair (I = 4) or its "
                "discovery variant (I <= 2)");
    bell->add_option("--variant", bell_variant, "rolled or discovery")
        ->check(CLI::IsMember({"rolled", "discovery"}));
    bell->add_option("--prepare-a", bell_prepare_a,
                     "discovery variant: prepared state of die a")
        ->check(CLI::IsMember(state_tokens));
    bell->add_option("--prepare-b", bell_prepare_b,
                     "discovery variant: prepared state of die b")
        ->check(CLI::IsMember(state_tokens));
    add_session_opts(bell, bell_opts, false);

    // oracle
    Format oracle_format = Format::human;
    std::uint64_t grid_points = 1000000;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "check the closed-form lambda measure against the Born rule "
                  "and a lambda-grid sweep");
    oracle->add_option("--grid-points", grid_points, "lambda grid resolution")
        ->check(CLI::Range(std::uint64_t{1},
                           std::numeric_limits<std::uint64_t>::max()));
    add_format(oracle, oracle_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (app.got_subcommand(prob)) {
        return cmd_probabilities(prob_format, out);
    }
    if (app.got_subcommand(roll)) {
        const RunConfig cfg{roll_opts.seed, roll_opts.trials, Protocol::single_roll,
                            roll_opts.sigma};
        return cmd_roll(cfg, *parse_die_state(roll_state), *parse_axis(roll_direction),
                        roll_opts.lanes, roll_opts.format, out);
    }
    if (app.got_subcommand(intf)) {
        const RunConfig cfg{intf_opts.seed, intf_opts.trials,
                            Protocol::sequential_roll, intf_opts.sigma};
        return cmd_interference(cfg, *parse_die_state(intf_state),
                                *parse_axis(intf_condition), *parse_axis(intf_target),
                                intf_opts.lanes, intf_opts.format, out);
    }
    if (app.got_subcommand(bell)) {
        const ChshVariant variant =
            bell_variant == "rolled" ? ChshVariant::rolled : ChshVariant::discovery;
        const DiePair prepared{*parse_die_state(bell_prepare_a),
                               *parse_die_state(bell_prepare_b)};
        const RunConfig cfg{bell_opts.seed, bell_opts.trials,
                            variant == ChshVariant::rolled
                                ? Protocol::chsh_session
                                : Protocol::discovery_session,
                            bell_opts.sigma};
        return cmd_bell(cfg, variant, prepared, bell_opts.lanes, bell_opts.format,
                        out);
    }
    return cmd_oracle(grid_points, oracle_format, out);
}

}  // namespace qdice::cli

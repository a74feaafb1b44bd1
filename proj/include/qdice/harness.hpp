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
/// Seeded Monte Carlo sessions that compare empirical frequencies against
/// the model's analytic probabilities.
///
/// Reproducibility contract: every session is a pure function of its
/// RunConfig (plus protocol arguments). Trials are partitioned into
/// kStreamBlocks fixed virtual blocks; block b covers the half-open trial
/// range [b*N/kStreamBlocks, (b+1)*N/kStreamBlocks) and owns the derived
/// substream derive_substream(seed, stream_base + b). Worker lanes pick up
/// whole blocks and tallies are merged in block order, so results are
/// byte-identical for every lane count, including 1.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qdice/die.hpp"
#include "qdice/entangled.hpp"
#include "qdice/hilbert.hpp"
#include "qdice/random.hpp"

namespace qdice {

/// Experiment protocols the harness can drive.
enum class Protocol { single_roll, sequential_roll, chsh_session, discovery_session };

constexpr std::string_view protocol_token(Protocol p) {
    switch (p) {
        case Protocol::single_roll: return "single-roll";
        case Protocol::sequential_roll: return "sequential-roll";
        case Protocol::chsh_session: return "chsh-session";
        default: return "discovery-session";
    }
}

/// Parameters of one seeded session.
struct RunConfig {
    std::uint64_t seed = 1;
    std::uint64_t trials = 100000;
    Protocol protocol = Protocol::single_roll;
    double sigma_level = 3.0;
};

/// Rejects configs with zero trials or a non-positive confidence level.
inline void validate(const RunConfig& cfg) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("RunConfig: trials must be >= 1");
    }
    if (!(cfg.sigma_level > 0.0)) {
        throw std::invalid_argument("RunConfig: sigma_level must be > 0");
    }
}

/// An empirical frequency with a normal-approximation confidence interval.
struct FrequencyEstimate {
    std::uint64_t count = 0;
    std::uint64_t n = 1;
    double p_hat = 0.0;
    double ci_half_width = 0.0;
};

inline FrequencyEstimate make_frequency_estimate(std::uint64_t count, std::uint64_t n,
                                                 double sigma_level) {
    if (n < 1) throw std::invalid_argument("FrequencyEstimate: n must be >= 1");
    if (count > n) throw std::invalid_argument("FrequencyEstimate: count exceeds n");
    const double p = static_cast<double>(count) / static_cast<double>(n);
    const double ci =
        sigma_level * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return {count, n, p, ci};
}

/// Comparison width used when the analytic probability is degenerate
/// (0 or 1). Sampling such an outcome is a sure event, so any deviating
/// count is a model violation; the tiny floor only absorbs representation
/// noise of the analytic value itself.
inline constexpr double kDegenerateCiFloor = 1e-9;

/// One outcome row of a session report.
struct ComparisonRow {
    std::string label;
    double analytic = 0.0;
    FrequencyEstimate estimate;
    bool pass = false;
};

/// pass = |p_hat - analytic| <= width, where width is the estimate's
/// ci_half_width, floored to kDegenerateCiFloor for analytic in {0, 1}
/// (for those rows the binomial width collapses to 0 at the truth, and any
/// deviation is fatal regardless of its size).
inline ComparisonRow make_comparison_row(std::string label, double analytic,
                                         std::uint64_t count, std::uint64_t n,
                                         double sigma_level) {
    const FrequencyEstimate est = make_frequency_estimate(count, n, sigma_level);
    const bool degenerate = analytic == 0.0 || analytic == 1.0;
    const double width = degenerate ? kDegenerateCiFloor : est.ci_half_width;
    const double dev = est.p_hat - analytic;
    const bool pass = (dev < 0.0 ? -dev : dev) <= width;
    return {std::move(label), analytic, est, pass};
}

/// A full session report: config echo plus per-outcome comparison rows.
struct ComparisonReport {
    RunConfig config;
    std::vector<ComparisonRow> rows;
    bool overall_pass = false;
};

inline ComparisonReport make_comparison_report(const RunConfig& cfg,
                                               std::vector<ComparisonRow> rows) {
    bool all = true;
    for (const ComparisonRow& r : rows) all = all && r.pass;
    return {cfg, std::move(rows), all};
}

/// Number of fixed virtual stream blocks per tally (see file comment).
inline constexpr unsigned kStreamBlocks = 64;

namespace detail {

/// Tallies `trials` bucket draws into N buckets using the fixed-block
/// scheme. `trial(stream)` must return a bucket index < N and must consume
/// a deterministic number of draws per call. Thread-safe for any `lanes`
/// because blocks are disjoint and `trial` only touches its own stream.
template <std::size_t N, typename TrialFn>
std::array<std::uint64_t, N> tally_blocks(std::uint64_t seed, std::uint64_t stream_base,
                                          std::uint64_t trials, unsigned lanes,
                                          const TrialFn& trial) {
    std::array<std::array<std::uint64_t, N>, kStreamBlocks> per_block{};
    const auto run_block = [&](unsigned b) {
        const std::uint64_t begin = trials * b / kStreamBlocks;
        const std::uint64_t end = trials * (b + 1ULL) / kStreamBlocks;
        if (begin == end) return;
        RandomStream stream = derive_substream(seed, stream_base + b);
        auto& counts = per_block[b];
        for (std::uint64_t t = begin; t < end; ++t) ++counts[trial(stream)];
    };
    if (lanes <= 1) {
        for (unsigned b = 0; b < kStreamBlocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(lanes);
        for (unsigned w = 0; w < lanes; ++w) {
            workers.emplace_back([&run_block, w, lanes] {
                for (unsigned b = w; b < kStreamBlocks; b += lanes) run_block(b);
            });
        }
        for (std::thread& th : workers) th.join();
    }
    std::array<std::uint64_t, N> total{};
    for (const auto& blk : per_block) {
        for (std::size_t i = 0; i < N; ++i) total[i] += blk[i];
    }
    return total;
}

inline std::string reading_label(std::string_view prefix, int reading) {
    std::string s{prefix};
    s += reading > 0 ? "+1" : "-1";
    return s;
}

}  // namespace detail

/// Rolls one die cfg.trials times along `dir` and compares the reading
/// frequencies against the closed-form hidden-measurement probabilities.
inline ComparisonReport run_single_die_session(RunConfig cfg, DieState state,
                                               RollDirection dir, unsigned lanes = 1) {
    cfg.protocol = Protocol::single_roll;
    validate(cfg);
    const auto counts = detail::tally_blocks<2>(
        cfg.seed, 0, cfg.trials, lanes, [state, dir](RandomStream& stream) {
            return sample_roll(state, dir, stream).reading == 1 ? 0u : 1u;
        });
    std::vector<ComparisonRow> rows;
    rows.reserve(2);
    for (const int reading : {1, -1}) {
        rows.push_back(make_comparison_row(
            detail::reading_label("reading=", reading),
            hidden_measurement_probability(state, dir, reading),
            counts[reading == 1 ? 0 : 1], cfg.trials, cfg.sigma_level));
    }
    return make_comparison_report(cfg, std::move(rows));
}

/// Rolls along first_dir, lets the die physically come to rest, then rolls
/// the collapsed die along then_dir. Each trial consumes two draws. The four
/// (first, then) reading pairs are compared against the sequential joint
/// probabilities <psi| P_first P_then P_first |psi>.
inline ComparisonReport run_sequential_session(RunConfig cfg, DieState state,
                                               RollDirection first_dir,
                                               RollDirection then_dir,
                                               unsigned lanes = 1) {
    cfg.protocol = Protocol::sequential_roll;
    validate(cfg);
    const auto counts = detail::tally_blocks<4>(
        cfg.seed, 0, cfg.trials, lanes,
        [state, first_dir, then_dir](RandomStream& stream) {
            const RollOutcome first = sample_roll(state, first_dir, stream);
            const RollOutcome then = sample_roll(first.final_state, then_dir, stream);
            return static_cast<unsigned>(first.reading == -1) * 2u +
                   static_cast<unsigned>(then.reading == -1);
        });
    const StateVector psi = state_vector_of(state);
    std::vector<ComparisonRow> rows;
    rows.reserve(4);
    std::size_t bucket = 0;
    for (const int r1 : {1, -1}) {
        for (const int r2 : {1, -1}) {
            std::string label = detail::reading_label("first=", r1);
            label += ' ';
            label += detail::reading_label("then=", r2);
            rows.push_back(make_comparison_row(
                std::move(label),
                sequential_joint_probability(psi, projector_for(first_dir, r1),
                                             projector_for(then_dir, r2)),
                counts[bucket], cfg.trials, cfg.sigma_level));
            ++bucket;
        }
    }
    return make_comparison_report(cfg, std::move(rows));
}

/// Which physical realization a CHSH session drives.
enum class ChshVariant { rolled, discovery };

constexpr std::string_view chsh_variant_token(ChshVariant v) {
    return v == ChshVariant::rolled ? "rolled" : "discovery";
}

/// The four CHSH setting pairs in report order. Unprimed settings (a, b)
/// are Roll, primed settings (a', b') are FlatCheck.
struct ChshSettingPair {
    std::string_view name;
    ExperimentChoice choice_a;
    ExperimentChoice choice_b;
};

inline constexpr std::array<ChshSettingPair, 4> kChshSettingPairs = {
    ChshSettingPair{"ab", ExperimentChoice::roll, ExperimentChoice::roll},
    ChshSettingPair{"ab'", ExperimentChoice::roll, ExperimentChoice::flat_check},
    ChshSettingPair{"a'b", ExperimentChoice::flat_check, ExperimentChoice::roll},
    ChshSettingPair{"a'b'", ExperimentChoice::flat_check, ExperimentChoice::flat_check}};

/// Default prepared pair of the discovery variant: opposite upper faces,
/// mirroring the anti-correlation of the rolled pair.
inline constexpr DiePair kDefaultDiscoveryPair{DieState::plus_x, DieState::minus_x};

/// CHSH session result: analytic report, per-outcome frequency comparison,
/// and the estimated CHSH combination with a conservative half-width.
struct ChshSessionResult {
    ChshVariant variant = ChshVariant::rolled;
    DiePair prepared = kDefaultDiscoveryPair;
    ChshReport report;
    ComparisonReport per_pair;
    std::array<double, 4> e_estimates{};
    std::array<double, 4> e_ci_half_widths{};
    double estimated_i = 0.0;
    double i_ci = 0.0;
    double tsirelson_bound = 2.0 * std::numbers::sqrt2;
};

/// Runs cfg.trials sampled coincidences for each of the four setting pairs.
/// Setting pair k draws from stream blocks [k*kStreamBlocks,
/// (k+1)*kStreamBlocks). The rolled variant samples physical coincidences of
/// the rod-connected pair; the discovery variant reads the prepared upper
/// faces. E estimates are tallied per pair; i_ci is the sum of the four
/// per-pair E half-widths (a conservative union bound).
inline ChshSessionResult run_chsh_session(RunConfig cfg, ChshVariant variant,
                                          DiePair prepared = kDefaultDiscoveryPair,
                                          unsigned lanes = 1) {
    cfg.protocol = variant == ChshVariant::rolled ? Protocol::chsh_session
                                                  : Protocol::discovery_session;
    validate(cfg);

    ChshSessionResult result;
    result.variant = variant;
    result.prepared = prepared;

    const auto analytic_distribution = [&](ExperimentChoice ca, ExperimentChoice cb) {
        return variant == ChshVariant::rolled
                   ? coincidence_distribution(ca, cb)
                   : discovery_variant_distribution(prepared, ca, cb);
    };
    result.report = chsh_value(analytic_distribution);

    std::vector<ComparisonRow> rows;
    rows.reserve(16);
    std::array<double, 4> e_hat{};
    std::array<double, 4> e_ci{};
    for (std::size_t k = 0; k < kChshSettingPairs.size(); ++k) {
        const ChshSettingPair& pair = kChshSettingPairs[k];
        const OutcomeDistribution dist =
            analytic_distribution(pair.choice_a, pair.choice_b);
        std::array<std::uint64_t, 4> counts{};
        if (variant == ChshVariant::rolled) {
            counts = detail::tally_blocks<4>(
                cfg.seed, k * kStreamBlocks, cfg.trials, lanes,
                [&pair](RandomStream& stream) {
                    return joint_outcome_index(
                        sample_coincidence(pair.choice_a, pair.choice_b, stream)
                            .outcome);
                });
        } else {
            counts = detail::tally_blocks<4>(
                cfg.seed, k * kStreamBlocks, cfg.trials, lanes,
                [&dist](RandomStream& stream) {
                    return joint_outcome_index(dist.sample(stream));
                });
        }
        double e = 0.0;
        double width = 0.0;
        for (std::size_t o = 0; o < kJointOutcomeOrder.size(); ++o) {
            const JointOutcome& outcome = kJointOutcomeOrder[o];
            std::string label{pair.name};
            label += ' ';
            label += outcome.a > 0 ? "+1" : "-1";
            label += '/';
            label += outcome.b > 0 ? "+1" : "-1";
            ComparisonRow row =
                make_comparison_row(std::move(label), dist.probability(outcome),
                                    counts[o], cfg.trials, cfg.sigma_level);
            e += row.estimate.p_hat * static_cast<double>(outcome.a * outcome.b);
            width += row.estimate.ci_half_width;
            rows.push_back(std::move(row));
        }
        e_hat[k] = e;
        e_ci[k] = width;
    }
    result.per_pair = make_comparison_report(cfg, std::move(rows));
    result.e_estimates = e_hat;
    result.e_ci_half_widths = e_ci;
    result.estimated_i = detail::abs_val(e_hat[0] - e_hat[1]) +
                         detail::abs_val(e_hat[3] + e_hat[2]);
    result.i_ci = e_ci[0] + e_ci[1] + e_ci[2] + e_ci[3];
    return result;
}

}  // namespace qdice

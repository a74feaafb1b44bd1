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

// Acceptance runner: executes the ten top-level checks of the model and
// prints one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qdice/qdice.hpp"

namespace {

using namespace qdice;

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

constexpr std::uint64_t kAcceptanceSeed = 20260817;

// 1. All sixteen Born probabilities land exactly on the model table.
void criterion_born_table(Check& check) {
    struct Cell {
        DieState state;
        Axis axis;
        int reading;
        double expected;
    };
    const Cell table[] = {
        {DieState::plus_z, Axis::z, 1, 1.0},   {DieState::plus_z, Axis::z, -1, 0.0},
        {DieState::plus_z, Axis::x, 1, 0.5},   {DieState::plus_z, Axis::x, -1, 0.5},
        {DieState::minus_z, Axis::z, 1, 0.0},  {DieState::minus_z, Axis::z, -1, 1.0},
        {DieState::minus_z, Axis::x, 1, 0.5},  {DieState::minus_z, Axis::x, -1, 0.5},
        {DieState::plus_x, Axis::z, 1, 0.5},   {DieState::plus_x, Axis::z, -1, 0.5},
        {DieState::plus_x, Axis::x, 1, 1.0},   {DieState::plus_x, Axis::x, -1, 0.0},
        {DieState::minus_x, Axis::z, 1, 0.5},  {DieState::minus_x, Axis::z, -1, 0.5},
        {DieState::minus_x, Axis::x, 1, 0.0},  {DieState::minus_x, Axis::x, -1, 1.0},
    };
    int checked = 0;
    for (const Cell& c : table) {
        const double p = born_probability(state_vector_of(c.state),
                                          projector_for(c.axis, c.reading));
        check.require(std::abs(p - c.expected) <= 1e-12,
                      "Born cell " + std::string(die_state_token(c.state)) + "/" +
                          std::string(axis_token(c.axis)) + " deviates");
        ++checked;
    }
    check.require(checked == 16, "expected 16 table cells");
}

// 2. The worked decomposition of a certain marginal: 1 = 1/4 + 1/4 + 1/2.
void criterion_worked_example(Check& check) {
    const TotalProbabilityDecomposition d = total_probability_decomposition(
        StateVector::plus_z(), projector_for(Axis::x, 1), projector_for(Axis::z, 1));
    check.require(std::abs(d.marginal - 1.0) <= 1e-12, "marginal != 1");
    check.require(std::abs(d.joint_then - 0.25) <= 1e-12, "first path != 1/4");
    check.require(std::abs(d.joint_complement_then - 0.25) <= 1e-12,
                  "second path != 1/4");
    check.require(std::abs(d.interference - 0.5) <= 1e-12, "interference != 1/2");
}

// 3. Decomposition closure over all states and ordered face-projector pairs.
void criterion_closure(Check& check) {
    const std::array<Projector, 4> projectors = {
        projector_for(Axis::z, 1), projector_for(Axis::z, -1),
        projector_for(Axis::x, 1), projector_for(Axis::x, -1)};
    int cases = 0;
    for (const DieState s : kAllDieStates) {
        for (const Projector& alpha : projectors) {
            for (const Projector& beta : projectors) {
                const TotalProbabilityDecomposition d =
                    total_probability_decomposition(state_vector_of(s), alpha, beta);
                check.require(std::abs(d.closure_residual()) < 1e-12,
                              "closure residual too large in case " +
                                  std::to_string(cases));
                ++cases;
            }
        }
    }
    check.require(cases == 64, "expected 64 closure cases");
}

// 4. The closed-form lambda measure equals the Born rule exactly on all
//    sixteen cells and matches a 10^6-point lambda grid within 1e-3.
void criterion_oracle_equivalence(Check& check) {
    const auto start = std::chrono::steady_clock::now();
    for (const DieState s : kAllDieStates) {
        for (const Axis d : kAllAxes) {
            for (const int reading : {1, -1}) {
                const double closed = hidden_measurement_probability(s, d, reading);
                const double born =
                    born_probability(state_vector_of(s), projector_for(d, reading));
                check.require(closed == born,
                              "closed form differs from Born rule on cell " +
                                  std::string(die_state_token(s)) + "/" +
                                  std::string(axis_token(d)));
            }
            constexpr std::uint64_t grid = 1000000;
            std::uint64_t plus_hits = 0;
            for (std::uint64_t i = 0; i < grid; ++i) {
                const double lambda =
                    (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
                if (deterministic_roll(s, d, HiddenVariable{lambda}).reading == 1) {
                    ++plus_hits;
                }
            }
            const double grid_plus =
                static_cast<double>(plus_hits) / static_cast<double>(grid);
            check.require(
                std::abs(grid_plus - hidden_measurement_probability(s, d, 1)) <=
                    1e-3,
                "lambda grid deviates on cell " + std::string(die_state_token(s)) +
                    "/" + std::string(axis_token(d)));
        }
    }
    const double elapsed = seconds_since(start);
    check.require(elapsed < 5.0,
                  "oracle sweep took " + std::to_string(elapsed) + "s (limit 5s)");
}

// 5. Seeded Monte Carlo at N = 100000 matches the analytic values within
//    3 sigma, for the single-die half/half case and the sequential
//    quarter table.
void criterion_monte_carlo(Check& check) {
    const auto start = std::chrono::steady_clock::now();
    const RunConfig cfg{kAcceptanceSeed, 100000, Protocol::single_roll, 3.0};

    const ComparisonReport single =
        run_single_die_session(cfg, DieState::plus_x, Axis::z);
    check.require(single.overall_pass, "single-die session failed its oracle");
    std::uint64_t single_total = 0;
    for (const ComparisonRow& r : single.rows) single_total += r.estimate.count;
    check.require(single_total == cfg.trials, "single-die tallies lost trials");

    const ComparisonReport sequential =
        run_sequential_session(cfg, DieState::plus_z, Axis::x, Axis::z);
    check.require(sequential.rows.size() == 4, "expected four sequential rows");
    for (const ComparisonRow& r : sequential.rows) {
        check.require(std::abs(r.analytic - 0.25) <= 1e-12,
                      "sequential analytic is not the quarter table");
        check.require(r.pass, "sequential row " + r.label + " outside 3 sigma");
    }
    const double elapsed = seconds_since(start);
    check.require(elapsed < 10.0, "Monte Carlo sessions took " +
                                      std::to_string(elapsed) + "s (limit 10s)");
}

// 6. The rolled pair: analytic I = 4 exactly, the estimate lands within
//    0.02, and every joint roll is anti-correlated.
void criterion_chsh_violation(Check& check) {
    const ChshReport analytic = chsh_value([](ExperimentChoice a, ExperimentChoice b) {
        return coincidence_distribution(a, b);
    });
    check.require(analytic.i_value == 4.0, "analytic I is not exactly 4");

    const RunConfig cfg{kAcceptanceSeed, 100000, Protocol::chsh_session, 3.0};
    const ChshSessionResult session = run_chsh_session(cfg, ChshVariant::rolled);
    check.require(std::abs(session.estimated_i - 4.0) <= 0.02,
                  "estimated I deviates from 4 by more than 0.02");

    // Rows 0..3 belong to the (Roll, Roll) pair in outcome order
    // (+1,+1), (+1,-1), (-1,+1), (-1,-1).
    const auto& rows = session.per_pair.rows;
    check.require(rows[0].estimate.count == 0,
                  "correlated (+1,+1) outcome observed in a joint roll");
    check.require(rows[3].estimate.count == 0,
                  "correlated (-1,-1) outcome observed in a joint roll");
    check.require(rows[1].estimate.count + rows[2].estimate.count == cfg.trials,
                  "anti-correlation does not cover all joint rolls");
}

// 7. Local models: all 16 deterministic assignments and 1000 random convex
//    mixtures stay at or below the classical bound.
void criterion_classical_bound(Check& check) {
    const DeterministicChshRange range = enumerate_deterministic_chsh();
    check.require(range.max_i <= 2.0 + 1e-12, "deterministic maximum exceeds 2");
    check.require(range.min_i == 2.0 && range.max_i == 2.0,
                  "deterministic assignments expected to pin I = 2");

    // Independent re-enumeration with plain integers.
    for (const int oa : {1, -1}) {
        for (const int oap : {1, -1}) {
            for (const int ob : {1, -1}) {
                for (const int obp : {1, -1}) {
                    const double i =
                        std::abs(static_cast<double>(oa * ob - oa * obp)) +
                        std::abs(static_cast<double>(oap * obp + oap * ob));
                    check.require(i <= 2.0 + 1e-12,
                                  "integer enumeration exceeds the bound");
                }
            }
        }
    }

    RandomStream stream(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        std::array<double, 16> w{};
        double total = 0.0;
        for (double& x : w) {
            x = stream.next_unit();
            total += x;
        }
        for (double& x : w) x /= total;
        const auto mixture = [&w](ExperimentChoice ca, ExperimentChoice cb) {
            std::array<double, 4> p{};
            std::size_t k = 0;
            for (const int oa : {1, -1}) {
                for (const int oap : {1, -1}) {
                    for (const int ob : {1, -1}) {
                        for (const int obp : {1, -1}) {
                            const int va = ca == ExperimentChoice::roll ? oa : oap;
                            const int vb = cb == ExperimentChoice::roll ? ob : obp;
                            p[joint_outcome_index({va, vb})] += w[k];
                            ++k;
                        }
                    }
                }
            }
            return OutcomeDistribution(p);
        };
        check.require(chsh_value(mixture).i_value <= 2.0 + 1e-12,
                      "convex mixture " + std::to_string(trial) +
                          " exceeds the classical bound");
    }

    for (const DieState a : kAllDieStates) {
        for (const DieState b : kAllDieStates) {
            const ChshReport r =
                chsh_value([&](ExperimentChoice ca, ExperimentChoice cb) {
                    return discovery_variant_distribution(DiePair{a, b}, ca, cb);
                });
            check.require(r.i_value <= 2.0 + 1e-12,
                          "discovery preparation exceeds the classical bound");
        }
    }
}

// 8. Ordering of the three landmark values: 4 > 2*sqrt(2) > 2, with the
//    Tsirelson bound computed, not hardcoded.
void criterion_tsirelson(Check& check) {
    const double tsirelson = 2.0 * std::sqrt(2.0);
    const RunConfig cfg{kAcceptanceSeed, 1000, Protocol::chsh_session, 3.0};
    const ChshSessionResult session = run_chsh_session(cfg, ChshVariant::rolled);
    check.require(session.report.i_value > tsirelson,
                  "I does not exceed the Tsirelson bound");
    check.require(tsirelson > 2.0, "Tsirelson bound does not exceed 2");
    check.require(std::abs(session.tsirelson_bound - tsirelson) <= 1e-15,
                  "session does not carry the computed Tsirelson bound");
    check.require(4.0 > tsirelson && tsirelson > 2.0, "ordering 4 > 2sqrt2 > 2");
}

// 9. Identical configs produce byte-identical JSON, for repeated runs and
//    for every lane count.
void criterion_reproducibility(Check& check) {
    const RunConfig cfg{7, 20000, Protocol::single_roll, 3.0};
    const std::string first =
        json_text(run_single_die_session(cfg, DieState::plus_x, Axis::z, 1));
    const std::string second =
        json_text(run_single_die_session(cfg, DieState::plus_x, Axis::z, 1));
    const std::string lanes5 =
        json_text(run_single_die_session(cfg, DieState::plus_x, Axis::z, 5));
    check.require(first == second, "two identical runs differ");
    check.require(first == lanes5, "multi-lane run differs from single-lane");

    const RunConfig chsh_cfg{7, 5000, Protocol::chsh_session, 3.0};
    const std::string chsh1 = json_text(
        run_chsh_session(chsh_cfg, ChshVariant::rolled, kDefaultDiscoveryPair, 1));
    const std::string chsh2 = json_text(
        run_chsh_session(chsh_cfg, ChshVariant::rolled, kDefaultDiscoveryPair, 4));
    const std::string chsh3 = json_text(
        run_chsh_session(chsh_cfg, ChshVariant::rolled, kDefaultDiscoveryPair, 1));
    check.require(chsh1 == chsh2, "chsh multi-lane run differs");
    check.require(chsh1 == chsh3, "repeated chsh run differs");
}

// 10. A 0.05 corruption of the oracle makes the criterion-5 session fail,
//     in both directions.
void criterion_corruption_detection(Check& check) {
    const RunConfig cfg{kAcceptanceSeed, 100000, Protocol::single_roll, 3.0};
    const ComparisonReport honest =
        run_single_die_session(cfg, DieState::plus_x, Axis::z);
    check.require(honest.overall_pass, "honest session unexpectedly fails");

    for (const double corruption : {0.05, -0.05}) {
        bool all_pass = true;
        for (const ComparisonRow& r : honest.rows) {
            const ComparisonRow redone =
                make_comparison_row(r.label, r.analytic + corruption,
                                    r.estimate.count, r.estimate.n,
                                    cfg.sigma_level);
            all_pass = all_pass && redone.pass;
        }
        check.require(!all_pass,
                      corruption > 0.0
                          ? "corruption +0.05 went undetected"
                          : "corruption -0.05 went undetected");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Check&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "Born table reproduction", criterion_born_table},
        {2, "interference worked example (1 = 1/4 + 1/4 + 1/2)",
         criterion_worked_example},
        {3, "total-probability closure over 64 cases", criterion_closure},
        {4, "hidden-measurement oracle equivalence", criterion_oracle_equivalence},
        {5, "Monte Carlo convergence at 3 sigma", criterion_monte_carlo},
        {6, "maximal CHSH violation I = 4", criterion_chsh_violation},
        {7, "classical bound of local assignments", criterion_classical_bound},
        {8, "Tsirelson ordering 4 > 2*sqrt(2) > 2", criterion_tsirelson},
        {9, "byte-identical reproducibility", criterion_reproducibility},
        {10, "corrupted oracle detection", criterion_corruption_detection},
    };

    int passed = 0;
    for (const Criterion& c : criteria) {
        Check check;
        c.fn(check);
        std::cout << "criterion " << std::setw(2) << c.id << ": "
                  << (check.ok ? "PASS" : "FAIL") << "  " << c.name << "\n";
        for (const std::string& note : check.notes) {
            std::cout << "    - " << note << "\n";
        }
        if (check.ok) ++passed;
    }
    std::cout << "acceptance: " << passed << "/" << criteria.size()
              << " criteria passed\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}

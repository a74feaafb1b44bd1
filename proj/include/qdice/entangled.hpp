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
/// Two dice glued by a rigid rod, rolled by two separated players.
///
/// Each player either Rolls their die or performs a FlatCheck (presses it
/// flat). The joint outcome statistics are given by per-choice coincidence
/// tables: (Roll, Roll) is perfectly anti-correlated with uniform marginals,
/// every combination involving a FlatCheck yields (+1, +1) with certainty.
/// With a = a' = Roll-vs-FlatCheck settings this drives the CHSH combination
/// to its algebraic maximum I = 4, beyond the Tsirelson bound 2*sqrt(2) of
/// standard quantum correlations, while every deterministic single-die
/// assignment stays at the classical bound I <= 2.

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "qdice/die.hpp"
#include "qdice/random.hpp"

namespace qdice {

/// A player's measurement choice.
enum class ExperimentChoice { roll, flat_check };

inline constexpr ExperimentChoice kAllChoices[] = {ExperimentChoice::roll,
                                                   ExperimentChoice::flat_check};

constexpr std::string_view choice_token(ExperimentChoice c) {
    return c == ExperimentChoice::roll ? "roll" : "flat-check";
}

/// Mechanical state of the connecting rod after a coincidence trial.
/// The rod detaches exactly when one die is rolled while the other is held
/// flat; once detached it stays detached for the rest of that trial's run.
enum class RodState { connected, detached };

/// One joint reading (a for the left player, b for the right player),
/// each face value +1 or -1.
struct JointOutcome {
    int a;
    int b;
};

constexpr bool operator==(const JointOutcome& l, const JointOutcome& r) {
    return l.a == r.a && l.b == r.b;
}

/// Canonical outcome order used by distributions, tallies and reports.
inline constexpr std::array<JointOutcome, 4> kJointOutcomeOrder = {
    JointOutcome{1, 1}, JointOutcome{1, -1}, JointOutcome{-1, 1},
    JointOutcome{-1, -1}};

constexpr std::size_t joint_outcome_index(const JointOutcome& o) {
    if (o.a != 1 && o.a != -1) {
        throw std::invalid_argument("joint_outcome_index: a must be +1 or -1");
    }
    if (o.b != 1 && o.b != -1) {
        throw std::invalid_argument("joint_outcome_index: b must be +1 or -1");
    }
    return static_cast<std::size_t>(o.a == -1) * 2 + static_cast<std::size_t>(o.b == -1);
}

/// A probability distribution over the four joint outcomes.
class OutcomeDistribution {
  public:
    /// Probabilities in kJointOutcomeOrder. Each must lie in [0, 1] and the
    /// total must be 1 within kTolerance.
    constexpr explicit OutcomeDistribution(std::array<double, 4> p) : p_(p) {
        double total = 0.0;
        for (const double v : p_) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument(
                    "OutcomeDistribution: probability outside [0, 1]");
            }
            total += v;
        }
        const double dev = total - 1.0;
        if (!(dev <= kTolerance && dev >= -kTolerance)) {
            throw std::invalid_argument("OutcomeDistribution: total is not 1");
        }
    }

    static constexpr OutcomeDistribution point_mass(JointOutcome o) {
        std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};
        p[joint_outcome_index(o)] = 1.0;
        return OutcomeDistribution(p);
    }

    constexpr double probability(JointOutcome o) const {
        return p_[joint_outcome_index(o)];
    }

    constexpr const std::array<double, 4>& probabilities() const noexcept {
        return p_;
    }

    /// Inverse-CDF sample in kJointOutcomeOrder. Consumes exactly one draw.
    JointOutcome sample(RandomStream& stream) const {
        const double u = stream.next_unit();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < p_.size(); ++i) {
            acc += p_[i];
            if (u < acc) return kJointOutcomeOrder[i];
        }
        return kJointOutcomeOrder.back();
    }

  private:
    std::array<double, 4> p_;
};

/// E = sum_o p(o) * o.a * o.b.
constexpr double expectation_of(const OutcomeDistribution& d) {
    double e = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const JointOutcome& o = kJointOutcomeOrder[i];
        e += d.probabilities()[i] * static_cast<double>(o.a * o.b);
    }
    return e;
}

/// Coincidence table of the rolled pair for one pair of choices.
///
/// (Roll, Roll): (+1,-1) and (-1,+1) each with probability 1/2; any
/// combination involving a FlatCheck: (+1,+1) with certainty.
constexpr OutcomeDistribution coincidence_distribution(ExperimentChoice a,
                                                       ExperimentChoice b) {
    if (a == ExperimentChoice::roll && b == ExperimentChoice::roll) {
        return OutcomeDistribution({0.0, 0.5, 0.5, 0.0});
    }
    return OutcomeDistribution::point_mass({1, 1});
}

/// Rod rule: detached iff exactly one player rolls.
constexpr RodState rod_state_after(ExperimentChoice a, ExperimentChoice b) {
    return (a == ExperimentChoice::roll) != (b == ExperimentChoice::roll)
               ? RodState::detached
               : RodState::connected;
}

/// One coincidence trial of the rolled pair.
struct CoincidenceSample {
    JointOutcome outcome;
    RodState rod;
};

/// Samples one coincidence trial. Consumes exactly one draw regardless of
/// the choices.
inline CoincidenceSample sample_coincidence(ExperimentChoice a, ExperimentChoice b,
                                            RandomStream& stream) {
    return {coincidence_distribution(a, b).sample(stream), rod_state_after(a, b)};
}

/// The four CHSH correlators and the combination
/// I = |E_ab - E_ab'| + |E_a'b' + E_a'b|, with unprimed = Roll and
/// primed = FlatCheck on both sides.
struct ChshReport {
    double e_ab;
    double e_ab_prime;
    double e_aprime_b;
    double e_aprime_bprime;
    double i_value;
};

namespace detail {
constexpr double abs_val(double v) { return v < 0.0 ? -v : v; }
}  // namespace detail

constexpr ChshReport make_chsh_report(double e_ab, double e_ab_prime,
                                      double e_aprime_b, double e_aprime_bprime) {
    const double i =
        detail::abs_val(e_ab - e_ab_prime) + detail::abs_val(e_aprime_bprime + e_aprime_b);
    if (!(i >= 0.0 && i <= 4.0 + kTolerance)) {
        throw std::invalid_argument("make_chsh_report: I outside [0, 4]");
    }
    return {e_ab, e_ab_prime, e_aprime_b, e_aprime_bprime, i};
}

/// Evaluates the CHSH combination of any source of coincidence
/// distributions. `source(choice_a, choice_b)` must return the
/// OutcomeDistribution of that setting pair.
template <typename DistributionSource>
constexpr ChshReport chsh_value(DistributionSource&& source) {
    constexpr ExperimentChoice roll = ExperimentChoice::roll;
    constexpr ExperimentChoice flat = ExperimentChoice::flat_check;
    return make_chsh_report(expectation_of(source(roll, roll)),
                            expectation_of(source(roll, flat)),
                            expectation_of(source(flat, roll)),
                            expectation_of(source(flat, flat)));
}

/// The dice prepared on the table before a discovery-variant trial.
struct DiePair {
    DieState a;
    DieState b;
};

/// The discovery variant: both players merely read the upper face when
/// asked to "roll" (the dice never tumble), and a FlatCheck still reports
/// +1. Outcomes are a deterministic function of the prepared pair, so the
/// distribution is a point mass.
constexpr OutcomeDistribution discovery_variant_distribution(DiePair prepared,
                                                             ExperimentChoice a,
                                                             ExperimentChoice b) {
    const int oa = a == ExperimentChoice::roll ? read_upper_face(prepared.a) : 1;
    const int ob = b == ExperimentChoice::roll ? read_upper_face(prepared.b) : 1;
    return OutcomeDistribution::point_mass({oa, ob});
}

/// Range of I over the deterministic local assignments.
struct DeterministicChshRange {
    double min_i;
    double max_i;
};

/// Enumerates all 16 deterministic assignments (o_a, o_a', o_b, o_b') of
/// fixed +-1 outcomes to the four settings and reports the range of the
/// CHSH combination. Every assignment lands exactly on the classical bound:
/// |o_a*(o_b - o_b')| + |o_a'*(o_b' + o_b)| = 2 because one of the two
/// inner terms vanishes while the other has magnitude 2.
constexpr DeterministicChshRange enumerate_deterministic_chsh() {
    double lo = 4.0;
    double hi = 0.0;
    for (const int oa : {1, -1}) {
        for (const int oap : {1, -1}) {
            for (const int ob : {1, -1}) {
                for (const int obp : {1, -1}) {
                    const auto source = [&](ExperimentChoice ca, ExperimentChoice cb) {
                        const int va = ca == ExperimentChoice::roll ? oa : oap;
                        const int vb = cb == ExperimentChoice::roll ? ob : obp;
                        return OutcomeDistribution::point_mass({va, vb});
                    };
                    const double i = chsh_value(source).i_value;
                    if (i < lo) lo = i;
                    if (i > hi) hi = i;
                }
            }
        }
    }
    return {lo, hi};
}

}  // namespace qdice

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
/// The magic-die model: a die whose four stable configurations are the
/// eigenstates of the two face observables, rolled along axis z or x.
///
/// Rolling along the axis the die is already an eigenstate of is a "glide":
/// the die slides without tumbling, the reading is its upper face and the
/// state does not change. Rolling along the other axis tumbles the die; the
/// outcome is decided by a hidden impulse parameter lambda, uniform on
/// [0, 1), with lambda < 1/2 selecting the +1 face. The induced outcome
/// statistics reproduce the Born rule exactly.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "qdice/hilbert.hpp"
#include "qdice/random.hpp"

namespace qdice {

/// Axis a die is rolled along. Shares the state-space axes.
using RollDirection = Axis;

/// The four stable die configurations.
enum class DieState { plus_z, minus_z, plus_x, minus_x };

/// All states, in canonical table order.
inline constexpr DieState kAllDieStates[] = {DieState::plus_z, DieState::minus_z,
                                             DieState::plus_x, DieState::minus_x};
inline constexpr Axis kAllAxes[] = {Axis::z, Axis::x};

/// Axis the given state is an eigenstate of.
constexpr Axis axis_of(DieState s) {
    return (s == DieState::plus_z || s == DieState::minus_z) ? Axis::z : Axis::x;
}

/// The eigenvalue printed on the upper face: +1 for plus states, -1 for
/// minus states. Reading the face is a passive observation; it never
/// disturbs the state.
constexpr int read_upper_face(DieState s) {
    return (s == DieState::plus_z || s == DieState::plus_x) ? 1 : -1;
}

/// The eigenstate of `axis` with face value `sign` (+1 or -1).
constexpr DieState eigenstate_of(Axis axis, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("eigenstate_of: sign must be +1 or -1");
    }
    if (axis == Axis::z) return sign == 1 ? DieState::plus_z : DieState::minus_z;
    return sign == 1 ? DieState::plus_x : DieState::minus_x;
}

/// The state vector of a stable configuration.
constexpr StateVector state_vector_of(DieState s) {
    switch (s) {
        case DieState::plus_z: return StateVector::plus_z();
        case DieState::minus_z: return StateVector::minus_z();
        case DieState::plus_x: return StateVector::plus_x();
        default: return StateVector::minus_x();
    }
}

/// The hidden impulse parameter of one roll. Uniform on [0, 1) under the
/// model's measure.
struct HiddenVariable {
    double lambda;

    explicit constexpr HiddenVariable(double l) : lambda(l) {
        if (!(l >= 0.0 && l < 1.0)) {
            throw std::invalid_argument("HiddenVariable: lambda must lie in [0, 1)");
        }
    }
};

/// Reading and post-roll configuration of a single roll.
struct RollOutcome {
    int reading;
    DieState final_state;
};

/// The threshold splitting the impulse range between the two faces of a
/// tumbling roll.
inline constexpr double kImpulseThreshold = 0.5;

/// One roll, fully determined by (state, direction, lambda).
///
/// Glide case (axis_of(state) == direction): reading is the upper face and
/// the state is unchanged, for every lambda. Tumble case: lambda below the
/// threshold yields the +1 face, otherwise the -1 face; the die comes to
/// rest in the corresponding eigenstate of the roll direction.
constexpr RollOutcome deterministic_roll(DieState state, RollDirection direction,
                                         HiddenVariable impulse) {
    if (axis_of(state) == direction) {
        return {read_upper_face(state), state};
    }
    const int reading = impulse.lambda < kImpulseThreshold ? 1 : -1;
    return {reading, eigenstate_of(direction, reading)};
}

/// Closed-form measure of {lambda : deterministic_roll yields `reading`}.
/// Always one of {0, 1/2, 1}, and equals
/// born_probability(state_vector_of(state), projector_for(direction, reading))
/// exactly.
constexpr double hidden_measurement_probability(DieState state,
                                                RollDirection direction,
                                                int reading) {
    if (reading != 1 && reading != -1) {
        throw std::invalid_argument(
            "hidden_measurement_probability: reading must be +1 or -1");
    }
    if (axis_of(state) == direction) {
        return reading == read_upper_face(state) ? 1.0 : 0.0;
    }
    return 0.5;
}

/// One random roll. Consumes exactly one draw from `stream` per call, in
/// both the glide and the tumble case, so trial streams stay aligned across
/// protocols.
inline RollOutcome sample_roll(DieState state, RollDirection direction,
                               RandomStream& stream) {
    const HiddenVariable impulse{stream.next_unit()};
    return deterministic_roll(state, direction, impulse);
}

/// ASCII token of a state, matching the command-line flag spelling.
constexpr std::string_view die_state_token(DieState s) {
    switch (s) {
        case DieState::plus_z: return "+z";
        case DieState::minus_z: return "-z";
        case DieState::plus_x: return "+x";
        default: return "-x";
    }
}

/// ASCII token of an axis.
constexpr std::string_view axis_token(Axis a) { return a == Axis::z ? "z" : "x"; }

constexpr std::optional<DieState> parse_die_state(std::string_view token) {
    if (token == "+z") return DieState::plus_z;
    if (token == "-z") return DieState::minus_z;
    if (token == "+x") return DieState::plus_x;
    if (token == "-x") return DieState::minus_x;
    return std::nullopt;
}

constexpr std::optional<Axis> parse_axis(std::string_view token) {
    if (token == "z") return Axis::z;
    if (token == "x") return Axis::x;
    return std::nullopt;
}

}  // namespace qdice

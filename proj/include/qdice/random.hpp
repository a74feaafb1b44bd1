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
/// Deterministic randomness with stable, documented substream derivation.
///
/// The generator is std::mt19937_64, whose output sequence for a given seed
/// is fully specified by the C++ standard, so runs are reproducible across
/// platforms and standard libraries. Unit doubles are produced from the top
/// 53 bits of one engine output, giving exactly one engine draw per
/// next_unit() call.

#pragma once

#include <cstdint>
#include <random>

namespace qdice {

namespace detail {

/// SplitMix64 finalizer. Used only to spread seed/index pairs over the
/// 64-bit space before seeding an engine; never used as the sampling RNG.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

/// A deterministic stream of uniform variates.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// One engine draw, mapped to [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// One raw engine draw.
    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// Derives substream `index` of a master `seed`.
///
/// Derivation rule (stable; serialized session reports depend on it):
/// the engine seed of substream i is
///     splitmix64_mix(seed + (i + 1) * 0x9E3779B97F4A7C15),
/// i.e. the (i+1)-th output of a SplitMix64 generator started at `seed`.
/// Distinct (seed, index) pairs map to well-separated engine seeds, and
/// index 0 differs from the plain RandomStream(seed) stream.
inline RandomStream derive_substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(
        detail::splitmix64_mix(seed + (index + 1) * detail::kSplitMixGamma));
}

}  // namespace qdice

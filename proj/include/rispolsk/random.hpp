// SPDX-License-Identifier: Apache-2.0
//
// rispolsk: link-level simulation of RIS-encoded polarization shift keying
// Copyright (C) 2026 The rispolsk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <limits>

namespace rispolsk {

/// What a substream is used for; part of the stream key.
enum class StreamPurpose : std::uint64_t {
    bit = 1,
    noise = 2,
    estimation_error = 3,
};

/// SplitMix64 generator. Small state, cheap to seed, good enough statistical
/// quality for short per-slot streams. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
  public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += golden_gamma;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

  private:
    std::uint64_t state_;
};

/// Independent stream keyed by (master seed, slot index, purpose). Draws for a
/// slot never depend on how the slots are partitioned across workers.
constexpr SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index, StreamPurpose purpose) noexcept {
    std::uint64_t key = SplitMix64::mix(master_seed + SplitMix64::golden_gamma * static_cast<std::uint64_t>(purpose));
    key = SplitMix64::mix(key ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    return SplitMix64(key);
}

} // namespace rispolsk

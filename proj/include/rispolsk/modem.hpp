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

#include <rispolsk/polarization.hpp>

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace rispolsk {

/// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double phase) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phase, two_pi);
    if (w < 0.0)
        w += two_pi;
    // fmod of a tiny negative number can round back up to exactly 2*pi
    return w >= two_pi ? 0.0 : w;
}

/// Per-unit phase pair for one scattering slot.
struct UnitPhase {
    double phi_v = 0.0;
    double phi_h = 0.0;

    double delta() const noexcept { return phi_v - phi_h; }
};

/// Phase programming of the whole surface for one scattering slot.
/// Entries are kept wrapped to [0, 2*pi).
class RisPhaseConfig {
  public:
    RisPhaseConfig() = default;
    explicit RisPhaseConfig(std::vector<UnitPhase> units) : units_(std::move(units)) {
        for (auto& u : units_) {
            u.phi_v = wrap_two_pi(u.phi_v);
            u.phi_h = wrap_two_pi(u.phi_h);
        }
    }

    std::size_t size() const noexcept { return units_.size(); }
    const UnitPhase& operator[](std::size_t m) const { return units_[m]; }
    std::span<const UnitPhase> units() const noexcept { return units_; }

  private:
    std::vector<UnitPhase> units_;
};

/// Co-phases every path (phi_h = psi_m) and applies one common V/H phase offset.
inline RisPhaseConfig beamforming_config(std::span<const double> psi, double delta_phi) {
    std::vector<UnitPhase> units;
    units.reserve(psi.size());
    for (double p : psi)
        units.push_back({p + delta_phi, p});
    return RisPhaseConfig(std::move(units));
}

/// Differential pre-coding d_k = b_k xor d_{k-1}, starting from d_0 = d_init.
inline std::vector<bit_t> differential_encode(std::span<const bit_t> bits, bit_t d_init) {
    std::vector<bit_t> out;
    out.reserve(bits.size());
    bit_t prev = d_init & 1u;
    for (bit_t b : bits) {
        prev = static_cast<bit_t>((b & 1u) ^ prev);
        out.push_back(prev);
    }
    return out;
}

/// Slot configuration for an encoded bit: slant +45 deg when d = 1, slant -45 deg when d = 0.
inline RisPhaseConfig dpolsk_slot_config(bit_t d, std::span<const double> psi) {
    return beamforming_config(psi, (d & 1u) ? 0.0 : std::numbers::pi);
}

/// Coherent benchmark: the raw data bit selects the SoP directly.
inline RisPhaseConfig cpolsk_slot_config(bit_t b, std::span<const double> psi) {
    return dpolsk_slot_config(b, psi);
}

/// Encoder state for one stream: the most recent encoded bit.
class DifferentialState {
  public:
    explicit DifferentialState(bit_t d_init = 1) : d_prev_(d_init & 1u) {}

    bit_t d_prev() const noexcept { return d_prev_; }

    bit_t encode(bit_t b) noexcept {
        d_prev_ = static_cast<bit_t>((b & 1u) ^ d_prev_);
        return d_prev_;
    }

  private:
    bit_t d_prev_;
};

} // namespace rispolsk

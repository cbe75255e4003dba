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


// Normalized Stokes points of a few noisy slots, before and after a 40 deg SoP
// rotation. s3 is untouched and (s1, s2) turn by 80 deg.

#include <rispolsk/rispolsk.hpp>

#include <cstdio>
#include <random>

int main() {
    using namespace rispolsk;
    Scenario s;
    s.rotation_angle = deg_to_rad(40.0);
    s = with_target_snr(s, 30.0);
    const LinkBudget b = link_budget(s);

    std::mt19937_64 rng(3);
    std::printf("%4s %3s %9s %9s %9s   %9s %9s %9s\n", "slot", "d", "s1", "s2", "s3", "s1 rot", "s2 rot", "s3 rot");
    DifferentialState state(1);
    for (int k = 0; k < 8; ++k) {
        const bit_t d = k == 0 ? state.d_prev() : state.encode(static_cast<bit_t>(rng() & 1u));
        const Jones u = effective_scattered_wave(dpolsk_slot_config(d, b.psi), b, s);
        const Jones w = noise_sample(s.noise_power, rng);
        const Stokes a = stokes(u + w);
        const Stokes r = stokes(apply_rotation(rotation_matrix(s.rotation_angle), u + w));
        std::printf("%4d %3d %9.4f %9.4f %9.4f   %9.4f %9.4f %9.4f\n", k, d, a.s1 / a.s0, a.s2 / a.s0, a.s3 / a.s0,
                    r.s1 / r.s0, r.s2 / r.s0, r.s3 / r.s0);
    }
}

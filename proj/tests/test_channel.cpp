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

#include <catch_amalgamated.hpp>

#include <rispolsk/channel.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace rispolsk;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;

Scenario table1(std::size_t rows = 20, std::size_t cols = 20) {
    Scenario s;
    s.carrier_wavelength = 0.1;
    s.unit_side = 0.05;
    s.num_units_rows = rows;
    s.num_units_cols = cols;
    return s;
}

double relative_error(const Jones& a, const Jones& b) {
    return std::sqrt((a - b).power() / std::max(b.power(), 1e-300));
}

RisPhaseConfig random_config(std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, 2 * pi);
    std::vector<UnitPhase> units(m);
    for (auto& x : units)
        x = {u(rng), u(rng)};
    return RisPhaseConfig(units);
}

} // namespace

TEST_CASE("effective_gain - reference layout")
{
    const Scenario s = table1();
    // Independent evaluation: 0.0025 * 10^0.3 / (4 pi 5000) * 0.5^0.285.
    const double eta = effective_gain(s, link_geometry(s));
    CHECK_THAT(eta, WithinRel(6.51578268953525e-08, 1e-12));
    CHECK_THAT(eta, WithinRel(6.52e-8, 1e-3));
}

TEST_CASE("effective_gain - boresight and distance scaling")
{
    const Scenario s = table1();
    LinkGeometry g;
    g.r1 = 30;
    g.r2 = 40;
    g.zeta1 = g.zeta2 = 0;
    const double spread = s.unit_area() * std::sqrt(s.tx_gain * s.rx_gain) / (4 * pi * g.r1 * g.r2);
    CHECK_THAT(effective_gain(s, g), WithinRel(spread, 1e-15));

    g.zeta1 = 0.4;
    g.zeta2 = 1.1;
    const double base = effective_gain(s, g);
    LinkGeometry far = g;
    far.r2 *= 2;
    CHECK_THAT(effective_gain(s, far), WithinRel(base / 2, 1e-15));

    LinkGeometry zero = g;
    zero.r1 = 0;
    CHECK_THROWS_AS(effective_gain(s, zero), degenerate_geometry);
}

TEST_CASE("effective_gain - symmetric in source and receiver")
{
    Scenario s = table1();
    const double eta = effective_gain(s, link_geometry(s));
    std::swap(s.source_position, s.receiver_position);
    CHECK_THAT(effective_gain(s, link_geometry(s)), WithinRel(eta, 1e-15));
}

TEST_CASE("path_phases - center unit and single-unit composition")
{
    Scenario s = table1(1, 1);
    const LinkGeometry g = link_geometry(s);
    const auto p = unit_positions(s);
    const auto psi = path_phases(s, p, g);
    REQUIRE(psi.size() == 1);
    CHECK(psi[0] == 0.0);

    // Off-center single unit: psi equals the two plane-wave phases added.
    const std::vector<vec3> shifted{s.ris_center + vec3(0, 0.37, -0.21)};
    const vec3 local = ris_frame(s.ris_normal).to_local(shifted[0] - s.ris_center);
    const double expected =
        path_phase(local, wave_vector(g.arrival_elevation, g.arrival_azimuth, s.carrier_wavelength)) +
        path_phase(local, wave_vector(g.departure_elevation, g.departure_azimuth, s.carrier_wavelength));
    CHECK_THAT(path_phases(s, shifted, g)[0], WithinAbs(expected, 1e-12));
}

TEST_CASE("path_phases - adjacent units of the reference layout")
{
    const Scenario s = table1(2, 2);
    const auto psi = path_phases(s, unit_positions(s), link_geometry(s));
    // Hand evaluation: the unit offset (0, d, 0) sees k d (sin(135 deg) + sin(45 deg)) ... with the
    // wave vectors -k(1, -1, 0)/sqrt2 and -k(1, 1, 0)/sqrt2 the y components cancel (specular layout).
    const double k = 2 * pi / s.carrier_wavelength;
    const double d = s.unit_side;
    const double hand = d * (-k / std::sqrt(2.0)) * (-1.0) + d * (-k / std::sqrt(2.0)) * 1.0;
    const double dpsi = wrap_two_pi(psi[1] - psi[0]);
    CHECK((dpsi < 1e-12 || 2 * pi - dpsi < 1e-12));
    CHECK_THAT(wrap_two_pi(hand), WithinAbs(0.0, 1e-12));
}

TEST_CASE("path_phases - agree with exact path lengths in the far field")
{
    // Asymmetric layout so the phases are not trivial.
    Scenario s = table1(5, 7);
    s.source_position = {60, 5, 20};
    s.receiver_position = {40, 120, -10};
    const auto pos = unit_positions(s);
    const auto psi = path_phases(s, pos, link_geometry(s));
    const double k = 2 * pi / s.carrier_wavelength;
    const double ref = (s.source_position - s.ris_center).norm() + (s.receiver_position - s.ris_center).norm();

    bool any_nonzero = false;
    for (std::size_t m = 0; m < pos.size(); ++m) {
        const double excess =
            (s.source_position - pos[m]).norm() + (s.receiver_position - pos[m]).norm() - ref;
        // Far-field error is of order k * extent^2 / r.
        CHECK_THAT(psi[m], WithinAbs(k * excess, 2e-2));
        any_nonzero = any_nonzero || std::abs(psi[m]) > 1.0;
    }
    CHECK(any_nonzero);
}

TEST_CASE("link_budget - amplitude and SNR bookkeeping")
{
    const Scenario s = table1();
    const LinkBudget b = link_budget(s);
    CHECK(b.eta > 0);
    CHECK(b.psi.size() == s.num_units());
    CHECK_THAT(b.alpha, WithinRel(400 * b.eta * std::sqrt(s.tx_power), 1e-12));
    CHECK_THAT(b.gamma, WithinRel(b.alpha * b.alpha / (2 * s.noise_power), 1e-12));
}

TEST_CASE("link_budget - SNR grows with the square of the unit count")
{
    const double g10 = link_budget(table1(10, 10)).gamma;
    const double g20 = link_budget(table1(20, 20)).gamma;
    const double g7x3 = link_budget(table1(7, 3)).gamma;
    CHECK_THAT(g20 / g10, WithinRel(16.0, 1e-12));
    CHECK_THAT(g10 / g7x3, WithinRel(100.0 * 100.0 / (21.0 * 21.0), 1e-12));
}

TEST_CASE("noise_sample - zero variance gives silence")
{
    std::mt19937_64 rng(1);
    const Jones w = noise_sample(0.0, rng);
    CHECK(w.v == cplx(0));
    CHECK(w.h == cplx(0));
}

TEST_CASE("noise_sample - per-component variance and independence")
{
    std::mt19937_64 rng(2024);
    const double sigma2 = 3.7e-13;
    const int n = 1000000;
    double pv = 0, ph = 0, re_v = 0, im_v = 0;
    cplx cross(0);
    for (int i = 0; i < n; ++i) {
        const Jones w = noise_sample(sigma2, rng);
        pv += std::norm(w.v);
        ph += std::norm(w.h);
        re_v += w.v.real() * w.v.real();
        im_v += w.v.imag() * w.v.imag();
        cross += w.v * std::conj(w.h);
    }
    CHECK_THAT(pv / n, WithinRel(sigma2, 0.01));
    CHECK_THAT(ph / n, WithinRel(sigma2, 0.01));
    // Circular symmetry: real and imaginary parts carry half each.
    CHECK_THAT(re_v / n, WithinRel(sigma2 / 2, 0.01));
    CHECK_THAT(im_v / n, WithinRel(sigma2 / 2, 0.01));
    CHECK(std::abs(cross / double(n)) / std::sqrt((pv / n) * (ph / n)) < 0.01);
}

TEST_CASE("effective_scattered_wave - beamformed slant states")
{
    const Scenario s = table1();
    const LinkBudget b = link_budget(s);
    const double a = b.alpha / std::sqrt(2.0);

    const Jones plus = effective_scattered_wave(beamforming_config(b.psi, 0.0), b, s);
    CHECK(std::abs(plus.v - cplx(a)) < 1e-12 * a);
    CHECK(std::abs(plus.h - cplx(a)) < 1e-12 * a);

    const Jones minus = effective_scattered_wave(beamforming_config(b.psi, pi), b, s);
    CHECK(std::abs(minus.v - cplx(-a)) < 1e-12 * a);
    CHECK(std::abs(minus.h - cplx(a)) < 1e-12 * a);
}

TEST_CASE("effective_scattered_wave - matches a term-by-term sum")
{
    std::mt19937_64 rng(8);
    const Scenario s = table1(2, 4);
    const LinkBudget b = link_budget(s);
    for (int trial = 0; trial < 20; ++trial) {
        const RisPhaseConfig cfg = random_config(8, rng);
        cplx v(0), h(0);
        for (std::size_t m = 0; m < 8; ++m) {
            v += std::exp(cplx(0, cfg[m].phi_v - b.psi[m]));
            h += std::exp(cplx(0, cfg[m].phi_h - b.psi[m]));
        }
        const double scale = b.eta * std::sqrt(s.tx_power / 2);
        CHECK(relative_error(effective_scattered_wave(cfg, b, s), Jones{scale * v, scale * h}) < 1e-12);
    }
}

TEST_CASE("effective_scattered_wave - size mismatch")
{
    std::mt19937_64 rng(9);
    const Scenario s = table1(2, 4);
    const LinkBudget b = link_budget(s);
    CHECK_THROWS_AS(effective_scattered_wave(random_config(7, rng), b, s), config_size_mismatch);
    CHECK_THROWS_AS(assemble_full_channel(random_config(9, rng), s, link_geometry(s), unit_positions(s)),
                    config_size_mismatch);
}

TEST_CASE("received_signal - rotation and noise")
{
    const Jones u{cplx(0.3, -0.2), cplx(1.1, 0.4)};
    const Jones w{cplx(-0.05, 0.02), cplx(0.01, 0.03)};
    CHECK(relative_error(received_signal(u, 0.0, Jones{}), u) < 1e-15);
    CHECK(relative_error(received_signal(Jones{}, 0.7, w), w) < 1e-15);
    for (double beta : {0.1, 1.0, 2.4, -3.0})
        CHECK_THAT((received_signal(u, beta, w) - w).power(), WithinRel(u.power(), 1e-12));
}

TEST_CASE("assemble_full_channel - single unit reduces to a scaled identity")
{
    Scenario s = table1(1, 1);
    s.rotation_angle = 0;
    const LinkGeometry g = link_geometry(s);
    const auto pos = unit_positions(s);
    const ChannelMatrix h = assemble_full_channel(RisPhaseConfig({{0.0, 0.0}}), s, g, pos);
    const double eta = effective_gain(s, g);
    const cplx common = std::exp(cplx(0, -path_phases(s, pos, g)[0]));
    CHECK((h - eta * common * ChannelMatrix::Identity()).norm() < 1e-12 * eta);
}

TEST_CASE("assemble_full_channel - each unit contributes eta * sqrt(2) in Frobenius norm")
{
    std::mt19937_64 rng(10);
    Scenario s = table1(1, 1);
    s.rotation_angle = 0.8;
    const LinkGeometry g = link_geometry(s);
    const double eta = effective_gain(s, g);
    for (int i = 0; i < 20; ++i) {
        const auto cfg = random_config(1, rng);
        CHECK_THAT(assemble_full_channel(cfg, s, g, unit_positions(s)).norm(), WithinRel(eta * std::sqrt(2.0), 1e-12));
    }
}

TEST_CASE("assemble_full_channel - full matrix path equals the simplified path")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> side(1, 8);
    std::uniform_real_distribution<double> angle(-pi, pi);
    std::uniform_real_distribution<double> coord(-60, 60);
    for (int trial = 0; trial < 100; ++trial) {
        Scenario s = table1(side(rng), side(rng));
        s.rotation_angle = angle(rng);
        s.source_position = s.ris_center + vec3(20 + std::abs(coord(rng)), coord(rng), coord(rng) / 3);
        s.receiver_position = s.ris_center + vec3(20 + std::abs(coord(rng)), coord(rng), coord(rng) / 3);
        const LinkGeometry g = link_geometry(s);
        const auto pos = unit_positions(s);
        const LinkBudget b = link_budget(s);
        const RisPhaseConfig cfg = random_config(s.num_units(), rng);

        const Jones full = apply_channel(assemble_full_channel(cfg, s, g, pos), source_signal(s.tx_power));
        const Jones simplified = received_signal(effective_scattered_wave(cfg, b, s), s.rotation_angle, Jones{});
        CHECK(relative_error(full, simplified) <= 1e-10);
    }
}

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

#include <rispolsk/error.hpp>
#include <rispolsk/geometry.hpp>
#include <rispolsk/modem.hpp>
#include <rispolsk/polarization.hpp>

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace rispolsk {

using cplx = std::complex<double>;
using Jones = JonesVector<double>;
using Stokes = StokesVector<double>;
using ChannelMatrix = Eigen::Matrix2cd;

/// Radiation-pattern exponent of a square half-wavelength reflecting unit.
inline constexpr double unit_pattern_exponent = 0.285;

/// Frozen per-run quantities of the cascaded link.
struct LinkBudget {
    double eta = 0.0;         ///< effective gain of the two hops through one unit
    std::vector<double> psi;  ///< effective path phase through each unit (rad)
    double alpha = 0.0;       ///< coherently combined amplitude M * eta * sqrt(p_t)
    double gamma = 0.0;       ///< received SNR alpha^2 / (2 sigma^2)
};

/// Plate-scattering gain of the surface link for one unit.
inline double effective_gain(const Scenario& s, const LinkGeometry& g) {
    if (!(g.r1 * g.r2 > 0.0))
        throw degenerate_geometry("zero link distance");
    const double spread = s.unit_area() * std::sqrt(s.tx_gain * s.rx_gain) / (4.0 * std::numbers::pi * g.r1 * g.r2);
    return spread * std::pow(std::cos(g.zeta1) * std::cos(g.zeta2), unit_pattern_exponent);
}

/// psi_m = g_m . q_1 + g_m . q_2 with g_m taken relative to the RIS center in the local frame.
inline std::vector<double> path_phases(const Scenario& s, std::span<const vec3> positions, const LinkGeometry& g) {
    const RisFrame frame = ris_frame(s.ris_normal);
    const vec3 q1 = wave_vector(g.arrival_elevation, g.arrival_azimuth, s.carrier_wavelength);
    const vec3 q2 = wave_vector(g.departure_elevation, g.departure_azimuth, s.carrier_wavelength);
    std::vector<double> psi;
    psi.reserve(positions.size());
    for (const vec3& p : positions) {
        const vec3 local = frame.to_local(p - s.ris_center);
        psi.push_back(path_phase(local, q1) + path_phase(local, q2));
    }
    return psi;
}

inline double snr_from(double alpha, double noise_power) { return alpha * alpha / (2.0 * noise_power); }

inline LinkBudget link_budget(const Scenario& s) {
    validate(s);
    const LinkGeometry g = link_geometry(s);
    const auto positions = unit_positions(s);
    LinkBudget b;
    b.eta = effective_gain(s, g);
    b.psi = path_phases(s, positions, g);
    b.alpha = static_cast<double>(s.num_units()) * b.eta * std::sqrt(s.tx_power);
    b.gamma = snr_from(b.alpha, s.noise_power);
    return b;
}

/// Circularly-symmetric complex Gaussian pair, each component of total variance sigma2.
template <typename Rng>
Jones noise_sample(double sigma2, Rng& rng) {
    if (sigma2 <= 0.0)
        return {};
    std::normal_distribution<double> n(0.0, std::sqrt(0.5 * sigma2));
    const double vr = n(rng);
    const double vi = n(rng);
    const double hr = n(rng);
    const double hi = n(rng);
    return {{vr, vi}, {hr, hi}};
}

/// Sum of the scattered waves of all units after the surface phase programming.
inline Jones effective_scattered_wave(const RisPhaseConfig& config, const LinkBudget& budget, const Scenario& s) {
    if (config.size() != budget.psi.size())
        throw config_size_mismatch(budget.psi.size(), config.size());
    if (config.size() != s.num_units())
        throw config_size_mismatch(s.num_units(), config.size());

    cplx v{};
    cplx h{};
    for (std::size_t m = 0; m < config.size(); ++m) {
        const cplx common = std::polar(1.0, config[m].phi_h - budget.psi[m]);
        v += common * std::polar(1.0, config[m].delta());
        h += common;
    }
    const double scale = std::sqrt(budget.eta * budget.eta * s.tx_power / 2.0);
    return {scale * v, scale * h};
}

inline Jones received_signal(const Jones& u, double beta, const Jones& noise) {
    return apply_rotation(rotation_matrix(beta), u) + noise;
}

/// Full cascaded matrix sum_m H2_m Phi_m H1_m with both hop gains set to sqrt(eta).
/// Independent of the simplified path; used to cross-check it.
inline ChannelMatrix assemble_full_channel(const RisPhaseConfig& config, const Scenario& s, const LinkGeometry& g,
                                           std::span<const vec3> positions) {
    if (config.size() != positions.size())
        throw config_size_mismatch(positions.size(), config.size());

    const RisFrame frame = ris_frame(s.ris_normal);
    const vec3 q1 = wave_vector(g.arrival_elevation, g.arrival_azimuth, s.carrier_wavelength);
    const vec3 q2 = wave_vector(g.departure_elevation, g.departure_azimuth, s.carrier_wavelength);
    const double rho = std::sqrt(effective_gain(s, g));

    ChannelMatrix a = rotation_matrix(s.rotation_angle).cast<cplx>();
    ChannelMatrix h = ChannelMatrix::Zero();
    for (std::size_t m = 0; m < positions.size(); ++m) {
        const vec3 local = frame.to_local(positions[m] - s.ris_center);
        const ChannelMatrix h1 = rho * std::polar(1.0, -path_phase(local, q1)) * ChannelMatrix::Identity();
        const ChannelMatrix h2 = rho * std::polar(1.0, -path_phase(local, q2)) * a;
        ChannelMatrix phi = ChannelMatrix::Zero();
        phi(0, 0) = std::polar(1.0, config[m].phi_v);
        phi(1, 1) = std::polar(1.0, config[m].phi_h);
        h += h2 * phi * h1;
    }
    return h;
}

/// Unmodulated source signal sqrt(p_t / 2) [1, 1].
inline Jones source_signal(double tx_power) {
    const double a = std::sqrt(tx_power / 2.0);
    return {{a, 0.0}, {a, 0.0}};
}

inline Jones apply_channel(const ChannelMatrix& h, const Jones& x) {
    return {h(0, 0) * x.v + h(0, 1) * x.h, h(1, 0) * x.v + h(1, 1) * x.h};
}

} // namespace rispolsk

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

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace rispolsk {

using vec3 = Eigen::Vector3d;

inline constexpr double speed_of_light = 299792458.0;

/// Far-field link through a planar RIS: endpoints, surface layout and radio parameters.
/// All quantities are linear and SI (W, m, rad).
struct Scenario {
    vec3 source_position{50.0, 0.0, 0.0};
    vec3 receiver_position{50.0, 100.0, 0.0};
    vec3 ris_center{0.0, 50.0, 0.0};
    vec3 ris_normal{1.0, 0.0, 0.0};
    double unit_side = speed_of_light / 3e9 / 2.0;
    std::size_t num_units_rows = 20;
    std::size_t num_units_cols = 20;
    double carrier_wavelength = speed_of_light / 3e9;
    double tx_gain = 1.9952623149688795;   // 3 dBi
    double rx_gain = 1.9952623149688795;   // 3 dBi
    double tx_power = 6.309573444801933e-3; // 8 dBm
    double noise_power = 2.511886431509582e-13; // -96 dBm
    double rotation_angle = std::numbers::pi / 6.0;

    std::size_t num_units() const noexcept { return num_units_rows * num_units_cols; }
    /// Physical area of one reflecting unit (side squared).
    double unit_area() const noexcept { return unit_side * unit_side; }
    double ris_area() const noexcept { return static_cast<double>(num_units()) * unit_area(); }
};

/// Distances and angles of the two hops, expressed in the RIS local frame.
/// zeta is the angle between the RIS normal and the direction towards the endpoint.
/// Elevation and azimuth give the direction of the wave vector of a plane wave
/// reaching the RIS from that endpoint (the source for arrival, the receiver for
/// departure by reciprocity), so g . q is the path-length phase excess of a unit at g.
struct LinkGeometry {
    double r1 = 0.0;
    double r2 = 0.0;
    double zeta1 = 0.0;
    double zeta2 = 0.0;
    double arrival_elevation = 0.0;
    double arrival_azimuth = 0.0;
    double departure_elevation = 0.0;
    double departure_azimuth = 0.0;
};

/// Orthonormal RIS frame. The normal is local x, grid columns run along local y,
/// grid rows along local z.
struct RisFrame {
    vec3 normal;
    vec3 y_axis;
    vec3 z_axis;

    vec3 to_local(const vec3& global) const {
        return {global.dot(normal), global.dot(y_axis), global.dot(z_axis)};
    }
};

inline RisFrame ris_frame(const vec3& normal) {
    // Global z is the preferred "up" so that a vertical surface keeps its rows vertical.
    const vec3 up = std::abs(normal.z()) < 0.999 ? vec3::UnitZ() : vec3::UnitX();
    const vec3 y_axis = up.cross(normal).normalized();
    return {normal, y_axis, normal.cross(y_axis)};
}

namespace detail {

inline void check_link(const Scenario& s, const vec3& endpoint, const char* name) {
    const vec3 d = endpoint - s.ris_center;
    if (d.norm() == 0.0)
        throw validation_error(name, "coincides with ris_center");
    if (d.dot(s.ris_normal) <= 0.0)
        throw validation_error(name, "must lie on the illuminated side of the RIS (cos zeta > 0)");
}

inline void check_finite_vec(const vec3& v, const char* name) {
    if (!v.allFinite())
        throw validation_error(name, "must be finite");
}

} // namespace detail

/// Throws validation_error naming the first offending field.
inline void validate(const Scenario& s) {
    detail::check_finite_vec(s.source_position, "source_position");
    detail::check_finite_vec(s.receiver_position, "receiver_position");
    detail::check_finite_vec(s.ris_center, "ris_center");
    detail::check_finite_vec(s.ris_normal, "ris_normal");
    if (std::abs(s.ris_normal.norm() - 1.0) > 1e-12)
        throw validation_error("ris_normal", "must have unit norm");
    if (!(s.unit_side > 0.0) || !std::isfinite(s.unit_side))
        throw validation_error("unit_side", "must be positive");
    if (s.num_units_rows < 1)
        throw validation_error("num_units_rows", "must be at least 1");
    if (s.num_units_cols < 1)
        throw validation_error("num_units_cols", "must be at least 1");
    if (!(s.carrier_wavelength > 0.0) || !std::isfinite(s.carrier_wavelength))
        throw validation_error("carrier_wavelength", "must be positive");
    if (!(s.tx_gain > 0.0) || !std::isfinite(s.tx_gain))
        throw validation_error("tx_gain", "must be positive");
    if (!(s.rx_gain > 0.0) || !std::isfinite(s.rx_gain))
        throw validation_error("rx_gain", "must be positive");
    // Zero transmit or noise power are accepted: they model the no-signal and noiseless limits.
    if (!(s.tx_power >= 0.0) || !std::isfinite(s.tx_power))
        throw validation_error("tx_power", "must be non-negative");
    if (!(s.noise_power >= 0.0) || !std::isfinite(s.noise_power))
        throw validation_error("noise_power", "must be non-negative");
    if (!std::isfinite(s.rotation_angle))
        throw validation_error("rotation_angle", "must be finite");
    detail::check_link(s, s.source_position, "source_position");
    detail::check_link(s, s.receiver_position, "receiver_position");
}

/// Centers of the RIS units, row-major, in global coordinates.
inline std::vector<vec3> unit_positions(const Scenario& s) {
    const RisFrame frame = ris_frame(s.ris_normal);
    const double half_cols = 0.5 * static_cast<double>(s.num_units_cols - 1);
    const double half_rows = 0.5 * static_cast<double>(s.num_units_rows - 1);

    std::vector<vec3> out;
    out.reserve(s.num_units());
    for (std::size_t r = 0; r < s.num_units_rows; ++r) {
        const double dz = (static_cast<double>(r) - half_rows) * s.unit_side;
        for (std::size_t c = 0; c < s.num_units_cols; ++c) {
            const double dy = (static_cast<double>(c) - half_cols) * s.unit_side;
            out.push_back(s.ris_center + dy * frame.y_axis + dz * frame.z_axis);
        }
    }
    return out;
}

namespace detail {

struct Direction {
    double distance;
    double zeta;
    double elevation;
    double azimuth;
};

inline Direction direction_from_ris(const Scenario& s, const RisFrame& frame, const vec3& endpoint,
                                    const char* name) {
    const vec3 d = endpoint - s.ris_center;
    const double r = d.norm();
    if (r == 0.0)
        throw degenerate_geometry(std::string(name) + " coincides with ris_center");
    const vec3 l = frame.to_local(d) / r;
    const vec3 k = -l; // travels from the endpoint towards the surface
    return {r, std::atan2(std::hypot(l.y(), l.z()), l.x()), std::atan2(k.z(), std::hypot(k.x(), k.y())),
            std::atan2(k.y(), k.x())};
}

} // namespace detail

inline LinkGeometry link_geometry(const Scenario& s) {
    const RisFrame frame = ris_frame(s.ris_normal);
    const auto in = detail::direction_from_ris(s, frame, s.source_position, "source_position");
    const auto out = detail::direction_from_ris(s, frame, s.receiver_position, "receiver_position");
    return {in.distance, out.distance, in.zeta, out.zeta, in.elevation, in.azimuth, out.elevation, out.azimuth};
}

/// Plane-wave vector (rad/m) for a direction given in the RIS local frame.
template <typename Real>
Eigen::Matrix<Real, 3, 1> wave_vector(Real elevation, Real azimuth, Real wavelength) {
    const Real k = Real(2) * std::numbers::pi_v<Real> / wavelength;
    return {k * std::cos(azimuth) * std::cos(elevation), k * std::sin(azimuth) * std::cos(elevation),
            k * std::sin(elevation)};
}

/// Plane-wave phase of a unit at local offset `g`; not wrapped.
template <typename Real>
Real path_phase(const Eigen::Matrix<Real, 3, 1>& g, const Eigen::Matrix<Real, 3, 1>& q) {
    return g.dot(q);
}

} // namespace rispolsk

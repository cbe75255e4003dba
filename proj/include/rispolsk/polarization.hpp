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

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>

namespace rispolsk {

using bit_t = std::uint8_t;

/// Dual-polarized narrowband sample, ordered (vertical, horizontal).
template <std::floating_point Real>
struct JonesVector {
    std::complex<Real> v{};
    std::complex<Real> h{};

    Real power() const noexcept { return std::norm(v) + std::norm(h); }

    JonesVector operator+(const JonesVector& o) const noexcept { return {v + o.v, h + o.h}; }
    JonesVector operator-(const JonesVector& o) const noexcept { return {v - o.v, h - o.h}; }
    friend JonesVector operator*(std::complex<Real> c, const JonesVector& e) noexcept { return {c * e.v, c * e.h}; }
    friend JonesVector operator*(Real c, const JonesVector& e) noexcept { return {c * e.v, c * e.h}; }
    bool operator==(const JonesVector&) const = default;
};

/// Stokes parameters. (s1, s2, s3) locates the state of polarization in Poincare space.
template <std::floating_point Real>
struct StokesVector {
    Real s0{};
    Real s1{};
    Real s2{};
    Real s3{};

    Eigen::Matrix<Real, 3, 1> sub() const { return {s1, s2, s3}; }
};

template <std::floating_point Real>
using Rotation2 = Eigen::Matrix<Real, 2, 2>;

// Sign conventions follow the horizontal-first definition:
//   s1 = |h|^2 - |v|^2,  s2 = 2 Re(h v*),  s3 = -2 Im(h v*)
// so slant +45 deg sits at +s2 and e = (e^{j dphi}, 1) traces the s2-s3 circle.
template <std::floating_point Real>
StokesVector<Real> stokes(const JonesVector<Real>& e) {
    const Real pv = std::norm(e.v);
    const Real ph = std::norm(e.h);
    const std::complex<Real> c = e.h * std::conj(e.v);
    return {ph + pv, ph - pv, Real(2) * c.real(), Real(-2) * c.imag()};
}

/// SoP rotation of the receiver, acting on (v, h).
template <std::floating_point Real>
Rotation2<Real> rotation_matrix(Real beta) {
    const Real c = std::cos(beta);
    const Real s = std::sin(beta);
    Rotation2<Real> a;
    a << c, s, -s, c;
    return a;
}

template <std::floating_point Real>
JonesVector<Real> apply_rotation(const Rotation2<Real>& a, const JonesVector<Real>& e) {
    return {a(0, 0) * e.v + a(0, 1) * e.h, a(1, 0) * e.v + a(1, 1) * e.h};
}

/// Non-coherent differential decision on two successive Stokes sub-vectors.
/// Non-negative inner product (same SoP) decides 0; a tie decides 0.
template <std::floating_point Real>
bit_t dpolsk_detect(const Eigen::Matrix<Real, 3, 1>& current, const Eigen::Matrix<Real, 3, 1>& previous) {
    return current.dot(previous) >= Real(0) ? bit_t{0} : bit_t{1};
}

/// Coherent decision: undo the estimated rotation, then pick the nearer of the
/// slant +45 (bit 1) and slant -45 (bit 0) Poincare points, i.e. the sign of s2.
template <std::floating_point Real>
bit_t cpolsk_detect(const JonesVector<Real>& y, Real beta_hat) {
    const JonesVector<Real> derotated = apply_rotation<Real>(rotation_matrix(beta_hat).transpose(), y);
    const std::complex<Real> c = derotated.h * std::conj(derotated.v);
    return c.real() >= Real(0) ? bit_t{1} : bit_t{0};
}

} // namespace rispolsk

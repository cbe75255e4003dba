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
#include <rispolsk/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <string>

namespace rispolsk {

namespace detail {

template <std::floating_point Real>
void check_snr(Real gamma, const char* who) {
    if (!(gamma >= Real(0)) || std::isinf(gamma))
        throw domain_error(std::string(who) + ": SNR must be finite and non-negative");
}

} // namespace detail

/// Coherent PolSK with perfect rotation compensation: 0.5 exp(-gamma).
template <std::floating_point Real>
Real cpolsk_ber(Real gamma) {
    detail::check_snr(gamma, "cpolsk_ber");
    return Real(0.5) * std::exp(-gamma);
}

/// Arc-cotangent with range (0, pi), continuous through x = 0.
template <std::floating_point Real>
Real acot(Real x) {
    return std::numbers::pi_v<Real> / Real(2) - std::atan(x);
}

/// Density of the projected decision variable t over the real line.
template <std::floating_point Real>
Real f_eta(Real t, Real gamma) {
    detail::check_snr(gamma, "f_eta");
    if (std::isinf(t))
        return Real(0);
    const Real root = std::hypot(Real(1), t); // sqrt(1 + t^2) without overflow
    const Real ratio = t / root;
    return Real(0.5) / (root * root * root) * std::exp(-gamma * (Real(1) - ratio)) *
           (Real(1) + gamma * (Real(1) + ratio));
}

/// CDF of the angular decision variable on [0, pi].
template <std::floating_point Real>
Real F_theta(Real theta, Real gamma) {
    detail::check_snr(gamma, "F_theta");
    if (!(theta >= Real(0) && theta <= std::numbers::pi_v<Real>))
        throw domain_error("F_theta: angle outside [0, pi]");
    const Real c = std::cos(theta);
    return Real(1) - Real(0.5) * std::exp(-gamma * (Real(1) - c)) * (Real(1) + c);
}

/// Differential PolSK bit-error probability: a double integral over the
/// phase delta in [0, 2pi] and t over the real line, split at t = 0.
///
/// t = tan(xi) maps the real line onto (-pi/2, pi/2); the Jacobian sec^2(xi)
/// is folded into the integrand so both halves are finite-range integrals.
/// The inner integral is solved to a tenth of the outer tolerances.
template <std::floating_point Real>
Real dpolsk_ber(Real gamma, const QuadratureSpec& spec = {}) {
    detail::check_snr(gamma, "dpolsk_ber");
    validate(spec);

    constexpr Real pi = std::numbers::pi_v<Real>;
    QuadratureSpec inner = spec;
    inner.relative_tolerance *= 0.1;
    inner.absolute_tolerance *= 0.1;

    const auto inner_integral = [&](Real delta) {
        const Real cd = std::cos(delta);
        const auto integrand = [&](Real xi) {
            const Real t = std::tan(xi);
            const Real c = std::cos(xi);
            const Real weight = f_eta(t, gamma) / (c * c);
            const Real cdf = F_theta(acot(cd / t), gamma);
            return xi > Real(0) ? weight * (Real(1) - cdf) : weight * cdf;
        };
        return integrate<Real>(integrand, std::vector<Real>{-pi / 2, Real(0), pi / 2}, inner).value;
    };

    // cos(delta) changes sign at pi/2 and 3pi/2, where the inner integral has kinks.
    const auto outer = integrate<Real>(inner_integral,
                                       std::vector<Real>{Real(0), pi / 2, pi, 3 * pi / 2, 2 * pi}, spec);
    return std::clamp(outer.value / (2 * pi), Real(0), Real(0.5));
}

} // namespace rispolsk

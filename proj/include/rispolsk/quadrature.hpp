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

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <queue>
#include <sstream>
#include <vector>

namespace rispolsk {

/// Accuracy contract for the adaptive integrator. Converged means
/// error_estimate <= max(absolute_tolerance, relative_tolerance * |value|).
struct QuadratureSpec {
    double relative_tolerance = 1e-9;
    double absolute_tolerance = 1e-12;
    int max_depth = 40;            ///< bisections allowed on any one sub-interval
    std::size_t max_intervals = 20000;
};

inline void validate(const QuadratureSpec& q) {
    if (!(q.relative_tolerance > 0.0))
        throw validation_error("relative_tolerance", "must be positive");
    if (!(q.absolute_tolerance > 0.0))
        throw validation_error("absolute_tolerance", "must be positive");
    if (q.max_depth < 1)
        throw validation_error("max_depth", "must be at least 1");
    if (q.max_intervals < 1)
        throw validation_error("max_intervals", "must be at least 1");
}

template <std::floating_point Real>
struct QuadratureResult {
    Real value{};
    Real error_estimate{};
    std::size_t evaluations = 0;
    std::size_t intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae from the positive half).
inline constexpr std::array<double, 8> kronrod_nodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kronrod_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> gauss_weights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::floating_point Real>
struct Segment {
    Real a, b, value, error;
    int depth;

    bool operator<(const Segment& o) const { return error < o.error; }
};

template <std::floating_point Real, typename F>
Segment<Real> gauss_kronrod_15(F& f, Real a, Real b, int depth) {
    const Real center = Real(0.5) * (a + b);
    const Real half = Real(0.5) * (b - a);

    const Real fc = f(center);
    Real kronrod = fc * Real(kronrod_weights[7]);
    Real gauss = fc * Real(gauss_weights[3]);
    for (std::size_t i = 0; i < 7; ++i) {
        const Real dx = half * Real(kronrod_nodes[i]);
        const Real pair = f(center - dx) + f(center + dx);
        kronrod += Real(kronrod_weights[i]) * pair;
        if (i % 2 == 1)
            gauss += Real(gauss_weights[i / 2]) * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), depth};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over consecutive intervals
/// [b0, b1], [b1, b2], ... Breakpoints should sit on kinks or discontinuities.
/// The worst sub-interval is bisected until the total error estimate meets the
/// spec. Throws convergence_failure when it cannot.
template <std::floating_point Real, typename F>
QuadratureResult<Real> integrate(F&& f, const std::vector<Real>& breakpoints, const QuadratureSpec& spec = {}) {
    validate(spec);
    if (breakpoints.size() < 2)
        throw domain_error("integrate: need at least two breakpoints");

    std::priority_queue<detail::Segment<Real>> active;
    std::vector<detail::Segment<Real>> exhausted; // hit max_depth, kept as-is
    Real value = 0;
    Real error = 0;
    std::size_t evaluations = 0;

    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] <= breakpoints[i + 1]))
            throw domain_error("integrate: breakpoints must be nondecreasing");
        const auto seg = detail::gauss_kronrod_15<Real>(f, breakpoints[i], breakpoints[i + 1], 0);
        evaluations += 15;
        value += seg.value;
        error += seg.error;
        active.push(seg);
    }

    const auto converged = [&] {
        return error <= std::max(Real(spec.absolute_tolerance), Real(spec.relative_tolerance) * std::abs(value));
    };

    while (!converged()) {
        if (active.empty() || active.size() + exhausted.size() >= spec.max_intervals) {
            std::ostringstream msg;
            msg << "adaptive quadrature did not converge: estimate " << value << ", error estimate " << error
                << " after " << evaluations << " evaluations";
            throw convergence_failure(msg.str(), static_cast<double>(value), static_cast<double>(error));
        }
        const auto worst = active.top();
        active.pop();
        if (worst.depth >= spec.max_depth) {
            exhausted.push_back(worst);
            continue;
        }
        const Real mid = Real(0.5) * (worst.a + worst.b);
        const auto left = detail::gauss_kronrod_15<Real>(f, worst.a, mid, worst.depth + 1);
        const auto right = detail::gauss_kronrod_15<Real>(f, mid, worst.b, worst.depth + 1);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }

    // Re-sum to shed the rounding accumulated by the running updates.
    Real total = 0;
    Real total_error = 0;
    std::size_t count = exhausted.size() + active.size();
    for (const auto& s : exhausted) {
        total += s.value;
        total_error += s.error;
    }
    while (!active.empty()) {
        total += active.top().value;
        total_error += active.top().error;
        active.pop();
    }
    return {total, total_error, evaluations, count};
}

template <std::floating_point Real, typename F>
QuadratureResult<Real> integrate(F&& f, Real a, Real b, const QuadratureSpec& spec = {}) {
    return integrate<Real>(std::forward<F>(f), std::vector<Real>{a, b}, spec);
}

} // namespace rispolsk

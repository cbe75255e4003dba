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

#include <rispolsk/channel.hpp>
#include <rispolsk/error.hpp>
#include <rispolsk/geometry.hpp>
#include <rispolsk/modem.hpp>
#include <rispolsk/polarization.hpp>
#include <rispolsk/random.hpp>
#include <rispolsk/theory.hpp>

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace rispolsk {

enum class Scheme { dpolsk, cpolsk };

inline std::string_view to_string(Scheme s) { return s == Scheme::dpolsk ? "dpolsk" : "cpolsk"; }

/// How the receiver's rotation-angle estimation error is drawn.
enum class EstimationErrorMode {
    per_slot, ///< fresh error every scattering slot
    per_run,  ///< one error held for the whole run
};

struct RunSpec {
    Scheme scheme = Scheme::dpolsk;
    Scenario scenario{};
    std::uint64_t num_bits = 100000;
    std::uint64_t master_seed = 1;
    double sigma_e = 0.0; ///< std-dev of the rotation estimate error (rad), coherent scheme only
    bit_t d_init = 1;
    EstimationErrorMode estimation_error = EstimationErrorMode::per_slot;
    /// Draw the noise before the receiver rotation (w = A w'). Makes differential
    /// results identical across rotation angles, not just equal in distribution.
    bool noise_in_channel_frame = false;
    unsigned workers = 1; ///< 0 selects hardware concurrency
};

/// One point of a BER curve.
struct BerRecord {
    Scheme scheme = Scheme::dpolsk;
    double area_m2 = 0.0;
    std::size_t num_units = 0;
    double gamma_linear = 0.0;
    double gamma_db = 0.0;
    double sigma_e = 0.0;
    double ber_simulated = 0.0;
    std::uint64_t errors_count = 0;
    std::uint64_t trials = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double ber_theory = 0.0;
    std::uint64_t seed = 0;
};

/// Wilson score interval for a binomial proportion.
inline std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t trials, double confidence = 0.95) {
    if (trials == 0 || errors > trials)
        throw domain_error("wilson_interval: need 0 <= errors <= trials and trials >= 1");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw domain_error("wilson_interval: confidence must lie in (0, 1)");

    const double z = boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + 0.5 * confidence);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    const double low = errors == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = errors == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

/// True when `errors` lies within `nsigma` binomial standard deviations of trials * p.
inline bool within_binomial_band(std::uint64_t errors, std::uint64_t trials, double p, double nsigma = 3.0) {
    const double n = static_cast<double>(trials);
    const double sd = std::sqrt(n * p * (1.0 - p));
    return std::abs(static_cast<double>(errors) - n * p) <= nsigma * sd;
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }

/// Copy of `base` whose noise power yields the requested linear SNR.
/// gamma = 0 is realised by switching the transmitter off.
inline Scenario with_target_snr(Scenario base, double gamma) {
    if (!(gamma >= 0.0) || std::isinf(gamma))
        throw domain_error("with_target_snr: SNR must be finite and non-negative");
    if (gamma == 0.0) {
        base.tx_power = 0.0;
        return base;
    }
    const LinkBudget b = link_budget(base);
    if (!(b.alpha > 0.0))
        throw domain_error("with_target_snr: zero signal amplitude");
    base.noise_power = b.alpha * b.alpha / (2.0 * gamma);
    return base;
}

/// Near-square grid with exactly `units` elements: rows is the largest divisor not above sqrt(units).
inline std::pair<std::size_t, std::size_t> grid_shape(std::size_t units) {
    std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(units)));
    while (rows > 1 && (rows * rows > units || units % rows != 0))
        --rows;
    rows = std::max<std::size_t>(rows, 1);
    return {rows, units / rows};
}

namespace detail {

inline bit_t draw_bit(std::uint64_t seed, std::uint64_t slot) {
    auto g = substream(seed, slot, StreamPurpose::bit);
    return static_cast<bit_t>(g() >> 63);
}

/// Slot-invariant part of a run: channel, the two modulated waves, and the receiver rotation.
struct LinkState {
    LinkBudget budget;
    std::array<Jones, 2> wave; ///< effective scattered wave for symbol 0 and 1
    Rotation2<double> rotation;
    double noise_power;
    bool noise_in_channel_frame;

    explicit LinkState(const RunSpec& spec)
        : budget(link_budget(spec.scenario)),
          rotation(rotation_matrix(spec.scenario.rotation_angle)),
          noise_power(spec.scenario.noise_power),
          noise_in_channel_frame(spec.noise_in_channel_frame) {
        for (bit_t s : {bit_t{0}, bit_t{1}})
            wave[s] = effective_scattered_wave(dpolsk_slot_config(s, budget.psi), budget, spec.scenario);
    }

    Jones receive(bit_t symbol, std::uint64_t seed, std::uint64_t slot) const {
        auto g = substream(seed, slot, StreamPurpose::noise);
        Jones w = noise_sample(noise_power, g);
        if (noise_in_channel_frame)
            w = apply_rotation(rotation, w);
        return apply_rotation(rotation, wave[symbol]) + w;
    }
};

struct Chunk {
    std::uint64_t first; ///< first data slot (1-based)
    std::uint64_t last;  ///< last data slot, inclusive
};

inline std::vector<Chunk> partition(std::uint64_t num_bits, unsigned workers) {
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t n = std::min<std::uint64_t>(workers, num_bits);
    std::vector<Chunk> chunks;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t first = 1 + num_bits * i / n;
        const std::uint64_t last = num_bits * (i + 1) / n;
        chunks.push_back({first, last});
    }
    return chunks;
}

template <typename Fn>
void parallel_for_each(std::size_t count, Fn&& fn) {
    if (count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        threads.emplace_back([&fn, i] { fn(i); });
}

inline void validate_run(const RunSpec& spec) {
    validate(spec.scenario);
    if (spec.num_bits < 1)
        throw validation_error("num_bits", "must be at least 1");
    if (!(spec.sigma_e >= 0.0) || !std::isfinite(spec.sigma_e))
        throw validation_error("sigma_e", "must be finite and non-negative");
    if (spec.d_init > 1)
        throw validation_error("d_init", "must be 0 or 1");
}

inline BerRecord make_record(const RunSpec& spec, const LinkBudget& budget, std::uint64_t errors, double theory) {
    BerRecord r;
    r.scheme = spec.scheme;
    r.area_m2 = spec.scenario.ris_area();
    r.num_units = spec.scenario.num_units();
    r.gamma_linear = budget.gamma;
    r.gamma_db = to_db(budget.gamma);
    r.sigma_e = spec.sigma_e;
    r.errors_count = errors;
    r.trials = spec.num_bits;
    r.ber_simulated = static_cast<double>(errors) / static_cast<double>(spec.num_bits);
    std::tie(r.ci_low, r.ci_high) = wilson_interval(errors, spec.num_bits);
    r.ber_theory = theory;
    r.seed = spec.master_seed;
    return r;
}

inline double theory_for(Scheme scheme, double gamma, const QuadratureSpec& q) {
    if (std::isinf(gamma))
        return 0.0;
    return scheme == Scheme::dpolsk ? dpolsk_ber(gamma, q) : cpolsk_ber(gamma);
}

} // namespace detail

/// Differential PolSK over the modelled link. Slot 0 is a pilot carrying d_init;
/// data bit k (1..num_bits) rides slot k and is decided from slots k and k-1.
inline BerRecord run_dpolsk(const RunSpec& spec, const QuadratureSpec& quad = {}) {
    detail::validate_run(spec);
    if (spec.scheme != Scheme::dpolsk)
        throw validation_error("scheme", "run_dpolsk needs the dpolsk scheme");

    const detail::LinkState link(spec);
    const auto chunks = detail::partition(spec.num_bits, spec.workers);
    const std::uint64_t seed = spec.master_seed;

    // The encoded bit entering each chunk is a prefix XOR of all earlier data bits.
    std::vector<bit_t> parity(chunks.size(), 0);
    detail::parallel_for_each(chunks.size(), [&](std::size_t c) {
        bit_t p = 0;
        for (std::uint64_t k = chunks[c].first; k <= chunks[c].last; ++k)
            p ^= detail::draw_bit(seed, k);
        parity[c] = p;
    });
    std::vector<bit_t> entry(chunks.size(), spec.d_init);
    for (std::size_t c = 1; c < chunks.size(); ++c)
        entry[c] = entry[c - 1] ^ parity[c - 1];

    std::vector<std::uint64_t> errors(chunks.size(), 0);
    detail::parallel_for_each(chunks.size(), [&](std::size_t c) {
        DifferentialState state(entry[c]);
        auto previous = stokes(link.receive(state.d_prev(), seed, chunks[c].first - 1)).sub();
        std::uint64_t count = 0;
        for (std::uint64_t k = chunks[c].first; k <= chunks[c].last; ++k) {
            const bit_t b = detail::draw_bit(seed, k);
            const auto current = stokes(link.receive(state.encode(b), seed, k)).sub();
            count += dpolsk_detect<double>(current, previous) != b;
            previous = current;
        }
        errors[c] = count;
    });

    std::uint64_t total = 0;
    for (auto e : errors)
        total += e;
    return detail::make_record(spec, link.budget, total, detail::theory_for(spec.scheme, link.budget.gamma, quad));
}

/// Coherent PolSK benchmark: raw bits select the SoP; the receiver de-rotates
/// with beta + epsilon, epsilon ~ N(0, sigma_e^2).
inline BerRecord run_cpolsk(const RunSpec& spec, const QuadratureSpec& quad = {}) {
    detail::validate_run(spec);
    if (spec.scheme != Scheme::cpolsk)
        throw validation_error("scheme", "run_cpolsk needs the cpolsk scheme");

    const detail::LinkState link(spec);
    const auto chunks = detail::partition(spec.num_bits, spec.workers);
    const std::uint64_t seed = spec.master_seed;
    const double beta = spec.scenario.rotation_angle;

    const auto estimation_error = [&](std::uint64_t slot) {
        if (spec.sigma_e == 0.0)
            return 0.0;
        const std::uint64_t key = spec.estimation_error == EstimationErrorMode::per_slot ? slot : 0;
        auto g = substream(seed, key, StreamPurpose::estimation_error);
        return std::normal_distribution<double>(0.0, spec.sigma_e)(g);
    };

    std::vector<std::uint64_t> errors(chunks.size(), 0);
    detail::parallel_for_each(chunks.size(), [&](std::size_t c) {
        std::uint64_t count = 0;
        for (std::uint64_t k = chunks[c].first; k <= chunks[c].last; ++k) {
            const bit_t b = detail::draw_bit(seed, k);
            const Jones y = link.receive(b, seed, k);
            count += cpolsk_detect(y, beta + estimation_error(k)) != b;
        }
        errors[c] = count;
    });

    std::uint64_t total = 0;
    for (auto e : errors)
        total += e;
    return detail::make_record(spec, link.budget, total, detail::theory_for(spec.scheme, link.budget.gamma, quad));
}

inline BerRecord run(const RunSpec& spec, const QuadratureSpec& quad = {}) {
    return spec.scheme == Scheme::dpolsk ? run_dpolsk(spec, quad) : run_cpolsk(spec, quad);
}

/// Scenario resized to round(area / unit_area) units on a near-square grid.
inline Scenario scenario_for_area(Scenario base, double area) {
    if (!(area > 0.0) || !std::isfinite(area))
        throw area_too_small("RIS area must be positive");
    const double units = std::round(area / base.unit_area());
    if (units < 1.0)
        throw area_too_small("area " + std::to_string(area) + " m^2 holds no reflecting unit");
    std::tie(base.num_units_rows, base.num_units_cols) = grid_shape(static_cast<std::size_t>(units));
    return base;
}

/// One record per area, using the scheme and settings of `base`.
inline std::vector<BerRecord> sweep_area(std::span<const double> areas, const RunSpec& base,
                                         const QuadratureSpec& quad = {}) {
    std::vector<Scenario> scenarios;
    scenarios.reserve(areas.size());
    for (double a : areas)
        scenarios.push_back(scenario_for_area(base.scenario, a));

    std::vector<BerRecord> out;
    out.reserve(areas.size());
    for (const auto& s : scenarios) {
        RunSpec spec = base;
        spec.scenario = s;
        out.push_back(run(spec, quad));
    }
    return out;
}

} // namespace rispolsk

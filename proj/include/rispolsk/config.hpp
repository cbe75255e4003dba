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
#include <rispolsk/simulation.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

/*
Configuration document (JSON). Every block and key is optional; missing values
fall back to the reference scenario (3 GHz, 3 dBi antennas, 8 dBm source,
-96 dBm noise, half-wavelength units, 20 x 20 surface, beta = 30 deg).

{
  "scenario": {
    "source_position_m":   [50, 0, 0],
    "receiver_position_m": [50, 100, 0],
    "ris_center_m":        [0, 50, 0],
    "ris_normal":          [1, 0, 0],
    "carrier_frequency_hz": 3e9,        | "carrier_wavelength_m"
    "unit_side_m": 0.05,                 (default: half wavelength)
    "num_units_rows": 20, "num_units_cols": 20,   | "num_units"
    "tx_gain_dbi": 3,                    | "tx_gain_linear"
    "rx_gain_dbi": 3,                    | "rx_gain_linear"
    "tx_power_dbm": 8,                   | "tx_power_w"
    "noise_power_dbm": -96,              | "noise_power_w"
    "rotation_angle_deg": 30             | "rotation_angle_rad"
  },
  "run":    { "schemes": ["dpolsk", "cpolsk"], "num_bits": 100000, "seed": 1,
              "sigma_e_deg": [0], "d_init": 1, "estimation_error": "per_slot",
              "workers": 1 },
  "sweep":  { "areas_m2": [...], "gamma_db": [...] },
  "output": { "csv_path": "out.csv", "precision": 12 }
}

Unit conversions happen here only: x dB -> 10^(x/10), x dBm -> 10^((x-30)/10) W.
*/

namespace rispolsk {

struct RunBlock {
    std::vector<Scheme> schemes{Scheme::dpolsk, Scheme::cpolsk};
    std::uint64_t num_bits = 100000;
    std::uint64_t seed = 1;
    std::vector<double> sigma_e_deg{0.0};
    bit_t d_init = 1;
    EstimationErrorMode estimation_error = EstimationErrorMode::per_slot;
    unsigned workers = 1;
};

struct SweepBlock {
    std::vector<double> areas_m2;
    std::vector<double> gamma_db;
};

struct OutputBlock {
    std::string csv_path; ///< empty means standard output
    int precision = 12;   ///< significant digits of every float in the CSV
};

struct ConfigFile {
    Scenario scenario{};
    RunBlock run{};
    SweepBlock sweep{};
    OutputBlock output{};
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline Scheme parse_scheme(const std::string& name) {
    if (name == "dpolsk")
        return Scheme::dpolsk;
    if (name == "cpolsk")
        return Scheme::cpolsk;
    throw validation_error("scheme", "unknown scheme '" + name + "' (expected dpolsk or cpolsk)");
}

/// "dpolsk", "cpolsk" or "both".
inline std::vector<Scheme> parse_scheme_set(const std::string& name) {
    if (name == "both")
        return {Scheme::dpolsk, Scheme::cpolsk};
    return {parse_scheme(name)};
}

namespace detail {

using json = nlohmann::json;

inline void reject_unknown(const json& block, const std::string& where, std::initializer_list<const char*> known) {
    const std::set<std::string> names(known.begin(), known.end());
    for (const auto& [key, value] : block.items())
        if (!names.contains(key))
            throw validation_error(where + "." + key, "unknown key");
}

inline const json* find(const json& block, const char* key) {
    const auto it = block.find(key);
    return it == block.end() ? nullptr : &*it;
}

inline double number(const json& v, const std::string& field) {
    if (!v.is_number())
        throw validation_error(field, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw validation_error(field, "must be finite");
    return x;
}

inline std::uint64_t count(const json& v, const std::string& field) {
    if (v.is_number_unsigned())
        return v.get<std::uint64_t>();
    if (v.is_number_integer())
        throw validation_error(field, "must be non-negative");
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (x < 0.0)
            throw validation_error(field, "must be non-negative");
        if (x != std::floor(x) || x > 1.8e19)
            throw validation_error(field, "must be an integer");
        return static_cast<std::uint64_t>(x);
    }
    throw validation_error(field, "must be an integer");
}

inline vec3 vector3(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 3)
        throw validation_error(field, "must be an array of three numbers");
    return {number(v[0], field), number(v[1], field), number(v[2], field)};
}

inline std::vector<double> numbers(const json& v, const std::string& field) {
    if (!v.is_array())
        throw validation_error(field, "must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v)
        out.push_back(number(x, field));
    return out;
}

/// At most one of two alternative keys; returns the one present (or nullptr).
inline const json* either(const json& block, const char* a, const char* b, const std::string& where) {
    const json* x = find(block, a);
    const json* y = find(block, b);
    if (x && y)
        throw validation_error(where + "." + a, std::string("conflicts with ") + b);
    return x ? x : y;
}

inline void parse_scenario(const json& j, Scenario& s) {
    const std::string w = "scenario";
    if (!j.is_object())
        throw validation_error(w, "must be an object");
    reject_unknown(j, w,
                   {"source_position_m", "receiver_position_m", "ris_center_m", "ris_normal", "carrier_frequency_hz",
                    "carrier_wavelength_m", "unit_side_m", "num_units_rows", "num_units_cols", "num_units",
                    "tx_gain_dbi", "tx_gain_linear", "rx_gain_dbi", "rx_gain_linear", "tx_power_dbm", "tx_power_w",
                    "noise_power_dbm", "noise_power_w", "rotation_angle_deg", "rotation_angle_rad"});

    if (auto v = find(j, "source_position_m"))
        s.source_position = vector3(*v, w + ".source_position_m");
    if (auto v = find(j, "receiver_position_m"))
        s.receiver_position = vector3(*v, w + ".receiver_position_m");
    if (auto v = find(j, "ris_center_m"))
        s.ris_center = vector3(*v, w + ".ris_center_m");
    if (auto v = find(j, "ris_normal")) {
        const vec3 n = vector3(*v, w + ".ris_normal");
        if (n.norm() == 0.0)
            throw validation_error(w + ".ris_normal", "must be non-zero");
        s.ris_normal = n.normalized();
    }

    if (find(j, "carrier_frequency_hz") && find(j, "carrier_wavelength_m"))
        throw validation_error(w + ".carrier_frequency_hz", "conflicts with carrier_wavelength_m");
    if (auto v = find(j, "carrier_frequency_hz")) {
        const double f = number(*v, w + ".carrier_frequency_hz");
        if (!(f > 0.0))
            throw validation_error(w + ".carrier_frequency_hz", "must be positive");
        s.carrier_wavelength = speed_of_light / f;
    }
    if (auto v = find(j, "carrier_wavelength_m"))
        s.carrier_wavelength = number(*v, w + ".carrier_wavelength_m");
    s.unit_side = s.carrier_wavelength / 2.0;
    if (auto v = find(j, "unit_side_m"))
        s.unit_side = number(*v, w + ".unit_side_m");

    if (auto v = find(j, "num_units")) {
        if (find(j, "num_units_rows") || find(j, "num_units_cols"))
            throw validation_error(w + ".num_units", "conflicts with num_units_rows/num_units_cols");
        const auto m = count(*v, w + ".num_units");
        if (m < 1)
            throw validation_error(w + ".num_units", "must be at least 1");
        std::tie(s.num_units_rows, s.num_units_cols) = grid_shape(m);
    }
    if (auto v = find(j, "num_units_rows"))
        s.num_units_rows = count(*v, w + ".num_units_rows");
    if (auto v = find(j, "num_units_cols"))
        s.num_units_cols = count(*v, w + ".num_units_cols");

    if (auto v = either(j, "tx_gain_dbi", "tx_gain_linear", w))
        s.tx_gain = v == find(j, "tx_gain_dbi") ? db_to_linear(number(*v, w + ".tx_gain_dbi"))
                                                : number(*v, w + ".tx_gain_linear");
    if (auto v = either(j, "rx_gain_dbi", "rx_gain_linear", w))
        s.rx_gain = v == find(j, "rx_gain_dbi") ? db_to_linear(number(*v, w + ".rx_gain_dbi"))
                                                : number(*v, w + ".rx_gain_linear");
    if (auto v = either(j, "tx_power_dbm", "tx_power_w", w))
        s.tx_power = v == find(j, "tx_power_dbm") ? dbm_to_watts(number(*v, w + ".tx_power_dbm"))
                                                  : number(*v, w + ".tx_power_w");
    if (auto v = either(j, "noise_power_dbm", "noise_power_w", w))
        s.noise_power = v == find(j, "noise_power_dbm") ? dbm_to_watts(number(*v, w + ".noise_power_dbm"))
                                                        : number(*v, w + ".noise_power_w");
    if (auto v = either(j, "rotation_angle_deg", "rotation_angle_rad", w))
        s.rotation_angle = v == find(j, "rotation_angle_deg") ? deg_to_rad(number(*v, w + ".rotation_angle_deg"))
                                                              : number(*v, w + ".rotation_angle_rad");
}

inline void parse_run(const json& j, RunBlock& r) {
    const std::string w = "run";
    if (!j.is_object())
        throw validation_error(w, "must be an object");
    reject_unknown(j, w, {"schemes", "num_bits", "seed", "sigma_e_deg", "d_init", "estimation_error", "workers"});

    if (auto v = find(j, "schemes")) {
        if (v->is_string()) {
            r.schemes = parse_scheme_set(v->get<std::string>());
        } else if (v->is_array() && !v->empty()) {
            r.schemes.clear();
            for (const auto& x : *v) {
                if (!x.is_string())
                    throw validation_error(w + ".schemes", "entries must be strings");
                r.schemes.push_back(parse_scheme(x.get<std::string>()));
            }
        } else {
            throw validation_error(w + ".schemes", "must be a scheme name or a non-empty array of names");
        }
    }
    if (auto v = find(j, "num_bits")) {
        if (v->is_number_integer() && !v->is_number_unsigned())
            throw validation_error("num_bits", "must be a positive integer");
        r.num_bits = count(*v, "num_bits");
    }
    if (auto v = find(j, "seed"))
        r.seed = count(*v, w + ".seed");
    if (auto v = find(j, "sigma_e_deg")) {
        r.sigma_e_deg = v->is_array() ? numbers(*v, w + ".sigma_e_deg")
                                      : std::vector<double>{number(*v, w + ".sigma_e_deg")};
        for (double x : r.sigma_e_deg)
            if (x < 0.0)
                throw validation_error(w + ".sigma_e_deg", "must be non-negative");
    }
    if (auto v = find(j, "d_init")) {
        const auto d = count(*v, w + ".d_init");
        if (d > 1)
            throw validation_error(w + ".d_init", "must be 0 or 1");
        r.d_init = static_cast<bit_t>(d);
    }
    if (auto v = find(j, "estimation_error")) {
        const std::string mode = v->is_string() ? v->get<std::string>() : "";
        if (mode == "per_slot")
            r.estimation_error = EstimationErrorMode::per_slot;
        else if (mode == "per_run")
            r.estimation_error = EstimationErrorMode::per_run;
        else
            throw validation_error(w + ".estimation_error", "must be \"per_slot\" or \"per_run\"");
    }
    if (auto v = find(j, "workers"))
        r.workers = static_cast<unsigned>(count(*v, w + ".workers"));
}

inline void parse_sweep(const json& j, SweepBlock& s) {
    const std::string w = "sweep";
    if (!j.is_object())
        throw validation_error(w, "must be an object");
    reject_unknown(j, w, {"areas_m2", "gamma_db"});
    if (auto v = find(j, "areas_m2"))
        s.areas_m2 = numbers(*v, w + ".areas_m2");
    if (auto v = find(j, "gamma_db"))
        s.gamma_db = numbers(*v, w + ".gamma_db");
}

inline void parse_output(const json& j, OutputBlock& o) {
    const std::string w = "output";
    if (!j.is_object())
        throw validation_error(w, "must be an object");
    reject_unknown(j, w, {"csv_path", "precision"});
    if (auto v = find(j, "csv_path")) {
        if (!v->is_string())
            throw validation_error(w + ".csv_path", "must be a string");
        o.csv_path = v->get<std::string>();
    }
    if (auto v = find(j, "precision"))
        o.precision = static_cast<int>(count(*v, w + ".precision"));
}

} // namespace detail

/// Checks the cross-field contract of a fully assembled configuration.
inline void validate(const ConfigFile& c) {
    validate(c.scenario);
    if (c.run.num_bits < 1)
        throw validation_error("num_bits", "must be a positive integer");
    if (c.run.schemes.empty())
        throw validation_error("run.schemes", "must name at least one scheme");
    if (c.run.sigma_e_deg.empty())
        throw validation_error("run.sigma_e_deg", "must hold at least one value");
    for (double a : c.sweep.areas_m2)
        if (!(a > 0.0))
            throw validation_error("sweep.areas_m2", "areas must be positive");
    if (c.output.precision < 12 || c.output.precision > 17)
        throw validation_error("output.precision", "must lie in [12, 17] significant digits");
}

inline ConfigFile parse_config_text(const std::string& text) {
    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const detail::json::parse_error& e) {
        throw parse_error(std::string("malformed configuration: ") + e.what());
    }
    if (!doc.is_object())
        throw parse_error("configuration root must be a JSON object");
    detail::reject_unknown(doc, "config", {"scenario", "run", "sweep", "output"});

    ConfigFile c;
    if (auto v = detail::find(doc, "scenario"))
        detail::parse_scenario(*v, c.scenario);
    if (auto v = detail::find(doc, "run"))
        detail::parse_run(*v, c.run);
    if (auto v = detail::find(doc, "sweep"))
        detail::parse_sweep(*v, c.sweep);
    if (auto v = detail::find(doc, "output"))
        detail::parse_output(*v, c.output);
    validate(c);
    return c;
}

inline ConfigFile parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot read configuration file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

} // namespace rispolsk

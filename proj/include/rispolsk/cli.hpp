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

#include <rispolsk/config.hpp>
#include <rispolsk/simulation.hpp>
#include <rispolsk/theory.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace rispolsk::cli {

/// Process exit codes shared by every subcommand.
enum exit_code : int {
    success = 0,
    usage_error = 1,     ///< bad flags, unreadable or invalid configuration
    numerical_error = 2, ///< quadrature failed to converge
};

inline const char* const theory_header = "gamma_db,ber_dpolsk_theory,ber_cpolsk_theory";
inline const char* const sweep_header =
    "area_m2,M,gamma_db,scheme,sigma_e_deg,ber_sim,ci_low,ci_high,ber_theory,trials,seed";

/// Scientific notation with `digits` significant digits.
inline std::string format_sci(double x, int digits) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return buf;
}

/// Rows of (gamma_db, DPolSK theory, CPolSK theory). Gamma points come from the
/// sweep block's gamma list, then from its area list through the scenario link budget.
inline void cmd_theory(const ConfigFile& config, std::ostream& out, const QuadratureSpec& quad = {}) {
    const int p = config.output.precision;
    std::vector<double> gammas_db = config.sweep.gamma_db;
    for (double area : config.sweep.areas_m2)
        gammas_db.push_back(to_db(link_budget(scenario_for_area(config.scenario, area)).gamma));

    out << theory_header << '\n';
    for (double g_db : gammas_db) {
        const double g = std::pow(10.0, g_db / 10.0);
        out << format_sci(g_db, p) << ',' << format_sci(dpolsk_ber(g, quad), p) << ','
            << format_sci(cpolsk_ber(g), p) << '\n';
    }
}

/// Scenarios of a sweep: one per area, then one per target SNR on the configured surface.
inline std::vector<Scenario> sweep_scenarios(const ConfigFile& config) {
    std::vector<Scenario> out;
    for (double area : config.sweep.areas_m2)
        out.push_back(scenario_for_area(config.scenario, area));
    for (double g_db : config.sweep.gamma_db)
        out.push_back(with_target_snr(config.scenario, std::pow(10.0, g_db / 10.0)));
    return out;
}

inline RunSpec run_spec(const ConfigFile& config, const Scenario& scenario, Scheme scheme, double sigma_e_deg) {
    RunSpec spec;
    spec.scheme = scheme;
    spec.scenario = scenario;
    spec.num_bits = config.run.num_bits;
    spec.master_seed = config.run.seed;
    spec.sigma_e = deg_to_rad(sigma_e_deg);
    spec.d_init = config.run.d_init;
    spec.estimation_error = config.run.estimation_error;
    spec.workers = config.run.workers;
    return spec;
}

inline void write_sweep_row(std::ostream& out, const BerRecord& r, double sigma_e_deg, int p) {
    out << format_sci(r.area_m2, p) << ',' << r.num_units << ',' << format_sci(r.gamma_db, p) << ','
        << to_string(r.scheme) << ',' << format_sci(sigma_e_deg, p) << ',' << format_sci(r.ber_simulated, p) << ','
        << format_sci(r.ci_low, p) << ',' << format_sci(r.ci_high, p) << ',' << format_sci(r.ber_theory, p) << ','
        << r.trials << ',' << r.seed << '\n';
}

/// Monte Carlo sweep: one CSV row per (sweep point, scheme, sigma_e).
inline std::vector<BerRecord> cmd_sweep(const ConfigFile& config, std::ostream& out, const QuadratureSpec& quad = {}) {
    validate(config);
    const auto scenarios = sweep_scenarios(config);
    std::vector<BerRecord> records;
    out << sweep_header << '\n';
    for (const auto& scenario : scenarios) {
        for (Scheme scheme : config.run.schemes) {
            for (double sigma_e_deg : config.run.sigma_e_deg) {
                const BerRecord r = run(run_spec(config, scenario, scheme, sigma_e_deg), quad);
                write_sweep_row(out, r, sigma_e_deg, config.output.precision);
                records.push_back(r);
            }
        }
    }
    return records;
}

/// One run per (scheme, sigma_e) on the configured scenario, printed as a summary.
inline std::vector<BerRecord> cmd_single(const ConfigFile& config, std::ostream& out, const QuadratureSpec& quad = {}) {
    validate(config);
    const int p = config.output.precision;
    std::vector<BerRecord> records;
    for (Scheme scheme : config.run.schemes) {
        for (double sigma_e_deg : config.run.sigma_e_deg) {
            const BerRecord r = run(run_spec(config, config.scenario, scheme, sigma_e_deg), quad);
            out << "scheme        " << to_string(r.scheme) << '\n'
                << "area_m2       " << format_sci(r.area_m2, p) << '\n'
                << "M             " << r.num_units << '\n'
                << "gamma         " << format_sci(r.gamma_linear, p) << " (" << format_sci(r.gamma_db, p)
                << " dB)\n"
                << "sigma_e_deg   " << format_sci(sigma_e_deg, p) << '\n'
                << "errors        " << r.errors_count << " / " << r.trials << '\n'
                << "ber_sim       " << format_sci(r.ber_simulated, p) << '\n'
                << "ci95          [" << format_sci(r.ci_low, p) << ", " << format_sci(r.ci_high, p) << "]\n"
                << "ber_theory    " << format_sci(r.ber_theory, p) << '\n'
                << "seed          " << r.seed << "\n\n";
            records.push_back(r);
        }
    }
    return records;
}

} // namespace rispolsk::cli

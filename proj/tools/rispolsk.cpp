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

// Command-line front end: theory curves, Monte Carlo sweeps and single runs.

#include <rispolsk/cli.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rispolsk;

struct Flags {
    std::string config_path;
    std::string out_path;
    std::string scheme;
    std::string trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> sigma_e_deg;
    std::optional<double> beta_deg;
    std::optional<std::string> areas;
    std::optional<std::string> gamma_db;
    std::optional<unsigned> workers;
    std::optional<int> precision;
};

std::vector<double> parse_list(const std::string& text, const std::string& field) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos)
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw validation_error(field, "'" + item + "' is not a number");
        }
    }
    return out;
}

std::uint64_t parse_trials(const std::string& text) {
    double x = 0.0;
    try {
        std::size_t used = 0;
        x = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw validation_error("num_bits", "'" + text + "' is not a number");
    }
    if (!(x >= 1.0) || x != std::floor(x) || x > 1.8e19)
        throw validation_error("num_bits", "must be a positive integer");
    return static_cast<std::uint64_t>(x);
}

ConfigFile assemble(const Flags& f) {
    ConfigFile c = f.config_path.empty() ? ConfigFile{} : parse_config(f.config_path);
    if (!f.scheme.empty())
        c.run.schemes = parse_scheme_set(f.scheme);
    if (!f.trials.empty())
        c.run.num_bits = parse_trials(f.trials);
    if (f.seed)
        c.run.seed = *f.seed;
    if (f.sigma_e_deg)
        c.run.sigma_e_deg = parse_list(*f.sigma_e_deg, "sigma_e_deg");
    if (f.beta_deg)
        c.scenario.rotation_angle = deg_to_rad(*f.beta_deg);
    if (f.areas || f.gamma_db) {
        c.sweep.areas_m2 = f.areas ? parse_list(*f.areas, "areas") : std::vector<double>{};
        c.sweep.gamma_db = f.gamma_db ? parse_list(*f.gamma_db, "gamma_db") : std::vector<double>{};
    }
    if (f.workers)
        c.run.workers = *f.workers;
    if (f.precision)
        c.output.precision = *f.precision;
    if (!f.out_path.empty())
        c.output.csv_path = f.out_path;
    validate(c);
    return c;
}

void add_flags(CLI::App& cmd, Flags& f) {
    cmd.add_option("--config", f.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    cmd.add_option("--out", f.out_path, "output path (default: standard output)");
    cmd.add_option("--scheme", f.scheme, "dpolsk, cpolsk or both")
        ->check(CLI::IsMember({"dpolsk", "cpolsk", "both"}));
    cmd.add_option("--trials", f.trials, "bits per run");
    cmd.add_option("--seed", f.seed, "master seed");
    cmd.add_option("--sigma-e-deg", f.sigma_e_deg, "comma-separated rotation-estimate error std-devs (deg)");
    cmd.add_option("--beta-deg", f.beta_deg, "SoP rotation angle of the receiver link (deg)");
    cmd.add_option("--areas", f.areas, "comma-separated RIS areas (m^2); empty clears the list")->expected(0, 1);
    cmd.add_option("--gamma-db", f.gamma_db, "comma-separated SNR points (dB); empty clears the list")->expected(0, 1);
    cmd.add_option("--workers", f.workers, "parallel workers (0: all cores)");
    cmd.add_option("--precision", f.precision, "significant digits of floats (12-17)");
}

template <typename Command>
int execute(const Flags& flags, Command&& command) {
    try {
        const ConfigFile config = assemble(flags);
        if (config.output.csv_path.empty() || config.output.csv_path == "-") {
            command(config, std::cout);
        } else {
            std::ofstream out(config.output.csv_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open '" << config.output.csv_path << "' for writing\n";
                return cli::usage_error;
            }
            command(config, out);
        }
        return cli::success;
    } catch (const convergence_failure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return cli::numerical_error;
    } catch (const rispolsk::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::usage_error;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-encoded polarization shift keying: theory curves and link-level Monte Carlo"};
    app.require_subcommand(1);

    Flags theory_flags, sweep_flags, single_flags;
    auto* theory = app.add_subcommand("theory", "theoretical BER of both schemes on an SNR or area grid");
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo BER sweep, one CSV row per point/scheme/sigma_e");
    auto* single = app.add_subcommand("single", "one Monte Carlo run per scheme, printed as a summary");
    add_flags(*theory, theory_flags);
    add_flags(*sweep, sweep_flags);
    add_flags(*single, single_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::usage_error;
    }

    if (theory->parsed())
        return execute(theory_flags, [](const ConfigFile& c, std::ostream& o) { cli::cmd_theory(c, o); });
    if (sweep->parsed())
        return execute(sweep_flags, [](const ConfigFile& c, std::ostream& o) { cli::cmd_sweep(c, o); });
    return execute(single_flags, [](const ConfigFile& c, std::ostream& o) { cli::cmd_single(c, o); });
}

// SPDX-License-Identifier: Apache-2.0
//
// rissched - RIS-assisted secure scheduling simulator for mmWave rail links
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rissched/errors.hpp"
#include "rissched/harness.hpp"

namespace {

std::vector<double> parse_csv_doubles(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw rissched::config_error("bad numeric list entry '" + item + "'");
        }
    }
    if (out.empty()) throw rissched::config_error("empty value list");
    return out;
}

std::vector<rissched::Strategy> parse_csv_schemes(const std::string& list) {
    std::vector<rissched::Strategy> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) throw rissched::config_error("empty scheme name");
        out.push_back(rissched::parse_strategy(item.substr(begin, end - begin + 1)));
    }
    if (out.empty()) throw rissched::config_error("empty scheme list");
    return out;
}

int do_run(const std::string& config_path, const std::string& scheme_name,
           std::uint64_t seed) {
    const rissched::ScenarioConfig cfg = rissched::load_config_file(config_path);
    const rissched::Strategy scheme = rissched::parse_strategy(scheme_name);
    const rissched::TrialRecord rec = rissched::run_trial(cfg, scheme, seed);
    std::cout << "scheme: " << rissched::to_string(scheme) << '\n'
              << "seed: " << seed << '\n'
              << "requested_flows: " << cfg.num_flows << '\n'
              << "completed_flows: " << rec.completed << '\n'
              << "slots_used: " << rec.slots_used << " / " << cfg.num_slots << '\n'
              << "secrecy_bps_per_flow: " << rissched::format_double(rec.secrecy_bps) << '\n'
              << "throughput_bps_per_flow: " << rissched::format_double(rec.throughput_bps)
              << '\n';
    return 0;
}

int do_sweep(const std::string& config_path, const std::string& axis_name,
             const std::string& values_list, const std::string& schemes_list,
             int trials, std::uint64_t seed, const std::string& out_path, int threads) {
    const rissched::ScenarioConfig cfg = rissched::load_config_file(config_path);
    rissched::SweepSpec spec;
    spec.axis = rissched::parse_axis(axis_name);
    spec.values = parse_csv_doubles(values_list);
    spec.schemes = parse_csv_schemes(schemes_list);
    spec.trials = trials;
    spec.seed = seed;
    spec.validate();

    const std::vector<rissched::TrialRecord> records =
        rissched::run_sweep(spec, cfg, threads);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw rissched::config_error("cannot open output file '" + out_path + "'");
    rissched::write_records_csv(out, spec, records);
    out.close();

    const std::string summary_path = out_path + ".summary.csv";
    std::ofstream sum(summary_path, std::ios::binary);
    if (!sum) throw rissched::config_error("cannot open output file '" + summary_path + "'");
    rissched::write_summary_csv(sum, spec, records);
    sum.close();

    std::cout << "wrote " << records.size() << " records to " << out_path
              << " (summary: " << summary_path << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-assisted secure downlink scheduling simulator"};
    app.require_subcommand(1);

    std::string config_path, scheme_name = "proposed";
    std::uint64_t seed = 0;
    auto* run_cmd = app.add_subcommand("run", "run one trial and print its record");
    run_cmd->add_option("--config", config_path, "scenario config file")->required();
    run_cmd->add_option("--scheme", scheme_name, "proposed|without_ris|rps|apt")->required();
    run_cmd->add_option("--seed", seed, "trial seed")->required();

    std::string axis_name, values_list, schemes_list, out_path;
    int trials = 1, threads = 1;
    std::uint64_t sweep_seed = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep and write CSVs");
    sweep_cmd->add_option("--config", config_path, "scenario config file")->required();
    sweep_cmd->add_option("--axis", axis_name,
                          "requested_flows|num_slots|ris_elements|quant_bits|"
                          "ris_mr_distance|ris_position_y|p_max")->required();
    sweep_cmd->add_option("--values", values_list, "comma list, strictly increasing")->required();
    sweep_cmd->add_option("--schemes", schemes_list, "comma list of schemes")->required();
    sweep_cmd->add_option("--trials", trials, "trials per cell")->required();
    sweep_cmd->add_option("--seed", sweep_seed, "master seed")->required();
    sweep_cmd->add_option("--out", out_path, "records CSV path")->required();
    sweep_cmd->add_option("--threads", threads, "worker threads (output independent)");

    try {
        app.parse(argc, argv);
        if (run_cmd->parsed()) return do_run(config_path, scheme_name, seed);
        return do_sweep(config_path, axis_name, values_list, schemes_list, trials,
                        sweep_seed, out_path, threads);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const rissched::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const rissched::solver_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

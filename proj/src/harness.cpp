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

#include "rissched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "rissched/errors.hpp"

namespace rissched {

SweepAxis parse_axis(std::string_view name) {
    if (name == "requested_flows") return SweepAxis::requested_flows;
    if (name == "num_slots") return SweepAxis::num_slots;
    if (name == "ris_elements") return SweepAxis::ris_elements;
    if (name == "quant_bits") return SweepAxis::quant_bits;
    if (name == "ris_mr_distance") return SweepAxis::ris_mr_distance;
    if (name == "ris_position_y") return SweepAxis::ris_position_y;
    if (name == "p_max") return SweepAxis::p_max;
    throw config_error("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::requested_flows: return "requested_flows";
        case SweepAxis::num_slots: return "num_slots";
        case SweepAxis::ris_elements: return "ris_elements";
        case SweepAxis::quant_bits: return "quant_bits";
        case SweepAxis::ris_mr_distance: return "ris_mr_distance";
        case SweepAxis::ris_position_y: return "ris_position_y";
        case SweepAxis::p_max: return "p_max";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (values.empty()) throw config_error("sweep: values must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i]))
            throw config_error("sweep: values must be strictly increasing");
    if (schemes.empty()) throw config_error("sweep: schemes must be non-empty");
    if (trials < 1) throw config_error("sweep: trials must be >= 1");
}

namespace {

int require_count(double value, const char* axis_name) {
    if (value != std::floor(value) || value < 0 || value > 1e9)
        throw config_error(std::string("sweep axis ") + axis_name +
                           ": value must be a non-negative integer, got " +
                           format_double(value));
    return static_cast<int>(value);
}

} // namespace

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value) {
    ScenarioConfig cfg = base;
    switch (axis) {
        case SweepAxis::requested_flows:
            cfg.num_flows = require_count(value, "requested_flows");
            break;
        case SweepAxis::num_slots:
            cfg.num_slots = require_count(value, "num_slots");
            break;
        case SweepAxis::ris_elements:
            cfg.num_ris_elements = require_count(value, "ris_elements");
            break;
        case SweepAxis::quant_bits:
            cfg.quant_bits = require_count(value, "quant_bits");
            break;
        case SweepAxis::ris_mr_distance:
            cfg.ris_mr_distance_m = value;
            break;
        case SweepAxis::ris_position_y:
            break; // applied through place_ris, not the config
        case SweepAxis::p_max:
            cfg.p_max_dbm = value;
            break;
    }
    cfg.validate();
    return cfg;
}

namespace {

struct TrialInputs {
    Geometry geom;
    ChannelSet channels;
    std::vector<FlowRequest> flows;
};

// Everything random about a trial is drawn here, before any scheme runs,
// so that schemes sharing a seed compare on identical channels and QoS.
TrialInputs build_trial_inputs(const ScenarioConfig& cfg, std::uint64_t seed,
                               std::optional<double> ris_y) {
    Rng rng(mix64(seed));
    TrialInputs in;
    in.geom = build_geometry(cfg, rng);
    if (ris_y) in.geom = place_ris(in.geom, *ris_y);
    FadingDraw fading = draw_fading(cfg, rng);
    in.channels = compose_channels(in.geom, fading, cfg);

    // Requesting MRs: a uniform subset of F out of N (partial Fisher-Yates).
    std::vector<int> idx(static_cast<std::size_t>(cfg.num_mrs));
    for (int i = 0; i < cfg.num_mrs; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < cfg.num_flows; ++i) {
        std::uniform_int_distribution<int> pick(i, cfg.num_mrs - 1);
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
    }
    std::uniform_real_distribution<double> qos(cfg.qos_low_bps, cfg.qos_high_bps);
    in.flows.reserve(static_cast<std::size_t>(cfg.num_flows));
    for (int f = 0; f < cfg.num_flows; ++f)
        in.flows.push_back({f, idx[static_cast<std::size_t>(f)], qos(rng)});
    return in;
}

TrialRecord run_trial_impl(const ScenarioConfig& cfg, Strategy scheme, std::uint64_t seed,
                           std::optional<double> ris_y, double axis_value, int trial_index) {
    try {
        cfg.validate();
        const TrialInputs in = build_trial_inputs(cfg, seed, ris_y);
        Rng scheme_rng(derive_scheme_seed(seed, static_cast<int>(scheme)));
        std::vector<OptimizedLink> links;
        links.reserve(in.flows.size());
        for (const FlowRequest& flow : in.flows)
            links.push_back(optimize_flow(in.channels, flow.mr_index, cfg, scheme, scheme_rng));
        const ScheduleOutcome outcome = schedule(in.flows, links, cfg);
        TrialRecord rec;
        rec.axis_value = axis_value;
        rec.scheme = scheme;
        rec.trial = trial_index;
        rec.completed = outcome.completed;
        rec.slots_used = outcome.slots_used;
        const double denom = std::max(cfg.num_flows, 1);
        rec.secrecy_bps = outcome.total_secrecy_bps / denom;
        rec.throughput_bps = outcome.total_throughput_bps / denom;
        return rec;
    } catch (const config_error& e) {
        throw config_error("trial " + std::to_string(trial_index) + " (" +
                           std::string(to_string(scheme)) + "): " + e.what());
    } catch (const solver_error& e) {
        throw solver_error("trial " + std::to_string(trial_index) + " (" +
                           std::string(to_string(scheme)) + "): " + e.what());
    }
}

} // namespace

TrialRecord run_trial(const ScenarioConfig& cfg, Strategy scheme, std::uint64_t seed) {
    return run_trial_impl(cfg, scheme, seed, std::nullopt, 0.0, 0);
}

std::vector<TrialRecord> run_sweep(const SweepSpec& spec, const ScenarioConfig& base_cfg,
                                   int threads) {
    spec.validate();
    base_cfg.validate();
    const int nv = static_cast<int>(spec.values.size());
    const int ns = static_cast<int>(spec.schemes.size());
    const int nt = spec.trials;

    // Validate every cell config up front so errors surface before work starts.
    std::vector<ScenarioConfig> cell_cfgs;
    std::vector<std::optional<double>> cell_ris_y;
    cell_cfgs.reserve(static_cast<std::size_t>(nv));
    for (int vi = 0; vi < nv; ++vi) {
        cell_cfgs.push_back(apply_axis(base_cfg, spec.axis, spec.values[static_cast<std::size_t>(vi)]));
        cell_ris_y.push_back(spec.axis == SweepAxis::ris_position_y
                                 ? std::optional<double>(spec.values[static_cast<std::size_t>(vi)])
                                 : std::nullopt);
    }

    std::vector<TrialRecord> records(static_cast<std::size_t>(nv) * ns * nt);
    // Work unit: one (value, trial) pair; all schemes run on the shared draw.
    const int cells = nv * nt;
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const int cell = next.fetch_add(1);
            if (cell >= cells) return;
            const int vi = cell / nt;
            const int ti = cell % nt;
            const std::uint64_t seed = derive_trial_seed(spec.seed, ti);
            try {
                for (int si = 0; si < ns; ++si) {
                    const std::size_t slot =
                        (static_cast<std::size_t>(vi) * static_cast<std::size_t>(ns) +
                         static_cast<std::size_t>(si)) * static_cast<std::size_t>(nt) +
                        static_cast<std::size_t>(ti);
                    records[slot] = run_trial_impl(
                        cell_cfgs[static_cast<std::size_t>(vi)],
                        spec.schemes[static_cast<std::size_t>(si)], seed,
                        cell_ris_y[static_cast<std::size_t>(vi)],
                        spec.values[static_cast<std::size_t>(vi)], ti);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(cells);
                return;
            }
        }
    };

    const int nworkers = std::max(1, std::min(threads, cells));
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

std::vector<SummaryRow> summarize(const SweepSpec& spec, const std::vector<TrialRecord>& records) {
    std::vector<SummaryRow> rows;
    const int nt = spec.trials;
    for (std::size_t base = 0; base + static_cast<std::size_t>(nt) <= records.size();
         base += static_cast<std::size_t>(nt)) {
        SummaryRow row;
        row.value = records[base].axis_value;
        row.scheme = records[base].scheme;
        double sum_c = 0, sum_s = 0;
        for (int t = 0; t < nt; ++t) {
            sum_c += records[base + static_cast<std::size_t>(t)].completed;
            sum_s += records[base + static_cast<std::size_t>(t)].secrecy_bps;
        }
        row.mean_completed = sum_c / nt;
        row.mean_secrecy_bps = sum_s / nt;
        if (nt > 1) {
            double var_c = 0, var_s = 0;
            for (int t = 0; t < nt; ++t) {
                const TrialRecord& r = records[base + static_cast<std::size_t>(t)];
                var_c += (r.completed - row.mean_completed) * (r.completed - row.mean_completed);
                var_s += (r.secrecy_bps - row.mean_secrecy_bps) *
                         (r.secrecy_bps - row.mean_secrecy_bps);
            }
            row.se_completed = std::sqrt(var_c / (nt - 1) / nt);
            row.se_secrecy_bps = std::sqrt(var_s / (nt - 1) / nt);
        }
        rows.push_back(row);
    }
    return rows;
}

void write_records_csv(std::ostream& out, const SweepSpec& spec,
                       const std::vector<TrialRecord>& records) {
    out << "axis,value,scheme,trial,completed_flows,slots_used,secrecy_bps,throughput_bps\n";
    for (const TrialRecord& r : records) {
        out << to_string(spec.axis) << ',' << format_double(r.axis_value) << ','
            << to_string(r.scheme) << ',' << r.trial << ',' << r.completed << ','
            << r.slots_used << ',' << format_double(r.secrecy_bps) << ','
            << format_double(r.throughput_bps) << '\n';
    }
}

void write_summary_csv(std::ostream& out, const SweepSpec& spec,
                       const std::vector<TrialRecord>& records) {
    out << "axis,value,scheme,mean_completed,se_completed,mean_secrecy_bps,se_secrecy_bps\n";
    for (const SummaryRow& row : summarize(spec, records)) {
        out << to_string(spec.axis) << ',' << format_double(row.value) << ','
            << to_string(row.scheme) << ',' << format_double(row.mean_completed) << ','
            << format_double(row.se_completed) << ',' << format_double(row.mean_secrecy_bps)
            << ',' << format_double(row.se_secrecy_bps) << '\n';
    }
}

std::string records_csv_string(const SweepSpec& spec, const std::vector<TrialRecord>& records) {
    std::ostringstream os;
    write_records_csv(os, spec, records);
    return os.str();
}

std::string summary_csv_string(const SweepSpec& spec, const std::vector<TrialRecord>& records) {
    std::ostringstream os;
    write_summary_csv(os, spec, records);
    return os.str();
}

} // namespace rissched

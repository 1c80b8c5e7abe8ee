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

#ifndef RISSCHED_HARNESS_HPP
#define RISSCHED_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rissched/scheduler.hpp"

namespace rissched {

enum class SweepAxis {
    requested_flows,
    num_slots,
    ris_elements,
    quant_bits,
    ris_mr_distance,
    ris_position_y,
    p_max,
};

SweepAxis parse_axis(std::string_view name); // throws config_error
std::string_view to_string(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::ris_elements;
    std::vector<double> values;      // non-empty, strictly increasing
    std::vector<Strategy> schemes;   // non-empty
    int trials = 1;
    std::uint64_t seed = 0;

    void validate() const;           // throws config_error
};

// One (axis value, scheme, trial) cell. secrecy_bps and throughput_bps
// are per-requested-flow means: the superframe totals divided by the
// number of requested flows (unscheduled flows contribute zero).
struct TrialRecord {
    double axis_value = 0;
    Strategy scheme = Strategy::proposed;
    int trial = 0;
    int completed = 0;
    int slots_used = 0;
    double secrecy_bps = 0;
    double throughput_bps = 0;
};

// One full trial: geometry (fresh eavesdropper draw), fading, QoS draws,
// per-flow optimization under the scheme, greedy scheduling, aggregation.
// Deterministic in (cfg, scheme, seed).
TrialRecord run_trial(const ScenarioConfig& cfg, Strategy scheme, std::uint64_t seed);

// Cartesian product values x schemes x trials with per-trial seeds derived
// from spec.seed. Schemes (and axis values, where dimensions allow) at the
// same trial index share the channel/QoS draw so comparisons are paired.
// Records come back sorted by (value, scheme, trial) regardless of the
// number of worker threads.
std::vector<TrialRecord> run_sweep(const SweepSpec& spec, const ScenarioConfig& base_cfg,
                                   int threads = 1);

// Derives the per-cell config (and the optional RIS y-override used by
// the ris_position_y axis). Count axes demand integral values.
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value);

struct SummaryRow {
    double value = 0;
    Strategy scheme = Strategy::proposed;
    double mean_completed = 0;
    double se_completed = 0;
    double mean_secrecy_bps = 0;
    double se_secrecy_bps = 0;
};

std::vector<SummaryRow> summarize(const SweepSpec& spec, const std::vector<TrialRecord>& records);

// CSV emission. Headers are fixed:
//   axis,value,scheme,trial,completed_flows,slots_used,secrecy_bps,throughput_bps
//   axis,value,scheme,mean_completed,se_completed,mean_secrecy_bps,se_secrecy_bps
// Floating values use the shortest round-trip decimal form.
void write_records_csv(std::ostream& out, const SweepSpec& spec,
                       const std::vector<TrialRecord>& records);
void write_summary_csv(std::ostream& out, const SweepSpec& spec,
                       const std::vector<TrialRecord>& records);

std::string records_csv_string(const SweepSpec& spec, const std::vector<TrialRecord>& records);
std::string summary_csv_string(const SweepSpec& spec, const std::vector<TrialRecord>& records);

} // namespace rissched

#endif

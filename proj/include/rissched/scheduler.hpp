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

#ifndef RISSCHED_SCHEDULER_HPP
#define RISSCHED_SCHEDULER_HPP

#include <map>
#include <vector>

#include "rissched/optimizer.hpp"

namespace rissched {

struct FlowRequest {
    int flow_id = 0;
    int mr_index = 0;
    double qos_bps = 0; // q_f, minimum superframe throughput
};

// Priority of a flow: the reciprocal of the (fractional) slot count it
// needs, omega = (R dT) / (q (T_s + K dT)). Higher priority schedules
// earlier. rate_per_slot and qos must be positive.
double priority_value(double rate_per_slot_bps, double qos_bps, const ScenarioConfig& cfg);

// Integral slots needed: ceil(1/omega), at least 1, bumped by one extra
// slot in the rare case floating-point rounding would leave the
// throughput a hair under the QoS target.
int slots_needed(double rate_per_slot_bps, double qos_bps, const ScenarioConfig& cfg);

struct SlotRange {
    int begin = 0; // inclusive
    int end = 0;   // exclusive
};

struct ScheduleOutcome {
    std::vector<bool> delta;          // per flow, scheduled and QoS-met
    std::vector<int> slots;           // t_f (0 when infeasible)
    std::vector<double> priority;     // omega (0 when rate is 0)
    std::map<int, SlotRange> assignment; // flow_id -> contiguous slot range
    int slots_used = 0;
    int completed = 0;
    double total_secrecy_bps = 0;     // sum of [thr_n - thr_e]^+ over scheduled flows
    double total_throughput_bps = 0;  // sum of legitimate throughputs
};

// Greedy TDMA packing: flows failing the secrecy gate (per-slot rate
// form of C_n >= 0.1 R_n) or with zero rate are excluded; the rest are
// sorted by priority descending (fewest slots first, ties by flow id)
// and accepted while the slot budget allows, scanning past any flow
// that does not fit. Accepted flows get contiguous ranges in acceptance
// order.
ScheduleOutcome schedule(const std::vector<FlowRequest>& flows,
                         const std::vector<OptimizedLink>& links,
                         const ScenarioConfig& cfg);

} // namespace rissched

#endif

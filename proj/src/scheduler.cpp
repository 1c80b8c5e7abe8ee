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

#include "rissched/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rissched {

double priority_value(double rate_per_slot_bps, double qos_bps, const ScenarioConfig& cfg) {
    if (!(rate_per_slot_bps > 0) || !(qos_bps > 0))
        throw std::invalid_argument("priority_value: rate and qos must be positive");
    return rate_per_slot_bps * cfg.slot_time_s / (qos_bps * cfg.superframe_s());
}

int slots_needed(double rate_per_slot_bps, double qos_bps, const ScenarioConfig& cfg) {
    const double omega = priority_value(rate_per_slot_bps, qos_bps, cfg);
    int slots = static_cast<int>(std::ceil(1.0 / omega));
    if (slots < 1) slots = 1;
    // Guard the QoS contract against a downward rounding of 1/omega.
    if (slots <= cfg.num_slots &&
        throughput_bps(rate_per_slot_bps, slots, cfg) < qos_bps)
        ++slots;
    return slots;
}

ScheduleOutcome schedule(const std::vector<FlowRequest>& flows,
                         const std::vector<OptimizedLink>& links,
                         const ScenarioConfig& cfg) {
    if (flows.size() != links.size())
        throw std::invalid_argument("schedule: one link per flow required");
    const int f = static_cast<int>(flows.size());
    ScheduleOutcome out;
    out.delta.assign(flows.size(), false);
    out.slots.assign(flows.size(), 0);
    out.priority.assign(flows.size(), 0.0);

    // Secrecy gate and slot demand, on per-slot rates.
    std::vector<int> eligible;
    for (int i = 0; i < f; ++i) {
        const OptimizedLink& link = links[static_cast<std::size_t>(i)];
        const double rate_bps = link.legit_rate * cfg.bandwidth;
        if (!(rate_bps > 0)) continue; // dead link, infeasible
        if (!secrecy_feasible(link.secrecy_rate, link.legit_rate)) continue;
        out.priority[static_cast<std::size_t>(i)] =
            priority_value(rate_bps, flows[static_cast<std::size_t>(i)].qos_bps, cfg);
        out.slots[static_cast<std::size_t>(i)] =
            slots_needed(rate_bps, flows[static_cast<std::size_t>(i)].qos_bps, cfg);
        eligible.push_back(i);
    }

    // Fewest slots first = priority descending; ties by flow id.
    std::sort(eligible.begin(), eligible.end(), [&](int a, int b) {
        const double pa = out.priority[static_cast<std::size_t>(a)];
        const double pb = out.priority[static_cast<std::size_t>(b)];
        if (pa != pb) return pa > pb;
        return flows[static_cast<std::size_t>(a)].flow_id < flows[static_cast<std::size_t>(b)].flow_id;
    });

    int used = 0;
    for (int i : eligible) {
        const int t_f = out.slots[static_cast<std::size_t>(i)];
        if (used + t_f > cfg.num_slots) continue; // skip, keep scanning
        const OptimizedLink& link = links[static_cast<std::size_t>(i)];
        out.assignment[flows[static_cast<std::size_t>(i)].flow_id] = {used, used + t_f};
        out.delta[static_cast<std::size_t>(i)] = true;
        used += t_f;
        ++out.completed;
        const double thr_n = throughput_bps(link.legit_rate * cfg.bandwidth, t_f, cfg);
        const double thr_e = throughput_bps(link.eve_rate * cfg.bandwidth, t_f, cfg);
        out.total_secrecy_bps += secrecy_capacity_bps(thr_n, thr_e);
        out.total_throughput_bps += thr_n;
    }
    out.slots_used = used;
    return out;
}

} // namespace rissched

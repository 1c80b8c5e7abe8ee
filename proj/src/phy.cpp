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

#include "rissched/phy.hpp"

#include <cmath>
#include <stdexcept>

namespace rissched {

PhaseConfig PhaseConfig::zeros(int num_elements, int quant_bits) {
    PhaseConfig p;
    p.indices.assign(static_cast<std::size_t>(num_elements), 0);
    p.quant_bits = quant_bits;
    return p;
}

double PhaseConfig::phase(int l) const {
    // phi = 2 m pi / (2^e - 1); for e = 1 the two levels are 0 and 2pi.
    const double denom = static_cast<double>((1 << quant_bits) - 1);
    return 2.0 * M_PI * static_cast<double>(indices[static_cast<std::size_t>(l)]) / denom;
}

cxd PhaseConfig::coeff(int l) const {
    const double p = phase(l);
    return cxd(std::cos(p), std::sin(p));
}

CVec PhaseConfig::reflection() const {
    CVec r(static_cast<Eigen::Index>(indices.size()));
    for (int l = 0; l < r.size(); ++l) r(l) = coeff(l);
    return r;
}

CRow composite_channel(const CRow& direct, const CRow& ris, const CMat& g,
                       const PhaseConfig& phases) {
    if (ris.size() != g.rows() || direct.size() != g.cols() ||
        static_cast<Eigen::Index>(phases.indices.size()) != g.rows())
        throw std::invalid_argument("composite_channel: dimension mismatch");
    return direct + (ris.transpose().cwiseProduct(phases.reflection())).transpose() * g;
}

double snr_from_composite(const CRow& composite, const Beamformer& w, double noise_power_w) {
    if (!(noise_power_w > 0)) throw std::invalid_argument("snr: noise power must be > 0");
    if (composite.size() != w.w.size())
        throw std::invalid_argument("snr: beamformer dimension mismatch");
    return std::norm((composite * w.w)(0)) / noise_power_w;
}

double snr(const CRow& direct, const CRow& ris, const CMat& g,
           const PhaseConfig& phases, const Beamformer& w, double noise_power_w) {
    return snr_from_composite(composite_channel(direct, ris, g, phases), w, noise_power_w);
}

double rate_per_slot_bps(double snr_value, double bandwidth_hz) {
    return bandwidth_hz * std::log2(1.0 + snr_value);
}

double throughput_bps(double rate_per_slot, int slots_assigned, const ScenarioConfig& cfg) {
    if (slots_assigned < 0 || slots_assigned > cfg.num_slots)
        throw std::invalid_argument("throughput: slots_assigned out of [0, K]");
    return static_cast<double>(slots_assigned) * rate_per_slot * cfg.slot_time_s /
           cfg.superframe_s();
}

double secrecy_capacity_bps(double throughput_mr, double throughput_eve) {
    return std::max(throughput_mr - throughput_eve, 0.0);
}

bool secrecy_feasible(double secrecy, double throughput_mr) {
    return secrecy >= 0.1 * throughput_mr;
}

LinkMetrics link_metrics(double snr_mr, double snr_eve, int slots_assigned,
                         const ScenarioConfig& cfg) {
    LinkMetrics m;
    m.snr_mr = snr_mr;
    m.snr_eve = snr_eve;
    m.rate_mr = rate_per_slot_bps(snr_mr, cfg.bandwidth);
    m.rate_eve = rate_per_slot_bps(snr_eve, cfg.bandwidth);
    m.throughput_mr = throughput_bps(m.rate_mr, slots_assigned, cfg);
    m.throughput_eve = throughput_bps(m.rate_eve, slots_assigned, cfg);
    m.secrecy = secrecy_capacity_bps(m.throughput_mr, m.throughput_eve);
    return m;
}

} // namespace rissched

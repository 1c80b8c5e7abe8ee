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

#ifndef RISSCHED_PHY_HPP
#define RISSCHED_PHY_HPP

#include "rissched/channel.hpp"

namespace rissched {

// Quantized RIS phase state. Element l applies e^{j phi_l} with
// phi_l = 2 m_l pi / (2^e - 1), m_l in {0, ..., 2^e - 1}. Note the
// quantizer maps m = 2^e - 1 to 2pi = 0, so the top level duplicates the
// bottom one; this matches the stated quantizer and is harmless.
struct PhaseConfig {
    std::vector<int> indices; // m_l per element
    int quant_bits = 1;       // e >= 1

    static PhaseConfig zeros(int num_elements, int quant_bits);

    int levels() const { return 1 << quant_bits; }
    double phase(int l) const;
    cxd coeff(int l) const;          // e^{j phi_l}, unit modulus
    CVec reflection() const;         // diagonal of Phi, length L
};

// Transmit weight vector under the power budget ||w||^2 <= P_max (watts).
struct Beamformer {
    CVec w;
    double power() const { return w.squaredNorm(); }
};

// (d + h Phi G) as a row vector; the receiver-side composite channel.
CRow composite_channel(const CRow& direct, const CRow& ris, const CMat& g,
                       const PhaseConfig& phases);

// |c w|^2 / sigma^2 for a composite row c. The slot-assignment indicator
// is applied by the scheduler, not here.
double snr_from_composite(const CRow& composite, const Beamformer& w, double noise_power_w);
double snr(const CRow& direct, const CRow& ris, const CMat& g,
           const PhaseConfig& phases, const Beamformer& w, double noise_power_w);

// Shannon rate W log2(1 + snr), bit/s.
double rate_per_slot_bps(double snr_value, double bandwidth_hz);

// Superframe throughput (slots * per-slot rate * dT) / (T_s + K dT).
// The per-slot rate is constant within a superframe (static snapshot).
// slots_assigned outside [0, K] is a contract violation.
double throughput_bps(double rate_per_slot, int slots_assigned, const ScenarioConfig& cfg);

// C_n = [R_n - R_e]^+, and the feasibility gate C_n >= 0.1 R_n. The gate
// form is invariant to the slot count because both throughputs share the
// same slot factor, so it may be evaluated on per-slot rates.
double secrecy_capacity_bps(double throughput_mr, double throughput_eve);
bool secrecy_feasible(double secrecy, double throughput_mr);

struct LinkMetrics {
    double snr_mr = 0;
    double snr_eve = 0;
    double rate_mr = 0;        // bit/s per slot
    double rate_eve = 0;
    double throughput_mr = 0;  // bit/s over the superframe
    double throughput_eve = 0;
    double secrecy = 0;        // bit/s
};

LinkMetrics link_metrics(double snr_mr, double snr_eve, int slots_assigned,
                         const ScenarioConfig& cfg);

} // namespace rissched

#endif

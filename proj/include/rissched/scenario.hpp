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

#ifndef RISSCHED_SCENARIO_HPP
#define RISSCHED_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rissched/rng.hpp"

namespace rissched {

// All scalar parameters of one run. Field names double as the keys of the
// flat `key = value` config file. Defaults are the baseline simulation
// setup: a 200 m train with 24 roof relays, a 4-antenna BS 75 m off the
// track, and a 30-element RIS between them.
struct ScenarioConfig {
    double carrier_freq = 28e9;            // Hz (informational, loss is folded into the intercept)
    double bandwidth = 100e6;              // W, Hz
    int num_antennas = 4;                  // M
    int num_mrs = 24;                      // N
    int num_ris_elements = 30;             // L
    int quant_bits = 3;                    // e, phase levels per element = 2^e
    double path_loss_intercept_db = -61.3; // C, direct BS->MR / BS->eve links
    double ris_hop_intercept_db = -4.0;    // per-hop intercept on BS->RIS and RIS->receiver (see README)
    double alpha_los = 2.5;                // direct-link exponent
    double alpha_nlos = 3.6;               // reflected-hop exponent
    double rician_factor = 4.0;            // beta
    double noise_psd_dbm_per_mhz = -134.0; // N0/W
    double p_max_dbm = 23.0;               // BS power budget
    double beacon_period_s = 850e-6;       // T_s, scheduling phase
    double slot_time_s = 18e-6;            // dT
    int num_slots = 2000;                  // K
    int num_flows = 15;                    // F (requested flows, <= N)
    double qos_low_bps = 5e6;              // flow QoS draw range, uniform
    double qos_high_bps = 100e6;
    double train_length_m = 200.0;
    double bs_track_offset_m = 75.0;       // perpendicular BS-track distance
    double bs_ris_distance_m = 50.0;
    double ris_mr_distance_m = 30.0;       // perpendicular RIS-track distance
    double mr_height_m = 4.0;
    double bs_height_m = 4.0;
    double ris_height_m = 4.0;
    double eve_disc_radius_m = 10.0;       // eavesdropper placement disc around a random MR

    // Throws config_error on any violated bound.
    void validate() const;

    double noise_power_w() const;          // sigma_N^2, from PSD and bandwidth
    double p_max_w() const;
    double superframe_s() const;           // T_s + K * dT
};

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

double distance(const Vec3& a, const Vec3& b);

// Node positions and the derived link distances for one snapshot. The
// frame is BS-centred: the track runs parallel to the y axis at
// x = bs_track_offset_m, and the train occupies y in (0, train_length].
struct Geometry {
    std::vector<Vec3> mr_positions;
    Vec3 bs_position;
    Vec3 ris_position;
    Vec3 eve_position;
    std::vector<double> d_bs_mr;   // d_{n,1}
    std::vector<double> d_ris_mr;  // d_{n,3}
    double d_bs_ris = 0;           // d_{R,2}
    double d_bs_eve = 0;           // d_{e,1}
    double d_ris_eve = 0;          // d_{e,3}
};

// Builds the deterministic layout plus one random eavesdropper draw
// (uniform in a disc of cfg.eve_disc_radius_m around a uniformly chosen
// MR). The RIS sits ris_mr_distance_m from the track on the BS side, at
// the along-track offset that realises bs_ris_distance_m exactly; an
// incompatible pair of those two knobs is a config_error.
Geometry build_geometry(const ScenarioConfig& cfg, Rng& rng);
Geometry build_geometry(const ScenarioConfig& cfg, std::uint64_t rng_seed);

// Moves the RIS along the track axis to y_r, keeping its lateral offset
// and height, and recomputes every RIS distance.
Geometry place_ris(Geometry geom, double track_y);

// Canonical text form, used for byte-level reproducibility checks.
std::string serialize(const Geometry& geom);

// Flat `key = value` parser. Lines may be blank or `#` comments. Keys are
// exactly the ScenarioConfig field names; unknown keys are errors. Keys
// not present keep their defaults. qos_range_bps takes a comma pair.
ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig load_config_file(const std::string& path);

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

} // namespace rissched

#endif

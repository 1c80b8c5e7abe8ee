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

#ifndef RISSCHED_CHANNEL_HPP
#define RISSCHED_CHANNEL_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rissched/rng.hpp"
#include "rissched/scenario.hpp"

namespace rissched {

using cxd = std::complex<double>;
using CRow = Eigen::RowVectorXcd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Distance-power path gain, linear: 10^(intercept_db/10) * dist^-exponent.
// Throws std::domain_error for dist <= 0.
double path_loss(double dist_m, double exponent, double intercept_db);

// One Rician small-scale fading realisation. Every entry is
// sqrt(beta/(beta+1)) + sqrt(1/(beta+1)) * z with z circularly symmetric
// complex Gaussian of unit power, entries i.i.d.
struct FadingDraw {
    std::vector<CRow> q_bs_mr;  // per MR, 1 x M
    CMat q_bs_ris;              // L x M
    std::vector<CRow> q_ris_mr; // per MR, 1 x L
    CRow q_bs_eve;              // 1 x M
    CRow q_ris_eve;             // 1 x L
};

FadingDraw draw_fading(const ScenarioConfig& cfg, Rng& rng);

// Composite complex channels of one snapshot.
struct ChannelSet {
    std::vector<CRow> d;  // BS->MR, per MR, 1 x M
    CMat g;               // BS->RIS, L x M
    std::vector<CRow> h;  // RIS->MR, per MR, 1 x L
    CRow d_eve;           // BS->eve, 1 x M
    CRow h_eve;           // RIS->eve, 1 x L
};

// Scales the fading by the square-root link path gains:
//   d_n = sqrt(pl(d_{n,1}, alpha_los, C)) Q_{n,1}
//   G   = sqrt(pl(d_{R,2}, alpha_nlos, C_hop)) Q_{R,2}
//   h_n = sqrt(pl(d_{n,3}, alpha_nlos, C_hop)) Q_{n,3}
// and the eavesdropper analogues. C is path_loss_intercept_db, C_hop is
// ris_hop_intercept_db. Throws std::invalid_argument on dimension
// mismatch between geom and fading.
ChannelSet compose_channels(const Geometry& geom, const FadingDraw& fading,
                            const ScenarioConfig& cfg);

} // namespace rissched

#endif

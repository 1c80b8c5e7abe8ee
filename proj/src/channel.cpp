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

#include "rissched/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rissched {

double path_loss(double dist_m, double exponent, double intercept_db) {
    if (!(dist_m > 0))
        throw std::domain_error("path_loss: distance must be positive, got " +
                                std::to_string(dist_m));
    return std::pow(10.0, intercept_db / 10.0) * std::pow(dist_m, -exponent);
}

namespace {

// One Rician entry: deterministic LoS part plus unit-power circularly
// symmetric scatter. Draw order (re, im) is part of the reproducibility
// contract.
struct RicianSource {
    double los;     // sqrt(beta/(beta+1))
    double scatter; // sqrt(1/(beta+1)), scaling CN(0,1)
    Rng& rng;
    std::normal_distribution<double> normal{0.0, 1.0};

    explicit RicianSource(double beta, Rng& r)
        : los(std::sqrt(beta / (beta + 1.0))),
          scatter(std::sqrt(1.0 / (beta + 1.0))), rng(r) {}

    cxd operator()() {
        const double re = normal(rng);
        const double im = normal(rng);
        return cxd(los + scatter * re / std::sqrt(2.0),
                   scatter * im / std::sqrt(2.0));
    }

    CRow row(int n) {
        CRow out(n);
        for (int i = 0; i < n; ++i) out(i) = (*this)();
        return out;
    }
};

} // namespace

FadingDraw draw_fading(const ScenarioConfig& cfg, Rng& rng) {
    const int m = cfg.num_antennas, n = cfg.num_mrs, l = cfg.num_ris_elements;
    RicianSource draw(cfg.rician_factor, rng);
    FadingDraw f;
    f.q_bs_mr.reserve(n);
    for (int i = 0; i < n; ++i) f.q_bs_mr.push_back(draw.row(m));
    f.q_bs_ris.resize(l, m);
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < m; ++c) f.q_bs_ris(r, c) = draw();
    f.q_ris_mr.reserve(n);
    for (int i = 0; i < n; ++i) f.q_ris_mr.push_back(draw.row(l));
    f.q_bs_eve = draw.row(m);
    f.q_ris_eve = draw.row(l);
    return f;
}

ChannelSet compose_channels(const Geometry& geom, const FadingDraw& fading,
                            const ScenarioConfig& cfg) {
    const int m = cfg.num_antennas, n = cfg.num_mrs, l = cfg.num_ris_elements;
    const auto check = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("compose_channels: ") + what);
    };
    check(static_cast<int>(geom.mr_positions.size()) == n, "geometry MR count mismatch");
    check(static_cast<int>(fading.q_bs_mr.size()) == n, "q_bs_mr count mismatch");
    check(static_cast<int>(fading.q_ris_mr.size()) == n, "q_ris_mr count mismatch");
    check(fading.q_bs_ris.rows() == l && fading.q_bs_ris.cols() == m, "q_bs_ris shape mismatch");
    check(fading.q_bs_eve.size() == m, "q_bs_eve length mismatch");
    check(fading.q_ris_eve.size() == l, "q_ris_eve length mismatch");
    for (int i = 0; i < n; ++i) {
        check(fading.q_bs_mr[i].size() == m, "q_bs_mr row length mismatch");
        check(fading.q_ris_mr[i].size() == l, "q_ris_mr row length mismatch");
    }

    ChannelSet ch;
    ch.d.reserve(n);
    ch.h.reserve(n);
    for (int i = 0; i < n; ++i) {
        ch.d.push_back(std::sqrt(path_loss(geom.d_bs_mr[i], cfg.alpha_los,
                                           cfg.path_loss_intercept_db)) *
                       fading.q_bs_mr[i]);
        ch.h.push_back(std::sqrt(path_loss(geom.d_ris_mr[i], cfg.alpha_nlos,
                                           cfg.ris_hop_intercept_db)) *
                       fading.q_ris_mr[i]);
    }
    ch.g = std::sqrt(path_loss(geom.d_bs_ris, cfg.alpha_nlos, cfg.ris_hop_intercept_db)) *
           fading.q_bs_ris;
    ch.d_eve = std::sqrt(path_loss(geom.d_bs_eve, cfg.alpha_los,
                                   cfg.path_loss_intercept_db)) *
               fading.q_bs_eve;
    ch.h_eve = std::sqrt(path_loss(geom.d_ris_eve, cfg.alpha_nlos,
                                   cfg.ris_hop_intercept_db)) *
               fading.q_ris_eve;
    return ch;
}

} // namespace rissched

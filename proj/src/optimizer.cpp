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

#include "rissched/optimizer.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "rissched/errors.hpp"

namespace rissched {

Strategy parse_strategy(std::string_view name) {
    if (name == "proposed") return Strategy::proposed;
    if (name == "without_ris") return Strategy::without_ris;
    if (name == "rps") return Strategy::rps;
    if (name == "apt") return Strategy::apt;
    throw config_error("unknown scheme '" + std::string(name) +
                       "' (expected proposed|without_ris|rps|apt)");
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::proposed: return "proposed";
        case Strategy::without_ris: return "without_ris";
        case Strategy::rps: return "rps";
        case Strategy::apt: return "apt";
    }
    return "?";
}

SecrecyQuotient make_quotient(const CRow& composite_mr, const CRow& composite_eve,
                              double p_max_w, double noise_power_w) {
    const Eigen::Index m = composite_mr.size();
    if (composite_eve.size() != m)
        throw std::invalid_argument("make_quotient: dimension mismatch");
    const double scale = p_max_w / noise_power_w;
    SecrecyQuotient q;
    q.x_n = CMat::Identity(m, m) + scale * (composite_mr.adjoint() * composite_mr);
    q.x_e = CMat::Identity(m, m) + scale * (composite_eve.adjoint() * composite_eve);
    return q;
}

double rayleigh_quotient(const SecrecyQuotient& q, const CVec& w) {
    const double num = std::real((w.adjoint() * q.x_n * w)(0));
    const double den = std::real((w.adjoint() * q.x_e * w)(0));
    return num / den;
}

Beamformer optimal_beamformer(const SecrecyQuotient& q, double p_max_w) {
    if (!q.x_n.allFinite() || !q.x_e.allFinite())
        throw solver_error("optimal_beamformer: non-finite quotient matrices");
    // Hermitian-definite pencil X_n v = lambda X_e v, reduced through the
    // Cholesky factor of X_e inside the solver.
    Eigen::GeneralizedSelfAdjointEigenSolver<CMat> es;
    es.compute(q.x_n, q.x_e, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (es.info() != Eigen::Success)
        throw solver_error("optimal_beamformer: generalized eigensolver failed");
    const Eigen::Index top = q.x_n.rows() - 1;
    CVec v = es.eigenvectors().col(top);
    const double norm = v.norm();
    if (!(norm > 0) || !v.allFinite())
        throw solver_error("optimal_beamformer: degenerate eigenvector");
    Beamformer w;
    w.w = (std::sqrt(p_max_w) / norm) * v;
    return w;
}

namespace {

Beamformer equal_gain_beamformer(const CRow& composite_mr, double p_max_w) {
    const Eigen::Index m = composite_mr.size();
    const double mag = std::sqrt(p_max_w / static_cast<double>(m));
    Beamformer w;
    w.w.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double ph = std::arg(composite_mr(i));
        w.w(i) = mag * cxd(std::cos(ph), -std::sin(ph));
    }
    return w;
}

OptimizedLink evaluate_composites(const CRow& c_n, const CRow& c_e,
                                  const ScenarioConfig& cfg, BeamRule rule,
                                  PhaseConfig phases) {
    const double p = cfg.p_max_w();
    const double sigma2 = cfg.noise_power_w();
    OptimizedLink link;
    if (rule == BeamRule::secrecy_pencil) {
        link.w_star = optimal_beamformer(make_quotient(c_n, c_e, p, sigma2), p);
    } else {
        link.w_star = equal_gain_beamformer(c_n, p);
    }
    const double snr_n = snr_from_composite(c_n, link.w_star, sigma2);
    const double snr_e = snr_from_composite(c_e, link.w_star, sigma2);
    link.legit_rate = std::log2(1.0 + snr_n);
    link.eve_rate = std::log2(1.0 + snr_e);
    link.secrecy_rate = std::max(link.legit_rate - link.eve_rate, 0.0);
    link.phases_star = std::move(phases);
    return link;
}

} // namespace

OptimizedLink evaluate_link(const ChannelSet& channels, int mr_index,
                            const ScenarioConfig& cfg,
                            const std::optional<PhaseConfig>& phases, BeamRule rule) {
    const CRow& d = channels.d.at(static_cast<std::size_t>(mr_index));
    if (!phases) {
        // RIS path removed entirely; report an all-zero phase state.
        return evaluate_composites(d, channels.d_eve, cfg, rule,
                                   PhaseConfig::zeros(cfg.num_ris_elements, cfg.quant_bits));
    }
    const CRow& h = channels.h.at(static_cast<std::size_t>(mr_index));
    const CRow c_n = composite_channel(d, h, channels.g, *phases);
    const CRow c_e = composite_channel(channels.d_eve, channels.h_eve, channels.g, *phases);
    return evaluate_composites(c_n, c_e, cfg, rule, *phases);
}

namespace {

OptimizedLink local_search_impl(const ChannelSet& channels, int mr_index,
                                const ScenarioConfig& cfg, PhaseConfig phases,
                                BeamRule rule, std::vector<double>* pass_trace) {
    const int num_elements = cfg.num_ris_elements;
    const int levels = phases.levels();
    OptimizedLink best = evaluate_link(channels, mr_index, cfg, phases, rule);
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        const double before = best.secrecy_rate;
        for (int l = 0; l < num_elements; ++l) {
            // Scan every level in ascending order; the first strict max
            // wins, which keeps the lowest index on exact ties.
            int best_m = 0;
            OptimizedLink best_cand;
            double best_val = -1.0;
            for (int cand = 0; cand < levels; ++cand) {
                phases.indices[static_cast<std::size_t>(l)] = cand;
                OptimizedLink trial = evaluate_link(channels, mr_index, cfg, phases, rule);
                if (trial.secrecy_rate > best_val) {
                    best_val = trial.secrecy_rate;
                    best_m = cand;
                    best_cand = std::move(trial);
                }
            }
            phases.indices[static_cast<std::size_t>(l)] = best_m;
            if (best_val >= best.secrecy_rate) best = std::move(best_cand);
        }
        if (pass_trace) pass_trace->push_back(best.secrecy_rate);
        if (best.secrecy_rate - before < kPassImprovementEps) break;
    }
    return best;
}

} // namespace

OptimizedLink local_search_phases(const ChannelSet& channels, int mr_index,
                                  const ScenarioConfig& cfg, PhaseConfig init,
                                  std::vector<double>* pass_trace) {
    return local_search_impl(channels, mr_index, cfg, std::move(init),
                             BeamRule::secrecy_pencil, pass_trace);
}

OptimizedLink optimize_flow(const ChannelSet& channels, int mr_index,
                            const ScenarioConfig& cfg, Strategy strategy, Rng& rng) {
    switch (strategy) {
        case Strategy::proposed:
            return local_search_phases(channels, mr_index, cfg,
                                       PhaseConfig::zeros(cfg.num_ris_elements, cfg.quant_bits));
        case Strategy::without_ris:
            return evaluate_link(channels, mr_index, cfg, std::nullopt);
        case Strategy::rps: {
            PhaseConfig p = PhaseConfig::zeros(cfg.num_ris_elements, cfg.quant_bits);
            std::uniform_int_distribution<int> level(0, p.levels() - 1);
            for (auto& m : p.indices) m = level(rng);
            return evaluate_link(channels, mr_index, cfg, p);
        }
        case Strategy::apt:
            return local_search_impl(channels, mr_index, cfg,
                                     PhaseConfig::zeros(cfg.num_ris_elements, cfg.quant_bits),
                                     BeamRule::equal_gain, nullptr);
    }
    throw config_error("optimize_flow: invalid strategy");
}

} // namespace rissched

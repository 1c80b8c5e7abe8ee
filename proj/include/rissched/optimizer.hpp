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

#ifndef RISSCHED_OPTIMIZER_HPP
#define RISSCHED_OPTIMIZER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rissched/phy.hpp"

namespace rissched {

enum class Strategy { proposed, without_ris, rps, apt };

Strategy parse_strategy(std::string_view name);            // throws config_error
std::string_view to_string(Strategy s);
constexpr int kNumStrategies = 4;

// The pair of Hermitian matrices of the secrecy Rayleigh quotient,
// X_i = I_M + (P_max/sigma^2) c_i^H c_i for the legitimate and
// eavesdropper composite rows c_i. Both are positive definite with
// eigenvalues >= 1.
struct SecrecyQuotient {
    CMat x_n;
    CMat x_e;
};

SecrecyQuotient make_quotient(const CRow& composite_mr, const CRow& composite_eve,
                              double p_max_w, double noise_power_w);

// Value of (w^H X_n w) / (w^H X_e w).
double rayleigh_quotient(const SecrecyQuotient& q, const CVec& w);

// Closed-form optimal beamformer: sqrt(P_max) times the unit-norm
// principal generalized eigenvector of the pencil (X_n, X_e), solved via
// Cholesky reduction of X_e (X_e is never inverted explicitly). The
// returned vector carries full power, ||w||^2 = P_max. Any numerical
// breakdown raises solver_error; the result is never silently non-finite.
Beamformer optimal_beamformer(const SecrecyQuotient& q, double p_max_w);

// Per-flow optimization result. Rates are per-slot spectral rates in
// bit/s/Hz, before any slot assignment.
struct OptimizedLink {
    Beamformer w_star;
    PhaseConfig phases_star;
    double legit_rate = 0;    // log2(1 + snr_mr)
    double eve_rate = 0;      // log2(1 + snr_eve)
    double secrecy_rate = 0;  // [legit - eve]^+
};

// Coordinate descent over the discrete phase grid: for each element in
// order, all 2^e candidate levels are evaluated with the others held
// fixed, recomputing the optimal beamformer for every candidate, and the
// secrecy-rate argmax is kept (lowest index on exact ties). Full passes
// repeat until a pass improves the secrecy rate by less than
// kPassImprovementEps bit/s/Hz or kMaxPasses passes elapse. If pass_trace
// is non-null it receives the best value after each pass.
inline constexpr double kPassImprovementEps = 1e-6;
inline constexpr int kMaxPasses = 10;

OptimizedLink local_search_phases(const ChannelSet& channels, int mr_index,
                                  const ScenarioConfig& cfg, PhaseConfig init,
                                  std::vector<double>* pass_trace = nullptr);

// Per-flow joint optimization under one of the four schemes:
//   proposed    - local search from all-zero phases, Lemma-style beamformer
//   without_ris - direct links only; the result ignores L and any phases
//   rps         - one uniform random phase draw, then the optimal beamformer
//   apt         - equal per-antenna magnitudes sqrt(P/M), phases conjugate
//                 to the legitimate composite channel, local search over
//                 the RIS phases only
// rng is consumed only by rps.
OptimizedLink optimize_flow(const ChannelSet& channels, int mr_index,
                            const ScenarioConfig& cfg, Strategy strategy, Rng& rng);

// Evaluates one phase configuration (or the no-RIS link when phases is
// nullopt) under the given beamformer rule. Exposed for tests and the
// neighbor-enumeration oracle.
enum class BeamRule { secrecy_pencil, equal_gain };
OptimizedLink evaluate_link(const ChannelSet& channels, int mr_index,
                            const ScenarioConfig& cfg,
                            const std::optional<PhaseConfig>& phases,
                            BeamRule rule = BeamRule::secrecy_pencil);

} // namespace rissched

#endif

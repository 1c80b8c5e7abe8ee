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

#ifndef RISSCHED_RNG_HPP
#define RISSCHED_RNG_HPP

#include <cstdint>
#include <random>

namespace rissched {

// Stateless 64-bit mixer (splitmix64). Used to derive well-separated
// per-trial and per-stream seeds from a single master seed so that trials
// can run on any worker in any order and still reproduce bit-identically.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for the channel/geometry/QoS draw of one trial. Deliberately a
// function of (master, trial) only: all schemes and all sweep axis values
// at the same trial index share one draw, so scheme comparisons are paired.
inline std::uint64_t derive_trial_seed(std::uint64_t master, int trial) {
    return mix64(mix64(master) ^ mix64(0x7261696c5f6d725fULL + static_cast<std::uint64_t>(trial)));
}

// Separate stream for per-scheme randomness (currently only the RPS phase
// draw) so it cannot perturb the shared channel draw.
inline std::uint64_t derive_scheme_seed(std::uint64_t trial_seed, int scheme_index) {
    return mix64(trial_seed ^ mix64(0x736368656d650000ULL + static_cast<std::uint64_t>(scheme_index)));
}

using Rng = std::mt19937_64;

} // namespace rissched

#endif

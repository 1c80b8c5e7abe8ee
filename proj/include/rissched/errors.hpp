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

#ifndef RISSCHED_ERRORS_HPP
#define RISSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rissched {

// Invalid configuration, config file, or CLI input. Maps to exit code 1.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (eigensolver breakdown, non-finite intermediate).
// Maps to exit code 2.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rissched

#endif

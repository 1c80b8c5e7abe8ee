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

#include "rissched/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rissched/errors.hpp"

namespace rissched {

void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) { throw config_error("config: " + msg); };
    if (num_antennas < 1) fail("num_antennas must be >= 1");
    if (num_mrs < 1) fail("num_mrs must be >= 1");
    if (num_ris_elements < 1) fail("num_ris_elements must be >= 1");
    if (quant_bits < 1 || quant_bits > 20) fail("quant_bits must be in [1, 20]");
    if (num_slots < 1) fail("num_slots must be >= 1");
    // num_flows = 0 is a valid idle superframe; the upper bound is one
    // flow per MR.
    if (num_flows < 0) fail("num_flows must be >= 0");
    if (num_flows > num_mrs) fail("num_flows must be <= num_mrs");
    if (!(bandwidth > 0)) fail("bandwidth must be > 0");
    if (!(carrier_freq > 0)) fail("carrier_freq must be > 0");
    if (!(qos_low_bps <= qos_high_bps)) fail("qos_range_bps low must be <= high");
    if (!(qos_low_bps > 0)) fail("qos_range_bps must be positive");
    if (!(slot_time_s > 0)) fail("slot_time_s must be > 0");
    if (!(beacon_period_s >= 0)) fail("beacon_period_s must be >= 0");
    if (!(train_length_m > 0)) fail("train_length_m must be > 0");
    if (!(bs_track_offset_m > 0)) fail("bs_track_offset_m must be > 0");
    if (!(bs_ris_distance_m > 0)) fail("bs_ris_distance_m must be > 0");
    if (!(ris_mr_distance_m > 0)) fail("ris_mr_distance_m must be > 0");
    if (!(eve_disc_radius_m >= 0)) fail("eve_disc_radius_m must be >= 0");
    if (!(rician_factor >= 0)) fail("rician_factor must be >= 0");
    if (!(alpha_los > 0) || !(alpha_nlos > 0)) fail("path loss exponents must be > 0");
}

double ScenarioConfig::noise_power_w() const {
    // PSD is per MHz; total power in dBm, then to watts.
    const double dbm = noise_psd_dbm_per_mhz + 10.0 * std::log10(bandwidth / 1e6);
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double ScenarioConfig::p_max_w() const {
    return std::pow(10.0, (p_max_dbm - 30.0) / 10.0);
}

double ScenarioConfig::superframe_s() const {
    return beacon_period_s + static_cast<double>(num_slots) * slot_time_s;
}

double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

void refresh_distances(Geometry& g) {
    const int n = static_cast<int>(g.mr_positions.size());
    g.d_bs_mr.resize(n);
    g.d_ris_mr.resize(n);
    for (int i = 0; i < n; ++i) {
        g.d_bs_mr[i] = distance(g.bs_position, g.mr_positions[i]);
        g.d_ris_mr[i] = distance(g.ris_position, g.mr_positions[i]);
    }
    g.d_bs_ris = distance(g.bs_position, g.ris_position);
    g.d_bs_eve = distance(g.bs_position, g.eve_position);
    g.d_ris_eve = distance(g.ris_position, g.eve_position);
}

} // namespace

Geometry build_geometry(const ScenarioConfig& cfg, Rng& rng) {
    cfg.validate();
    Geometry g;
    g.bs_position = {0.0, 0.0, cfg.bs_height_m};

    // MRs evenly spaced along the roof; the far end of the train sits
    // train_length_m down-track from the BS's perpendicular foot, so one
    // spacing separates the foot from the nearest MR. A single MR sits at
    // the train midpoint.
    const int n = cfg.num_mrs;
    g.mr_positions.resize(n);
    if (n == 1) {
        g.mr_positions[0] = {cfg.bs_track_offset_m, cfg.train_length_m / 2.0, cfg.mr_height_m};
    } else {
        const double spacing = cfg.train_length_m / static_cast<double>(n);
        for (int i = 0; i < n; ++i) {
            g.mr_positions[i] = {cfg.bs_track_offset_m,
                                 spacing * static_cast<double>(i + 1),
                                 cfg.mr_height_m};
        }
    }

    // RIS: ris_mr_distance_m off the track on the BS side, pushed along the
    // track until the BS-RIS range equals bs_ris_distance_m.
    const double xr = cfg.bs_track_offset_m - cfg.ris_mr_distance_m;
    const double dz = cfg.ris_height_m - cfg.bs_height_m;
    const double disc = cfg.bs_ris_distance_m * cfg.bs_ris_distance_m - xr * xr - dz * dz;
    if (disc < 0) {
        throw config_error("config: bs_ris_distance_m " + format_double(cfg.bs_ris_distance_m) +
                           " is unreachable with ris_mr_distance_m " +
                           format_double(cfg.ris_mr_distance_m));
    }
    g.ris_position = {xr, std::sqrt(disc), cfg.ris_height_m};

    // Eavesdropper: uniform in a disc around a uniformly chosen MR, at
    // roof height.
    std::uniform_int_distribution<int> pick_mr(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Vec3 center = g.mr_positions[pick_mr(rng)];
    const double radius = cfg.eve_disc_radius_m * std::sqrt(unit(rng));
    const double angle = 2.0 * M_PI * unit(rng);
    g.eve_position = {center.x + radius * std::cos(angle),
                      center.y + radius * std::sin(angle), center.z};

    refresh_distances(g);
    return g;
}

Geometry build_geometry(const ScenarioConfig& cfg, std::uint64_t rng_seed) {
    Rng rng(mix64(rng_seed));
    return build_geometry(cfg, rng);
}

Geometry place_ris(Geometry geom, double track_y) {
    geom.ris_position.y = track_y;
    refresh_distances(geom);
    return geom;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

void put_vec3(std::ostream& os, const Vec3& v) {
    os << '(' << format_double(v.x) << ',' << format_double(v.y) << ','
       << format_double(v.z) << ')';
}

} // namespace

std::string serialize(const Geometry& geom) {
    std::ostringstream os;
    os << "bs=";
    put_vec3(os, geom.bs_position);
    os << " ris=";
    put_vec3(os, geom.ris_position);
    os << " eve=";
    put_vec3(os, geom.eve_position);
    os << " mrs=[";
    for (std::size_t i = 0; i < geom.mr_positions.size(); ++i) {
        if (i) os << ';';
        put_vec3(os, geom.mr_positions[i]);
    }
    os << "] d_bs_mr=[";
    for (std::size_t i = 0; i < geom.d_bs_mr.size(); ++i) {
        if (i) os << ';';
        os << format_double(geom.d_bs_mr[i]);
    }
    os << "] d_ris_mr=[";
    for (std::size_t i = 0; i < geom.d_ris_mr.size(); ++i) {
        if (i) os << ';';
        os << format_double(geom.d_ris_mr[i]);
    }
    os << "] d_bs_ris=" << format_double(geom.d_bs_ris)
       << " d_bs_eve=" << format_double(geom.d_bs_eve)
       << " d_ris_eve=" << format_double(geom.d_ris_eve);
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

double parse_num(std::string_view v, int line) {
    const std::string s(v);
    std::size_t pos = 0;
    double out = 0;
    try {
        out = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw config_error("config line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    if (pos != s.size())
        throw config_error("config line " + std::to_string(line) + ": bad number '" + s + "'");
    return out;
}

int parse_int(std::string_view v, int line) {
    const double d = parse_num(v, line);
    if (d != std::floor(d) || std::abs(d) > 1e9)
        throw config_error("config line " + std::to_string(line) + ": expected integer, got '" +
                           std::string(v) + "'");
    return static_cast<int>(d);
}

} // namespace

ScenarioConfig parse_config_text(std::string_view text) {
    ScenarioConfig cfg;
    using Setter = std::function<void(ScenarioConfig&, std::string_view, int)>;
    auto num = [](double ScenarioConfig::* field) {
        return Setter([field](ScenarioConfig& c, std::string_view v, int line) {
            c.*field = parse_num(v, line);
        });
    };
    auto count = [](int ScenarioConfig::* field) {
        return Setter([field](ScenarioConfig& c, std::string_view v, int line) {
            c.*field = parse_int(v, line);
        });
    };
    static const std::map<std::string, Setter, std::less<>> keys = {
        {"carrier_freq", num(&ScenarioConfig::carrier_freq)},
        {"bandwidth", num(&ScenarioConfig::bandwidth)},
        {"num_antennas", count(&ScenarioConfig::num_antennas)},
        {"num_mrs", count(&ScenarioConfig::num_mrs)},
        {"num_ris_elements", count(&ScenarioConfig::num_ris_elements)},
        {"quant_bits", count(&ScenarioConfig::quant_bits)},
        {"path_loss_intercept_db", num(&ScenarioConfig::path_loss_intercept_db)},
        {"ris_hop_intercept_db", num(&ScenarioConfig::ris_hop_intercept_db)},
        {"alpha_los", num(&ScenarioConfig::alpha_los)},
        {"alpha_nlos", num(&ScenarioConfig::alpha_nlos)},
        {"rician_factor", num(&ScenarioConfig::rician_factor)},
        {"noise_psd_dbm_per_mhz", num(&ScenarioConfig::noise_psd_dbm_per_mhz)},
        {"p_max_dbm", num(&ScenarioConfig::p_max_dbm)},
        {"beacon_period_s", num(&ScenarioConfig::beacon_period_s)},
        {"slot_time_s", num(&ScenarioConfig::slot_time_s)},
        {"num_slots", count(&ScenarioConfig::num_slots)},
        {"num_flows", count(&ScenarioConfig::num_flows)},
        {"qos_range_bps",
         Setter([](ScenarioConfig& c, std::string_view v, int line) {
             const auto comma = v.find(',');
             if (comma == std::string_view::npos)
                 throw config_error("config line " + std::to_string(line) +
                                    ": qos_range_bps expects 'low, high'");
             c.qos_low_bps = parse_num(trim(v.substr(0, comma)), line);
             c.qos_high_bps = parse_num(trim(v.substr(comma + 1)), line);
         })},
        {"train_length_m", num(&ScenarioConfig::train_length_m)},
        {"bs_track_offset_m", num(&ScenarioConfig::bs_track_offset_m)},
        {"bs_ris_distance_m", num(&ScenarioConfig::bs_ris_distance_m)},
        {"ris_mr_distance_m", num(&ScenarioConfig::ris_mr_distance_m)},
        {"mr_height_m", num(&ScenarioConfig::mr_height_m)},
        {"bs_height_m", num(&ScenarioConfig::bs_height_m)},
        {"ris_height_m", num(&ScenarioConfig::ris_height_m)},
        {"eve_disc_radius_m", num(&ScenarioConfig::eve_disc_radius_m)},
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_error("config line " + std::to_string(line_no) +
                               ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = keys.find(key);
        if (it == keys.end())
            throw config_error("config line " + std::to_string(line_no) + ": unknown key '" +
                               std::string(key) + "'");
        it->second(cfg, value, line_no);
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace rissched

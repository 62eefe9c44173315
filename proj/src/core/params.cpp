#include "params.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wifisim {

Configuration parse_configuration(const std::string& name) {
  if (name == "no_int") return Configuration::NoInt;
  if (name == "visible") return Configuration::Visible;
  if (name == "hidden") return Configuration::Hidden;
  throw std::invalid_argument("unknown configuration '" + name +
                              "' (expected no_int, visible or hidden)");
}

MobilityScenario parse_mobility(const std::string& name) {
  if (name == "static") return MobilityScenario::Static;
  if (name == "slow") return MobilityScenario::Slow;
  if (name == "medium") return MobilityScenario::Medium;
  if (name == "fast") return MobilityScenario::Fast;
  throw std::invalid_argument("unknown mobility scenario '" + name +
                              "' (expected static, slow, medium or fast)");
}

std::string configuration_name(Configuration c) {
  switch (c) {
    case Configuration::NoInt: return "no_int";
    case Configuration::Visible: return "visible";
    case Configuration::Hidden: return "hidden";
  }
  return "?";
}

std::string mobility_name(MobilityScenario m) {
  switch (m) {
    case MobilityScenario::Static: return "static";
    case MobilityScenario::Slow: return "slow";
    case MobilityScenario::Medium: return "medium";
    case MobilityScenario::Fast: return "fast";
  }
  return "?";
}

double mobility_speed_mps(MobilityScenario m) {
  switch (m) {
    case MobilityScenario::Slow: return 0.01;
    case MobilityScenario::Medium: return 0.1;
    case MobilityScenario::Fast: return 1.0;
    case MobilityScenario::Static: break;
  }
  throw std::invalid_argument("static scenario has no speed");
}

namespace {

double parse_double(const std::string& v) {
  std::size_t pos = 0;
  const double d = std::stod(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("trailing characters in number '" + v + "'");
  return d;
}

long long parse_int(const std::string& v) {
  std::size_t pos = 0;
  const long long i = std::stoll(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("trailing characters in integer '" + v + "'");
  return i;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void Params::set(const std::string& key, const std::string& value) {
  using Setter = std::function<void(Params&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"configuration", [](Params& p, const std::string& v) { parse_configuration(v); p.configuration = v; }},
      {"mobility", [](Params& p, const std::string& v) { parse_mobility(v); p.mobility = v; }},
      {"dwell_per_bin_s", [](Params& p, const std::string& v) { p.dwell_per_bin_s = parse_double(v); }},
      {"seed", [](Params& p, const std::string& v) { p.seed = static_cast<std::uint64_t>(parse_int(v)); }},
      {"static_position_min_m", [](Params& p, const std::string& v) { p.static_position_min_m = static_cast<int>(parse_int(v)); }},
      {"static_position_max_m", [](Params& p, const std::string& v) { p.static_position_max_m = static_cast<int>(parse_int(v)); }},
      {"warmup_discard_s", [](Params& p, const std::string& v) { p.warmup_discard_s = parse_double(v); }},
      {"tx_power_dbm", [](Params& p, const std::string& v) { p.tx_power_dbm = parse_double(v); }},
      {"channel_width_hz", [](Params& p, const std::string& v) { p.channel_width_hz = parse_double(v); }},
      {"noise_figure_db", [](Params& p, const std::string& v) { p.noise_figure_db = parse_double(v); }},
      {"rx_sensitivity_dbm", [](Params& p, const std::string& v) { p.rx_sensitivity_dbm = parse_double(v); }},
      {"cs_threshold_dbm", [](Params& p, const std::string& v) { p.cs_threshold_dbm = parse_double(v); }},
      {"per_override", [](Params& p, const std::string& v) { p.per_override = parse_double(v); }},
      {"path_loss_exponent", [](Params& p, const std::string& v) { p.path_loss_exponent = parse_double(v); }},
      {"reference_loss_db", [](Params& p, const std::string& v) { p.reference_loss_db = parse_double(v); }},
      {"propagation_speed_mps", [](Params& p, const std::string& v) { p.propagation_speed_mps = parse_double(v); }},
      {"d_max_m", [](Params& p, const std::string& v) { p.d_max_m = parse_double(v); }},
      {"cw_min", [](Params& p, const std::string& v) { p.cw_min = static_cast<int>(parse_int(v)); }},
      {"cw_max", [](Params& p, const std::string& v) { p.cw_max = static_cast<int>(parse_int(v)); }},
      {"attempt_budget", [](Params& p, const std::string& v) { p.attempt_budget = static_cast<int>(parse_int(v)); }},
      {"update_interval_s", [](Params& p, const std::string& v) { p.update_interval_s = parse_double(v); }},
      {"ewma_weight", [](Params& p, const std::string& v) { p.ewma_weight = parse_double(v); }},
      {"sampling_fraction", [](Params& p, const std::string& v) { p.sampling_fraction = parse_double(v); }},
      {"sut_period_s", [](Params& p, const std::string& v) { p.sut_period_s = parse_double(v); }},
      {"sut_payload_bytes", [](Params& p, const std::string& v) { p.sut_payload_bytes = static_cast<int>(parse_int(v)); }},
      {"int_gap_mean_s", [](Params& p, const std::string& v) { p.int_gap_mean_s = parse_double(v); }},
      {"int_gap_cap_s", [](Params& p, const std::string& v) { p.int_gap_cap_s = parse_double(v); }},
      {"int_count_mean", [](Params& p, const std::string& v) { p.int_count_mean = parse_double(v); }},
      {"int_count_cap", [](Params& p, const std::string& v) { p.int_count_cap = static_cast<int>(parse_int(v)); }},
      {"int_spacing_s", [](Params& p, const std::string& v) { p.int_spacing_s = parse_double(v); }},
      {"int_payload_bytes", [](Params& p, const std::string& v) { p.int_payload_bytes = static_cast<int>(parse_int(v)); }},
      {"header_overhead_bytes", [](Params& p, const std::string& v) { p.header_overhead_bytes = static_cast<int>(parse_int(v)); }},
      {"visible_int_distance_m", [](Params& p, const std::string& v) { p.visible_int_distance_m = parse_double(v); }},
      {"hidden_int_distance_m", [](Params& p, const std::string& v) { p.hidden_int_distance_m = parse_double(v); }},
      {"int_orthogonal_offset_m", [](Params& p, const std::string& v) { p.int_orthogonal_offset_m = parse_double(v); }},
      {"keep_raw_log", [](Params& p, const std::string& v) { p.keep_raw_log = parse_bool(v); }},
      {"trace_minstrel", [](Params& p, const std::string& v) { p.trace_minstrel = parse_bool(v); }},
      {"threads", [](Params& p, const std::string& v) { p.threads = static_cast<int>(parse_int(v)); }},
  };
  const auto it = setters.find(key);
  if (it == setters.end()) throw std::invalid_argument("unknown parameter '" + key + "'");
  it->second(*this, value);
}

void Params::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parameter file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected key = value");
    try {
      set(trim(trimmed.substr(0, eq)), trim(trimmed.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

DerivedParams derive(const Params& p) {
  DerivedParams d;
  d.channel.exponent = p.path_loss_exponent;
  d.channel.reference_loss_db = p.reference_loss_db;
  d.channel.propagation_speed_mps = p.propagation_speed_mps;
  d.channel.d_max_m = p.d_max_m;

  d.phy.tx_power_dbm = p.tx_power_dbm;
  d.phy.noise_floor_dbm = default_noise_floor_dbm(p.channel_width_hz, p.noise_figure_db);
  const double calibrated = calibrated_sensitivity_dbm(d.channel, p.tx_power_dbm);
  d.phy.rx_sensitivity_dbm = p.rx_sensitivity_dbm.value_or(calibrated);
  d.phy.cs_threshold_dbm = p.cs_threshold_dbm.value_or(d.phy.rx_sensitivity_dbm);

  d.mac.cw_min = p.cw_min;
  d.mac.cw_max = p.cw_max;
  d.mac.attempt_budget = p.attempt_budget;
  if (d.mac.cw_min >= d.mac.cw_max) throw std::invalid_argument("cw_min must be below cw_max");
  if (d.mac.attempt_budget < 1) throw std::invalid_argument("attempt budget must be >= 1");

  d.minstrel.update_interval = seconds_to_simtime(p.update_interval_s);
  d.minstrel.ewma_weight = p.ewma_weight;
  d.minstrel.sampling_fraction = p.sampling_fraction;

  d.sut_source.period = seconds_to_simtime(p.sut_period_s);
  d.sut_source.payload_bytes = p.sut_payload_bytes;
  d.int_source.gap_mean_s = p.int_gap_mean_s;
  d.int_source.gap_cap_s = p.int_gap_cap_s;
  d.int_source.count_mean = p.int_count_mean;
  d.int_source.count_cap = p.int_count_cap;
  d.int_source.intra_spacing = seconds_to_simtime(p.int_spacing_s);
  d.int_source.payload_bytes = p.int_payload_bytes;

  d.sut_psdu_bytes = p.sut_payload_bytes + p.header_overhead_bytes;
  d.int_psdu_bytes = p.int_payload_bytes + p.header_overhead_bytes;
  d.per_override = p.per_override;
  return d;
}

}  // namespace wifisim

#pragma once

#include <optional>
#include <string>

#include "channel.hpp"
#include "mac.hpp"
#include "minstrel.hpp"
#include "phy.hpp"
#include "traffic.hpp"
#include "units.hpp"

namespace wifisim {

enum class Configuration : std::uint8_t { NoInt, Visible, Hidden };
enum class MobilityScenario : std::uint8_t { Static, Slow, Medium, Fast };

Configuration parse_configuration(const std::string& name);
MobilityScenario parse_mobility(const std::string& name);
std::string configuration_name(Configuration c);
std::string mobility_name(MobilityScenario m);
double mobility_speed_mps(MobilityScenario m);

/// Every tunable of the simulator, overridable one key at a time. Defaults
/// reproduce the reference setup: 802.11a on a log-distance channel with a
/// 51.45 m decode range, a 0.5 s periodic uplink from the station under test
/// and a capped-exponential bursty uplink from the interferer.
struct Params {
  // scenario
  std::string configuration = "no_int";
  std::string mobility = "static";
  double dwell_per_bin_s = 600.0;
  std::uint64_t seed = 1;
  int static_position_min_m = 1;
  int static_position_max_m = 50;
  double warmup_discard_s = 0.0;

  // phy
  double tx_power_dbm = 16.0206;
  double channel_width_hz = 20e6;
  double noise_figure_db = 7.0;
  std::optional<double> rx_sensitivity_dbm;  // default: calibrated to d_max
  std::optional<double> cs_threshold_dbm;    // default: same as sensitivity
  std::optional<double> per_override;        // testing hook: force every PER

  // channel
  double path_loss_exponent = 3.0;
  double reference_loss_db = 46.6777;
  double propagation_speed_mps = 299792458.0;
  double d_max_m = 51.45;

  // mac
  int cw_min = 15;
  int cw_max = 1023;
  int attempt_budget = 8;

  // minstrel
  double update_interval_s = 0.1;
  double ewma_weight = 0.75;
  double sampling_fraction = 0.10;

  // traffic
  double sut_period_s = 0.5;
  int sut_payload_bytes = 22;
  double int_gap_mean_s = 250e-6;
  double int_gap_cap_s = 10.0;
  double int_count_mean = 100.0;
  int int_count_cap = 500;
  double int_spacing_s = 500e-6;
  int int_payload_bytes = 1472;
  int header_overhead_bytes = 64;

  // geometry
  double visible_int_distance_m = 0.0;
  double hidden_int_distance_m = -40.0;
  double int_orthogonal_offset_m = 2.0;

  // output
  bool keep_raw_log = false;
  bool trace_minstrel = false;
  int threads = 0;  // 0 = hardware concurrency

  void set(const std::string& key, const std::string& value);
  void load_file(const std::string& path);

  Configuration config_enum() const { return parse_configuration(configuration); }
  MobilityScenario mobility_enum() const { return parse_mobility(mobility); }
};

/// Module parameter sets derived from the flat key-value surface.
struct DerivedParams {
  PhyParams phy;
  ChannelParams channel;
  MacParams mac;
  MinstrelParams minstrel;
  PeriodicSource sut_source;
  BurstySource int_source;
  int sut_psdu_bytes = 0;
  int int_psdu_bytes = 0;
  std::optional<double> per_override;
};

DerivedParams derive(const Params& p);

}  // namespace wifisim

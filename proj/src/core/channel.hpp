#pragma once

#include <span>

#include "phy.hpp"
#include "rng.hpp"
#include "units.hpp"

namespace wifisim {

struct ChannelParams {
  double exponent = 3.0;
  double reference_loss_db = 46.6777;  // at 1 m, ~5 GHz
  double propagation_speed_mps = 299792458.0;
  double d_max_m = 51.45;
};

/// Log-distance loss, clamped to the reference loss below 1 m.
double path_loss_db(const ChannelParams& p, double distance_m);

/// Constant-speed propagation delay in seconds (exact, unrounded).
double propagation_delay_s(const ChannelParams& p, double distance_m);
SimTime propagation_delay(const ChannelParams& p, double distance_m);

double rx_power_dbm(const ChannelParams& p, double tx_power_dbm, const Point& tx, const Point& rx);

/// Sensitivity that places the decode boundary exactly at d_max.
double calibrated_sensitivity_dbm(const ChannelParams& p, double tx_power_dbm);

enum class FrameKind : std::uint8_t { Data, Ack };

struct Frame {
  FrameKind kind = FrameKind::Data;
  std::uint8_t src = 0;
  std::uint8_t dst = 0;
  int psdu_bytes = 0;
  int mcs_index = 0;
  std::uint32_t seq = 0;
  SimTime gen_time = 0;
};

struct OnAirFrame {
  Frame frame;
  SimTime tx_start = 0;
  SimTime tx_end = 0;
  double tx_power_dbm = 0.0;
  Point tx_position;
};

enum class RxOutcome : std::uint8_t { Delivered, Corrupted, BelowSensitivity };

/// Delivery decision given the already-computed worst-case
/// interference-plus-noise power seen during the frame. Draws one uniform
/// variate from the receiver's stream.
RxOutcome decide_delivery(double rx_dbm, double interference_plus_noise_mw, const McsEntry& m,
                          int psdu_bytes, double rx_sensitivity_dbm, Rng& rng);

/// Full reception resolution for a frame at a receiver position: finds the
/// worst-case SINR over the frame's airtime against the overlapping frames
/// (boundary sweep of their on-air intervals) and draws the delivery. The
/// overlap list must not contain the target itself.
RxOutcome resolve_reception(const ChannelParams& ch, const PhyParams& phy, const OnAirFrame& target,
                            const Point& receiver_pos, std::span<const OnAirFrame> overlapping,
                            Rng& rng);

}  // namespace wifisim

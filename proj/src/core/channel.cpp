#include "channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wifisim {

double path_loss_db(const ChannelParams& p, double distance_m) {
  if (distance_m < 0.0) throw std::invalid_argument("distance must be >= 0");
  if (distance_m < 1.0) return p.reference_loss_db;
  return p.reference_loss_db + 10.0 * p.exponent * std::log10(distance_m);
}

double propagation_delay_s(const ChannelParams& p, double distance_m) {
  if (distance_m < 0.0) throw std::invalid_argument("distance must be >= 0");
  return distance_m / p.propagation_speed_mps;
}

SimTime propagation_delay(const ChannelParams& p, double distance_m) {
  return static_cast<SimTime>(std::llround(propagation_delay_s(p, distance_m) * 1e9));
}

double rx_power_dbm(const ChannelParams& p, double tx_power_dbm, const Point& tx, const Point& rx) {
  return tx_power_dbm - path_loss_db(p, distance(tx, rx));
}

double calibrated_sensitivity_dbm(const ChannelParams& p, double tx_power_dbm) {
  return tx_power_dbm - path_loss_db(p, p.d_max_m);
}

RxOutcome decide_delivery(double rx_dbm, double interference_plus_noise_mw, const McsEntry& m,
                          int psdu_bytes, double rx_sensitivity_dbm, Rng& rng) {
  if (rx_dbm < rx_sensitivity_dbm) return RxOutcome::BelowSensitivity;
  const double sinr = snr_db(rx_dbm, mw_to_dbm(interference_plus_noise_mw));
  const double p_err = per(m, sinr, psdu_bytes);
  return rng.next_double() >= p_err ? RxOutcome::Delivered : RxOutcome::Corrupted;
}

RxOutcome resolve_reception(const ChannelParams& ch, const PhyParams& phy, const OnAirFrame& target,
                            const Point& receiver_pos, std::span<const OnAirFrame> overlapping,
                            Rng& rng) {
  const double target_dbm =
      rx_power_dbm(ch, target.tx_power_dbm, target.tx_position, receiver_pos);

  // Worst-case interference: sweep the overlap interval boundaries inside the
  // target's airtime and take the maximum concurrent power sum.
  struct Edge {
    SimTime t;
    double delta_mw;
  };
  std::vector<Edge> edges;
  edges.reserve(overlapping.size() * 2);
  const double noise_mw = dbm_to_mw(phy.noise_floor_dbm);
  for (const OnAirFrame& other : overlapping) {
    const SimTime from = std::max(other.tx_start, target.tx_start);
    const SimTime to = std::min(other.tx_end, target.tx_end);
    if (to <= from) continue;
    const double mw =
        dbm_to_mw(rx_power_dbm(ch, other.tx_power_dbm, other.tx_position, receiver_pos));
    edges.push_back({from, mw});
    edges.push_back({to, -mw});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.delta_mw < b.delta_mw;  // process removals first at equal times
  });
  double current = 0.0;
  double worst = 0.0;
  for (const Edge& e : edges) {
    current += e.delta_mw;
    worst = std::max(worst, current);
  }
  return decide_delivery(target_dbm, noise_mw + worst, mcs(target.frame.mcs_index),
                         target.frame.psdu_bytes, phy.rx_sensitivity_dbm, rng);
}

}  // namespace wifisim

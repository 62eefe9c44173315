#pragma once

#include <array>
#include <stdexcept>

#include "channel.hpp"
#include "phy.hpp"
#include "rng.hpp"
#include "units.hpp"

namespace wifisim {

struct MacParams {
  int cw_min = 15;
  int cw_max = 1023;
  int attempt_budget = 8;  // 1 initial + 7 retries
};

/// Uniform backoff in [0, cw] slots.
inline int backoff_draw(const MacParams& p, int cw, Rng& rng) {
  if (cw < p.cw_min || cw > p.cw_max) throw std::invalid_argument("cw outside [cw_min, cw_max]");
  return static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(cw)));
}

/// Binary exponential growth, saturating at cw_max.
inline int next_cw(const MacParams& p, int cw) {
  if (cw < p.cw_min) throw std::invalid_argument("cw below cw_min");
  return std::min(2 * cw + 1, p.cw_max);
}

/// No-ACK declaration window after the data frame's last symbol: SIFS, the
/// ACK airtime at the mapped control rate, one slot, and the round trip at
/// maximum range.
inline SimTime ack_timeout_for(const PhyParams& phy, const ChannelParams& ch, int data_mcs_index) {
  const SimTime ack_air = frame_duration(mcs(ack_rate_index_for(data_mcs_index)), kAckPsduBytes);
  return phy.sifs + ack_air + phy.slot + 2 * propagation_delay(ch, ch.d_max_m);
}

/// Ordered (rate, attempt count) segments; counts always sum to the MAC
/// attempt budget.
struct RetryChain {
  struct Segment {
    int rate = 0;
    int attempts = 0;
  };
  std::array<Segment, 4> segments{};
  int n_segments = 0;

  void push(int rate, int attempts) {
    segments[static_cast<std::size_t>(n_segments++)] = {rate, attempts};
  }
  int total_attempts() const {
    int sum = 0;
    for (int i = 0; i < n_segments; ++i) sum += segments[static_cast<std::size_t>(i)].attempts;
    return sum;
  }
  /// Rate for the k-th attempt, 1-based. The last segment absorbs overflow.
  int rate_for_attempt(int k) const {
    for (int i = 0; i < n_segments; ++i) {
      k -= segments[static_cast<std::size_t>(i)].attempts;
      if (k <= 0) return segments[static_cast<std::size_t>(i)].rate;
    }
    return segments[static_cast<std::size_t>(n_segments - 1)].rate;
  }
};

}  // namespace wifisim

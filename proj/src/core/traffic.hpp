#pragma once

#include <algorithm>

#include "rng.hpp"
#include "units.hpp"

namespace wifisim {

/// Fixed-interval control-message source.
struct PeriodicSource {
  SimTime period = 500 * kMillisecond;
  int payload_bytes = 22;
  SimTime start_offset = 0;
};

inline SimTime periodic_next(const PeriodicSource& src, long long k) {
  return src.start_offset + k * src.period;
}

/// Bursty bulk-traffic source: exponential burst gaps and sizes with hard
/// caps, fixed intra-burst spacing.
struct BurstySource {
  double gap_mean_s = 250e-6;
  double gap_cap_s = 10.0;
  double count_mean = 100.0;
  long long count_cap = 500;
  SimTime intra_spacing = 500 * kMicrosecond;
  int payload_bytes = 1472;
};

struct BurstDraw {
  SimTime gap;       // in (0, gap_cap]
  long long count;   // in [1, count_cap]
};

inline BurstDraw burst_schedule_next(const BurstySource& src, Rng& rng) {
  const double gap_s = std::min(rng.exponential(src.gap_mean_s), src.gap_cap_s);
  const SimTime gap = std::max<SimTime>(seconds_to_simtime(gap_s), 1);
  const long long count =
      std::clamp<long long>(std::llround(rng.exponential(src.count_mean)), 1, src.count_cap);
  return {gap, count};
}

inline SimTime burst_packet_time(SimTime burst_start, const BurstySource& src, long long i) {
  return burst_start + i * src.intra_spacing;
}

/// Lazily walks a source's generation schedule in order. Nothing is queued up
/// front, so a saturated source costs O(1) memory.
class SourceCursor {
 public:
  static SourceCursor periodic(const PeriodicSource& src) {
    SourceCursor c;
    c.periodic_ = src;
    c.is_periodic_ = true;
    return c;
  }
  static SourceCursor bursty(const BurstySource& src, Rng& rng) {
    SourceCursor c;
    c.bursty_ = src;
    c.is_periodic_ = false;
    const BurstDraw d = burst_schedule_next(src, rng);
    c.burst_start_ = d.gap;  // first burst measured from t = 0
    c.burst_count_ = d.count;
    return c;
  }

  SimTime peek() const {
    if (is_periodic_) return periodic_next(periodic_, k_);
    return burst_packet_time(burst_start_, bursty_, burst_index_);
  }

  int payload_bytes() const { return is_periodic_ ? periodic_.payload_bytes : bursty_.payload_bytes; }

  /// Consumes the current packet and advances. Bursty advancement draws the
  /// next burst from the given stream when the current one is exhausted; the
  /// next gap is anchored at the last generation instant of this burst.
  void advance(Rng& rng) {
    if (is_periodic_) {
      ++k_;
      return;
    }
    ++burst_index_;
    if (burst_index_ >= burst_count_) {
      const SimTime last = burst_packet_time(burst_start_, bursty_, burst_count_ - 1);
      const BurstDraw d = burst_schedule_next(bursty_, rng);
      burst_start_ = last + d.gap;
      burst_count_ = d.count;
      burst_index_ = 0;
    }
  }

 private:
  bool is_periodic_ = true;
  PeriodicSource periodic_;
  long long k_ = 0;
  BurstySource bursty_;
  SimTime burst_start_ = 0;
  long long burst_count_ = 0;
  long long burst_index_ = 0;
};

/// UDP + IP + LLC/SNAP + MAC header + FCS overhead between an application
/// payload and the PSDU it rides in.
constexpr int kHeaderOverheadBytes = 64;

}  // namespace wifisim

#pragma once

#include <cmath>
#include <cstdint>

namespace wifisim {

// Simulated time in integer nanoseconds. All protocol timing is exact in ns;
// sub-ns quantities (propagation over a few metres) are rounded once, at
// event-scheduling time.
using SimTime = std::int64_t;

constexpr SimTime kNanosecond = 1;
constexpr SimTime kMicrosecond = 1000;
constexpr SimTime kMillisecond = 1000 * kMicrosecond;
constexpr SimTime kSecond = 1000 * kMillisecond;

constexpr double to_seconds(SimTime t) { return static_cast<double>(t) * 1e-9; }
constexpr double to_micros(SimTime t) { return static_cast<double>(t) * 1e-3; }

inline SimTime seconds_to_simtime(double s) { return static_cast<SimTime>(std::llround(s * 1e9)); }

// dBm <-> milliwatt
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace wifisim

#pragma once

#include "units.hpp"

namespace wifisim {

/// Node position over time: either fixed, or a constant-speed back-and-forth
/// sweep of the x axis between x_min and x_max (triangle wave).
struct Trajectory {
  enum class Kind : std::uint8_t { Static, Triangle } kind = Kind::Static;
  Point static_position;
  double speed_mps = 0.0;
  double x_min_m = 0.0;
  double x_max_m = 51.0;
  double orthogonal_offset_m = 0.0;

  static Trajectory fixed(Point p) {
    Trajectory t;
    t.kind = Kind::Static;
    t.static_position = p;
    return t;
  }
  static Trajectory triangle(double speed_mps, double x_min = 0.0, double x_max = 51.0,
                             double offset = 0.0);
};

Point position_at(const Trajectory& traj, SimTime t);

/// Round-half-up metre bin.
int bin_of(double x_m);

/// Full back-and-forth periods needed so each interior 1 m bin accumulates at
/// least target_dwell_per_bin of presence (2 * 1m / v per period per bin).
long long dwell_repetitions(double speed_mps, double target_dwell_per_bin_s);

/// Duration of one full period of the triangle trajectory.
SimTime triangle_period(const Trajectory& traj);

}  // namespace wifisim

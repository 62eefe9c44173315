#include "mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace wifisim {

Trajectory Trajectory::triangle(double speed_mps, double x_min, double x_max, double offset) {
  if (speed_mps <= 0.0) throw std::invalid_argument("triangle trajectory needs speed > 0");
  if (x_max <= x_min) throw std::invalid_argument("x_max must exceed x_min");
  Trajectory t;
  t.kind = Kind::Triangle;
  t.speed_mps = speed_mps;
  t.x_min_m = x_min;
  t.x_max_m = x_max;
  t.orthogonal_offset_m = offset;
  return t;
}

Point position_at(const Trajectory& traj, SimTime t) {
  if (t < 0) throw std::invalid_argument("time must be >= 0");
  if (traj.kind == Trajectory::Kind::Static) return traj.static_position;
  const double span = traj.x_max_m - traj.x_min_m;
  const double travelled = traj.speed_mps * to_seconds(t);
  double s = std::fmod(travelled, 2.0 * span);
  if (s > span) s = 2.0 * span - s;  // reflected return leg
  return Point{traj.x_min_m + s, traj.orthogonal_offset_m};
}

int bin_of(double x_m) {
  return static_cast<int>(std::floor(x_m + 0.5));
}

long long dwell_repetitions(double speed_mps, double target_dwell_per_bin_s) {
  if (speed_mps <= 0.0 || target_dwell_per_bin_s <= 0.0)
    throw std::invalid_argument("speed and dwell target must be > 0");
  // Each period spends 2 * (1 m) / v in every interior bin.
  return static_cast<long long>(std::ceil(target_dwell_per_bin_s * speed_mps / 2.0));
}

SimTime triangle_period(const Trajectory& traj) {
  if (traj.kind != Trajectory::Kind::Triangle)
    throw std::invalid_argument("period of a static trajectory");
  return seconds_to_simtime(2.0 * (traj.x_max_m - traj.x_min_m) / traj.speed_mps);
}

}  // namespace wifisim

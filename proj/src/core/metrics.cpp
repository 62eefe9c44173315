#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wifisim {

double mean_latency_us(const BinStats& stats) {
  if (stats.latencies.empty()) throw std::domain_error("mean of an empty bin");
  const SimTime sum = std::accumulate(stats.latencies.begin(), stats.latencies.end(), SimTime{0});
  return to_micros(sum) / static_cast<double>(stats.latencies.size());
}

SimTime percentile(const BinStats& stats, double p) {
  if (stats.latencies.empty()) throw std::domain_error("percentile of an empty bin");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must be in (0, 1]");
  const std::size_t n = stats.latencies.size();
  auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  std::vector<SimTime> scratch = stats.latencies;
  auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(scratch.begin(), nth, scratch.end());
  return *nth;
}

double plr(const BinStats& stats) {
  if (stats.n_generated == 0) throw std::domain_error("plr of an empty bin");
  return static_cast<double>(stats.n_dropped) / static_cast<double>(stats.n_generated);
}

std::vector<BinRow> BinTable::rows() const {
  std::vector<BinRow> out;
  out.reserve(kLastReportedBin - kFirstReportedBin + 1);
  for (int b = kFirstReportedBin; b <= kLastReportedBin; ++b) {
    const BinStats& s = at(b);
    BinRow row;
    row.bin_m = b;
    row.n_generated = s.n_generated;
    row.n_dropped = s.n_dropped;
    if (s.n_generated > 0) row.plr = plr(s);
    if (!s.latencies.empty()) {
      row.mean_latency_us = mean_latency_us(s);
      row.p99_latency_us = to_micros(percentile(s, 0.99));
    }
    out.push_back(row);
  }
  return out;
}

void BinTable::merge(const BinTable& other) {
  for (int b = kMinBin; b <= kMaxBin; ++b) {
    BinStats& dst = at(b);
    const BinStats& src = other.at(b);
    dst.n_generated += src.n_generated;
    dst.n_dropped += src.n_dropped;
    dst.n_in_flight += src.n_in_flight;
    dst.latencies.insert(dst.latencies.end(), src.latencies.begin(), src.latencies.end());
  }
}

}  // namespace wifisim

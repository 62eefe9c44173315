#pragma once

#include <optional>
#include <vector>

#include "units.hpp"

namespace wifisim {

constexpr int kMinBin = 0;
constexpr int kMaxBin = 51;
constexpr int kFirstReportedBin = 1;
constexpr int kLastReportedBin = 50;

/// Per-1-metre-bin aggregation of packet outcomes.
struct BinStats {
  std::uint64_t n_generated = 0;
  std::uint64_t n_dropped = 0;
  std::uint64_t n_in_flight = 0;
  std::vector<SimTime> latencies;

  void record_acked(SimTime latency) {
    ++n_generated;
    latencies.push_back(latency);
  }
  void record_dropped() {
    ++n_generated;
    ++n_dropped;
  }
  void record_in_flight() {
    ++n_generated;
    ++n_in_flight;
  }
};

double mean_latency_us(const BinStats& stats);

/// Nearest-rank percentile: the ceil(p * n)-th smallest sample, p in (0, 1].
SimTime percentile(const BinStats& stats, double p);

double plr(const BinStats& stats);

/// One rendered CSV row; latency fields are empty when the bin has no
/// delivered samples.
struct BinRow {
  int bin_m = 0;
  std::uint64_t n_generated = 0;
  std::uint64_t n_dropped = 0;
  std::optional<double> plr;
  std::optional<double> mean_latency_us;
  std::optional<double> p99_latency_us;
};

class BinTable {
 public:
  BinTable() : bins_(kMaxBin + 1) {}

  BinStats& at(int bin) { return bins_[static_cast<std::size_t>(bin)]; }
  const BinStats& at(int bin) const { return bins_[static_cast<std::size_t>(bin)]; }

  /// Rows for the reported bins [1, 50].
  std::vector<BinRow> rows() const;

  /// Folds another table in (used when merging per-position instances).
  void merge(const BinTable& other);

 private:
  std::vector<BinStats> bins_;
};

}  // namespace wifisim

#pragma once

#include <array>
#include <cstdint>

#include "mac.hpp"
#include "phy.hpp"
#include "rng.hpp"

namespace wifisim {

/// Per-rate bookkeeping: interval and lifetime counters, the EWMA success
/// probability, and the throughput estimate derived from it.
struct RateState {
  std::uint32_t attempts_interval = 0;
  std::uint32_t successes_interval = 0;
  std::uint64_t attempts_total = 0;
  std::uint64_t successes_total = 0;
  double ewma_prob = 0.0;
  double est_throughput = 0.0;   // ewma_prob per microsecond of airtime
  double perfect_tx_time_us = 0.0;  // single-attempt airtime of a reference packet
};

struct MinstrelParams {
  SimTime update_interval = 100 * kMillisecond;
  double ewma_weight = 0.75;
  double sampling_fraction = 0.10;
};

/// The Minstrel rate controller for one station: EWMA statistics over fixed
/// update intervals, throughput ranking, look-around sampling over a shuffled
/// round-robin, and multi-rate retry chain construction.
class Minstrel {
 public:
  Minstrel() = default;
  Minstrel(const MinstrelParams& params, int reference_psdu_bytes);

  /// True until the first stats update has run; the chain stays pinned to the
  /// lowest rate for a conservative cold start.
  bool cold_start() const { return updates_done_ == 0; }

  /// Closes the current interval: folds per-rate interval success ratios into
  /// the EWMA (rates without attempts keep theirs), resets interval counters,
  /// recomputes throughputs and the three rank indices, and reshuffles the
  /// sampling permutation.
  void update_stats(Rng& rng);

  /// Look-around decision for the next packet.
  bool should_sample(Rng& rng) const;

  /// Next look-around rate: round-robin over the interval's shuffled
  /// permutation, skipping the current max-throughput rate.
  int next_sample_rate();

  /// Retry chain for one packet. Normal: 3 attempts at max_tp, 2 at max_tp2,
  /// 2 at max_prob, 1 at the lowest rate. When sampling, the sample takes a
  /// single attempt placed before max_tp if its airtime is shorter, after
  /// otherwise, and the lowest-rate tail grows to keep the budget at 8.
  RetryChain build_chain(bool sampling, int sample_rate) const;

  /// Credits one attempt per chain position consumed, in order; the final
  /// attempt is a success iff the packet was acked.
  void record_result(const RetryChain& chain, int attempts_used, bool acked);

  int max_tp() const { return max_tp_; }
  int max_tp2() const { return max_tp2_; }
  int max_prob() const { return max_prob_; }
  const RateState& rate(int i) const { return rates_[static_cast<std::size_t>(i)]; }
  std::uint64_t updates_done() const { return updates_done_; }

  /// Test hook: overwrite a rate's EWMA and recompute the ranking.
  void force_ewma(int rate_index, double ewma);

 private:
  void recompute_ranks();

  MinstrelParams params_;
  std::array<RateState, kNumMcs> rates_{};
  int max_tp_ = 0;
  int max_tp2_ = 0;
  int max_prob_ = 0;
  std::uint64_t updates_done_ = 0;
  std::array<int, kNumMcs> sample_order_{};
  int sample_cursor_ = 0;
};

}  // namespace wifisim

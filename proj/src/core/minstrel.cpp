#include "minstrel.hpp"

#include <stdexcept>

namespace wifisim {

Minstrel::Minstrel(const MinstrelParams& params, int reference_psdu_bytes) : params_(params) {
  for (int i = 0; i < kNumMcs; ++i) {
    auto& r = rates_[static_cast<std::size_t>(i)];
    r.perfect_tx_time_us = frame_duration_us(mcs(i), reference_psdu_bytes);
  }
  for (int i = 0; i < kNumMcs; ++i) sample_order_[static_cast<std::size_t>(i)] = i;
  recompute_ranks();
}

void Minstrel::update_stats(Rng& rng) {
  for (auto& r : rates_) {
    if (r.attempts_interval > 0) {
      const double p = static_cast<double>(r.successes_interval) / r.attempts_interval;
      r.ewma_prob = params_.ewma_weight * r.ewma_prob + (1.0 - params_.ewma_weight) * p;
    }
    r.attempts_interval = 0;
    r.successes_interval = 0;
  }
  recompute_ranks();
  // Fisher-Yates reshuffle of the look-around order; the cursor keeps walking
  // so successive samples cover all rates.
  for (int i = kNumMcs - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(i)));
    std::swap(sample_order_[static_cast<std::size_t>(i)], sample_order_[static_cast<std::size_t>(j)]);
  }
  ++updates_done_;
}

void Minstrel::recompute_ranks() {
  for (auto& r : rates_) r.est_throughput = r.ewma_prob / r.perfect_tx_time_us;

  auto better_tp = [this](int a, int b) {
    const auto& ra = rates_[static_cast<std::size_t>(a)];
    const auto& rb = rates_[static_cast<std::size_t>(b)];
    if (ra.est_throughput != rb.est_throughput) return ra.est_throughput > rb.est_throughput;
    // Equal estimates: prefer the rate that would carry more if it worked,
    // i.e. the shorter airtime; index as the final deterministic tie-break.
    if (ra.perfect_tx_time_us != rb.perfect_tx_time_us)
      return ra.perfect_tx_time_us < rb.perfect_tx_time_us;
    return a < b;
  };

  int best = 0;
  for (int i = 1; i < kNumMcs; ++i)
    if (better_tp(i, best)) best = i;
  max_tp_ = best;

  int second = best == 0 ? 1 : 0;
  for (int i = 0; i < kNumMcs; ++i)
    if (i != best && better_tp(i, second)) second = i;
  max_tp2_ = second;

  int prob = 0;
  for (int i = 1; i < kNumMcs; ++i)
    if (rates_[static_cast<std::size_t>(i)].ewma_prob > rates_[static_cast<std::size_t>(prob)].ewma_prob)
      prob = i;
  max_prob_ = prob;
}

bool Minstrel::should_sample(Rng& rng) const {
  return rng.next_double() < params_.sampling_fraction;
}

int Minstrel::next_sample_rate() {
  for (int tries = 0; tries < kNumMcs; ++tries) {
    const int candidate = sample_order_[static_cast<std::size_t>(sample_cursor_)];
    sample_cursor_ = (sample_cursor_ + 1) % kNumMcs;
    if (candidate != max_tp_) return candidate;
  }
  throw std::logic_error("sample permutation exhausted");
}

RetryChain Minstrel::build_chain(bool sampling, int sample_rate) const {
  RetryChain chain;
  if (cold_start()) {
    chain.push(0, 8);
    return chain;
  }
  if (!sampling) {
    chain.push(max_tp_, 3);
    chain.push(max_tp2_, 2);
    chain.push(max_prob_, 2);
    chain.push(0, 1);
    return chain;
  }
  if (sample_rate == max_tp_) throw std::invalid_argument("sample rate equals max_tp");
  const double sample_tx = rates_[static_cast<std::size_t>(sample_rate)].perfect_tx_time_us;
  const double best_tx = rates_[static_cast<std::size_t>(max_tp_)].perfect_tx_time_us;
  if (sample_tx < best_tx) {
    // The probe might be an upgrade; try it first.
    chain.push(sample_rate, 1);
    chain.push(max_tp_, 3);
  } else {
    // Keep the cost of a bad probe behind the known-good rate.
    chain.push(max_tp_, 3);
    chain.push(sample_rate, 1);
  }
  chain.push(max_prob_, 2);
  chain.push(0, 2);
  return chain;
}

void Minstrel::record_result(const RetryChain& chain, int attempts_used, bool acked) {
  if (attempts_used < 1 || attempts_used > chain.total_attempts())
    throw std::invalid_argument("attempts_used outside chain budget");
  int remaining = attempts_used;
  for (int i = 0; i < chain.n_segments && remaining > 0; ++i) {
    const auto& seg = chain.segments[static_cast<std::size_t>(i)];
    const int used = std::min(remaining, seg.attempts);
    auto& r = rates_[static_cast<std::size_t>(seg.rate)];
    r.attempts_interval += static_cast<std::uint32_t>(used);
    r.attempts_total += static_cast<std::uint64_t>(used);
    remaining -= used;
    if (remaining == 0 && acked) {
      r.successes_interval += 1;
      r.successes_total += 1;
    }
  }
}

void Minstrel::force_ewma(int rate_index, double ewma) {
  rates_[static_cast<std::size_t>(rate_index)].ewma_prob = ewma;
  recompute_ranks();
}

}  // namespace wifisim

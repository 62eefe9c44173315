#pragma once

#include <cstdint>
#include <string_view>

namespace wifisim {

// xoshiro256++ stream, seeded through splitmix64. Chosen over <random>
// engines so that draw sequences are identical on every platform and
// independent streams can be derived from (master seed, node, purpose)
// labels.
class Rng {
 public:
  Rng() : Rng(0x9e3779b97f4a7c15ull) {}
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_double();

  // Uniform integer in [0, n] inclusive. n >= 0.
  std::uint64_t uniform_int(std::uint64_t n);

  // Exponential with the given mean, in [0, inf).
  double exponential(double mean);

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

// Derives an independent, reproducible stream for (master_seed, node id,
// purpose label). Different labels give statistically independent streams.
Rng derive_stream(std::uint64_t master_seed, std::uint64_t node_id, std::string_view purpose);

// Convenience: first output of the derived stream, for seeding sub-instances.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t node_id, std::string_view purpose);

}  // namespace wifisim

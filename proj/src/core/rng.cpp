#include "rng.hpp"

#include <cmath>

namespace wifisim {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t fnv1a64(std::uint64_t node_id, std::string_view purpose) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<std::uint8_t>(node_id >> (8 * i)));
  for (char c : purpose) mix(static_cast<std::uint8_t>(c));
  return h;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
  // splitmix64 never yields four zero words for any seed, but keep the
  // generator well-defined regardless.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  if (n == UINT64_MAX) return next_u64();
  const std::uint64_t bound = n + 1;
  // Rejection sampling over the top of the range keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = next_u64();
  while (v >= limit) v = next_u64();
  return v % bound;
}

double Rng::exponential(double mean) {
  // u in [0,1) so log1p(-u) is finite.
  return -mean * std::log1p(-next_double());
}

Rng derive_stream(std::uint64_t master_seed, std::uint64_t node_id, std::string_view purpose) {
  std::uint64_t sm = master_seed ^ fnv1a64(node_id, purpose);
  // One extra scramble so adjacent master seeds do not give adjacent states.
  const std::uint64_t s = splitmix64(sm);
  return Rng(s);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t node_id, std::string_view purpose) {
  return derive_stream(master_seed, node_id, purpose).next_u64();
}

}  // namespace wifisim

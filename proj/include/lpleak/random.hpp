#pragma once
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lpleak {

using Rng = std::mt19937_64;

/// Fixed offsets for deriving sub-seeds from one run seed.
namespace seed_stream {
inline constexpr std::uint64_t test_shuffle = 0x01;
inline constexpr std::uint64_t validation_draw = 0x02;
inline constexpr std::uint64_t negatives = 0x03;
inline constexpr std::uint64_t training = 0x100;  // + grid index
inline constexpr std::uint64_t auc_sampling = 0x04;
}  // namespace seed_stream

/// splitmix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed) ^ mix64(stream + 0x5851f42d4c957f2dULL));
}

/// Uniform integer in [0, n). Unbiased, and identical across standard
/// library implementations (unlike std::uniform_int_distribution).
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % n;
}

/// Uniform real in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng) { return double(rng() >> 11) * 0x1.0p-53; }

/// Fisher-Yates shuffle driven by uniform_index.
template <class T>
void shuffle(std::span<T> xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::size_t j = uniform_index(rng, i);
    std::swap(xs[i - 1], xs[j]);
  }
}

}  // namespace lpleak

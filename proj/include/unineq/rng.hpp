#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace unineq {

/// Identifier written into every campaign report.
inline constexpr std::string_view kPrngId = "mt19937_64+splitmix64-streams";

/// One step of splitmix64; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Independent seed for sub-stream `stream` of a campaign seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seedable generator with portable conversions (no std distributions, whose
/// output differs between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform index in [0, n); n must be positive.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  std::size_t range(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace unineq

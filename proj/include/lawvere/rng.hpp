#pragma once

#include <cstdint>
#include <random>

namespace lawvere {

/// Default seed for every sampled check; override with --seed on the CLI.
inline constexpr std::uint64_t default_seed = 0x5eed2026;

/// Seeded deterministic generator. Bounded draws use plain modulo so the
/// produced sequence is identical on every platform (std::mt19937_64 has a
/// fixed output sequence; the distribution adaptors in <random> do not).
class Rng {
public:
  explicit Rng(std::uint64_t seed = default_seed) : gen_(seed) {}

  /// Uniform-ish draw in [0, n). Requires n > 0.
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

  std::int64_t below64(std::int64_t n) {
    return static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(n));
  }

  /// Draw in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + below64(hi - lo + 1); }

private:
  std::mt19937_64 gen_;
};

}  // namespace lawvere

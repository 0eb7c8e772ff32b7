#pragma once

#include <cstdint>
#include <random>

namespace istforge {

/// Deterministic 64-bit random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Seeds are scrambled through SplitMix64 before seeding, and child
/// streams are derived with split(), so a trial identified by (seed, stream)
/// always sees the same numbers regardless of thread count or platform. All
/// sampling helpers are implemented here rather than through <random>
/// distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// True with probability p.
  bool bernoulli(double p) { return uniform() < p; }

  /// Independent child stream; the same (seed, stream) pair always yields the same child.
  Rng split(std::uint64_t stream) const;

  /// In-place Fisher-Yates shuffle.
  template <typename Container>
  void shuffle(Container& c) {
    for (std::size_t i = c.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(c[i - 1], c[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace istforge

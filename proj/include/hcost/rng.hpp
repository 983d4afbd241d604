#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace hcost {

/// splitmix64 finalizer; used to turn (master seed, stream index) pairs into
/// independent engine seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of stream `index` under `master`: splitmix64(master ^ splitmix64(index + 1)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Portable seeded generator: std::mt19937_64 (whose output sequence is fixed
/// by the standard) seeded with splitmix64(seed). Conversions to doubles and
/// bounded integers are done here rather than by std distributions, whose
/// algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  /// Independent generator for sub-task `index` of an experiment.
  static Rng stream(std::uint64_t master, std::uint64_t index) { return Rng(derive_seed(master, index)); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hcost

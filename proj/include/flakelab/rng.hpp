#pragma once

#include <cstdint>
#include <string_view>

namespace flakelab {

//! xoshiro256++ generator with splitmix64 seeding. All distributions are
//! hand-rolled so streams are reproducible across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  //! Uniform double in [0, 1).
  double uniform();
  //! Uniform double in [lo, hi). Returns lo when lo == hi.
  double uniform(double lo, double hi);
  //! Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  //! Standard normal via Box-Muller.
  double normal();
  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  //! Fisher-Yates shuffle of [first, last).
  template <class RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const auto n = static_cast<std::int64_t>(last - first);
    for (std::int64_t i = n - 1; i > 0; --i) {
      const auto j = uniform_int(0, i);
      using std::swap;
      swap(first[i], first[j]);
    }
  }

 private:
  std::uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

//! Stable stream derivation: hash of (master seed, purpose tag, index).
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index);

}  // namespace flakelab

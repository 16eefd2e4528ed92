#pragma once

#include <cstdint>
#include <random>

#include "fkglab/rational.hpp"

namespace fkglab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t worker_seed(std::uint64_t seed, int worker) {
  return splitmix64(seed + 0x632be59bd9b4e019ULL * (worker + 1));
}

// mt19937_64 behind helpers that avoid std distributions, which are not
// pinned by the standard. Same seed, same platform, same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform on [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t x = eng_();
      if (x >= lim) return x % n;
    }
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return eng_() >> 63; }

 private:
  std::mt19937_64 eng_;
};

// floor(p * 2^64) for p in [0, 1]; a uniform draw u succeeds iff u < result.
// Exact whenever p has a power-of-two denominator up to 2^64; otherwise the
// bias is below 2^-63. p = 1 is reported through the always flag.
struct BernoulliThreshold {
  std::uint64_t threshold = 0;
  bool always = false;
};

BernoulliThreshold bernoulli_threshold(const Rat& p);

inline bool bernoulli_hit(const BernoulliThreshold& t, std::uint64_t draw) {
  return t.always || draw < t.threshold;
}

// 99% two-sided Hoeffding half width for a frequency out of `samples` draws.
double hoeffding_half_width(std::uint64_t samples);

}  // namespace fkglab

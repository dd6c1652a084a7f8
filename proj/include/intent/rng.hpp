#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace intent {

// All randomness in the pipeline flows from a single root seed through
// derive_seed(root, path...). Distributions are implemented by hand on top
// of mt19937_64 because the std:: distribution algorithms are
// implementation-defined and would break cross-platform reproducibility.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Named sub-stream derivation: each component mixes its own tag plus any
// loop indices (fold, scheme, epoch, ...) into the root seed.
inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(root);
  for (std::uint64_t p : path) s = splitmix64(s ^ splitmix64(p));
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform double in [0, 1), 53 random bits
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0, n), rejection sampling
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Fisher-Yates; std::shuffle is not portable across standard libraries
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// stream tags for derive_seed paths
namespace seed_tag {
inline constexpr std::uint64_t kEmbeddingInit = 0x01;
inline constexpr std::uint64_t kWeightInit = 0x02;
inline constexpr std::uint64_t kShuffle = 0x03;
inline constexpr std::uint64_t kDropout = 0x04;
inline constexpr std::uint64_t kFold = 0x05;
inline constexpr std::uint64_t kScheme = 0x06;
inline constexpr std::uint64_t kLda = 0x07;
inline constexpr std::uint64_t kSample = 0x08;
}  // namespace seed_tag

}  // namespace intent

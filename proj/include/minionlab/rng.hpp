#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace minionlab {

/// SplitMix64. Used everywhere randomness is needed so that seeded runs are
/// reproducible across platforms and worker counts (std engines/distributions
/// are not bit-stable across library versions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for a (seed, index) pair.
  static Rng derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed);
    std::uint64_t a = r.next();
    Rng s(index ^ 0x9e3779b97f4a7c15ULL);
    return Rng(a ^ s.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return next() & 1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Uniform permutation of {0, ..., n-1}.
  std::vector<unsigned> permutation(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    shuffle(p);
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace minionlab

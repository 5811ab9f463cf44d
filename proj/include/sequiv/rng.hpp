#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace sequiv {

// Deterministic splitmix64 generator. Sampling goes through the helpers
// below instead of <random> distributions, whose output is
// implementation-defined; every randomized routine in the library must be a
// pure function of (inputs, seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at the scale
  // used here; determinism is what matters.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  // Picks an index with probability weights[i] / sum(weights). Zero-weight
  // entries are never picked; the total must be positive.
  std::size_t weighted(const std::vector<int>& weights) {
    long total = 0;
    for (int w : weights) total += w;
    long r = uniform(0, total - 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      r -= weights[i];
      if (r < 0) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::uint64_t state_;
};

// Stable 64-bit FNV-1a content hash; used for corpus manifests and for
// deriving per-entry seeds from names.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace sequiv

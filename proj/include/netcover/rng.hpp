#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace netcover {

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

/// Deterministic generator (splitmix64). Used everywhere instead of the
/// std:: distributions, whose outputs are not bit-specified across
/// implementations; identical seeds must give identical bytes on any host.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform in [0,n). Multiply-shift with rejection, so exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      unsigned __int128 m =
          static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
      if (static_cast<std::uint64_t>(m) >= threshold)
        return static_cast<std::uint64_t>(m >> 64);
    }
  }

  /// Fisher-Yates, descending.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Splits an independent stream seed off a base seed. Chain calls to mix in
/// several coordinates: derive_seed(derive_seed(base, stream), index).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t word) {
  return mix64((base + kGolden) ^ (word * 0xbf58476d1ce4e5b9ull + kGolden));
}

}  // namespace netcover

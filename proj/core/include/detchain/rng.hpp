#ifndef DETCHAIN_RNG_HPP
#define DETCHAIN_RNG_HPP

#include <cstdint>

namespace detchain {

// splitmix64: small, fast, and bit-stable across platforms. All seeded
// sampling in the library goes through this so that certificates replay
// byte-for-byte.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be > 0. Rejection-free modulo is
  // fine here: bound is tiny against 2^64 for every use in this library.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Deterministic seed derivation for sub-computations (chain steps,
// reseed attempts). Mixes the label in before drawing.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
  SplitMix64 rng(seed ^ (0x5851f42d4c957f2dULL * (label + 1)));
  return rng.next();
}

}  // namespace detchain

#endif

#pragma once

#include <cstdint>

#include "artin/field.hpp"

namespace artin {

/// SplitMix64 with explicit bounded sampling, so streams are identical on every platform
/// and standard library (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), rejection sampled; n > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0xd1b54a32d192ed03ULL)); }

 private:
  std::uint64_t state_;
};

/// Uniform element of GF(p); over Q an integer in [-9, 9].
inline PrimeField::Elem random_elem(const PrimeField& f, Rng& rng) {
  return static_cast<PrimeField::Elem>(rng.below(f.characteristic()));
}
inline RationalField::Elem random_elem(const RationalField&, Rng& rng) {
  return mpq_class(static_cast<long>(rng.below(19)) - 9);
}

}  // namespace artin

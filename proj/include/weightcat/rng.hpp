// Deterministic 64-bit PRNG (the splitmix64 scheme) for seeded sampling.
// Unlike the distribution templates in <random>, the output stream is fixed
// by the seed alone, identical on every platform and standard library —
// which is what makes seeded reports byte-reproducible.

#pragma once

#include <cstdint>

namespace weightcat {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform over {lo, ..., hi}, inclusive.
  int range(int lo, int hi) { return lo + (int)below((std::uint64_t)(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

}  // namespace weightcat

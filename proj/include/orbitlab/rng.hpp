#pragma once

#include <array>
#include <cstdint>

#include "orbitlab/rational.hpp"

namespace orbitlab {

// Threefry2x64 (20 rounds), a counter-based generator: output is a pure
// function of (key, counter), so any sample can be produced independently of
// all others. That is what makes runs reproducible across worker counts.
class Threefry2x64 {
 public:
  using ctr_type = std::array<std::uint64_t, 2>;

  static ctr_type block(ctr_type counter, ctr_type key) {
    constexpr std::uint64_t kParity = 0x1BD11BDAA9FC1A22ull;
    constexpr int kRot[8] = {16, 42, 12, 31, 16, 32, 24, 21};
    std::uint64_t ks[3] = {key[0], key[1], kParity ^ key[0] ^ key[1]};
    std::uint64_t x0 = counter[0] + ks[0];
    std::uint64_t x1 = counter[1] + ks[1];
    for (int round = 0; round < 20; ++round) {
      x0 += x1;
      int r = kRot[round & 7];
      x1 = (x1 << r) | (x1 >> (64 - r));
      x1 ^= x0;
      if ((round & 3) == 3) {
        int s = round / 4 + 1;
        x0 += ks[s % 3];
        x1 += ks[(s + 1) % 3] + std::uint64_t(s);
      }
    }
    return {x0, x1};
  }
};

// One 64-bit word addressed by (seed, stream, index). `stream` separates
// independent uses of the same seed (coordinates, bootstrap draws, ...).
inline std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Threefry2x64::block({index, 0}, {seed, stream})[0];
}

// Dyadic rational uniform in [0,1) with 64 fractional bits, exact.
inline Q rng_unit_q(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Q(Z(rng_u64(seed, stream, index)), zpow(Z(2), 64));
}

// Uniform in [-half_width, half_width], exact dyadic.
inline Q rng_symmetric_q(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, const Q& half_width) {
  return (rng_unit_q(seed, stream, index) * 2 - 1) * half_width;
}

inline double rng_unit_double(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return double(rng_u64(seed, stream, index) >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by fixed-point multiply; bias is < 2^-64 and
// irrelevant for bootstrap resampling.
inline std::uint64_t rng_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, std::uint64_t n) {
  return std::uint64_t((__uint128_t(rng_u64(seed, stream, index)) * n) >> 64);
}

}  // namespace orbitlab

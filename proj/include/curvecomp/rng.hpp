#pragma once

#include <array>
#include <cstdint>

#include "curvecomp/common.hpp"

namespace curvecomp {

// Philox4x32-10 counter-based generator. Every (key, counter) pair maps to
// four independent 32-bit words, so parallel consumers can draw from
// disjoint counters without sharing state. Verified against the published
// known-answer vectors in the test suite.
namespace philox {

struct Block {
  std::array<std::uint32_t, 4> w{};
};

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline Block encrypt(std::array<std::uint32_t, 4> ctr,
                     std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  Block out;
  out.w = ctr;
  return out;
}

}  // namespace philox

// splitmix64 finalizer; used to derive well-mixed subkeys from
// (seed, stream id) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream));
}

// A keyed random stream: draws are pure functions of (key, index), so any
// draw may be evaluated from any thread in any order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_{split_key(key)} {}

  // Uniform double in (0, 1), 53-bit resolution.
  double uniform(std::uint64_t index) const {
    const philox::Block b = block(index);
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(b.w[0]) << 32) | b.w[1];
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  // Second independent uniform from the same counter block.
  double uniform_alt(std::uint64_t index) const {
    const philox::Block b = block(index);
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(b.w[2]) << 32) | b.w[3];
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the inverse CDF; one normal per counter index keeps
  // the stream layout independent of consumption order.
  double normal(std::uint64_t index) const { return normal_quantile(uniform(index)); }

  double normal_alt(std::uint64_t index) const {
    return normal_quantile(uniform_alt(index));
  }

 private:
  static std::array<std::uint32_t, 2> split_key(std::uint64_t k) {
    return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  }

  philox::Block block(std::uint64_t index) const {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        0u, 0u};
    return philox::encrypt(ctr, key_);
  }

  std::array<std::uint32_t, 2> key_;
};

// Sequential convenience wrapper over a keyed stream.
class SequentialRng {
 public:
  explicit SequentialRng(std::uint64_t key) : stream_(key) {}
  double uniform() { return stream_.uniform(next_++); }
  double normal() { return stream_.normal(next_++); }

 private:
  CounterRng stream_;
  std::uint64_t next_ = 0;
};

}  // namespace curvecomp

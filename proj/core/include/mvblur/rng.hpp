// Copyright Contributors to the mvblur Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>

namespace mvblur {

/// Splittable counter-based random stream (splitmix64 core).
///
/// Unlike std::mt19937 + std::uniform_real_distribution, every draw here is
/// fully specified by this header, so datasets regenerate bit-identically
/// across platforms and thread counts. Independent streams are derived with
/// fork()/mix() rather than by sharing one sequential generator.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : seed_(seed), state_(seed) {}

  /// Seed this stream was constructed with (recorded in dataset manifests).
  uint64_t seed() const { return seed_; }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be > 0.
  int uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(n)) >> 64);
  }

  /// Fair coin; +1 or -1.
  double sign() { return (next_u64() & 1ull) ? 1.0 : -1.0; }

  /// Standard normal via Box-Muller (two uniforms per draw).
  double normal();

  /// Derive an independent child stream. Does not advance this stream.
  SplitRng fork(uint64_t tag) const { return SplitRng(mix({seed_, tag})); }

  /// Collapse a list of 64-bit words into one well-mixed seed.
  static uint64_t mix(std::initializer_list<uint64_t> words);

  /// FNV-1a over a string, for folding scene ids into seeds.
  static uint64_t hash_string(const char* s);

 private:
  uint64_t seed_;
  uint64_t state_;
};

}  // namespace mvblur

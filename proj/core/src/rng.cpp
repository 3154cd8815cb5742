// Copyright Contributors to the mvblur Project
// SPDX-License-Identifier: Apache-2.0

#include "mvblur/rng.hpp"

#include <cmath>
#include <numbers>

namespace mvblur {

double SplitRng::normal() {
  // u1 in (0, 1] so the log is finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t SplitRng::mix(std::initializer_list<uint64_t> words) {
  uint64_t h = 0x2545f4914f6cdd1dull;
  for (uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    h = h ^ (h >> 31);
  }
  return h;
}

uint64_t SplitRng::hash_string(const char* s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) {
    h ^= static_cast<uint64_t>(static_cast<unsigned char>(*s));
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mvblur

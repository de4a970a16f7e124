// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace glyphgan {

/// Deterministic random source. All draws are implemented on top of the raw
/// mt19937_64 stream (no std distributions) so sequences are stable across
/// standard libraries, and the full state round-trips through checkpoints.
class Rng {
 public:
  Rng() : engine_(0x9e3779b97f4a7c15ULL) {}
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller; stateless (no cached spare).
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// k distinct values from {0..n-1} in random order.
  std::vector<int> sample_without_replacement(int n, int k);

  /// Derives an independent stream, e.g. one per dataset entry, so that
  /// parallel generation stays order-independent.
  static Rng derive(uint64_t seed, uint64_t stream);

  std::string serialize() const;
  void deserialize(const std::string& s);

 private:
  std::mt19937_64 engine_;
};

}  // namespace glyphgan

// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace engage {

/// Seeded random stream. The engine's output sequence is fixed by the C++
/// standard and the conversions below are written out by hand, so a given
/// seed yields the same draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer on [lo, hi] (rejection sampling, no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Stable per-run seed: FNV-1a over (master seed as 8 little-endian bytes,
/// user id, 0x00, condition label, 0x00, run index as 8 little-endian bytes),
/// then mix64.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view user_id,
                          std::string_view condition_label, std::uint64_t run_index);

}  // namespace engage

// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/rng.hpp"

#include <stdexcept>

namespace engage {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_byte(std::uint64_t& h, unsigned char b) {
  h ^= b;
  h *= kFnvPrime;
}

void fnv_u64(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) fnv_byte(h, static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

void fnv_str(std::uint64_t& h, std::string_view s) {
  for (char c : s) fnv_byte(h, static_cast<unsigned char>(c));
  fnv_byte(h, 0);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view user_id,
                          std::string_view condition_label, std::uint64_t run_index) {
  std::uint64_t h = kFnvOffset;
  fnv_u64(h, master_seed);
  fnv_str(h, user_id);
  fnv_str(h, condition_label);
  fnv_u64(h, run_index);
  return mix64(h);
}

}  // namespace engage

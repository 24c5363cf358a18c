#pragma once

#include <cstdint>

#include "tg/errors.hpp"
#include "tg/graph.hpp"

namespace tg {

// Checked 64-bit arithmetic; throws arithmetic_error on overflow instead of
// wrapping. Index values stay tiny at the scales this tool handles, but the
// contract is explicit.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("integer overflow in add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("integer overflow in mul");
  return r;
}

/// Exact degree-based descriptors of one graph.
struct IndexBundle {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t m1 = 0;  // sum of squared degrees
  std::int64_t m2 = 0;  // sum over edges of endpoint degree products
  std::int64_t f = 0;   // sum of cubed degrees
};

std::int64_t first_zagreb(const Graph& g);
std::int64_t second_zagreb(const Graph& g);
std::int64_t forgotten(const Graph& g);

IndexBundle index_bundle(const Graph& g);

}  // namespace tg

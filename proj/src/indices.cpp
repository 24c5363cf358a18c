#include "tg/indices.hpp"

namespace tg {

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t sum = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::int64_t d = g.degree(v);
    sum = checked_add(sum, checked_mul(d, d));
  }
  return sum;
}

std::int64_t second_zagreb(const Graph& g) {
  std::int64_t sum = 0;
  for (auto [a, b] : g.edges())
    sum = checked_add(sum, checked_mul(g.degree(a), g.degree(b)));
  return sum;
}

std::int64_t forgotten(const Graph& g) {
  std::int64_t sum = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::int64_t d = g.degree(v);
    sum = checked_add(sum, checked_mul(d, checked_mul(d, d)));
  }
  return sum;
}

IndexBundle index_bundle(const Graph& g) {
  IndexBundle b;
  b.n = g.vertex_count();
  b.m = g.edge_count();
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::int64_t d = g.degree(v);
    b.m1 = checked_add(b.m1, checked_mul(d, d));
    b.f = checked_add(b.f, checked_mul(d, checked_mul(d, d)));
  }
  for (auto [a, e] : g.edges())
    b.m2 = checked_add(b.m2, checked_mul(g.degree(a), g.degree(e)));
  return b;
}

}  // namespace tg

#include "tg/transform.hpp"

#include <algorithm>
#include <sstream>

namespace tg {

std::vector<Sign> parse_signs(const std::string& text, int expected_len) {
  if (expected_len >= 0 && static_cast<int>(text.size()) != expected_len)
    throw validation_error("sign string \"" + text + "\" has length " +
                           std::to_string(text.size()) + ", expected " +
                           std::to_string(expected_len));
  std::vector<Sign> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      out.push_back(Sign::plus);
    else if (c == '-')
      out.push_back(Sign::minus);
    else
      throw validation_error(std::string("invalid sign character '") + c + "'");
  }
  return out;
}

void TransformSpec::validate() const {
  if (r < 1 || s < 1) throw validation_error("TransformSpec requires r >= 1 and s >= 1");
  if (static_cast<int>(x.size()) != r)
    throw validation_error("x has length " + std::to_string(x.size()) + ", expected r=" +
                           std::to_string(r));
  if (static_cast<int>(y.size()) != s)
    throw validation_error("y has length " + std::to_string(y.size()) + ", expected s=" +
                           std::to_string(s));
  if (static_cast<int>(z.size()) != r * s)
    throw validation_error("z has " + std::to_string(z.size()) + " entries, expected r*s=" +
                           std::to_string(r * s));
}

void FamilySpec::validate() const {
  if (r < 1 || s < 1) throw validation_error("FamilySpec requires r >= 1 and s >= 1");
  if (p < 0 || p > r) throw validation_error("FamilySpec requires 0 <= p <= r");
  if (q < 0 || q > s) throw validation_error("FamilySpec requires 0 <= q <= s");
}

int TransformedGraph::vertex_id(const LabeledVertex& v) const {
  int id;
  if (v.kind == LabeledVertex::Kind::vertex_layer) {
    if (v.copy < 1 || v.origin < 1 || v.origin > base_n)
      throw validation_error("label not in transformed vertex set");
    id = (v.copy - 1) * base_n + v.origin;
  } else {
    if (v.copy < 1 || v.origin < 0 || v.origin >= base_m)
      throw validation_error("label not in transformed vertex set");
    id = copies_r * base_n + (v.copy - 1) * base_m + v.origin + 1;
  }
  if (id > static_cast<int>(labels.size()) || labels[id - 1] != v)
    throw validation_error("label not in transformed vertex set");
  return id;
}

std::string TransformedGraph::label_text(const Graph& base, const LabeledVertex& v) const {
  std::ostringstream out;
  if (v.kind == LabeledVertex::Kind::vertex_layer) {
    out << 'v' << v.copy << '_' << v.origin;
  } else {
    auto [a, b] = base.edges()[v.origin];
    out << 'e' << v.copy << '_' << a << '-' << b;
  }
  return out.str();
}

TransformedGraph generalized_transform(const Graph& g, const TransformSpec& spec) {
  spec.validate();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int total = spec.r * n + spec.s * m;

  TransformedGraph out;
  out.base_n = n;
  out.base_m = m;
  out.copies_r = spec.r;
  out.copies_s = spec.s;
  out.labels.reserve(total);
  for (int gc = 1; gc <= spec.r; ++gc)
    for (int v = 1; v <= n; ++v)
      out.labels.push_back({LabeledVertex::Kind::vertex_layer, gc, v});
  for (int h = 1; h <= spec.s; ++h)
    for (int e = 0; e < m; ++e)
      out.labels.push_back({LabeledVertex::Kind::edge_layer, h, e});

  auto vid = [n](int gc, int v) { return (gc - 1) * n + v; };
  auto eid = [&](int h, int e) { return spec.r * n + (h - 1) * m + e + 1; };

  std::vector<Edge> edges;
  // within one vertex copy
  for (int gc = 1; gc <= spec.r; ++gc) {
    const bool want = spec.x[gc - 1] == Sign::plus;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (g.adjacent(a, b) == want) edges.emplace_back(vid(gc, a), vid(gc, b));
  }
  // within one edge copy; two edges of Q are adjacent iff they share an endpoint
  for (int h = 1; h <= spec.s; ++h) {
    const bool want = spec.y[h - 1] == Sign::plus;
    for (int i = 0; i < m; ++i) {
      auto [a1, b1] = g.edges()[i];
      for (int j = i + 1; j < m; ++j) {
        auto [a2, b2] = g.edges()[j];
        const bool share = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
        if (share == want) edges.emplace_back(eid(h, i), eid(h, j));
      }
    }
  }
  // vertex copy g vs edge copy h
  for (int gc = 1; gc <= spec.r; ++gc) {
    for (int h = 1; h <= spec.s; ++h) {
      const bool want = spec.zat(gc, h) == Sign::plus;
      for (int v = 1; v <= n; ++v) {
        for (int e = 0; e < m; ++e) {
          auto [a, b] = g.edges()[e];
          const bool incident = v == a || v == b;
          if (incident == want) edges.emplace_back(vid(gc, v), eid(h, e));
        }
      }
    }
  }
  out.graph = Graph::from_edges(total, edges);
  return out;
}

TransformedGraph classical_transform(const Graph& g, Sign u, Sign v, Sign w) {
  TransformSpec spec;
  spec.r = 1;
  spec.s = 1;
  spec.x = {u};
  spec.y = {v};
  spec.z = {w};
  return generalized_transform(g, spec);
}

TransformSpec family_to_spec(const FamilySpec& fs) {
  fs.validate();
  TransformSpec spec;
  spec.r = fs.r;
  spec.s = fs.s;
  spec.x.assign(fs.r, Sign::minus);
  for (int g = 0; g < fs.p; ++g) spec.x[g] = Sign::plus;
  spec.y.assign(fs.s, Sign::minus);
  for (int h = 0; h < fs.q; ++h) spec.y[h] = Sign::plus;
  spec.z.assign(static_cast<std::size_t>(fs.r) * fs.s,
                fs.family == Family::plus_incidence ? Sign::plus : Sign::minus);
  return spec;
}

namespace {
void check_perm(const std::vector<int>& perm, int size, const char* which) {
  if (static_cast<int>(perm.size()) != size)
    throw validation_error(std::string(which) + " permutation has wrong length");
  std::vector<char> hit(size, 0);
  for (int v : perm) {
    if (v < 0 || v >= size || hit[v])
      throw validation_error(std::string(which) + " is not a permutation");
    hit[v] = 1;
  }
}
}  // namespace

TransformSpec permute_copies(const TransformSpec& spec, const std::vector<int>& vperm,
                             const std::vector<int>& eperm) {
  spec.validate();
  check_perm(vperm, spec.r, "vertex-copy");
  check_perm(eperm, spec.s, "edge-copy");
  TransformSpec out;
  out.r = spec.r;
  out.s = spec.s;
  out.x.resize(spec.r);
  out.y.resize(spec.s);
  out.z.resize(spec.z.size());
  for (int g = 0; g < spec.r; ++g) out.x[g] = spec.x[vperm[g]];
  for (int h = 0; h < spec.s; ++h) out.y[h] = spec.y[eperm[h]];
  for (int g = 0; g < spec.r; ++g)
    for (int h = 0; h < spec.s; ++h)
      out.z[static_cast<std::size_t>(g) * spec.s + h] =
          spec.z[static_cast<std::size_t>(vperm[g]) * spec.s + eperm[h]];
  return out;
}

std::int64_t expected_degree(const Graph& g, const TransformSpec& spec,
                             const LabeledVertex& v) {
  spec.validate();
  const std::int64_t n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  if (v.kind == LabeledVertex::Kind::vertex_layer) {
    if (v.copy < 1 || v.copy > spec.r || v.origin < 1 || v.origin > n)
      throw validation_error("vertex not in transformed set");
    const std::int64_t d = g.degree(v.origin);
    std::int64_t deg = spec.x[v.copy - 1] == Sign::plus ? d : n - 1 - d;
    for (int h = 1; h <= spec.s; ++h)
      deg += spec.zat(v.copy, h) == Sign::plus ? d : m - d;
    return deg;
  }
  if (v.copy < 1 || v.copy > spec.s || v.origin < 0 || v.origin >= m)
    throw validation_error("vertex not in transformed set");
  auto [b, dlt] = g.edges()[v.origin];
  const std::int64_t dsum = g.degree(b) + g.degree(dlt);
  std::int64_t deg = spec.y[v.copy - 1] == Sign::plus ? dsum - 2 : m - 1 - (dsum - 2);
  for (int gc = 1; gc <= spec.r; ++gc)
    deg += spec.zat(gc, v.copy) == Sign::plus ? 2 : n - 2;
  return deg;
}

std::string to_dot(const TransformedGraph& tg, const Graph& base) {
  std::ostringstream out;
  out << "graph transformed {\n";
  for (std::size_t i = 0; i < tg.labels.size(); ++i)
    out << "  " << (i + 1) << " [label=\"" << tg.label_text(base, tg.labels[i]) << "\"];\n";
  for (auto [a, b] : tg.graph.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tg/errors.hpp"
#include "tg/graph.hpp"

namespace tg {

enum class Sign : char { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Parses a string of '+'/'-' characters; throws validation_error on any other
// character or on a length mismatch (expected_len < 0 skips the length check).
std::vector<Sign> parse_signs(const std::string& text, int expected_len = -1);

/// Full sign specification of Q_rs^{xyz}: per-vertex-copy signs x, per-edge-copy
/// signs y, and the r x s incidence sign matrix z (row-major).
struct TransformSpec {
  int r = 1;
  int s = 1;
  std::vector<Sign> x;
  std::vector<Sign> y;
  std::vector<Sign> z;

  Sign zat(int g, int h) const { return z[static_cast<std::size_t>(g - 1) * s + (h - 1)]; }

  // Throws validation_error unless r,s >= 1 and the sign vectors have
  // lengths r, s, r*s.
  void validate() const;
};

/// Identity of one vertex of a transformed graph: which layer, which copy,
/// and which original vertex (or canonical edge index) it came from.
struct LabeledVertex {
  enum class Kind : char { vertex_layer, edge_layer };
  Kind kind;
  int copy;    // g in [1,r] for vertex layers, h in [1,s] for edge layers
  int origin;  // vertex id for vertex layers, 0-based EdgeId for edge layers

  bool operator==(const LabeledVertex&) const = default;
};

/// A constructed transformation graph together with the label table mapping
/// its integer vertex ids back to layered identities. Ids are assigned
/// deterministically: vertex layers first by (copy, original id), then edge
/// layers by (copy, EdgeId).
struct TransformedGraph {
  Graph graph;
  std::vector<LabeledVertex> labels;  // labels[i] describes vertex id i+1
  int base_n = 0;
  int base_m = 0;
  int copies_r = 0;
  int copies_s = 0;

  // Integer id of a label; throws validation_error if out of range.
  int vertex_id(const LabeledVertex& v) const;

  // DOT node label: "v<g>_<id>" or "e<h>_<a>-<b>".
  std::string label_text(const Graph& base, const LabeledVertex& v) const;
};

/// Classical transformation graph Q^{uvw} on V u E: u governs vertex-vertex
/// adjacency, v edge-edge adjacency (shared endpoint), w vertex-edge incidence.
TransformedGraph classical_transform(const Graph& g, Sign u, Sign v, Sign w);

/// (r,s)-generalised transformation graph. Within one vertex copy, adjacency
/// follows x_g; within one edge copy, y_h; between vertex copy g and edge copy
/// h, incidence follows z_gh. Distinct vertex copies (and distinct edge
/// copies) are never adjacent.
TransformedGraph generalized_transform(const Graph& g, const TransformSpec& spec);

enum class Family : char { plus_incidence, minus_incidence };

inline const char* family_name(Family f) {
  return f == Family::plus_incidence ? "plus-incidence" : "minus-incidence";
}

/// The two closed-form families Q_rs^{x(p)y(q)+-}: x has + in the first p
/// slots, y in the first q, z is uniform with the family's incidence sign.
struct FamilySpec {
  Family family;
  int r = 1;
  int s = 1;
  int p = 0;
  int q = 0;

  void validate() const;
};

TransformSpec family_to_spec(const FamilySpec& fs);

/// Reindexes copies: result.x[g] = x[vperm[g]], result.y[h] = y[eperm[h]],
/// z rows/columns follow. Permutations are 0-based (new index -> old index).
TransformSpec permute_copies(const TransformSpec& spec, const std::vector<int>& vperm,
                             const std::vector<int>& eperm);

/// Closed-form degree of one transformed vertex, computed from base degrees
/// only (no construction). For family specs this reduces to the per-case
/// degree formulas; it is checked exhaustively against constructions.
std::int64_t expected_degree(const Graph& g, const TransformSpec& spec,
                             const LabeledVertex& v);

std::string to_dot(const TransformedGraph& tg, const Graph& base);

}  // namespace tg

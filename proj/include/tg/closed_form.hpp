#pragma once

#include <cstdint>
#include <string>

#include "tg/errors.hpp"
#include "tg/indices.hpp"
#include "tg/transform.hpp"

namespace tg {

/// Arguments of the closed-form M1 expressions: base-graph descriptors plus
/// the family parameters (r, s, p, q).
struct ClosedFormInput {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  std::int64_t f = 0;
  std::int64_t r = 1;
  std::int64_t s = 1;
  std::int64_t p = 0;
  std::int64_t q = 0;

  void validate() const;
};

ClosedFormInput make_input(const IndexBundle& b, const FamilySpec& fs);

/// The two evaluation routes for every formula: "as_printed" evaluates the
/// published display verbatim; "derived" evaluates the expansion obtained by
/// summing the squared per-vertex degree expressions. Disagreements between
/// the two are the erratum signal.
enum class Variant : char { as_printed, derived };

// M1 of Q_rs^{x(p)y(q)+}.
std::int64_t m1_plus_family(const ClosedFormInput& in, Variant variant);

// M1 of Q_rs^{x(p)y(q)-}. The as-printed route reads the display's undefined
// symbols a, b as n, m.
std::int64_t m1_minus_family(const ClosedFormInput& in, Variant variant);

// The symbolic delta as_printed - derived for the plus family:
// -(r-p) * 2m(n-1)(s-1).
std::int64_t plus_family_printed_delta(const ClosedFormInput& in);

/// Boundary cases (p in {0,r}, q in {0,s}) named by their first two signs;
/// the third sign is the family's incidence sign.
enum class Corner : char { plus_plus, plus_minus, minus_plus, minus_minus };

std::string corner_name(Corner c, Family f);

// Corollary lines for the plus family (+++, +-+, -++, --+). The derived route
// delegates to m1_plus_family; throws validation_error if (p,q) disagree with
// the corner.
std::int64_t corollary_plus(const ClosedFormInput& in, Corner corner, Variant variant);

// Corollary lines for the minus family (++-, +--, -+-, ---).
std::int64_t corollary_minus(const ClosedFormInput& in, Corner corner, Variant variant);

}  // namespace tg

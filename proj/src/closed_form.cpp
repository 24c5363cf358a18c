#include "tg/closed_form.hpp"

#include <limits>

namespace tg {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw arithmetic_error("closed-form value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

i128 sq(i128 v) { return v * v; }

}  // namespace

void ClosedFormInput::validate() const {
  if (r < 1 || s < 1) throw validation_error("closed form requires r >= 1 and s >= 1");
  if (p < 0 || p > r) throw validation_error("closed form requires 0 <= p <= r");
  if (q < 0 || q > s) throw validation_error("closed form requires 0 <= q <= s");
  if (n < 0 || m < 0) throw validation_error("closed form requires n, m >= 0");
}

ClosedFormInput make_input(const IndexBundle& b, const FamilySpec& fs) {
  fs.validate();
  ClosedFormInput in;
  in.n = b.n;
  in.m = b.m;
  in.m1 = b.m1;
  in.m2 = b.m2;
  in.f = b.f;
  in.r = fs.r;
  in.s = fs.s;
  in.p = fs.p;
  in.q = fs.q;
  return in;
}

std::int64_t m1_plus_family(const ClosedFormInput& in, Variant variant) {
  in.validate();
  const i128 n = in.n, m = in.m, M1 = in.m1, M2 = in.m2, F = in.f;
  const i128 r = in.r, s = in.s, p = in.p, q = in.q;
  if (variant == Variant::derived) {
    // sum of squares of the four per-vertex degree expressions
    i128 v = p * sq(s + 1) * M1;
    v += (r - p) * (sq(s - 1) * M1 + n * sq(n - 1) + 4 * m * (n - 1) * (s - 1));
    v += q * (F + 2 * M2 + 4 * (r - 1) * M1 + m * sq(2 * r - 2));
    v += (s - q) * (F + 2 * M2 - 2 * (m + 2 * r + 1) * M1 + m * sq(m + 2 * r + 1));
    return narrow(v);
  }
  // plus-family theorem display, verbatim
  i128 coef = p * sq(s + 1) + (r - p) * sq(s - 1) + 4 * q * (r - 1) +
              2 * (q - s) * (m + 2 * r + 1);
  i128 v = coef * M1 + 2 * s * M2 + s * F;
  v += (r - p) * (n * sq(n - 1) + 2 * m * (n - 1) * (s - 1));
  v += m * q * sq(2 * r - 2);
  v += m * (s - q) * sq(m + 2 * r + 1);
  return narrow(v);
}

std::int64_t plus_family_printed_delta(const ClosedFormInput& in) {
  in.validate();
  const i128 r = in.r, p = in.p, s = in.s, m = in.m, n = in.n;
  return narrow(-(r - p) * 2 * m * (n - 1) * (s - 1));
}

std::int64_t m1_minus_family(const ClosedFormInput& in, Variant variant) {
  in.validate();
  const i128 n = in.n, m = in.m, M1 = in.m1, M2 = in.m2, F = in.f;
  const i128 r = in.r, s = in.s, p = in.p, q = in.q;
  const i128 c = r * n - 2 * r - 2;       // edge-layer offset, y_h = +
  const i128 k = m + r * (n - 2) + 1;     // edge-layer offset, y_h = -
  if (variant == Variant::derived) {
    i128 v = p * (sq(1 - s) * M1 + n * sq(s) * sq(m) + 4 * s * sq(m) * (1 - s));
    v += (r - p) * (sq(s + 1) * M1 + n * sq(n + s * m - 1) -
                    4 * m * (s + 1) * (n + s * m - 1));
    v += q * (F + 2 * M2 + 2 * c * M1 + m * sq(c));
    v += (s - q) * (F + 2 * M2 - 2 * k * M1 + m * sq(k));
    return narrow(v);
  }
  // minus-family theorem display with its undefined a, b read as n, m
  i128 coef = p * sq(1 - s) + (r - p) * sq(s + 1) + 2 * q * c + 2 * (q - s) * k;
  i128 v = coef * M1 + 2 * s * M2 + s * F;
  v += (r - p) * (n * sq(n + s * m - 1) - 4 * m * (n + s * m - 1) * (s + 1));
  v += p * s * sq(m) * (n * s + 4 * (1 - s));
  v += m * q * sq(c);
  v += m * (s - q) * sq(k);
  return narrow(v);
}

std::string corner_name(Corner c, Family f) {
  std::string out;
  out += (c == Corner::plus_plus || c == Corner::plus_minus) ? '+' : '-';
  out += (c == Corner::plus_plus || c == Corner::minus_plus) ? '+' : '-';
  out += f == Family::plus_incidence ? '+' : '-';
  return out;
}

namespace {

void check_corner(const ClosedFormInput& in, Corner corner) {
  const bool x_plus = corner == Corner::plus_plus || corner == Corner::plus_minus;
  const bool y_plus = corner == Corner::plus_plus || corner == Corner::minus_plus;
  if (in.p != (x_plus ? in.r : 0))
    throw validation_error("corollary corner disagrees with p");
  if (in.q != (y_plus ? in.s : 0))
    throw validation_error("corollary corner disagrees with q");
}

}  // namespace

std::int64_t corollary_plus(const ClosedFormInput& in, Corner corner, Variant variant) {
  in.validate();
  check_corner(in, corner);
  if (variant == Variant::derived) return m1_plus_family(in, Variant::derived);
  const i128 n = in.n, m = in.m, M1 = in.m1, M2 = in.m2, F = in.f;
  const i128 r = in.r, s = in.s;
  const i128 common = 2 * s * M2 + s * F;
  i128 v;
  switch (corner) {
    case Corner::plus_plus:  // +++
      v = (r * (sq(s) + 6 * s + 1) - 4 * s) * M1 + common + 4 * m * s * sq(r - 1);
      break;
    case Corner::plus_minus:  // +-+
      v = (r * sq(s + 1) - 2 * s * (m + 2 * r + 1)) * M1 + common +
          m * s * sq(m + 2 * r + 1);
      break;
    case Corner::minus_plus:  // -++
      v = (r * sq(s - 1) - 2 * s * (m + 2 * r + 1)) * M1 + common + n * r * sq(n - 1) +
          2 * m * r * (n - 1) * (s - 1) + 4 * m * s * sq(r - 1);
      break;
    case Corner::minus_minus:  // --+
      v = (r * sq(s - 1) - 4 * s * r - 4 * s) * M1 + common + n * r * sq(n - 1) +
          2 * m * r * (n - 1) * (s - 1) + m * s * sq(m + 2 * r + 1);
      break;
  }
  return narrow(v);
}

std::int64_t corollary_minus(const ClosedFormInput& in, Corner corner, Variant variant) {
  in.validate();
  check_corner(in, corner);
  if (variant == Variant::derived) return m1_minus_family(in, Variant::derived);
  const i128 n = in.n, m = in.m, M1 = in.m1, M2 = in.m2, F = in.f;
  const i128 r = in.r, s = in.s;
  const i128 c = n * r - 2 * r - 2;
  const i128 k = m + r * (n - 2) + 1;
  const i128 common = 2 * s * M2 + s * F;
  i128 v;
  switch (corner) {
    case Corner::plus_plus:  // ++-
      v = (r * sq(1 - s) + 2 * s * c) * M1 + common + n * r * sq(m) * sq(s) +
          4 * r * s * sq(m) * (1 - s) + s * m * sq(c);
      break;
    case Corner::plus_minus:  // +--
      v = (r * sq(1 - s) - 2 * s * k) * M1 + common + n * r * sq(m) * sq(s) +
          4 * r * s * sq(m) * (1 - s) + s * m * sq(k);
      break;
    case Corner::minus_plus:  // -+-
      v = (r * sq(s + 1) + 2 * s * c) * M1 + common + n * r * sq(n + s * m - 1) -
          4 * m * r * (s + 1) * (n + s * m - 1) + m * s * sq(c);
      break;
    case Corner::minus_minus:  // ---
      v = (r * sq(s + 1) - 2 * s * k) * M1 + common + n * r * sq(n + s * m - 1) -
          4 * m * r * (n + m * s - 1) * (s + 1) + m * s * sq(k);
      break;
  }
  return narrow(v);
}

}  // namespace tg

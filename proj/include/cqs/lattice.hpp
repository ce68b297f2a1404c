#pragma once

#include <cqs/rational.hpp>

#include <compare>
#include <vector>

namespace cqs {

namespace detail {
struct n_tag;
struct m_tag;
}  // namespace detail

/**
 * A point of a rank-2 lattice. The tag keeps the lattice N and its dual M
 * apart at the type level; the pairing below is the only operation taking
 * one vector from each side. Mixing the sides up produces code that happens
 * to work on symmetric examples and silently fails later, so the compiler
 * is asked to rule it out.
 */
template <class Tag>
struct Vec2 {
  Int x{}, y{};

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend std::strong_ordering operator<=>(const Vec2& a, const Vec2& b) {
    if (auto c = a.x.compare(b.x); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.y.compare(b.y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(const Int& c, const Vec2& v) { return {c * v.x, c * v.y}; }

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_primitive() const {
    if (is_zero()) return false;
    return gcd(abs(x), abs(y)) == 1;
  }

  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

using NVec = Vec2<detail::n_tag>;
using MVec = Vec2<detail::m_tag>;

// A rational point of M_R; houses discrepancy data.
struct RVec {
  Rat a, b;
  friend bool operator==(const RVec&, const RVec&) = default;
};

inline Int pairing(const NVec& u, const MVec& w) { return u.x * w.x + u.y * w.y; }
inline Rat pairing(const NVec& u, const RVec& r) { return Rat(u.x) * r.a + Rat(u.y) * r.b; }

template <class Tag>
Int det2(const Vec2<Tag>& u, const Vec2<Tag>& v) {
  return u.x * v.y - u.y * v.x;
}

template <class Tag>
Vec2<Tag> primitive(const Vec2<Tag>& v) {
  if (v.is_zero()) throw std::domain_error("zero vector has no direction");
  Int g = gcd(abs(v.x), abs(v.y));
  return {v.x / g, v.y / g};
}

// Lattice length of the segment from a to b: b - a = len * p with p primitive.
template <class Tag>
Int lattice_length(const Vec2<Tag>& a, const Vec2<Tag>& b) {
  if (a == b) return 0;
  Vec2<Tag> d = b - a;
  return gcd(abs(d.x), abs(d.y));
}

/**
 * A strictly convex, two-dimensional cone in N with primitive generators.
 * Always stored positively oriented; the constructor swaps the generators
 * if they come in clockwise.
 */
class Cone {
 public:
  Cone(NVec g0, NVec g1);

  const NVec& gen0() const { return gen0_; }
  const NVec& gen1() const { return gen1_; }
  Int index() const { return det2(gen0_, gen1_); }

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  NVec gen0_, gen1_;
};

// The dual of a Cone, living in M. gen0 vanishes on the primal gen0.
struct DualCone {
  MVec gen0, gen1;
};

DualCone dual_cone(const Cone& c);

/**
 * Minimal generating set of the semigroup (cone ∩ lattice), ordered along
 * the compact edges of conv((cone ∩ lattice) \ {0}) from the gen0 side to
 * the gen1 side. First and last entries are the ray generators.
 *
 * Computed via the continued-fraction recursion on the normal form of the
 * cone; the brute-force lattice enumeration lives in oracles.hpp.
 */
std::vector<NVec> hilbert_basis(const Cone& c);
std::vector<MVec> hilbert_basis(const DualCone& c);

/**
 * All primitive lattice points strictly inside the triangle conv(0, p, r),
 * i.e. satisfying the three strict half-plane inequalities. Sorted by
 * increasing angle from p toward r. Requires det2(p, r) > 0 and p, r
 * primitive.
 */
std::vector<NVec> interior_primitive_points(const NVec& p, const NVec& r);

namespace detail {

// Integer 2x2 matrix acting on column vectors, used for lattice
// normal forms. Row-major entries.
struct Mat2 {
  Int a, b, c, d;

  template <class Tag>
  Vec2<Tag> apply(const Vec2<Tag>& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }
  Int det() const { return a * d - b * c; }
  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  // Inverse of a unimodular matrix (det = ±1).
  Mat2 inverse() const;
};

// g = gcd(|a|,|b|) together with s, t such that s*a + t*b = g.
struct Egcd {
  Int g, s, t;
};
Egcd egcd(Int a, Int b);

Int mod_inverse(const Int& q, const Int& n);

// Unimodular change of coordinates taking gen0 to (1,0) and gen1 to
// (-q, n) with n = det2(gen0, gen1) > 0 and 0 <= q < n.
struct ConeNormalForm {
  Int n, q;
  Mat2 to_std;    // original coordinates -> normal coordinates
  Mat2 from_std;  // inverse
};

template <class Tag>
ConeNormalForm cone_normal_form(const Vec2<Tag>& g0, const Vec2<Tag>& g1);

// Hilbert basis for an arbitrarily oriented pair of primitive generators,
// ordered from g0 toward g1.
template <class Tag>
std::vector<Vec2<Tag>> hilbert_basis_generic(const Vec2<Tag>& g0, const Vec2<Tag>& g1);

}  // namespace detail

}  // namespace cqs

#include <cqs/oracles.hpp>

#include <algorithm>
#include <set>

namespace cqs::oracles {

namespace {

// Lattice points of conv(0, g0, g1) minus the origin, in the closed cone.
// Hilbert basis elements all lie in this triangle.
template <class Tag>
std::vector<Vec2<Tag>> candidate_points(const Vec2<Tag>& g0, const Vec2<Tag>& g1) {
  Int xlo = std::min({Int(0), g0.x, g1.x}), xhi = std::max({Int(0), g0.x, g1.x});
  Int ylo = std::min({Int(0), g0.y, g1.y}), yhi = std::max({Int(0), g0.y, g1.y});
  Vec2<Tag> chord = g1 - g0;
  std::vector<Vec2<Tag>> pts;
  for (Int x = xlo; x <= xhi; ++x) {
    for (Int y = ylo; y <= yhi; ++y) {
      Vec2<Tag> v{x, y};
      if (v.is_zero()) continue;
      if (det2(g0, v) < 0 || det2(v, g1) < 0) continue;        // outside the cone
      if (det2(chord, v - g0) < 0) continue;                   // beyond the chord
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

template <class Tag>
std::vector<Vec2<Tag>> brute_basis(Vec2<Tag> g0, Vec2<Tag> g1) {
  bool flipped = det2(g0, g1) < 0;
  if (flipped) std::swap(g0, g1);

  std::vector<Vec2<Tag>> pts = candidate_points(g0, g1);
  std::set<Vec2<Tag>> in_triangle(pts.begin(), pts.end());
  auto in_cone = [&](const Vec2<Tag>& v) {
    return !v.is_zero() && det2(g0, v) >= 0 && det2(v, g1) >= 0;
  };

  // irreducible: not a sum of two nonzero semigroup elements. Any such
  // summand of a triangle point again lies in the triangle.
  std::vector<Vec2<Tag>> basis;
  for (const auto& v : pts) {
    bool reducible = false;
    for (const auto& s : pts) {
      if (reducible) break;
      Vec2<Tag> rest = v - s;
      reducible = in_cone(rest) && !rest.is_zero() && in_triangle.count(rest) > 0;
    }
    if (!reducible) basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(),
            [](const Vec2<Tag>& a, const Vec2<Tag>& b) { return det2(a, b) > 0; });
  if (flipped) std::reverse(basis.begin(), basis.end());
  return basis;
}

}  // namespace

std::vector<NVec> brute_hilbert_basis(const Cone& c) { return brute_basis(c.gen0(), c.gen1()); }

std::vector<MVec> brute_hilbert_basis(const DualCone& c) { return brute_basis(c.gen0, c.gen1); }

std::vector<Chain> exhaustive_zero_chains(int m, int max_entry) {
  // DFS over suffixes, evaluating the continued fraction incrementally
  // with plain 64-bit fractions (values stay tiny at these sizes).
  std::vector<Chain> out;
  std::vector<long long> stack_num(static_cast<std::size_t>(m) + 1);
  std::vector<long long> stack_den(static_cast<std::size_t>(m) + 1);
  std::vector<int> entries(static_cast<std::size_t>(m));

  // build chains right to left: position m-1 down to 0
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos < 0) {
      if (stack_num[0] == 0) {
        Chain k(entries.begin(), entries.end());
        out.push_back(std::move(k));
      }
      return;
    }
    // a zero chain of length >= 2 has positive entries; only the
    // singleton chain (0) may contain a zero
    for (int c = (m == 1 ? 0 : 1); c <= max_entry; ++c) {
      entries[static_cast<std::size_t>(pos)] = c;
      if (pos == m - 1) {
        stack_num[static_cast<std::size_t>(pos)] = c;
        stack_den[static_cast<std::size_t>(pos)] = 1;
      } else {
        long long n = stack_num[static_cast<std::size_t>(pos) + 1];
        long long d = stack_den[static_cast<std::size_t>(pos) + 1];
        // every proper tail of a zero chain is a positive rational
        // (it equals q_{i-1}/q_i); the denominator is positive by
        // construction, so positivity is a numerator test
        if (n <= 0) continue;
        stack_num[static_cast<std::size_t>(pos)] = c * n - d;
        stack_den[static_cast<std::size_t>(pos)] = n;
      }
      self(self, pos - 1);
    }
  };
  rec(rec, m - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_ks_family(const CyclicQuotient& cq) {
  Int q_inv = detail::mod_inverse(cq.q, cq.n);
  for (Int m = 1; m * m <= cq.n; ++m) {
    if (cq.n % (m * m) != 0) continue;
    Int d = cq.n / (m * m);
    for (Int a = 1; a <= cq.n; ++a) {
      if (gcd(a, m) != 1) continue;
      Int target = (d * m * a - 1) % cq.n;
      if (target < 0) target += cq.n;
      if (target == cq.q || target == q_inv) return true;
    }
  }
  return false;
}

}  // namespace cqs::oracles

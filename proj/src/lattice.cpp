#include <cqs/lattice.hpp>

#include <cqs/contfrac.hpp>

#include <algorithm>

namespace cqs {

Cone::Cone(NVec g0, NVec g1) : gen0_(std::move(g0)), gen1_(std::move(g1)) {
  if (!gen0_.is_primitive() || !gen1_.is_primitive())
    throw std::invalid_argument("cone generators must be primitive");
  Int d = det2(gen0_, gen1_);
  if (d == 0) throw std::invalid_argument("cone generators must span the plane");
  if (d < 0) std::swap(gen0_, gen1_);
}

DualCone dual_cone(const Cone& c) {
  auto perp_nonneg_on = [](const NVec& vanish_on, const NVec& positive_on) {
    MVec w{vanish_on.y, -vanish_on.x};
    if (pairing(positive_on, w) < 0) w = -w;
    if (pairing(positive_on, w) == 0)
      throw internal_error("dual generator vanishes on both rays");
    return w;
  };
  return {perp_nonneg_on(c.gen0(), c.gen1()), perp_nonneg_on(c.gen1(), c.gen0())};
}

namespace detail {

Mat2 Mat2::inverse() const {
  Int dd = det();
  if (dd != 1 && dd != -1) throw internal_error("inverse of a non-unimodular matrix");
  return {d / dd, -b / dd, -c / dd, a / dd};
}

Egcd egcd(Int a, Int b) {
  // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division keeps the invariant
    r0 -= q * r1;
    s0 -= q * s1;
    t0 -= q * t1;
    std::swap(r0, r1);
    std::swap(s0, s1);
    std::swap(t0, t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

Int mod_inverse(const Int& q, const Int& n) {
  auto [g, s, t] = egcd(q, n);
  if (g != 1) throw std::domain_error("not invertible");
  Int inv = s % n;
  if (inv < 0) inv += n;
  return inv;
}

template <class Tag>
ConeNormalForm cone_normal_form(const Vec2<Tag>& g0, const Vec2<Tag>& g1) {
  Int n = det2(g0, g1);
  if (n <= 0) throw internal_error("normal form expects positive orientation");
  // complete g0 to a basis: (u,v) with g0.x * v - g0.y * u = 1
  auto [g, s, t] = egcd(g0.x, g0.y);
  if (g != 1) throw internal_error("normal form expects a primitive generator");
  Int u = -t, v = s;
  // B = [g0 | (u,v)] has det 1; in B-coordinates g1 = (alpha, n)
  Mat2 b_inv{v, -u, -g0.y, g0.x};
  Int alpha = v * g1.x - u * g1.y;
  Int q = (-alpha) % n;
  if (q < 0) q += n;
  Int shear = (-q - alpha) / n;
  Mat2 s_mat{1, shear, 0, 1};
  Mat2 to_std = s_mat.mul(b_inv);
  return {n, q, to_std, to_std.inverse()};
}

template ConeNormalForm cone_normal_form(const NVec&, const NVec&);
template ConeNormalForm cone_normal_form(const MVec&, const MVec&);

template <class Tag>
std::vector<Vec2<Tag>> hilbert_basis_generic(const Vec2<Tag>& g0, const Vec2<Tag>& g1) {
  if (det2(g0, g1) < 0) {
    auto rev = hilbert_basis_generic(g1, g0);
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  ConeNormalForm nf = cone_normal_form(g0, g1);
  if (nf.n == 1) return {g0, g1};
  // in normal coordinates the basis is v^0..v^{r+1}, driven by the
  // expansion n/q = [b_1,...,b_r] via v^{j-1} + v^{j+1} = b_j v^j
  std::vector<Int> b = expand_hj(Rat(nf.n, nf.q));
  std::vector<Vec2<Tag>> pts;
  pts.push_back({1, 0});
  pts.push_back({0, 1});
  for (const Int& bj : b) {
    auto& prev = pts[pts.size() - 2];
    auto& curr = pts.back();
    pts.push_back(bj * curr - prev);
  }
  if (pts.back() != Vec2<Tag>{-nf.q, nf.n})
    throw internal_error("Hilbert basis recursion missed the far generator");
  for (auto& p : pts) p = nf.from_std.apply(p);
  if (pts.front() != g0 || pts.back() != g1)
    throw internal_error("Hilbert basis endpoints are not the ray generators");
  return pts;
}

template std::vector<NVec> hilbert_basis_generic(const NVec&, const NVec&);
template std::vector<MVec> hilbert_basis_generic(const MVec&, const MVec&);

}  // namespace detail

std::vector<NVec> hilbert_basis(const Cone& c) {
  return detail::hilbert_basis_generic(c.gen0(), c.gen1());
}

std::vector<MVec> hilbert_basis(const DualCone& c) {
  return detail::hilbert_basis_generic(c.gen0, c.gen1);
}

std::vector<NVec> interior_primitive_points(const NVec& p, const NVec& r) {
  if (!p.is_primitive() || !r.is_primitive())
    throw std::invalid_argument("triangle vertices must be primitive");
  if (det2(p, r) <= 0) throw std::invalid_argument("triangle must be positively oriented");
  Int xlo = std::min({Int(0), p.x, r.x}), xhi = std::max({Int(0), p.x, r.x});
  Int ylo = std::min({Int(0), p.y, r.y}), yhi = std::max({Int(0), p.y, r.y});
  NVec chord = r - p;
  std::vector<NVec> out;
  for (Int x = xlo; x <= xhi; ++x) {
    for (Int y = ylo; y <= yhi; ++y) {
      NVec v{x, y};
      if (det2(p, v) <= 0) continue;          // strictly off the edge 0-p
      if (det2(v, r) <= 0) continue;          // strictly off the edge 0-r
      if (det2(chord, v - p) <= 0) continue;  // strictly below the chord p-r
      if (!v.is_primitive()) continue;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end(), [](const NVec& a, const NVec& b) { return det2(a, b) > 0; });
  return out;
}

}  // namespace cqs

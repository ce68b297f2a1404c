#include <cqs/invariants.hpp>

#include <algorithm>

namespace cqs {

CyclicQuotient::CyclicQuotient(Int n_, Int q_) : n(std::move(n_)), q(std::move(q_)) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (q <= 0 || q >= n) throw std::invalid_argument("q must satisfy 0 < q < n");
  if (gcd(n, q) != 1) throw std::invalid_argument("gcd(n,q) must be 1");
}

Cone cone_of(const CyclicQuotient& cq) {
  return Cone{NVec{1, 0}, NVec{-cq.q, cq.n}};
}

std::optional<CyclicQuotient> normal_form(const Cone& c) {
  auto nf = detail::cone_normal_form(c.gen0(), c.gen1());
  if (nf.n == 1) return std::nullopt;
  // the cone determines q only up to q <-> q^{-1} mod n; report the minimum
  Int q_inv = detail::mod_inverse(nf.q, nf.n);
  return CyclicQuotient{nf.n, std::min(nf.q, q_inv)};
}

CqsInvariants invariants(const CyclicQuotient& cq) {
  CqsInvariants inv{cq, {}, {}, 0, {}, {}};
  inv.a_chain = expand_hj(Rat(cq.n, cq.n - cq.q));
  inv.b_chain = expand_hj(Rat(cq.n, cq.q));
  inv.e = static_cast<int>(inv.a_chain.size()) + 2;

  // w^1 = [0,1], w^2 = [1,1], then w^{i+1} = a_i w^i - w^{i-1}
  inv.w_points = {MVec{0, 1}, MVec{1, 1}};
  for (const Int& a : inv.a_chain) {
    MVec next = a * inv.w_points.back() - inv.w_points[inv.w_points.size() - 2];
    inv.w_points.push_back(next);
  }
  // v^0 = (1,0), v^1 = (0,1), then v^{j+1} = b_j v^j - v^{j-1}
  inv.v_points = {NVec{1, 0}, NVec{0, 1}};
  for (const Int& b : inv.b_chain) {
    NVec next = b * inv.v_points.back() - inv.v_points[inv.v_points.size() - 2];
    inv.v_points.push_back(next);
  }

  if (inv.w_points.back() != MVec{cq.n, cq.q} || inv.v_points.back() != NVec{-cq.q, cq.n})
    throw internal_error("invariant recursion endpoints are off");
  if (hilbert_basis(dual_cone(cone_of(cq))) != inv.w_points)
    throw internal_error("w-points disagree with the dual Hilbert basis");
  return inv;
}

TType t_classify(const Cone& c) {
  TType out;
  out.normal = normal_form(c);
  if (!out.normal) {
    out.kind = TType::Kind::smooth;
    return out;
  }
  // roof normal: the primitive w with <gen0,w> = <gen1,w> = d > 0
  NVec diff = c.gen1() - c.gen0();
  MVec w = primitive(MVec{diff.y, -diff.x});
  Int d = pairing(c.gen0(), w);
  if (d < 0) {
    w = -w;
    d = -d;
  }
  if (d == 0 || pairing(c.gen1(), w) != d)
    throw internal_error("roof normal construction failed");
  Int len = lattice_length(c.gen0(), c.gen1());
  if (len % d == 0) {
    out.kind = TType::Kind::t;
    out.milnor = len / d - 1;
  } else {
    out.kind = TType::Kind::not_t;
  }
  return out;
}

}  // namespace cqs

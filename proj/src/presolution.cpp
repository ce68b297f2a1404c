#include <cqs/presolution.hpp>

#include <algorithm>

namespace cqs {

namespace {

bool chain_admissible(const CqsInvariants& inv, const Chain& k) {
  if (static_cast<int>(k.size()) != inv.e - 2) return false;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < 0 || k[i] > inv.a_chain[i]) return false;
  return is_zero_chain(k);
}

// Unique lattice solution of <u,wa> = qa, <u,wb> = qb. Consecutive Hilbert
// basis elements form a basis of M, so the system is unimodular.
NVec roof_intersection(const MVec& wa, const Int& qa, const MVec& wb, const Int& qb) {
  Int d = wa.x * wb.y - wa.y * wb.x;
  if (d != 1 && d != -1) throw internal_error("roof normals do not form a lattice basis");
  Int x = (qa * wb.y - wa.y * qb) / d;
  Int y = (wa.x * qb - qa * wb.x) / d;
  return {x, y};
}

void dfs_admissible(const std::vector<Int>& a, std::size_t pos, const Int& q_prev,
                    const Int& q_cur, Chain& partial, std::vector<Chain>& out) {
  // choosing k_i for i = pos + 2; q_prev = q_{i-1}, q_cur = q_i
  std::size_t len = a.size();
  for (Int k = 1; k <= a[pos]; ++k) {
    Int q_next = k * q_cur - q_prev;
    bool last = pos + 1 == len;
    // zero chains have q_i >= 1 strictly between the endpoints,
    // q_{e-1} = 1 and q_e = 0
    if (last) {
      if (q_cur != 1 || q_next != 0) continue;
    } else {
      if (q_next < 1) continue;
    }
    partial.push_back(k);
    if (last)
      out.push_back(partial);
    else
      dfs_admissible(a, pos + 1, q_cur, q_next, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Chain> admissible_chains(const CyclicQuotient& cq) {
  CqsInvariants inv = invariants(cq);
  if (inv.e == 3) return {Chain{Int(0)}};  // K_1 = {(0)}, and 0 <= a_2 always
  std::vector<Chain> out;
  Chain partial;
  dfs_admissible(inv.a_chain, 0, Int(0), Int(1), partial, out);
  // DFS in increasing k order emits lexicographically sorted chains
  for (const Chain& k : out)
    if (!is_zero_chain(k)) throw internal_error("admissible DFS produced a non-zero chain");
  return out;
}

PResolutionRecord build_presolution(const CyclicQuotient& cq, const Chain& k) {
  CqsInvariants inv = invariants(cq);
  if (!chain_admissible(inv, k)) throw std::invalid_argument("inadmissible chain");

  int e = inv.e;
  QSequence qs = q_sequence(k);
  const auto& w = inv.w_points;

  // vertex between tau^i and tau^{i+1}, for i = 1..e-1 (1-based i)
  std::vector<NVec> vertex(static_cast<std::size_t>(e));  // vertex[i], i in 1..e-1
  for (int i = 1; i <= e - 1; ++i)
    vertex[i] = roof_intersection(w[i - 1], qs[i - 1], w[i], qs[i]);
  if (vertex[1] != NVec{1, 0} || vertex[e - 1] != NVec{-cq.q, cq.n})
    throw internal_error("P-resolution boundary vertices are off");

  PResolutionRecord rec{cq, k, qs, Fan{cq, {}}, {}};
  auto a_of = [&](int i) { return inv.a_chain[static_cast<std::size_t>(i) - 2]; };
  auto k_of = [&](int i) { return k[static_cast<std::size_t>(i) - 2]; };

  for (int i = 1; i <= e; ++i) {
    ConeRecord cr;
    cr.index = i;
    cr.w = w[i - 1];
    cr.height = qs[i - 1];
    cr.boundary = (i == 1 || i == e);
    cr.left = vertex[std::max(i - 1, 1)];
    cr.right = vertex[std::min(i, e - 1)];
    cr.length = lattice_length(cr.left, cr.right);
    cr.degenerate = (cr.length == 0);
    if (!cr.degenerate) {
      if (pairing(cr.left, cr.w) != cr.height || pairing(cr.right, cr.w) != cr.height)
        throw internal_error("roof is not level at its assigned height");
      cr.ttype = t_classify(Cone{cr.left, cr.right});
      cr.milnor = a_of(i) - k_of(i) - 1;
      if (cr.height == 0 || cr.length % cr.height != 0 ||
          cr.length / cr.height != a_of(i) - k_of(i))
        throw internal_error("roof length disagrees with (a_i - k_i) q_i");
    }
    if (!cr.boundary) {
      if (cr.length != (a_of(i) - k_of(i)) * qs[i - 1])
        throw internal_error("roof length disagrees with (a_i - k_i) q_i");
      if (cr.degenerate != (k_of(i) == a_of(i)))
        throw internal_error("degeneracy does not match k_i = a_i");
    }
    rec.cones.push_back(std::move(cr));
  }

  for (int i = 1; i <= e - 1; ++i)
    if (rec.fan.rays.empty() || rec.fan.rays.back() != vertex[i])
      rec.fan.rays.push_back(vertex[i]);
  for (std::size_t j = 0; j + 1 < rec.fan.rays.size(); ++j)
    if (det2(rec.fan.rays[j], rec.fan.rays[j + 1]) <= 0)
      throw internal_error("P-resolution rays are not angle sorted");
  return rec;
}

VerificationReport verify_presolution(const PResolutionRecord& p) {
  VerificationReport rep;
  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

  CqsInvariants inv = invariants(p.base);
  QSequence qs;
  try {
    qs = q_sequence(p.chain);
  } catch (const std::exception& ex) {
    fail(std::string("chain: ") + ex.what());
    rep.pass = false;
    return rep;
  }

  rep.consistency = true;
  if (qs != p.qseq) {
    rep.consistency = false;
    fail("stored q-sequence does not match the chain");
  }

  // structural: fan rays are the deduplicated roof vertices
  std::vector<NVec> expected_rays;
  for (const ConeRecord& cr : p.cones)
    for (const NVec& v : {cr.left, cr.right})
      if (expected_rays.empty() || expected_rays.back() != v) expected_rays.push_back(v);
  if (expected_rays != p.fan.rays) {
    rep.consistency = false;
    fail("fan rays do not match the cone roof vertices");
  }

  for (const ConeRecord& cr : p.cones) {
    int i = cr.index;
    // heights read off the geometry must equal the q-sequence, and
    // consecutive ones must be coprime (so roof vertices are primitive)
    if (!cr.degenerate) {
      if (pairing(cr.left, cr.w) != cr.height || pairing(cr.right, cr.w) != cr.height) {
        rep.consistency = false;
        fail("cone " + std::to_string(i) + ": roof not level at height q_i");
      }
      if (!cr.left.is_primitive() || !cr.right.is_primitive()) {
        rep.consistency = false;
        fail("cone " + std::to_string(i) + ": non-primitive roof vertex");
      }
    }
    if (cr.height != qs[static_cast<std::size_t>(i) - 1]) {
      rep.consistency = false;
      fail("cone " + std::to_string(i) + ": height differs from q_i");
    }
    if (!cr.boundary) {
      Int a = inv.a_chain[static_cast<std::size_t>(i) - 2];
      Int k = p.chain[static_cast<std::size_t>(i) - 2];
      if (cr.length != (a - k) * cr.height) {
        rep.consistency = false;
        fail("cone " + std::to_string(i) + ": length != (a_i - k_i) q_i");
      }
      if (i > 2 && gcd(qs[static_cast<std::size_t>(i) - 2], qs[static_cast<std::size_t>(i) - 1]) != 1) {
        rep.consistency = false;
        fail("cone " + std::to_string(i) + ": gcd(q_{i-1}, q_i) != 1");
      }
    }
    // every non-degenerate cone must be a T-singularity or smooth
    if (!cr.degenerate) {
      TType t = t_classify(Cone{cr.left, cr.right});
      bool ok = t.is_t_or_smooth();
      std::string detail = ok ? (t.kind == TType::Kind::smooth ? "smooth" : "T") : "not T";
      if (ok && t.kind == TType::Kind::t && t.milnor != cr.milnor) {
        ok = false;
        detail = "Milnor number mismatch";
      }
      rep.cone_checks.push_back({i, ok, detail});
      if (!ok) fail("cone " + std::to_string(i) + ": " + detail);
    }
  }

  // relative ampleness: strictly concave roof at every interior ray
  rep.ampleness = true;
  for (std::size_t j = 1; j + 1 < p.fan.rays.size(); ++j) {
    RoofSign s = roof_sign(p.fan, j);
    rep.interior_ray_signs.push_back(s);
    if (s != RoofSign::positive) {
      rep.ampleness = false;
      fail("interior ray " + p.fan.rays[j].str() + ": roof not strictly concave");
    }
  }

  // domination by the maximal resolution: interior rays lie in int Delta
  rep.domination = true;
  std::vector<NVec> delta = interior_primitive_points(NVec{1, 0}, NVec{-p.base.q, p.base.n});
  for (std::size_t j = 1; j + 1 < p.fan.rays.size(); ++j) {
    if (std::find(delta.begin(), delta.end(), p.fan.rays[j]) == delta.end()) {
      rep.domination = false;
      fail("interior ray " + p.fan.rays[j].str() + " outside int Delta");
    }
  }

  rep.pass = rep.failures.empty();
  return rep;
}

std::vector<std::pair<int, Int>> milnor_numbers(const PResolutionRecord& p) {
  std::vector<std::pair<int, Int>> out;
  for (const ConeRecord& cr : p.cones) {
    if (cr.boundary || cr.degenerate) continue;
    if (cr.height == 0 || cr.length % cr.height != 0 || cr.length / cr.height - 1 != cr.milnor)
      throw internal_error("Milnor number disagrees with roof length / height - 1");
    out.emplace_back(cr.index, cr.milnor);
  }
  return out;
}

Fan m_resolution(const PResolutionRecord& p) {
  std::vector<NVec> rays;
  for (const ConeRecord& cr : p.cones) {
    if (cr.degenerate) continue;
    NVec dir = primitive(cr.right - cr.left);
    Int parts = cr.length / cr.height;
    for (Int j = 0; j < parts; ++j) {
      NVec v = cr.left + (j * cr.height) * dir;
      if (!v.is_primitive()) throw internal_error("M-resolution vertex is not primitive");
      if (rays.empty() || rays.back() != v) rays.push_back(v);
    }
  }
  rays.push_back(p.fan.rays.back());
  for (std::size_t j = 0; j + 1 < rays.size(); ++j)
    if (det2(rays[j], rays[j + 1]) <= 0)
      throw internal_error("M-resolution rays are not angle sorted");
  return {p.base, std::move(rays)};
}

std::vector<PResolutionRecord> enumerate_presolutions(const CyclicQuotient& cq) {
  std::vector<PResolutionRecord> out;
  for (const Chain& k : admissible_chains(cq)) out.push_back(build_presolution(cq, k));
  // distinct chains must yield distinct fans
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].fan == out[j].fan)
        throw internal_error("two chains produced the same fan");
  return out;
}

}  // namespace cqs

// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cqs/contfrac.hpp>
#include <cqs/oracles.hpp>
#include <cqs/presolution.hpp>
#include <cqs/resolution.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <vector>

using namespace cqs;

namespace {

int failures = 0;

void criterion(int number, const char* title, double budget_seconds,
               const std::function<bool()>& check) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = check();
  } catch (const std::exception& e) {
    std::printf("criterion %d: FAIL (%s) -- exception: %s\n", number, title, e.what());
    ++failures;
    return;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = budget_seconds <= 0 || secs < budget_seconds;
  if (ok && in_budget) {
    std::printf("criterion %d: PASS (%s) [%.2fs]\n", number, title, secs);
  } else {
    std::printf("criterion %d: FAIL (%s) [%.2fs%s]\n", number, title, secs,
                in_budget ? "" : ", over budget");
    ++failures;
  }
}

template <class F>
bool for_all_nq(int max_n, F&& f) {
  for (int n = 2; n <= max_n; ++n)
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      if (!f(CyclicQuotient{n, q})) return false;
    }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Y(19,7) maximal resolution data", 1.0, [] {
    Fan f = maximal_resolution(CyclicQuotient{19, 7});
    std::vector<NVec> interior(f.rays.begin() + 1, f.rays.end() - 1);
    if (interior != std::vector<NVec>{{0, 1}, {-1, 4}, {-2, 7}, {-1, 3}, {-5, 14}, {-4, 11}})
      return false;
    DiscrepancyData dd = discrepancies(f);
    if (!(dd.r_vector == RVec{Rat(1), Rat(8, 19)})) return false;
    std::vector<Rat> alpha(dd.alphas.begin() + 1, dd.alphas.end() - 1);
    return alpha == std::vector<Rat>{Rat(8, 19), Rat(13, 19), Rat(18, 19), Rat(5, 19),
                                     Rat(17, 19), Rat(12, 19)};
  });

  criterion(2, "Y(19,7) P-resolutions", 0, [] {
    CyclicQuotient cq{19, 7};
    auto ks = admissible_chains(cq);
    if (ks != std::vector<Chain>{{1, 2, 2, 1}, {1, 3, 1, 2}, {2, 2, 1, 3}}) return false;

    PResolutionRecord p2 = build_presolution(cq, {1, 3, 1, 2});
    std::vector<NVec> extra2(p2.fan.rays.begin() + 1, p2.fan.rays.end() - 1);
    if (extra2 != std::vector<NVec>{{0, 1}, {-4, 11}}) return false;
    if (p2.qseq[2] != 1 || p2.qseq[3] != 2) return false;

    PResolutionRecord p3 = build_presolution(cq, {2, 2, 1, 3});
    std::vector<NVec> extra3(p3.fan.rays.begin() + 1, p3.fan.rays.end() - 1);
    if (extra3 != std::vector<NVec>{{-1, 4}}) return false;
    return p3.qseq[2] == 2 && p3.qseq[3] == 3;
  });

  criterion(3, "Y(19,7) invariants", 0, [] {
    CqsInvariants inv = invariants(CyclicQuotient{19, 7});
    return inv.e == 6 && inv.a_chain == std::vector<Int>{2, 3, 2, 3} &&
           inv.b_chain == std::vector<Int>{3, 4, 2} &&
           inv.b_chain == expand_hj(Rat(19, 7)) && dual_chain(inv.b_chain) == inv.a_chain;
  });

  criterion(4, "zero-chain counts are Catalan", 10.0, [] {
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int m = 1; m <= 7; ++m) {
      auto via_triangulations = enumerate_zero_chains(m);
      if (via_triangulations.size() != catalan[m - 1]) return false;
      if (via_triangulations != oracles::exhaustive_zero_chains(m, m + 2)) return false;
    }
    return true;
  });

  criterion(5, "P-resolution sweep n <= 60", 120.0, [] {
    return for_all_nq(60, [](const CyclicQuotient& cq) {
      CqsInvariants inv = invariants(cq);
      auto pres = enumerate_presolutions(cq);  // throws if chain -> fan not injective
      for (const PResolutionRecord& p : pres) {
        if (!verify_presolution(p).pass) return false;
        QSequence qs = q_sequence(p.chain);
        for (const ConeRecord& cr : p.cones) {
          if (cr.height != qs[static_cast<std::size_t>(cr.index) - 1]) return false;
          if (!cr.boundary) {
            Int a = inv.a_chain[static_cast<std::size_t>(cr.index) - 2];
            Int k = p.chain[static_cast<std::size_t>(cr.index) - 2];
            if (cr.length != (a - k) * cr.height) return false;
          }
          if (!cr.degenerate) {
            TType t = t_classify(Cone{cr.left, cr.right});
            if (!t.is_t_or_smooth()) return false;
            if (t.normal && !oracles::in_ks_family(*t.normal)) return false;
          }
        }
        for (std::size_t i = 2; i + 1 < qs.size(); ++i)
          if (gcd(qs[i - 1], qs[i]) != 1) return false;
        for (std::size_t j = 1; j + 1 < p.fan.rays.size(); ++j)
          if (roof_sign(p.fan, j) != RoofSign::positive) return false;
        auto delta = interior_primitive_points(NVec{1, 0}, NVec{-cq.q, cq.n});
        for (std::size_t j = 1; j + 1 < p.fan.rays.size(); ++j)
          if (std::find(delta.begin(), delta.end(), p.fan.rays[j]) == delta.end())
            return false;
      }
      return true;
    });
  });

  criterion(6, "oracle equivalences on the sweep", 120.0, [] {
    return for_all_nq(60, [](const CyclicQuotient& cq) {
      Cone sigma = cone_of(cq);
      if (hilbert_basis(sigma) != oracles::brute_hilbert_basis(sigma)) return false;
      if (hilbert_basis(dual_cone(sigma)) != oracles::brute_hilbert_basis(dual_cone(sigma)))
        return false;
      if (!(maximal_resolution(cq) == maximal_resolution_iterative(cq))) return false;
      Fan mini = minimal_resolution(cq);
      std::vector<Int> b = self_intersections(mini);
      if (b != invariants(cq).b_chain) return false;
      DiscrepancyData dd = discrepancies(mini);
      for (std::size_t j = 1; j + 1 < mini.rays.size(); ++j)
        if (dd.alphas[j - 1] + dd.alphas[j + 1] != Rat(b[j - 1]) * dd.alphas[j])
          return false;
      return true;
    });
  });

  criterion(7, "M-resolution checks n <= 60", 120.0, [] {
    return for_all_nq(60, [](const CyclicQuotient& cq) {
      CqsInvariants inv = invariants(cq);
      Chain rdp;
      if (inv.e == 3) {
        rdp = {Int(0)};
      } else {
        rdp.assign(static_cast<std::size_t>(inv.e - 2), Int(2));
        rdp.front() = 1;
        rdp.back() = 1;
      }
      if (!(m_resolution(build_presolution(cq, rdp)) == minimal_resolution(cq)))
        return false;
      for (const PResolutionRecord& p : enumerate_presolutions(cq)) {
        Fan m = m_resolution(p);
        for (std::size_t j = 0; j + 1 < m.rays.size(); ++j) {
          TType t = t_classify(Cone{m.rays[j], m.rays[j + 1]});
          if (t.kind == TType::Kind::not_t) return false;
          if (t.kind == TType::Kind::t && t.milnor != 0) return false;
        }
        for (std::size_t j = 1; j + 1 < m.rays.size(); ++j) {
          bool inserted = std::find(p.fan.rays.begin(), p.fan.rays.end(), m.rays[j]) ==
                          p.fan.rays.end();
          RoofSign s = roof_sign(m, j);
          if (inserted && s != RoofSign::zero) return false;
          if (!inserted && s != RoofSign::positive) return false;
        }
      }
      return true;
    });
  });

  criterion(8, "maximal resolution alpha bounds and maximality", 120.0, [] {
    return for_all_nq(60, [](const CyclicQuotient& cq) {
      Fan f = maximal_resolution(cq);
      DiscrepancyData dd = discrepancies(f);
      for (std::size_t j = 1; j + 1 < f.rays.size(); ++j)
        if (dd.alphas[j] <= 0 || dd.alphas[j] >= 1) return false;
      // any candidate ray not in the fan is non-primitive or not interior
      NVec v0{1, 0}, vl{-cq.q, cq.n};
      NVec chord = vl - v0;
      for (Int x = vl.x; x <= 1; ++x)
        for (Int y = 0; y <= cq.n; ++y) {
          NVec c{x, y};
          if (c.is_zero()) continue;
          if (std::find(f.rays.begin(), f.rays.end(), c) != f.rays.end()) continue;
          bool interior =
              det2(v0, c) > 0 && det2(c, vl) > 0 && det2(chord, c - v0) > 0;
          if (c.is_primitive() && interior) return false;
        }
      return true;
    });
  });

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}

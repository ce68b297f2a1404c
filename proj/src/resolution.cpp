#include <cqs/resolution.hpp>

#include <algorithm>

namespace cqs {

namespace {

void check_fan(const Fan& f) {
  if (f.rays.size() < 2) throw std::invalid_argument("fan needs at least the boundary rays");
  for (std::size_t j = 0; j + 1 < f.rays.size(); ++j)
    if (det2(f.rays[j], f.rays[j + 1]) <= 0)
      throw std::invalid_argument("fan rays must be strictly increasing by angle");
}

}  // namespace

Fan minimal_resolution(const CyclicQuotient& cq) {
  return {cq, invariants(cq).v_points};
}

Fan maximal_resolution(const CyclicQuotient& cq) {
  NVec v0{1, 0}, v_last{-cq.q, cq.n};
  std::vector<NVec> rays = interior_primitive_points(v0, v_last);
  rays.insert(rays.begin(), v0);
  rays.push_back(v_last);
  return {cq, std::move(rays)};
}

Fan maximal_resolution_iterative(const CyclicQuotient& cq) {
  Fan fan = minimal_resolution(cq);
  NVec v0{1, 0}, v_last{-cq.q, cq.n};
  std::vector<NVec> interior = interior_primitive_points(v0, v_last);
  auto cone_has_interior_point = [&](const NVec& a, const NVec& b) {
    return std::any_of(interior.begin(), interior.end(), [&](const NVec& z) {
      return det2(a, z) > 0 && det2(z, b) > 0;
    });
  };
  // subdivision loop from the proof: always split the angularly first
  // splittable cone (the fixpoint is order independent, the order makes
  // runs reproducible)
  for (;;) {
    bool split = false;
    for (std::size_t j = 0; j + 1 < fan.rays.size(); ++j) {
      if (cone_has_interior_point(fan.rays[j], fan.rays[j + 1])) {
        NVec mid = primitive(fan.rays[j] + fan.rays[j + 1]);
        fan.rays.insert(fan.rays.begin() + static_cast<std::ptrdiff_t>(j) + 1, mid);
        split = true;
        break;
      }
    }
    if (!split) break;
  }
  // Interior rays on the line [R=1] have alpha = 1; they come from crepant
  // curves of the minimal resolution and are not part of the maximal
  // resolution (which is maximal for 0 < alpha < 1). Contract them.
  DiscrepancyData dd = discrepancies(fan);
  std::vector<NVec> kept;
  for (std::size_t j = 0; j < fan.rays.size(); ++j)
    if (j == 0 || j + 1 == fan.rays.size() || dd.alphas[j] != 1) kept.push_back(fan.rays[j]);
  fan.rays = std::move(kept);
  return fan;
}

DiscrepancyData discrepancies(const Fan& f) {
  check_fan(f);
  const NVec& u0 = f.rays.front();
  const NVec& uL = f.rays.back();
  Rat d(det2(u0, uL));
  RVec r{Rat(uL.y - u0.y) / d, Rat(u0.x - uL.x) / d};
  DiscrepancyData out{r, {}};
  out.alphas.reserve(f.rays.size());
  for (const NVec& u : f.rays) out.alphas.push_back(pairing(u, r));
  if (out.alphas.front() != 1 || out.alphas.back() != 1)
    throw internal_error("discrepancy boundary conditions violated");
  return out;
}

std::vector<Int> self_intersections(const Fan& f) {
  check_fan(f);
  std::vector<Int> c;
  for (std::size_t j = 1; j + 1 < f.rays.size(); ++j) {
    NVec sum = f.rays[j - 1] + f.rays[j + 1];
    const NVec& u = f.rays[j];
    // sum must be an integral multiple of u
    if (det2(sum, u) != 0) throw std::domain_error("fan is not a chain of smooth cones");
    Int mult;
    if (u.x != 0) {
      if (sum.x % u.x != 0) throw std::domain_error("fan is not a chain of smooth cones");
      mult = sum.x / u.x;
    } else {
      if (sum.y % u.y != 0) throw std::domain_error("fan is not a chain of smooth cones");
      mult = sum.y / u.y;
    }
    if (mult * u.x != sum.x || mult * u.y != sum.y)
      throw std::domain_error("fan is not a chain of smooth cones");
    c.push_back(mult);
  }
  return c;
}

RoofSign roof_sign(const Fan& f, std::size_t j) {
  if (j == 0 || j + 1 >= f.rays.size()) throw std::out_of_range("not an interior ray");
  Int d = det2(f.rays[j + 1] - f.rays[j], f.rays[j] - f.rays[j - 1]);
  if (d > 0) return RoofSign::positive;
  if (d == 0) return RoofSign::zero;
  return RoofSign::negative;
}

}  // namespace cqs

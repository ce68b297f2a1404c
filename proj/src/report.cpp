#include <cqs/report.hpp>

#include <sstream>

namespace cqs {

namespace {

Json ray_json(const NVec& v) { return Json::array({v.x.str(), v.y.str()}); }

Json rays_json(const std::vector<NVec>& rays) {
  Json a = Json::array();
  for (const NVec& r : rays) a.push_back(ray_json(r));
  return a;
}

Json ints_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

Json rats_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

std::string ttype_string(const TType& t) {
  switch (t.kind) {
    case TType::Kind::smooth: return "smooth";
    case TType::Kind::t: return "T";
    case TType::Kind::not_t: return "notT";
  }
  return "?";
}

Json resolution_json(const Fan& f) {
  Json j;
  j["rays"] = rays_json(f.rays);
  DiscrepancyData dd = discrepancies(f);
  j["r_vector"] = Json::array({to_string(dd.r_vector.a), to_string(dd.r_vector.b)});
  j["alphas"] = rats_json(dd.alphas);
  try {
    j["self_intersections"] = ints_json(self_intersections(f));
  } catch (const std::domain_error&) {
    j["self_intersections"] = nullptr;  // not a chain of smooth cones
  }
  return j;
}

NVec ray_from_json(const Json& j) { return {Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>())}; }

std::vector<NVec> rays_from_json(const Json& j) {
  std::vector<NVec> out;
  for (const auto& r : j) out.push_back(ray_from_json(r));
  return out;
}

}  // namespace

Json build_report(const CyclicQuotient& cq) {
  CqsInvariants inv = invariants(cq);
  Json j;
  j["n"] = cq.n.str();
  j["q"] = cq.q.str();
  j["e"] = inv.e;
  j["a_chain"] = ints_json(inv.a_chain);
  j["b_chain"] = ints_json(inv.b_chain);
  j["w_points"] = [&] {
    Json a = Json::array();
    for (const MVec& w : inv.w_points) a.push_back(Json::array({w.x.str(), w.y.str()}));
    return a;
  }();
  j["minimal_resolution"] = resolution_json(minimal_resolution(cq));
  j["maximal_resolution"] = resolution_json(maximal_resolution(cq));

  Json pres = Json::array();
  for (const PResolutionRecord& rec : enumerate_presolutions(cq)) {
    Json pj;
    pj["chain"] = ints_json(rec.chain);
    pj["q_sequence"] = ints_json(rec.qseq);
    pj["rays"] = rays_json(rec.fan.rays);
    Json cones = Json::array();
    for (const ConeRecord& cr : rec.cones) {
      Json cj;
      cj["index"] = cr.index;
      cj["w"] = Json::array({cr.w.x.str(), cr.w.y.str()});
      cj["height"] = cr.height.str();
      cj["length"] = cr.length.str();
      cj["degenerate"] = cr.degenerate;
      if (!cr.degenerate) {
        cj["milnor"] = cr.milnor.str();
        cj["type"] = ttype_string(cr.ttype);
      }
      cones.push_back(std::move(cj));
    }
    pj["cones"] = std::move(cones);
    pj["m_resolution_rays"] = rays_json(m_resolution(rec).rays);
    pj["verified"] = verify_presolution(rec).pass;
    pres.push_back(std::move(pj));
  }
  j["p_resolutions"] = std::move(pres);
  return j;
}

std::string render_report_text(const Json& r) {
  std::ostringstream os;
  os << "Y(" << r.at("n").get<std::string>() << "," << r.at("q").get<std::string>() << ")\n";
  os << "  e = " << r.at("e").get<int>() << "\n";
  auto chain_str = [](const Json& c) {
    std::string s;
    for (const auto& e : c) {
      if (!s.empty()) s += " ";
      s += e.get<std::string>();
    }
    return s;
  };
  auto rays_str = [](const Json& rays) {
    std::string s;
    for (const auto& v : rays) {
      if (!s.empty()) s += " ";
      s += "(" + v.at(0).get<std::string>() + "," + v.at(1).get<std::string>() + ")";
    }
    return s;
  };
  os << "  a = " << chain_str(r.at("a_chain")) << "\n";
  os << "  b = " << chain_str(r.at("b_chain")) << "\n";
  os << "  minimal resolution:  " << rays_str(r.at("minimal_resolution").at("rays")) << "\n";
  os << "  maximal resolution:  " << rays_str(r.at("maximal_resolution").at("rays")) << "\n";
  os << "    R = [" << r.at("maximal_resolution").at("r_vector").at(0).get<std::string>() << ", "
     << r.at("maximal_resolution").at("r_vector").at(1).get<std::string>() << "]\n";
  os << "    alphas = " << chain_str(r.at("maximal_resolution").at("alphas")) << "\n";
  os << "  P-resolutions (" << r.at("p_resolutions").size() << "):\n";
  for (const auto& p : r.at("p_resolutions")) {
    os << "    chain (" << chain_str(p.at("chain")) << ")  rays " << rays_str(p.at("rays"))
       << "  " << (p.at("verified").get<bool>() ? "verified" : "FAILED VERIFICATION") << "\n";
    os << "      q-sequence (" << chain_str(p.at("q_sequence")) << ")"
       << "  M-resolution rays " << rays_str(p.at("m_resolution_rays")) << "\n";
  }
  return os.str();
}

ReportFans fans_from_report(const Json& r) {
  CyclicQuotient cq{Int(r.at("n").get<std::string>()), Int(r.at("q").get<std::string>())};
  ReportFans out{{cq, {}}, {cq, {}}, {}, {}};
  out.minimal = {cq, rays_from_json(r.at("minimal_resolution").at("rays"))};
  out.maximal = {cq, rays_from_json(r.at("maximal_resolution").at("rays"))};
  for (const auto& p : r.at("p_resolutions")) {
    out.presolutions.push_back({cq, rays_from_json(p.at("rays"))});
    out.m_resolutions.push_back({cq, rays_from_json(p.at("m_resolution_rays"))});
  }
  return out;
}

}  // namespace cqs

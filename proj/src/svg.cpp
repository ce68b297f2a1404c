#include <cqs/svg.hpp>

#include <cqs/resolution.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cqs {

namespace {

// Exact affine lattice -> screen map, formatted at fixed precision. Going
// through rationals (rather than doubles) keeps the output byte-identical
// across platforms.
struct Frame {
  Rat scale;
  Rat x_off, y_off;  // screen = off + scale * (lattice - min), y flipped
  Rat xmin, ymax;
  Rat width, height;

  std::string fmt(const Rat& v) const {
    // round half away from zero to 2 decimals
    Int num = numerator(v) * 200 + (v < 0 ? -denominator(v) : denominator(v));
    Int cents = num / (2 * denominator(v));
    std::string s = cents.str();
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
      neg = true;
      s = s.substr(1);
    }
    while (s.size() < 3) s.insert(s.begin(), '0');
    std::string out = (neg ? "-" : "") + s.substr(0, s.size() - 2) + "." + s.substr(s.size() - 2);
    return out;
  }
  std::string x(const Rat& lx) const { return fmt(x_off + scale * (lx - xmin)); }
  std::string y(const Rat& ly) const { return fmt(y_off + scale * (ymax - ly)); }
  std::string x(const Int& lx) const { return x(Rat(lx)); }
  std::string y(const Int& ly) const { return y(Rat(ly)); }
};

Frame make_frame(const std::vector<NVec>& pts) {
  Rat xmin(0), xmax(0), ymin(0), ymax(0);
  for (const NVec& p : pts) {
    xmin = std::min(xmin, Rat(p.x));
    xmax = std::max(xmax, Rat(p.x));
    ymin = std::min(ymin, Rat(p.y));
    ymax = std::max(ymax, Rat(p.y));
  }
  Rat w = xmax - xmin, h = ymax - ymin;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  const Rat target(640);
  const Rat margin(40);
  Rat scale = std::min(target / w, target / h);
  Frame f;
  f.scale = scale;
  f.xmin = xmin;
  f.ymax = ymax;
  f.x_off = margin;
  f.y_off = margin;
  f.width = 2 * margin + scale * w;
  f.height = 2 * margin + scale * h;
  return f;
}

void line(std::ostringstream& os, const Frame& f, const NVec& a, const NVec& b,
          const std::string& cls) {
  os << "  <line class=\"" << cls << "\" x1=\"" << f.x(a.x) << "\" y1=\"" << f.y(a.y)
     << "\" x2=\"" << f.x(b.x) << "\" y2=\"" << f.y(b.y) << "\"/>\n";
}

void dot(std::ostringstream& os, const Frame& f, const NVec& p, const std::string& cls) {
  os << "  <circle class=\"" << cls << "\" cx=\"" << f.x(p.x) << "\" cy=\"" << f.y(p.y)
     << "\" r=\"4\"/>\n";
}

}  // namespace

std::string render_svg(const CyclicQuotient& cq, SvgWhat what,
                       const std::optional<Chain>& chain) {
  NVec origin{0, 0}, g0{1, 0}, g1{-cq.q, cq.n};

  Fan fan{cq, {}};
  std::vector<const ConeRecord*> roofs;
  PResolutionRecord rec{cq, {}, {}, Fan{cq, {}}, {}};
  switch (what) {
    case SvgWhat::minimal:
      fan = minimal_resolution(cq);
      break;
    case SvgWhat::maximal:
      fan = maximal_resolution(cq);
      break;
    case SvgWhat::presolution:
    case SvgWhat::mresolution: {
      if (!chain) throw std::invalid_argument("a chain is required for this picture");
      rec = build_presolution(cq, *chain);
      fan = (what == SvgWhat::mresolution) ? m_resolution(rec) : rec.fan;
      for (const ConeRecord& cr : rec.cones)
        if (!cr.degenerate) roofs.push_back(&cr);
      break;
    }
  }

  std::vector<NVec> extent{origin, g0, g1};
  extent.insert(extent.end(), fan.rays.begin(), fan.rays.end());
  Frame f = make_frame(extent);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.fmt(f.width)
     << "\" height=\"" << f.fmt(f.height) << "\" viewBox=\"0 0 " << f.fmt(f.width) << " "
     << f.fmt(f.height) << "\">\n";
  os << "  <style>\n"
        "    .sigma { stroke: #444; stroke-width: 2; }\n"
        "    .chord { stroke: #999; stroke-width: 1; stroke-dasharray: 6 4; }\n"
        "    .ray { stroke: #1a6fb0; stroke-width: 1.5; }\n"
        "    .roof { stroke: #c0392b; stroke-width: 2.5; }\n"
        "    .gen { fill: #444; }\n"
        "    .interior { fill: #1a6fb0; }\n"
        "    .label { font: 14px monospace; fill: #222; }\n"
        "  </style>\n";

  // boundary of sigma and the chord of Delta
  line(os, f, origin, g0, "sigma");
  line(os, f, origin, g1, "sigma");
  line(os, f, g0, g1, "chord");

  for (std::size_t j = 1; j + 1 < fan.rays.size(); ++j)
    line(os, f, origin, fan.rays[j], "ray");
  for (const ConeRecord* cr : roofs) {
    line(os, f, cr->left, cr->right, "roof");
    Rat mx = Rat(cr->left.x + cr->right.x) / 2, my = Rat(cr->left.y + cr->right.y) / 2;
    os << "  <text class=\"label\" x=\"" << f.x(mx) << "\" y=\"" << f.y(my) << "\">q="
       << cr->height.str() << "</text>\n";
  }

  os << "  <!-- Y(" << cq.n.str() << "," << cq.q.str() << ") -->\n";
  os << "  <text class=\"label\" x=\"8\" y=\"20\">Y(" << cq.n.str() << "," << cq.q.str()
     << ")</text>\n";

  dot(os, f, g0, "gen");
  dot(os, f, g1, "gen");
  for (const NVec& p : interior_primitive_points(g0, g1)) dot(os, f, p, "interior");

  os << "</svg>\n";
  return os.str();
}

}  // namespace cqs

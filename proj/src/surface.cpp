#include "ire/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ire/error.hpp"

namespace ire {

const char* side_name(Side s) {
  switch (s) {
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

namespace {

using PointKey = std::tuple<LabelIdx, int, Rat>;  // (label, side, side coordinate)

std::string point_name(const Scheme& s, const PointKey& k) {
  return s.label_name(std::get<0>(k)) + ":" + side_name(static_cast<Side>(std::get<1>(k))) +
         ":" + format_rational(std::get<2>(k));
}

struct UnionFind {
  std::map<PointKey, PointKey> parent;
  void add(const PointKey& k) { parent.emplace(k, k); }
  PointKey find(PointKey k) {
    while (parent.at(k) != k) k = parent.at(k) = parent.at(parent.at(k));
    return k;
  }
  void unite(const PointKey& a, const PointKey& b) { parent[find(a)] = find(b); }
};

// Converts one tree pairing into a rectangle-side identification.
SideGluing transfer(const Scheme& s, const Endpoints& x, const GluedTree::Pairing& p,
                    bool horizontal) {
  SideGluing g;
  g.from = label_of(p.from);
  g.to = label_of(p.to);
  g.from_side = horizontal ? Side::Bottom : Side::Left;
  g.to_side = horizontal ? Side::Top : Side::Right;
  Rat from_base = x[p.from];             // x_{xi.b}
  Rat to_base = x[s.sigma(p.to)];        // x_{sigma(xi'.e)}
  g.from_lo = p.lo - from_base;
  g.from_hi = p.hi - from_base;
  g.to_lo = p.lo - to_base;
  g.to_hi = p.hi - to_base;
  return g;
}

void check_side_coverage(const std::vector<SideGluing>& gluings, Side side,
                         bool use_from, const Lengths& extent) {
  for (LabelIdx l = 0; l < static_cast<LabelIdx>(extent.size()); ++l) {
    std::vector<std::pair<Rat, Rat>> ranges;
    for (const SideGluing& g : gluings) {
      if (use_from && g.from == l && g.from_side == side)
        ranges.emplace_back(g.from_lo, g.from_hi);
      if (!use_from && g.to == l && g.to_side == side)
        ranges.emplace_back(g.to_lo, g.to_hi);
    }
    std::sort(ranges.begin(), ranges.end());
    Rat cur = 0;
    for (const auto& [a, b] : ranges) {
      if (a != cur || b <= a)
        fail(ErrorCode::InternalInvariantViolation, "rectangle side has a gap or overlap");
      cur = b;
    }
    if (cur != extent[l])
      fail(ErrorCode::InternalInvariantViolation, "rectangle side not fully covered");
  }
}

}  // namespace

ZipperedSurface build_surface(const NaturalExtension& e, const BranchRule& rule_h,
                              const BranchRule& rule_v) {
  ZipperedSurface surf;
  surf.scheme = e.scheme;
  surf.x = e.x;
  surf.y = e.y;
  Scheme ds = dual(e.scheme);
  IreValidation pv = validate_ire(e.scheme, e.x);
  if (!pv.positive) fail(ErrorCode::NotPositive, "primal side has a non-positive length");
  IreValidation dv = validate_ire(ds, e.y);
  if (!dv.positive) fail(ErrorCode::NotPositive, "dual side has a non-positive length");
  surf.v = pv.v;
  surf.w = dv.v;
  surf.h_tree = glue_ire(e.scheme, e.x, rule_h);
  surf.v_tree = glue_ire(ds, e.y, rule_v);
  for (const auto& p : surf.h_tree.pairings)
    surf.horizontal.push_back(transfer(e.scheme, e.x, p, true));
  for (const auto& p : surf.v_tree.pairings)
    surf.vertical.push_back(transfer(ds, e.y, p, false));
  check_side_coverage(surf.horizontal, Side::Bottom, true, surf.v);
  check_side_coverage(surf.horizontal, Side::Top, false, surf.v);
  check_side_coverage(surf.vertical, Side::Left, true, surf.w);
  check_side_coverage(surf.vertical, Side::Right, false, surf.w);

  // Cell complex: vertices are identification endpoints, edges are the
  // identified side segments (one edge per gluing), faces the rectangles.
  UnionFind uf;
  auto key = [](LabelIdx l, Side s, const Rat& c) {
    return PointKey{l, static_cast<int>(s), c};
  };
  for (const std::vector<SideGluing>* list : {&surf.horizontal, &surf.vertical})
    for (const SideGluing& g : *list) {
      uf.add(key(g.from, g.from_side, g.from_lo));
      uf.add(key(g.from, g.from_side, g.from_hi));
      uf.add(key(g.to, g.to_side, g.to_lo));
      uf.add(key(g.to, g.to_side, g.to_hi));
    }
  for (const std::vector<SideGluing>* list : {&surf.horizontal, &surf.vertical})
    for (const SideGluing& g : *list) {
      uf.unite(key(g.from, g.from_side, g.from_lo), key(g.to, g.to_side, g.to_lo));
      uf.unite(key(g.from, g.from_side, g.from_hi), key(g.to, g.to_side, g.to_hi));
    }
  for (LabelIdx l = 0; l < e.scheme.d(); ++l) {
    uf.unite(key(l, Side::Bottom, 0), key(l, Side::Left, 0));
    uf.unite(key(l, Side::Bottom, surf.v[l]), key(l, Side::Right, 0));
    uf.unite(key(l, Side::Top, 0), key(l, Side::Left, surf.w[l]));
    uf.unite(key(l, Side::Top, surf.v[l]), key(l, Side::Right, surf.w[l]));
  }
  // Angle bookkeeping in units of pi/4: a corner point splits over two keys
  // (1 unit each), a side-interior point has one key worth 4 units.
  std::map<PointKey, std::pair<int, std::vector<PointKey>>> classes;
  for (const auto& [k, unused] : uf.parent) {
    LabelIdx l = std::get<0>(k);
    Side side = static_cast<Side>(std::get<1>(k));
    Rat c = std::get<2>(k);
    Rat extent = (side == Side::Bottom || side == Side::Top) ? surf.v[l] : surf.w[l];
    int units = (c == 0 || c == extent) ? 1 : 4;
    auto& cls = classes[uf.find(k)];
    cls.first += units;
    cls.second.push_back(k);
  }
  surf.V = static_cast<int>(classes.size());
  surf.E = static_cast<int>(surf.horizontal.size() + surf.vertical.size());
  surf.F = e.scheme.d();
  surf.chi = surf.V - surf.E + surf.F;
  surf.genus = (2 - surf.chi) / 2;
  int tt = twists_total(e.scheme);
  if (surf.genus != tt / 2 + 1 || (2 - surf.chi) % 2 != 0)
    fail(ErrorCode::InternalInvariantViolation, "Euler data disagrees with the twist count");
  int k_sum = 0;
  for (const auto& [root, cls] : classes) {
    if (cls.first % 8 != 0)
      fail(ErrorCode::InternalInvariantViolation, "vertex angle is not a multiple of 2 pi");
    int m = cls.first / 8;
    if (m >= 2) {
      ZipperedSurface::ConePoint cone;
      cone.k = m - 1;
      for (const PointKey& pk : cls.second) cone.corners.push_back(point_name(e.scheme, pk));
      std::sort(cone.corners.begin(), cone.corners.end());
      surf.cone_points.push_back(std::move(cone));
      k_sum += m - 1;
    }
  }
  std::sort(surf.cone_points.begin(), surf.cone_points.end(),
            [](const auto& a, const auto& b) {
              return a.k != b.k ? a.k < b.k : a.corners < b.corners;
            });
  if (k_sum != tt)
    fail(ErrorCode::InternalInvariantViolation, "cone excess does not sum to the twist total");
  return surf;
}

namespace {

// One flow-through check; `horizontal_tree` selects the vertical flow over
// (scheme, x) versus the horizontal flow over (dual, y).
void flow_sample(const ZipperedSurface& surf, bool horizontal_tree, int index,
                 FirstReturnReport& rep) {
  const GluedTree& tree = horizontal_tree ? surf.h_tree : surf.v_tree;
  const Scheme& s = tree.scheme;
  const Endpoints& x = tree.x;
  const std::vector<SideGluing>& gluings = horizontal_tree ? surf.horizontal : surf.vertical;
  Side exit_side = horizontal_tree ? Side::Top : Side::Right;
  const int P = static_cast<int>(tree.pairings.size());
  const auto& p = tree.pairings[index % P];
  // Choose an interior point of the pairing; retry with other fractions if
  // the flow would hit a branch coordinate or a subdivision vertex.
  LabelIdx from_label = label_of(p.from);
  Rat q, u;
  const SideGluing* g = nullptr;
  for (int attempt = 0; attempt < 12 && !g; ++attempt) {
    int r = index / P + 13 * attempt;
    Rat f(2 * r + 1, 2 * r + 2);  // 1/2, 3/4, 5/6, ... strictly interior
    q = p.lo + (p.hi - p.lo) * f;
    bool on_branch = false;
    for (const auto& bp : tree.branch_points)
      if (bp.coord == q) on_branch = true;
    if (on_branch) continue;
    u = q - x[p.from];
    for (const SideGluing& cand : gluings)
      if (cand.to == from_label && cand.to_side == exit_side && cand.to_lo < u &&
          u < cand.to_hi)
        g = &cand;
  }
  if (!g) {
    ++rep.skipped;
    return;
  }
  Rat landing_table = x[make_ext(g->from, Marker::b)] + g->from_lo + (u - g->to_lo);
  ExtIdx from_e = flip_marker(p.from);
  Rat landing_direct = x[s.sigma(from_e)] + u;
  auto images = tree_map_eval(tree, p.from, q);
  bool ok = landing_table == landing_direct;
  bool found = false;
  for (const auto& [lbl, coord] : images)
    if (lbl == from_e && coord == landing_direct) found = true;
  ok = ok && found;
  if (ok)
    ++rep.passed;
  else {
    ++rep.failed;
    rep.failures.push_back(std::string(horizontal_tree ? "vertical" : "horizontal") +
                           " flow from " + s.ext_name(p.from) + " at " + format_rational(q));
  }
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace

FirstReturnReport first_return_check(const ZipperedSurface& surf, int samples) {
  FirstReturnReport rep;
  for (int i = 0; i < samples; ++i) flow_sample(surf, true, i, rep);
  for (int i = 0; i < samples; ++i) flow_sample(surf, false, i, rep);
  return rep;
}

std::string surface_svg(const ZipperedSurface& surf) {
  const double scale = 60.0, pad = 30.0;
  double xoff = pad, height = 0;
  std::vector<double> offsets;
  for (LabelIdx l = 0; l < surf.scheme.d(); ++l) {
    offsets.push_back(xoff);
    xoff += to_double(surf.v[l]) * scale + pad;
    height = std::max(height, to_double(surf.w[l]) * scale);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << xoff << "\" height=\""
      << height + 2 * pad + 14 << "\">\n";
  for (LabelIdx l = 0; l < surf.scheme.d(); ++l) {
    double w = to_double(surf.v[l]) * scale, h = to_double(surf.w[l]) * scale;
    double top = pad + height - h;
    out << "  <rect x=\"" << offsets[l] << "\" y=\"" << top << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << offsets[l] + w / 2 << "\" y=\"" << top + h / 2
        << "\" text-anchor=\"middle\" font-size=\"12\">" << surf.scheme.label_name(l)
        << "</text>\n";
  }
  auto emit_labels = [&](const std::vector<SideGluing>& list, const std::string& prefix) {
    for (size_t i = 0; i < list.size(); ++i) {
      const SideGluing& g = list[i];
      auto mark = [&](LabelIdx l, Side side, const Rat& lo, const Rat& hi) {
        double w = to_double(surf.v[l]) * scale, h = to_double(surf.w[l]) * scale;
        double top = pad + height - h;
        double mid = to_double((lo + hi) / 2) * scale;
        double px = 0, py = 0;
        switch (side) {
          case Side::Bottom: px = offsets[l] + mid, py = top + h + 11; break;
          case Side::Top: px = offsets[l] + mid, py = top - 3; break;
          case Side::Left: px = offsets[l] - 12, py = top + h - mid; break;
          case Side::Right: px = offsets[l] + w + 3, py = top + h - mid; break;
        }
        out << "  <text x=\"" << px << "\" y=\"" << py << "\" font-size=\"9\">" << prefix
            << i << "</text>\n";
      };
      mark(g.from, g.from_side, g.from_lo, g.from_hi);
      mark(g.to, g.to_side, g.to_lo, g.to_hi);
    }
  };
  emit_labels(surf.horizontal, "h");
  emit_labels(surf.vertical, "v");
  out << "</svg>\n";
  return out.str();
}

}  // namespace ire

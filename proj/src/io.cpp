#include "ire/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ire/error.hpp"
#include "ire/real_data.hpp"

namespace ire {

std::string format_scheme(const Scheme& s) {
  std::string out;
  for (const auto& cyc : cycles(s).cycles) {
    out += "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += s.ext_name(cyc[i]);
    }
    out += ")";
  }
  return out;
}

Scheme parse_scheme_text(const std::string& text) {
  struct Entry {
    std::string label;
    Marker marker;
  };
  std::vector<std::vector<Entry>> cycs;
  size_t i = 0;
  auto err = [&](const std::string& msg) {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(i));
  };
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) err("empty scheme text");
  while (i < text.size()) {
    if (text[i] != '(') err("expected '('");
    ++i;
    std::vector<Entry> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) err("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      size_t start = i;
      while (i < text.size() && (isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_' || text[i] == '.'))
        ++i;
      std::string token = text.substr(start, i - start);
      size_t dot = token.rfind('.');
      if (dot == std::string::npos || dot + 2 != token.size() ||
          (token[dot + 1] != 'b' && token[dot + 1] != 'e'))
        err("expected label.b or label.e, got '" + token + "'");
      cyc.push_back({token.substr(0, dot),
                     token[dot + 1] == 'b' ? Marker::b : Marker::e});
    }
    if (cyc.empty()) err("empty cycle");
    cycs.push_back(std::move(cyc));
    skip_ws();
  }
  std::vector<std::string> alphabet;
  auto index = [&](const std::string& name) -> LabelIdx {
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) {
      alphabet.push_back(name);
      return static_cast<LabelIdx>(alphabet.size() - 1);
    }
    return static_cast<LabelIdx>(it - alphabet.begin());
  };
  std::set<std::pair<std::string, Marker>> seen;
  for (const auto& cyc : cycs)
    for (const auto& entry : cyc) {
      if (!seen.insert({entry.label, entry.marker}).second)
        fail(ErrorCode::ParseError,
             "duplicate element " + entry.label + (entry.marker == Marker::b ? ".b" : ".e"));
      index(entry.label);
    }
  std::vector<std::vector<ExtIdx>> ext_cycs;
  for (const auto& cyc : cycs) {
    std::vector<ExtIdx> ec;
    for (const auto& entry : cyc) ec.push_back(make_ext(index(entry.label), entry.marker));
    ext_cycs.push_back(std::move(ec));
  }
  return Scheme::from_cycles(alphabet, ext_cycs);
}

std::string format_two_row(const TwoRowIET& t) {
  std::string out;
  for (const auto& br : t.brackets) {
    out += "[";
    for (size_t i = 0; i < br.upper.size(); ++i) out += (i ? " " : "") + br.upper[i];
    out += " / ";
    for (size_t i = 0; i < br.lower.size(); ++i) out += (i ? " " : "") + br.lower[i];
    out += "]";
  }
  return out;
}

TwoRowIET parse_two_row(const std::string& text) {
  TwoRowIET t;
  size_t i = 0;
  auto err = [&](const std::string& msg) {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(i));
  };
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) err("empty bracket text");
  while (i < text.size()) {
    if (text[i] != '[') err("expected '['");
    ++i;
    TwoRowIET::Bracket br;
    bool in_lower = false;
    while (true) {
      skip_ws();
      if (i == text.size()) err("unterminated bracket");
      if (text[i] == ']') {
        ++i;
        break;
      }
      if (text[i] == '/') {
        if (in_lower) err("second '/' in bracket");
        in_lower = true;
        ++i;
        continue;
      }
      size_t start = i;
      while (i < text.size() &&
             (isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      if (i == start) err("expected label");
      (in_lower ? br.lower : br.upper).push_back(text.substr(start, i - start));
    }
    if (!in_lower) err("bracket without '/'");
    t.brackets.push_back(std::move(br));
    skip_ws();
  }
  return t;
}

json scheme_to_json(const Scheme& s) {
  return json{{"scheme", format_scheme(s)}};
}

Scheme scheme_from_json(const json& j) {
  if (!j.contains("scheme") || !j["scheme"].is_string())
    fail(ErrorCode::ParseError, "missing 'scheme' string");
  return parse_scheme_text(j["scheme"].get<std::string>());
}

json endpoints_to_json(const Scheme& s, const Endpoints& x) {
  json out = json::object();
  for (ExtIdx e = 0; e < s.ext_size(); ++e) out[s.ext_name(e)] = format_rational(x[e]);
  return out;
}

Endpoints endpoints_from_json(const Scheme& s, const json& j) {
  Endpoints x(s.ext_size());
  for (ExtIdx e = 0; e < s.ext_size(); ++e) {
    std::string name = s.ext_name(e);
    if (!j.contains(name)) fail(ErrorCode::ParseError, "missing endpoint " + name);
    x[e] = parse_rational(j[name].get<std::string>());
  }
  return x;
}

json lengths_to_json(const Scheme& s, const Lengths& v) {
  json out = json::object();
  for (LabelIdx l = 0; l < s.d(); ++l) out[s.label_name(l)] = format_rational(v[l]);
  return out;
}

Lengths lengths_from_json(const Scheme& s, const json& j) {
  Lengths v(s.d());
  for (LabelIdx l = 0; l < s.d(); ++l) {
    const std::string& name = s.label_name(l);
    if (!j.contains(name)) fail(ErrorCode::ParseError, "missing length " + name);
    v[l] = parse_rational(j[name].get<std::string>());
  }
  return v;
}

json extension_to_json(const NaturalExtension& e) {
  return json{{"scheme", format_scheme(e.scheme)},
              {"x", endpoints_to_json(e.scheme, e.x)},
              {"y", endpoints_to_json(dual(e.scheme), e.y)}};
}

NaturalExtension extension_from_json(const json& j) {
  Scheme s = scheme_from_json(j);
  if (!j.contains("x") || !j.contains("y"))
    fail(ErrorCode::ParseError, "extension needs 'x' and 'y'");
  return make_extension(s, endpoints_from_json(s, j["x"]),
                        endpoints_from_json(dual(s), j["y"]));
}

json analysis_report(const Scheme& s) {
  Scheme ds = dual(s);
  TurnsReport t = turns(s), td = turns(ds);
  json rep;
  rep["scheme"] = format_scheme(s);
  rep["d"] = s.d();
  rep["N"] = cycles(s).N();
  rep["P"] = irreducible_components(s).P();
  json back = json::array(), fwd = json::array();
  for (ExtIdx e : t.turns_back) back.push_back(s.ext_name(e));
  for (ExtIdx e : t.turns_forward) fwd.push_back(s.ext_name(e));
  rep["turns"] = {{"back", back}, {"forward", fwd}};
  rep["per_cycle_twists"] = t.per_cycle_twists;
  rep["T"] = t.T;
  rep["dual"] = format_scheme(ds);
  rep["dual_T"] = td.T;
  rep["twists_total"] = twists_total(s);
  rep["genus"] = genus(s);
  rep["dim_X"] = endpoint_space_basis(s).dim();
  rep["dim_V"] = length_space_basis(s).dim();
  rep["positive"] = is_positive_scheme(s);
  rep["dual_positive"] = is_positive_scheme(ds);
  rep["is_iet"] = is_iet(s);
  rep["dual_is_iet"] = is_iet(ds);
  return rep;
}

json glued_tree_to_json(const GluedTree& t) {
  json out;
  out["scheme"] = format_scheme(t.scheme);
  out["x"] = endpoints_to_json(t.scheme, t.x);
  json bps = json::array();
  for (const auto& bp : t.branch_points) {
    json meeting = json::array();
    for (ExtIdx e : bp.meeting) meeting.push_back(t.scheme.ext_name(e));
    bps.push_back({{"cycle", bp.cycle}, {"coord", format_rational(bp.coord)},
                   {"meeting", meeting}});
  }
  out["branch_points"] = bps;
  json prs = json::array();
  for (const auto& p : t.pairings)
    prs.push_back({{"from", t.scheme.ext_name(p.from)},
                   {"to", t.scheme.ext_name(p.to)},
                   {"lo", format_rational(p.lo)},
                   {"hi", format_rational(p.hi)}});
  out["pairings"] = prs;
  return out;
}

json surface_to_json(const ZipperedSurface& surf) {
  json out;
  out["scheme"] = format_scheme(surf.scheme);
  json rects = json::object();
  for (LabelIdx l = 0; l < surf.scheme.d(); ++l)
    rects[surf.scheme.label_name(l)] = {{"width", format_rational(surf.v[l])},
                                        {"height", format_rational(surf.w[l])}};
  out["rectangles"] = rects;
  auto glist = [&](const std::vector<SideGluing>& gs) {
    json arr = json::array();
    for (const SideGluing& g : gs)
      arr.push_back({{"from", surf.scheme.label_name(g.from)},
                     {"from_side", side_name(g.from_side)},
                     {"from_lo", format_rational(g.from_lo)},
                     {"from_hi", format_rational(g.from_hi)},
                     {"to", surf.scheme.label_name(g.to)},
                     {"to_side", side_name(g.to_side)},
                     {"to_lo", format_rational(g.to_lo)},
                     {"to_hi", format_rational(g.to_hi)}});
    return arr;
  };
  out["horizontal_gluings"] = glist(surf.horizontal);
  out["vertical_gluings"] = glist(surf.vertical);
  json cones = json::array();
  for (const auto& c : surf.cone_points)
    cones.push_back({{"k", c.k}, {"angle_pi", 2 * (c.k + 1)}, {"corners", c.corners}});
  out["cone_points"] = cones;
  out["euler"] = {{"V", surf.V}, {"E", surf.E}, {"F", surf.F}, {"chi", surf.chi}};
  out["genus"] = surf.genus;
  return out;
}

json rauzy_class_to_json(const RauzyClass& rc) {
  json out;
  json schemes = json::array();
  for (const Scheme& s : rc.schemes) schemes.push_back(format_scheme(s));
  out["schemes"] = schemes;
  json edges = json::array();
  for (const auto& e : rc.edges)
    edges.push_back({{"from", e.from},
                     {"step", format_step(rc.schemes[e.from], e.step)},
                     {"to", e.to}});
  out["edges"] = edges;
  out["truncated"] = rc.truncated;
  return out;
}

std::string rauzy_class_to_dot(const RauzyClass& rc) {
  std::ostringstream out;
  out << "digraph rauzy_class {\n";
  for (size_t i = 0; i < rc.schemes.size(); ++i)
    out << "  n" << i << " [label=\"" << format_scheme(rc.schemes[i]) << "\"];\n";
  for (const auto& e : rc.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\""
        << format_step(rc.schemes[e.from], e.step) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ire

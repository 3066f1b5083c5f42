#pragma once

#include <string>

#include <json.hpp>

#include "ire/extension.hpp"
#include "ire/gluing.hpp"
#include "ire/induction.hpp"
#include "ire/scheme.hpp"
#include "ire/surface.hpp"

namespace ire {

using nlohmann::json;

/// Canonical cycle text, e.g. "(a.b b.b a.e b.e)".
std::string format_scheme(const Scheme& s);
Scheme parse_scheme_text(const std::string& text);

/// Bracket text, e.g. "[a b / b a][c / c]".
std::string format_two_row(const TwoRowIET& t);
TwoRowIET parse_two_row(const std::string& text);

json scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const json& j);

json endpoints_to_json(const Scheme& s, const Endpoints& x);
Endpoints endpoints_from_json(const Scheme& s, const json& j);
json lengths_to_json(const Scheme& s, const Lengths& v);
Lengths lengths_from_json(const Scheme& s, const json& j);

json extension_to_json(const NaturalExtension& e);
NaturalExtension extension_from_json(const json& j);

json analysis_report(const Scheme& s);

json glued_tree_to_json(const GluedTree& t);
json surface_to_json(const ZipperedSurface& surf);

json rauzy_class_to_json(const RauzyClass& rc);
std::string rauzy_class_to_dot(const RauzyClass& rc);

}  // namespace ire

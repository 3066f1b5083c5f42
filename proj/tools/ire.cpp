#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ire/error.hpp"
#include "ire/io.hpp"

namespace {

using namespace ire;

// Scheme arguments are inline cycle text or a path to a file holding either
// cycle text or a JSON document with a "scheme" field.
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json_input(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '(' && arg[0] != '{') text = slurp(arg);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '(')
    return json{{"scheme", text}};
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "input is neither cycle text nor JSON");
  return j;
}

BranchRule parse_branch_rule(const std::string& text) {
  BranchRule rule;
  if (text.empty() || text == "midpoint") {
    rule.kind = BranchRule::Kind::Midpoint;
  } else if (text == "low") {
    rule.kind = BranchRule::Kind::LowEndpoint;
  } else {
    rule.kind = BranchRule::Kind::Explicit;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
      rule.coords.push_back(parse_rational(item));
  }
  return rule;
}

NaturalExtension example_dataset() {
  Scheme s = parse_scheme_text("(a.b b.b g.b d.b a.e b.e g.e d.e)");
  Endpoints x = {Rat(0), Rat(4), Rat(1), Rat(3), Rat(2), Rat(2), Rat(3), Rat(1)};
  Endpoints y = {Rat(0),     Rat(-1, 2), Rat(-3, 2), Rat(1),
                 Rat(-1),    Rat(1, 2),  Rat(-5, 2), Rat(2)};
  return make_extension(s, x, y);
}

int run_verify(const json& input) {
  Scheme s = scheme_from_json(input);
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  check(dual(dual(s)) == s, "duality is an involution");
  TurnsReport t = turns(s), td = turns(dual(s));
  check(t.T + td.T + cycles(s).N() + cycles(dual(s)).N() == s.d(),
        "turn/cycle balance");
  check(twists_total(s) % 2 == 0, "twist total is even");
  check(endpoint_space_basis(s).dim() == s.d() + irreducible_components(s).P(),
        "dim X = d + P");
  check(length_space_basis(s).dim() ==
            s.d() + irreducible_components(s).P() - cycles(s).N(),
        "dim V = d + P - N");
  std::optional<Endpoints> x;
  if (input.contains("x")) x = endpoints_from_json(s, input["x"]);
  if (x) {
    IreValidation val = validate_ire(s, *x);
    check(in_endpoint_space(s, *x), "x lies in the endpoint space");
    check(in_length_space(s, val.v), "lengths close around every cycle");
    if (val.positive) {
      GluedTree tree = glue_ire(s, *x);
      check(static_cast<int>(tree.branch_points.size()) == turns(s).T,
            "branch point count equals the twist count");
    } else {
      std::cout << "note: lengths not positive, gluing skipped\n";
    }
  }
  if (input.contains("y")) {
    NaturalExtension ext = extension_from_json(input);
    IreValidation pv = validate_ire(s, ext.x), dv = validate_ire(dual(s), ext.y);
    if (pv.positive && dv.positive) {
      ZipperedSurface surf = build_surface(ext);
      check(2 * surf.genus - 2 == twists_total(s), "2g - 2 equals the twist total");
      FirstReturnReport rep = first_return_check(surf, 20);
      check(rep.failed == 0, "first-return flow checks");
    } else {
      std::cout << "note: extension not positive, surface skipped\n";
    }
  }
  std::cout << (failures ? "FAILED\n" : "PASSED\n");
  return failures ? 1 : 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Interval rearrangement ensembles: schemes, induction, gluing, surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "report the combinatorial invariants");
  analyze->add_option("input", input, "scheme text or file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "print the dual scheme");
  dual_cmd->add_option("input", input, "scheme text or file")->required();

  std::vector<std::string> step_texts;
  auto* induct = app.add_subcommand("induct", "apply induction steps");
  induct->add_option("input", input, "scheme/IRE/extension text or file")->required();
  induct->add_option("--step", step_texts, "step literal like rb:a,b (repeatable)")
      ->required();

  int max_size = 10000;
  bool dot = false;
  auto* cls = app.add_subcommand("class", "enumerate the induction class");
  cls->add_option("input", input, "scheme text or file")->required();
  cls->add_option("--max-size", max_size, "truncate after this many schemes");
  cls->add_flag("--dot", dot, "emit graphviz instead of JSON");

  std::string branch = "midpoint", branch_h = "midpoint", branch_v = "midpoint";
  auto* glue = app.add_subcommand("glue", "glue a positive IRE into a branched tree");
  glue->add_option("input", input, "IRE JSON file or literal")->required();
  glue->add_option("--branch", branch, "midpoint | low | c1,c2,... (reduction order)");

  std::string svg_path;
  auto* surface = app.add_subcommand("surface", "build the zippered-rectangle surface");
  surface->add_option("input", input, "extension JSON file or literal")->required();
  surface->add_option("--branch-h", branch_h, "branch rule for the horizontal tree");
  surface->add_option("--branch-v", branch_v, "branch rule for the vertical tree");
  surface->add_option("--svg", svg_path, "also write an SVG net to this path");

  auto* verify = app.add_subcommand("verify", "run the invariant suite on an input");
  verify->add_option("input", input, "scheme/IRE/extension text or file")->required();

  app.add_subcommand("example", "emit the built-in worked dataset");

  // Let `--json` and friends appear after the subcommand name too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    json rep = analysis_report(scheme_from_json(load_json_input(input)));
    if (as_json) {
      std::cout << rep.dump(2) << "\n";
    } else {
      std::cout << "scheme        " << rep["scheme"].get<std::string>() << "\n"
                << "d, N, P       " << rep["d"] << ", " << rep["N"] << ", " << rep["P"]
                << "\n"
                << "T, dual T     " << rep["T"] << ", " << rep["dual_T"] << "\n"
                << "twists total  " << rep["twists_total"] << "\n"
                << "genus         " << rep["genus"] << "\n"
                << "dim X, dim V  " << rep["dim_X"] << ", " << rep["dim_V"] << "\n"
                << "dual          " << rep["dual"].get<std::string>() << "\n"
                << "positive      " << rep["positive"] << " (dual " << rep["dual_positive"]
                << ")\n"
                << "is IET        " << rep["is_iet"] << " (dual " << rep["dual_is_iet"]
                << ")\n";
    }
    return 0;
  }
  if (dual_cmd->parsed()) {
    std::cout << format_scheme(dual(scheme_from_json(load_json_input(input)))) << "\n";
    return 0;
  }
  if (induct->parsed()) {
    json in = load_json_input(input);
    Scheme s = scheme_from_json(in);
    std::vector<InductionStep> steps;
    for (const auto& text : step_texts) steps.push_back(parse_step(s, text));
    if (in.contains("y")) {
      NaturalExtension ext = extension_from_json(in);
      for (const auto& st : steps) ext = apply_step_extension(ext, st);
      std::cout << extension_to_json(ext).dump(2) << "\n";
    } else if (in.contains("x")) {
      SchemeEndpoints cur{s, endpoints_from_json(s, in["x"])};
      for (const auto& st : steps) cur = apply_step(cur.scheme, cur.x, st);
      json out{{"scheme", format_scheme(cur.scheme)},
               {"x", endpoints_to_json(cur.scheme, cur.x)}};
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& st : steps) s = apply_step_scheme(s, st);
      if (as_json)
        std::cout << scheme_to_json(s).dump(2) << "\n";
      else
        std::cout << format_scheme(s) << "\n";
    }
    return 0;
  }
  if (cls->parsed()) {
    RauzyClass rc = rauzy_class(scheme_from_json(load_json_input(input)), max_size);
    if (dot)
      std::cout << rauzy_class_to_dot(rc);
    else
      std::cout << rauzy_class_to_json(rc).dump(2) << "\n";
    return 0;
  }
  if (glue->parsed()) {
    json in = load_json_input(input);
    Scheme s = scheme_from_json(in);
    if (!in.contains("x")) fail(ErrorCode::ParseError, "glue needs an IRE with 'x'");
    GluedTree tree = glue_ire(s, endpoints_from_json(s, in["x"]), parse_branch_rule(branch));
    std::cout << glued_tree_to_json(tree).dump(2) << "\n";
    return 0;
  }
  if (surface->parsed()) {
    NaturalExtension ext = extension_from_json(load_json_input(input));
    ZipperedSurface surf =
        build_surface(ext, parse_branch_rule(branch_h), parse_branch_rule(branch_v));
    std::cout << surface_to_json(surf).dump(2) << "\n";
    if (!svg_path.empty()) {
      std::ofstream out(svg_path);
      out << surface_svg(surf);
    }
    return 0;
  }
  if (verify->parsed()) return run_verify(load_json_input(input));
  // example
  NaturalExtension ext = example_dataset();
  json out = extension_to_json(ext);
  out["suggested_branch_coords"] = {{"horizontal", json::array()},
                                    {"vertical", {"-5/4", "1/4"}}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ire::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ire::ErrorCode::TieDetected ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

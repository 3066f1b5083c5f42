#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ire/error.hpp"
#include "ire/io.hpp"
#include "ire/surface.hpp"
#include "test_util.hpp"

using namespace ire;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("-10/4") == Rat(-5, 2));
  CHECK(format_rational(Rat(-5, 2)) == "-5/2");
  CHECK(format_rational(Rat(4)) == "4");
  CHECK(parse_rational(format_rational(Rat(22, 7))) == Rat(22, 7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("scheme text grammar") {
  Scheme s1 = parse_scheme_text("(a.b b.b a.e b.e)");
  CHECK(s1.d() == 2);
  CHECK(format_scheme(s1) == "(a.b b.b a.e b.e)");
  Scheme ds2 = parse_scheme_text("(a.b)(a.e)");
  CHECK(cycles(ds2).N() == 2);
  CHECK(format_scheme(ds2) == "(a.b)(a.e)");
  CHECK_THROWS_AS(parse_scheme_text("(a.b a.b)"), Error);  // duplicate element
  CHECK_THROWS_AS(parse_scheme_text("(a.b a.e"), Error);
  CHECK_THROWS_AS(parse_scheme_text("(a.x)"), Error);
  CHECK_THROWS_AS(parse_scheme_text(""), Error);
  CHECK_THROWS_AS(parse_scheme_text("(a.b)"), Error);  // a.e missing
  try {
    parse_scheme_text("(a.b @)");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  for (int i = 0; i < 40; ++i) {
    Scheme s = testutil::random_scheme(testutil::rand_int(1, 5));
    CHECK(parse_scheme_text(format_scheme(s)) == s);
  }
}

TEST_CASE("two-row text grammar") {
  TwoRowIET t = parse_two_row("[a b / b a][c / c]");
  REQUIRE(t.brackets.size() == 2);
  CHECK(t.brackets[0].upper == std::vector<std::string>{"a", "b"});
  CHECK(t.brackets[0].lower == std::vector<std::string>{"b", "a"});
  CHECK(format_two_row(t) == "[a b / b a][c / c]");
  CHECK(parse_two_row(format_two_row(t)).brackets.size() == 2);
  CHECK_THROWS_AS(parse_two_row("[a b b a]"), Error);
  CHECK_THROWS_AS(parse_two_row("[a / b / c]"), Error);
}

TEST_CASE("json round trips") {
  Scheme s = parse_scheme_text("(a.b b.b g.b d.b a.e b.e g.e d.e)");
  CHECK(scheme_from_json(scheme_to_json(s)) == s);
  Endpoints x = {Rat(0), Rat(4), Rat(1), Rat(3), Rat(2), Rat(2), Rat(3), Rat(1)};
  CHECK(endpoints_from_json(s, endpoints_to_json(s, x)) == x);
  Lengths v{Rat(1), Rat(-2, 3), Rat(5), Rat(7, 11)};
  CHECK(lengths_from_json(s, lengths_to_json(s, v)) == v);
  Endpoints y = {Rat(0),  Rat(-1, 2), Rat(-3, 2), Rat(1),
                 Rat(-1), Rat(1, 2),  Rat(-5, 2), Rat(2)};
  NaturalExtension e = make_extension(s, x, y);
  NaturalExtension back = extension_from_json(extension_to_json(e));
  CHECK(back.scheme == e.scheme);
  CHECK(back.x == e.x);
  CHECK(back.y == e.y);
  // Emitted documents are textually stable.
  CHECK(extension_to_json(back).dump() == extension_to_json(e).dump());
}

TEST_CASE("analysis report is internally consistent") {
  Scheme s = parse_scheme_text("(a.b b.b g.b d.b a.e b.e g.e d.e)");
  json rep = analysis_report(s);
  CHECK(rep["d"] == 4);
  CHECK(rep["N"] == 1);
  CHECK(rep["P"] == 1);
  CHECK(rep["T"] == 0);
  CHECK(rep["dual_T"] == 2);
  CHECK(rep["twists_total"] == 2);
  CHECK(rep["genus"] == 2);
  CHECK(rep["dim_X"] == 5);
  CHECK(rep["dim_V"] == 4);
  CHECK(rep["positive"] == true);
  CHECK(rep["is_iet"] == true);
  CHECK(rep["dual_is_iet"] == false);
  int T = rep["T"], Td = rep["dual_T"];
  CHECK(T + Td == rep["twists_total"]);
  CHECK(rep["twists_total"].get<int>() / 2 + 1 == rep["genus"].get<int>());
}

TEST_CASE("glued tree and surface exports") {
  Scheme s = parse_scheme_text("(a.b b.b g.b d.b a.e b.e g.e d.e)");
  Endpoints x = {Rat(0), Rat(4), Rat(1), Rat(3), Rat(2), Rat(2), Rat(3), Rat(1)};
  Endpoints y = {Rat(0),  Rat(-1, 2), Rat(-3, 2), Rat(1),
                 Rat(-1), Rat(1, 2),  Rat(-5, 2), Rat(2)};
  GluedTree t =
      glue_ire(dual(s), y, BranchRule{BranchRule::Kind::Explicit, {Rat(-5, 4), Rat(1, 4)}});
  json jt = glued_tree_to_json(t);
  CHECK(jt["pairings"].size() == 9);
  CHECK(jt["branch_points"].size() == 2);
  ZipperedSurface surf = build_surface(make_extension(s, x, y));
  json js = surface_to_json(surf);
  CHECK(js["genus"] == 2);
  CHECK(js["euler"]["chi"] == -2);
  CHECK(js["rectangles"].size() == 4);
  CHECK(js["cone_points"].size() == 2);
  // Documents re-serialize identically.
  CHECK(json::parse(js.dump()).dump() == js.dump());
  CHECK(json::parse(jt.dump()).dump() == jt.dump());
}

TEST_CASE("class exports") {
  RauzyClass rc = rauzy_class(parse_scheme_text("(a.b b.b a.e b.e)"), 50);
  json j = rauzy_class_to_json(rc);
  CHECK(j["truncated"] == false);
  CHECK(j["schemes"].size() == rc.schemes.size());
  std::string dot = rauzy_class_to_dot(rc);
  CHECK(dot.find("digraph") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ire/error.hpp"
#include "ire/io.hpp"
#include "test_util.hpp"

using namespace ire;
using testutil::all_schemes;
using testutil::random_scheme;

namespace {
Scheme S0() { return parse_scheme_text("(a.b b.b g.b d.b a.e b.e g.e d.e)"); }
Scheme S1() { return parse_scheme_text("(a.b b.b a.e b.e)"); }

std::set<std::string> step_texts(const Scheme& s, const std::vector<InductionStep>& steps) {
  std::set<std::string> out;
  for (const auto& st : steps) out.insert(format_step(s, st));
  return out;
}

InductionStep conjugate_partner(const InductionStep& st) {
  switch (st.kind) {
    case StepKind::rb: return {StepKind::rb, st.beta, st.alpha};
    case StepKind::re: return {StepKind::lb, st.alpha, st.beta};
    case StepKind::lb: return {StepKind::re, st.alpha, st.beta};
    case StepKind::le: return {StepKind::le, st.beta, st.alpha};
  }
  return st;
}
}  // namespace

TEST_CASE("applicable steps at the turns of S0") {
  Scheme s0 = S0();
  CHECK(step_texts(s0, applicable_steps(s0)) ==
        std::set<std::string>{"rb:d,a", "re:d,a", "lb:a,d", "le:a,d"});
  Lengths v{Rat(2), Rat(3), Rat(5), Rat(11)};
  PositiveSteps ps = applicable_positive_steps(s0, v);
  CHECK(step_texts(s0, ps.steps) == std::set<std::string>{"rb:d,a", "le:a,d"});
  CHECK(ps.ties.empty());
  PositiveSteps tied = applicable_positive_steps(s0, Lengths{Rat(1), Rat(5), Rat(6), Rat(1)});
  CHECK(tied.steps.empty());
  // Both the turn-back site (d,a) and the turn-forward site (a,d) tie.
  CHECK(tied.ties == std::vector<std::pair<LabelIdx, LabelIdx>>{{3, 0}, {0, 3}});
}

TEST_CASE("scheme steps on the worked example") {
  Scheme s0 = S0();
  Scheme r = apply_step_scheme(s0, parse_step(s0, "rb:d,a"));
  CHECK(format_scheme(r) == "(a.b b.b g.b d.b b.e g.e a.e d.e)");
  CHECK(invert_step_scheme(r, parse_step(r, "rb:d,a")) == s0);
  // All four steps fix the torus scheme.
  Scheme s1 = S1();
  for (const auto& st : applicable_steps(s1)) CHECK(apply_step_scheme(s1, st) == s1);
  // A step without its defining turn is rejected.
  CHECK_THROWS_AS(apply_step_scheme(s0, parse_step(s0, "rb:a,b")), Error);
  try {
    invert_step_scheme(s0, parse_step(s0, "re:d,a"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInImage);
  }
}

TEST_CASE("duality conjugates each step to its inverse") {
  auto check_conjugacy = [](const Scheme& s) {
    for (const auto& st : applicable_steps(s)) {
      Scheme sp = apply_step_scheme(s, st);
      CHECK(invert_step_scheme(sp, st) == s);
      // The inverse equals conjugation by duality of the partner step.
      Scheme via_dual = dual(apply_step_scheme(dual(sp), conjugate_partner(st)));
      CHECK(via_dual == s);
    }
  };
  for (int d = 1; d <= 2; ++d)
    for (const Scheme& s : all_schemes(d)) check_conjugacy(s);
  for (int i = 0; i < 300; ++i) check_conjugacy(random_scheme(testutil::rand_int(4, 7)));
}

TEST_CASE("endpoint and length transforms round-trip") {
  for (int i = 0; i < 120; ++i) {
    Scheme s = random_scheme(testutil::rand_int(2, 5));
    Endpoints x = testutil::random_endpoints(s);
    Lengths v = lengths_from_endpoints(s, x);
    for (const auto& st : applicable_steps(s)) {
      SchemeEndpoints fwd = apply_step(s, x, st);
      SchemeEndpoints back = invert_step(fwd.scheme, fwd.x, st);
      CHECK(back.scheme == s);
      CHECK(back.x == x);
      SchemeLengths lf = apply_step_lengths(s, v, st);
      CHECK(lengths_from_endpoints(fwd.scheme, fwd.x) == lf.v);
      SchemeLengths lb = invert_step_lengths(lf.scheme, lf.v, st);
      CHECK(lb.scheme == s);
      CHECK(lb.v == v);
      // And the other composition, starting from the image side.
      SchemeEndpoints fwd2 = apply_step(back.scheme, back.x, st);
      CHECK(fwd2.scheme == fwd.scheme);
      CHECK(fwd2.x == fwd.x);
    }
  }
}

TEST_CASE("classical single-interval oracle") {
  TwoRowIET t = to_two_row(S0());  // [a b g d / d g b a]
  Lengths v{Rat(2), Rat(3), Rat(5), Rat(11)};
  // Rightmost: beginning d (11) vs ending a (2): the beginning side wins.
  ClassicalStepResult res = classical_rv_step(t, v);
  CHECK(res.t.brackets[0].upper == std::vector<std::string>{"a", "b", "g", "d"});
  CHECK(res.t.brackets[0].lower == std::vector<std::string>{"d", "a", "g", "b"});
  CHECK(res.v == Lengths{Rat(2), Rat(3), Rat(5), Rat(9)});
  CHECK_THROWS_AS(classical_rv_step(t, Lengths{Rat(11), Rat(1), Rat(2), Rat(11)}), Error);
}

TEST_CASE("left crops move the left endpoint") {
  Scheme s0 = S0();
  TwoRowIET t = to_two_row(s0);
  Lengths v{Rat(2), Rat(3), Rat(5), Rat(11)};
  RatVec A{Rat(7)};
  CropStepResult le = two_row_crop_step(t, v, A, parse_step(s0, "le:a,d"));
  CHECK(le.t.brackets[0].upper == std::vector<std::string>{"b", "g", "a", "d"});
  CHECK(le.t.brackets[0].lower == std::vector<std::string>{"d", "g", "b", "a"});
  CHECK(le.v == Lengths{Rat(2), Rat(3), Rat(5), Rat(9)});
  CHECK(le.A == RatVec{Rat(9)});
  CHECK(from_two_row(le.t) == apply_step_scheme(s0, parse_step(s0, "le:a,d")));
  // lb needs the opposite inequality.
  CHECK_THROWS_AS(two_row_crop_step(t, v, A, parse_step(s0, "lb:a,d")), Error);
  Lengths v2{Rat(11), Rat(3), Rat(5), Rat(2)};
  CropStepResult lb = two_row_crop_step(t, v2, A, parse_step(s0, "lb:a,d"));
  CHECK(lb.t.brackets[0].upper == std::vector<std::string>{"a", "b", "g", "d"});
  CHECK(lb.t.brackets[0].lower == std::vector<std::string>{"g", "b", "d", "a"});
  CHECK(lb.v == Lengths{Rat(9), Rat(3), Rat(5), Rat(2)});
  CHECK(lb.A == RatVec{Rat(9)});
  CHECK(from_two_row(lb.t) == apply_step_scheme(s0, parse_step(s0, "lb:a,d")));
}

TEST_CASE("crop, classical and scheme steps agree on single brackets") {
  for (int trial = 0; trial < 200; ++trial) {
    int d = testutil::rand_int(2, 4);
    TwoRowIET t;
    TwoRowIET::Bracket br;
    br.upper = testutil::letters(d);
    br.lower = br.upper;
    for (int i = d - 1; i > 0; --i)
      std::swap(br.lower[i], br.lower[testutil::rand_int(0, i)]);
    if (br.lower.back() == br.upper.back()) continue;
    t.brackets.push_back(br);
    Scheme s = from_two_row(t);
    Lengths v(d);
    for (int i = 0; i < d; ++i) v[i] = Rat(testutil::rand_int(1, 30));
    LabelIdx alpha = *s.find_label(br.upper.back());
    LabelIdx beta = *s.find_label(br.lower.back());
    if (v[alpha] == v[beta]) continue;
    InductionStep step{v[alpha] > v[beta] ? StepKind::rb : StepKind::re, alpha, beta};
    ClassicalStepResult cls = classical_rv_step(t, v);
    CropStepResult crop = two_row_crop_step(t, v, RatVec{Rat(0)}, step);
    SchemeLengths sch = apply_step_lengths(s, v, step);
    CHECK(cls.t.brackets[0].upper == crop.t.brackets[0].upper);
    CHECK(cls.t.brackets[0].lower == crop.t.brackets[0].lower);
    CHECK(cls.v == crop.v);
    CHECK(crop.A == RatVec{Rat(0)});
    CHECK(from_two_row(cls.t) == sch.scheme);
    CHECK(cls.v == sch.v);
  }
}

TEST_CASE("ties are reported and leave data untouched") {
  Scheme s0 = S0();
  TwoRowIET t = to_two_row(s0);
  Lengths v{Rat(3), Rat(1), Rat(2), Rat(3)};
  CHECK_THROWS_AS(classical_rv_step(t, v), Error);
  try {
    two_row_crop_step(t, v, RatVec{Rat(0)}, parse_step(s0, "rb:d,a"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TieDetected);
  }
  CHECK(v == Lengths{Rat(3), Rat(1), Rat(2), Rat(3)});  // inputs untouched
}

TEST_CASE("induction class enumeration") {
  RauzyClass trivial = rauzy_class(parse_scheme_text("(a.b a.e)"), 100);
  CHECK(trivial.schemes.size() == 1);
  CHECK(trivial.edges.empty());  // no applicable step at all
  CHECK_FALSE(trivial.truncated);

  RauzyClass torus = rauzy_class(S1(), 100);
  CHECK_FALSE(torus.truncated);
  for (const auto& e : torus.edges) CHECK(e.from == e.to);  // loops only

  RauzyClass cls = rauzy_class(S0(), 1000);
  CHECK_FALSE(cls.truncated);
  CHECK(cls.schemes.size() == 504);
  int tt = twists_total(S0());
  int n = cycles(S0()).N(), p = irreducible_components(S0()).P();
  for (const Scheme& s : cls.schemes) {
    CHECK(twists_total(s) == tt);
    CHECK(cycles(s).N() == n);
    CHECK(irreducible_components(s).P() == p);
  }
  RauzyClass cut = rauzy_class(S0(), 3);
  CHECK(cut.truncated);
  CHECK(cut.schemes.size() == 3);
}

TEST_CASE("step literals parse and format") {
  Scheme s0 = S0();
  InductionStep st = parse_step(s0, "rb:d,a");
  CHECK(st.kind == StepKind::rb);
  CHECK(format_step(s0, st) == "rb:d,a");
  CHECK_THROWS_AS(parse_step(s0, "zz:a,b"), Error);
  CHECK_THROWS_AS(parse_step(s0, "rb:q,a"), Error);
}

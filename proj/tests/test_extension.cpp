#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ire/error.hpp"
#include "ire/io.hpp"
#include "test_util.hpp"

using namespace ire;

namespace {
Scheme S0() { return parse_scheme_text("(a.b b.b g.b d.b a.e b.e g.e d.e)"); }
}  // namespace

TEST_CASE("membership failures name the failing side") {
  Scheme s0 = S0();
  Endpoints good_x = testutil::endpoints_for(s0, Lengths{Rat(1), Rat(1), Rat(1), Rat(1)});
  Endpoints good_y =
      testutil::endpoints_for(dual(s0), Lengths{Rat(1), Rat(2), Rat(3), Rat(5, 2)});
  CHECK_NOTHROW(make_extension(s0, good_x, good_y));
  Endpoints bad = good_x;
  bad[0] += 1;
  CHECK_THROWS_WITH_AS(make_extension(s0, bad, good_y), doctest::Contains("primal"), Error);
  Endpoints bad_y = good_y;
  bad_y[0] += 1;
  CHECK_THROWS_WITH_AS(make_extension(s0, good_x, bad_y), doctest::Contains("dual"), Error);
}

TEST_CASE("worked floating step transfers mass to the dual side") {
  Scheme s0 = S0();
  Lengths v{Rat(2), Rat(3), Rat(5), Rat(11)};
  Lengths w{Rat(1), Rat(1), Rat(1), Rat(1)};
  FloatingExtension f = make_floating(s0, v, w);
  CHECK(area(f) == Rat(21));
  FloatingExtension g = apply_step_floating(f, parse_step(s0, "rb:d,a"));
  CHECK(g.v == Lengths{Rat(2), Rat(3), Rat(5), Rat(9)});
  CHECK(g.w == Lengths{Rat(2), Rat(1), Rat(1), Rat(1)});  // w_a picks up w_d
  CHECK(area(g) == Rat(21));
}

TEST_CASE("tie and direction guards") {
  Scheme s0 = S0();
  FloatingExtension f =
      make_floating(s0, Lengths{Rat(3), Rat(1), Rat(2), Rat(3)},
                    Lengths{Rat(1), Rat(1), Rat(1), Rat(1)});
  try {
    apply_step_floating(f, parse_step(s0, "rb:d,a"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TieDetected);
  }
  FloatingExtension g =
      make_floating(s0, Lengths{Rat(5), Rat(1), Rat(2), Rat(2)},
                    Lengths{Rat(1), Rat(1), Rat(1), Rat(1)});
  // v_d < v_a, so the rb crop at (d,a) is not the positive step there.
  CHECK_THROWS_AS(apply_step_floating(g, parse_step(s0, "rb:d,a")), Error);
  CHECK_NOTHROW(apply_step_floating(g, parse_step(s0, "re:d,a")));
}

TEST_CASE("area and twists are preserved along random positive orbits") {
  int sequences = 0;
  for (int trial = 0; trial < 200 && sequences < 30; ++trial) {
    auto ext = testutil::random_positive_extension(testutil::rand_int(2, 5));
    if (!ext) continue;
    FloatingExtension f = make_floating(
        ext->scheme, lengths_from_endpoints(ext->scheme, ext->x),
        lengths_from_endpoints(dual(ext->scheme), ext->y));
    Rat a0 = area(f);
    int tt = twists_total(f.scheme);
    int steps_done = 0;
    for (int k = 0; k < 25; ++k) {
      PositiveSteps ps = applicable_positive_steps(f.scheme, f.v);
      if (ps.steps.empty()) break;
      f = apply_step_floating(f, ps.steps[testutil::rand_int(
                                     0, static_cast<int>(ps.steps.size()) - 1)]);
      CHECK(area(f) == a0);
      CHECK(twists_total(f.scheme) == tt);
      for (const Rat& len : f.w) CHECK(len > 0);
      ++steps_done;
    }
    if (steps_done >= 5) ++sequences;
  }
  CHECK(sequences >= 30);
}

TEST_CASE("endpoint-level extension steps stay consistent with lengths") {
  int done = 0;
  for (int trial = 0; trial < 100 && done < 15; ++trial) {
    auto ext = testutil::random_positive_extension(testutil::rand_int(2, 4));
    if (!ext) continue;
    Lengths v = lengths_from_endpoints(ext->scheme, ext->x);
    PositiveSteps ps = applicable_positive_steps(ext->scheme, v);
    if (ps.steps.empty()) continue;
    for (const auto& st : ps.steps) {
      NaturalExtension next = apply_step_extension(*ext, st);
      FloatingExtension f = make_floating(
          ext->scheme, v, lengths_from_endpoints(dual(ext->scheme), ext->y));
      FloatingExtension g = apply_step_floating(f, st);
      CHECK(g.scheme == next.scheme);
      CHECK(lengths_from_endpoints(next.scheme, next.x) == g.v);
      CHECK(lengths_from_endpoints(dual(next.scheme), next.y) == g.w);
    }
    ++done;
  }
  CHECK(done >= 15);
}

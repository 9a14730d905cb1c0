#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spweb/engine.hpp"

using namespace spweb;

namespace {

// Closed circle of color c as a two-rung ladder: cup then cap.
Ladder circle_ladder(int c) {
  LObject dom{Obj{0, c}, Obj{0, 0}};
  Rung cup = make_rung(dom, 0, Dir::F, c, 0, c, c);
  LObject mid = apply_rung(dom, cup).above;
  Rung cap = make_rung(mid, 0, Dir::E, c, 0, 0, 0);
  return Ladder{dom, {cup, cap}};
}

}  // namespace

TEST_CASE("circle values") {
  clear_eval_cache();
  CHECK(evaluate_closed(Morphism::from_ladder(circle_ladder(1))) ==
        parse_scalar("1-[7]"));
  CHECK(evaluate_closed(Morphism::from_ladder(circle_ladder(2))) ==
        parse_scalar("[7][8]/[4]"));
  CHECK(evaluate_closed(Morphism::from_ladder(circle_ladder(3))) ==
        parse_scalar("-[6][7][8]/([2][3][4])"));
}

TEST_CASE("mass-zero closed diagrams are 1") {
  CHECK(evaluate_closed(Morphism::from_ladder(identity_ladder(LObject{}))) ==
        QScalar(1));
  CHECK(evaluate_closed(Morphism::from_ladder(identity_ladder(LObject{Obj{0, 0}}))) ==
        QScalar(1));
}

TEST_CASE("evaluate_closed rejects nonzero boundary labels") {
  CHECK_THROWS_AS(
      evaluate_closed(Morphism::from_ladder(identity_ladder(LObject{Obj{1, 0}}))),
      InvalidArgument);
}

TEST_CASE("budget exhaustion is reported") {
  RunConfig cfg;
  cfg.budget = 0;
  cfg.use_cache = false;
  CHECK_THROWS_AS(evaluate_closed(Morphism::from_ladder(circle_ladder(2)), cfg),
                  InternalDefect);
}

TEST_CASE("strategies and cache modes agree") {
  Morphism m = Morphism::from_ladder(circle_ladder(3));
  RunConfig a, b, nc;
  a.strategy = Strategy::LowestLeftmost;
  b.strategy = Strategy::RightmostHighest;
  nc.use_cache = false;
  QScalar va = evaluate_closed(m, a);
  CHECK(va == evaluate_closed(m, b));
  CHECK(va == evaluate_closed(m, nc));
}

TEST_CASE("pbw normality") {
  Ladder circ = circle_ladder(1);
  CHECK_FALSE(is_pbw_normal(circ));  // F below E
  CHECK(is_pbw_normal(identity_ladder(LObject{Obj{1, 0}, Obj{2, 1}})));
  Morphism nf = normalize_pbw(Morphism::from_ladder(circ));
  for (const auto& [lad, c] : nf.terms()) {
    (void)c;
    CHECK(is_pbw_normal(lad));
  }
}

TEST_CASE("annular trace of identities") {
  ChiPolynomial x1 = trace_normalize(identity_on_labels({1}));
  CHECK(x1.str() == "x1");
  CHECK(trace_normalize(identity_on_labels({3})).str() == "x3");
  CHECK(trace_normalize(identity_on_labels({1, 2})).str() == "x1 x2");
  // Substituting the circle values recovers the planar closure.
  QScalar c1 = parse_scalar("1-[7]");
  QScalar c2 = parse_scalar("[7][8]/[4]");
  QScalar c3 = parse_scalar("-[6][7][8]/([2][3][4])");
  CHECK(x1.substitute(c1, c2, c3) == c1);
}

TEST_CASE("trace_normalize requires a strict endomorphism") {
  Ladder l = identity_ladder(LObject{Obj{1, 0}});
  Morphism m = Morphism::from_ladder(l);
  CHECK_NOTHROW(trace_normalize(m));
  LObject dom{Obj{1, 1}, Obj{0, 0}};
  Morphism shifted(dom, identity_ladder(dom).codomain());
  shifted.add_term(identity_ladder(dom), QScalar(1));
  CHECK_NOTHROW(trace_normalize(shifted));
  Ladder cup{LObject{Obj{0, 1}, Obj{0, 0}},
             {make_rung(LObject{Obj{0, 1}, Obj{0, 0}}, 0, Dir::F, 1, 0, 1, 1)}};
  CHECK_THROWS_AS(trace_normalize(Morphism::from_ladder(cup)), InvalidArgument);
}

TEST_CASE("make_endo lifts shifted boundaries") {
  LObject dom{Obj{1, 0}, Obj{1, 0}};
  Rung cap = make_rung(dom, 0, Dir::E, 1, 0, 0, 0);
  Morphism m = Morphism::from_ladder(Ladder{dom, {cap}});  // (1,1) -> (0^1, 0)
  Morphism cupm = vflip(m);
  Morphism endo = make_endo(compose_lifted(cupm, m));
  CHECK(endo.dom() == endo.cod());
  CHECK_NOTHROW(trace_normalize(endo));
}

TEST_CASE("lifted composition matches plain composition on equal boundaries") {
  Morphism id = identity_on_labels({1, 2});
  Morphism c = compose_lifted(id, id);
  CHECK(c.dom() == c.cod());
  CHECK(c.terms().size() == 1);
}

TEST_CASE("lifted sums merge equal terms") {
  Morphism id = identity_on_labels({2});
  Morphism s = sum_lifted({{QScalar(1), id}, {QScalar(1), id}});
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms().begin()->second == QScalar(2));
}

TEST_CASE("boundary mismatch is reported") {
  Morphism a = identity_on_labels({1});
  Morphism b = identity_on_labels({2});
  try {
    static_cast<void>(compose_lifted(a, b));
    CHECK(false);
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("web boundary mismatch") != std::string::npos);
  }
}

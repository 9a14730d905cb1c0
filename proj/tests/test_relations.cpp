#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spweb/relations.hpp"

using namespace spweb;

TEST_CASE("embedded rule source") {
  const std::string& src = rule_source();
  CHECK(src.find("appA.square") != std::string::npos);
  CHECK(src.find("appA.explode2") != std::string::npos);
  CHECK(src.find("appA.explode3") != std::string::npos);
  CHECK(src.find("appA.swap") != std::string::npos);
}

TEST_CASE("square cell (0,1,0)x(0,1,0) is the circle value") {
  LObject below{Obj{0, 1}, Obj{0, 0}};
  Rung lower = make_rung(below, 0, Dir::F, 1, 0, 1, 1);
  LObject mid = apply_rung(below, lower).above;
  Rung upper = make_rung(mid, 0, Dir::E, 1, 0, 0, 0);
  LocalCombo c = reorder(below, lower, upper);
  REQUIRE(c.size() == 1);
  CHECK(c[0].rungs.empty());
  CHECK(c[0].coeff == parse_scalar("-[3][8]/[4]"));
  CHECK(c[0].coeff == parse_scalar("1-[7]"));
}

TEST_CASE("label-3 explosion on (1,1) context has three terms") {
  LObject below{Obj{1, 2}, Obj{1, 0}};
  Rung r = make_rung(below, 0, Dir::F, 3, 0, 2, 2);
  LocalCombo c = explode(below, r);
  REQUIRE(c.size() == 3);
  for (const LocalTerm& t : c) {
    CHECK(t.rungs.size() == 2);
    // Every replacement ladder is valid and preserves the boundary.
    Ladder host{below, {r}};
    for (const auto& [coeff, lad] : splice(host, 0, 1, {t})) {
      (void)coeff;
      CHECK(lad.codomain() == host.codomain());
    }
  }
}

TEST_CASE("generic explosion peels a 0' rung") {
  LObject below{Obj{2, 1}, Obj{0, 0}};
  Rung r = make_rung(below, 0, Dir::F, 2, 1, 0, 2);
  LocalCombo c = explode(below, r);
  REQUIRE(c.size() == 1);
  REQUIRE(c[0].rungs.size() == 2);
  CHECK(c[0].coeff == QScalar(1));
  CHECK(c[0].rungs[0].label == 0);
  CHECK(c[0].rungs[1].label == 2);
}

TEST_CASE("explode rejects terminal rungs") {
  LObject below{Obj{0, 1}, Obj{0, 0}};
  Rung r = make_rung(below, 0, Dir::F, 1, 0, 1, 1);
  CHECK(rung_terminal(below, r));
  CHECK_THROWS_AS(explode(below, r), InvalidArgument);
}

TEST_CASE("distant swap commutes verbatim") {
  LObject below{Obj{0, 1}, Obj{0, 0}, Obj{1, 0}, Obj{1, 0}};
  Rung lower = make_rung(below, 0, Dir::F, 1, 0, 1, 1);
  LObject mid = apply_rung(below, lower).above;
  Rung upper = make_rung(mid, 2, Dir::E, 1, 0, 2, 0);
  LocalCombo c = reorder(below, lower, upper);
  REQUIRE(c.size() == 1);
  CHECK(c[0].coeff == QScalar(1));
  REQUIRE(c[0].rungs.size() == 2);
  CHECK(c[0].rungs[0].dir == Dir::E);
  CHECK(c[0].rungs[1].dir == Dir::F);
}

TEST_CASE("rule instance audit at mass 6") {
  std::vector<RuleInstance> insts = all_rule_instances(6);
  CHECK(insts.size() > 100);
  size_t reflections = 0;
  for (const RuleInstance& r : insts) {
    CHECK(r.tag.rfind("appA.", 0) == 0);
    CHECK(r.lhs.dom() == r.rhs.dom());
    CHECK(r.lhs.cod() == r.rhs.cod());
    if (r.tag.find("flip") != std::string::npos) ++reflections;
    for (const auto& [lad, coeff] : r.lhs.terms()) {
      (void)coeff;
      lad.validate();
    }
    for (const auto& [lad, coeff] : r.rhs.terms()) {
      (void)coeff;
      lad.validate();
    }
  }
  // Reflection closure contributes the bulk of the instances.
  CHECK(reflections >= insts.size() / 2);
}

TEST_CASE("explosions strictly reduce the top rung mass") {
  for (const RuleInstance& r : all_rule_instances(4)) {
    if (r.tag.find("explode") == std::string::npos) continue;
    REQUIRE(r.lhs.terms().size() == 1);
    const Ladder& lhs = r.lhs.terms().begin()->first;
    REQUIRE(lhs.rungs.size() == 1);
    int lhs_mass = rung_mass(lhs.domain, lhs.rungs[0]);
    for (const auto& [lad, coeff] : r.rhs.terms()) {
      (void)coeff;
      std::vector<LObject> s = lad.slices();
      for (size_t i = 0; i < lad.rungs.size(); ++i)
        CHECK(rung_mass(s[i], lad.rungs[i]) < lhs_mass);
    }
  }
}

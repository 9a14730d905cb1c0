#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spweb/dubrovnik.hpp"
#include "spweb/links.hpp"

using namespace spweb;

TEST_CASE("crossing expansion term counts") {
  CHECK(crossing_expansion(1, 1, true).size() == 3);
  CHECK(crossing_expansion(1, 2, true).size() == 3);
  CHECK(crossing_expansion(2, 1, true).size() == 3);
  CHECK(crossing_expansion(2, 2, true).size() == 5);
  CHECK(crossing_expansion(1, 3, true).size() == 2);
  CHECK(crossing_expansion(2, 3, true).size() == 3);
  CHECK(crossing_expansion(3, 3, true).size() == 4);
  CHECK(crossing_expansion(1, 1, false).size() == 3);
}

TEST_CASE("crossing expansion leading coefficients") {
  WebCombo c = crossing_expansion(1, 1, true);
  // The identity term carries coefficient q; the inverse carries q^-1.
  bool found = false;
  for (const auto& [s, w] : c)
    if (w.rows.empty()) {
      found = true;
      CHECK(s == parse_scalar("q"));
    }
  CHECK(found);
  for (const auto& [s, w] : crossing_expansion(1, 1, false))
    if (w.rows.empty()) CHECK(s == parse_scalar("q^-1"));
}

TEST_CASE("braid word parsing") {
  auto w = parse_braid_word("s1 -s2 s1");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == std::make_pair(1, true));
  CHECK(w[1] == std::make_pair(2, false));
  CHECK_THROWS_AS(parse_braid_word("t1"), InvalidArgument);
  CHECK_THROWS_AS(parse_braid_word("s"), InvalidArgument);
}

TEST_CASE("link JSON parsing") {
  ColoredBraidWord b = parse_link_json(
      R"({"strands": 2, "colors": [1, 1], "word": ["s1", "s1"], "closure": "trace"})");
  CHECK(b.strands == 2);
  CHECK(b.colors == std::vector<int>{1, 1});
  REQUIRE(b.word.size() == 2);
  CHECK(b.closure == ColoredBraidWord::Closure::Trace);
  CHECK_THROWS_AS(parse_link_json("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_link_json(R"({"strands": 2})"), InvalidArgument);
}

TEST_CASE("Reidemeister II for colors (1,1)") {
  SliceWeb w = parse_web("obj: 1 1\nslice: x(1,1)\nslice: xi(1,1)\n");
  Morphism m = ladderize_combo(expand_crossings(w));
  Morphism id = identity_on_labels({1, 1});
  Morphism probe = vflip(id);
  CHECK(closure_values(m, probe) == closure_values(id, probe));
}

TEST_CASE("twist values") {
  CHECK(twist_value(1, true) == parse_scalar("-q^7"));
  CHECK(twist_value(1, false) == parse_scalar("-q^-7"));
}

TEST_CASE("unknot and unlinks") {
  ColoredBraidWord unknot{1, {1}, {}, ColoredBraidWord::Closure::Trace};
  CHECK(link_invariant(unknot) == parse_scalar("1-[7]"));
  CHECK(dubrovnik_closure(1, {}) == parse_scalar("1-[7]"));
  CHECK(dubrovnik_closure(2, {}) == parse_scalar("(1-[7])^2"));
}

TEST_CASE("Hopf link agrees with the Dubrovnik oracle") {
  std::vector<std::pair<int, bool>> word{{1, true}, {1, true}};
  ColoredBraidWord hopf{2, {1, 1}, word, ColoredBraidWord::Closure::Trace};
  QScalar ours = link_invariant(hopf);
  QScalar oracle = dubrovnik_closure(2, word);
  CHECK(ours == oracle);
  // Hand value: delta^2 + z a delta - z a^-1 delta.
  CHECK(oracle == parse_scalar("(1-[7])^2") +
                      parse_scalar("(q-q^-1)(1-[7])") *
                          (parse_scalar("-q^7") - parse_scalar("-q^-7")));
}

TEST_CASE("plat closure of a cup-cap pair") {
  ColoredBraidWord b{2, {2, 2}, {}, ColoredBraidWord::Closure::Plat};
  CHECK(link_invariant(b) == parse_scalar("[7][8]/[4]"));
  ColoredBraidWord bad{2, {1, 2}, {}, ColoredBraidWord::Closure::Plat};
  CHECK_THROWS_AS(static_cast<void>(link_invariant(bad)), InvalidArgument);
}

TEST_CASE("annular invariant of identity braids") {
  ColoredBraidWord b3{1, {3}, {}, ColoredBraidWord::Closure::Trace};
  CHECK(annular_invariant(b3).str() == "x3");
  ColoredBraidWord b12{2, {1, 2}, {}, ColoredBraidWord::Closure::Trace};
  CHECK(annular_invariant(b12).str() == "x1 x2");
}

TEST_CASE("annular invariant specializes to the link invariant") {
  QScalar c1 = parse_scalar("1-[7]");
  QScalar c2 = parse_scalar("[7][8]/[4]");
  QScalar c3 = parse_scalar("-[6][7][8]/([2][3][4])");
  std::vector<std::pair<int, bool>> word{{1, true}, {1, true}};
  ColoredBraidWord hopf{2, {1, 1}, word, ColoredBraidWord::Closure::Trace};
  CHECK(annular_invariant(hopf).substitute(c1, c2, c3) == link_invariant(hopf));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spweb/webs.hpp"

using namespace spweb;

namespace {
using A = WebAtom;

SliceWeb circle_web(int c) {
  return parse_web("obj:\nslice: cup(" + std::to_string(c) +
                   ")\nslice: cap(" + std::to_string(c) + ")\n");
}
}  // namespace

TEST_CASE("web parsing") {
  SliceWeb w = parse_web("obj: 1 2\n# a comment\nslice: vtx(1,2>3)\n");
  CHECK(w.domain == std::vector<int>{1, 2});
  CHECK(w.codomain() == std::vector<int>{3});
  CHECK(w.rows.size() == 1);
  CHECK(w.rows[0][0] == A::vtx(1, 2, 3));
  CHECK(parse_web(w.str()) == w);
}

TEST_CASE("web parse errors cite line and column") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_web(text);
      CHECK(false);
    } catch (const InvalidArgument& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find("web parse error") != std::string::npos);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("slice: id(1)\n", "line 1");
  expect_error("obj: 1\nslice: frob(1)\n", "unknown atom");
  expect_error("obj: 1 1\nslice: vtx(1,1>3)\n", "disallowed vertex triple");
  expect_error("obj: 4\n", "label must be 1, 2 or 3");
  expect_error("obj: 1\nslice: cap(1)\n", "mismatch");
}

TEST_CASE("circles") {
  CHECK(evaluate_web(circle_web(1)) == parse_scalar("1-[7]"));
  CHECK(evaluate_web(circle_web(2)) == parse_scalar("[7][8]/[4]"));
  CHECK(evaluate_web(circle_web(3)) == parse_scalar("-[6][7][8]/([2][3][4])"));
  CHECK(evaluate_web(parse_web("obj:\n")) == QScalar(1));
}

TEST_CASE("theta") {
  SliceWeb theta = parse_web(
      "obj:\n"
      "slice: cup(2)\n"
      "slice: covtx(2>1,1) id(2)\n"
      "slice: vtx(1,1>2) id(2)\n"
      "slice: cap(2)\n");
  CHECK(evaluate_web(theta) == parse_scalar("[2][3][7][8]/[4]"));
}

TEST_CASE("reflections preserve closed values") {
  SliceWeb theta = parse_web(
      "obj:\nslice: cup(2)\nslice: covtx(2>1,1) id(2)\n"
      "slice: vtx(1,1>2) id(2)\nslice: cap(2)\n");
  QScalar v = evaluate_web(theta);
  CHECK(evaluate_web(vflip_web(theta)) == v);
  CHECK(evaluate_web(mirror_web(theta)) == v);
}

TEST_CASE("atomize preserves values") {
  SliceWeb w = parse_web(
      "obj:\nslice: cup(1) cup(1)\nslice: id(1) vtx(1,1>2) id(1)\n"
      "slice: id(1) covtx(2>1,1) id(1)\nslice: cap(1) cap(1)\n");
  SliceWeb a = atomize(w);
  for (const auto& row : a.rows) {
    int nontrivial = 0;
    for (const A& at : row)
      if (at.kind != A::Kind::Id) ++nontrivial;
    CHECK(nontrivial <= 1);
  }
  CHECK(evaluate_web(a) == evaluate_web(w));
}

TEST_CASE("crossing-free requirement") {
  SliceWeb w = parse_web("obj: 1 1\nslice: x(1,1)\n");
  CHECK(w.has_crossings());
  CHECK_THROWS_AS(static_cast<void>(ladderize(w)), InvalidArgument);
}

TEST_CASE("closures of identities are circle products") {
  QScalar c1 = parse_scalar("1-[7]");
  QScalar c2 = parse_scalar("[7][8]/[4]");
  QScalar c3 = parse_scalar("-[6][7][8]/([2][3][4])");
  Morphism id1 = identity_on_labels({1});
  CHECK(closed_trace(id1, ClosureKind::TraceRight) == c1);
  CHECK(closed_trace(id1, ClosureKind::TraceLeft) == c1);
  CHECK(closed_trace(id1, ClosureKind::Split) == c1);  // id . id = id
  Morphism id123 = identity_on_labels({1, 2, 3});
  CHECK(closed_trace(id123, ClosureKind::TraceRight) == c1 * c2 * c3);
  CHECK(closed_trace(id123, ClosureKind::TraceLeft) == c1 * c2 * c3);
  CHECK(closed_trace(id123, ClosureKind::Split) == c1 * c2 * c3);
}

TEST_CASE("annular trace substitution matches the planar closure") {
  // e = cap then cup on (1,1).
  SliceWeb ew = parse_web("obj: 1 1\nslice: cap(1)\nslice: cup(1)\n");
  Morphism e = ladderize(ew);
  QScalar c1 = parse_scalar("1-[7]");
  QScalar c2 = parse_scalar("[7][8]/[4]");
  QScalar c3 = parse_scalar("-[6][7][8]/([2][3][4])");
  ChiPolynomial chi = trace_normalize(make_endo(e));
  CHECK(chi.substitute(c1, c2, c3) == closed_trace(e, ClosureKind::TraceRight));
}

TEST_CASE("bigon inside a closure") {
  // cap . vtx . covtx . cup = [2][3] * circle_2 (the theta value again).
  SliceWeb w = parse_web(
      "obj:\nslice: cup(2)\nslice: covtx(2>1,1) id(2)\n"
      "slice: vtx(1,1>2) id(2)\nslice: cap(2)\n");
  CHECK(evaluate_web(w) == parse_scalar("[2][3]") * parse_scalar("[7][8]/[4]"));
}

TEST_CASE("pair_closure pairs opposite boundaries") {
  Morphism cap = ladderize(parse_web("obj: 2 2\nslice: cap(2)\n"));
  Morphism cup = vflip(cap);
  CHECK(pair_closure(cap, cup) == parse_scalar("[7][8]/[4]"));
}

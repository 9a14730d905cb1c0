// Acceptance gate: one pass/fail line per criterion; exits nonzero if any
// criterion fails.
#include <chrono>
#include <iostream>
#include <vector>

#include "spweb/dubrovnik.hpp"
#include "spweb/links.hpp"

using namespace spweb;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

template <typename F>
void criterion(int n, F&& f) {
  try {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail = f();
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report(n, true, detail + (detail.empty() ? "" : ", ") + std::to_string(dt) + " ms");
  } catch (const std::exception& e) {
    report(n, false, e.what());
  }
}

std::string summarize(const std::vector<CheckItem>& items) {
  int bad = 0;
  std::string first;
  for (const CheckItem& it : items)
    if (!it.ok) {
      ++bad;
      if (first.empty()) first = it.name + (it.detail.empty() ? "" : ": " + it.detail);
    }
  if (bad)
    throw InternalDefect(std::to_string(bad) + "/" + std::to_string(items.size()) +
                         " checks failed, first: " + first);
  return std::to_string(items.size()) + " checks";
}

SliceWeb circle_web(int c) {
  return parse_web("obj:\nslice: cup(" + std::to_string(c) + ")\nslice: cap(" +
                   std::to_string(c) + ")\n");
}

}  // namespace

int main() {
  RunConfig cfg;

  // 1. The three circle values.
  criterion(1, [&] {
    if (evaluate_web(circle_web(1), cfg) != parse_scalar("-[3][8]/[4]"))
      throw InternalDefect("circle 1 mismatch");
    if (evaluate_web(circle_web(2), cfg) != parse_scalar("[7][8]/[4]"))
      throw InternalDefect("circle 2 mismatch");
    if (evaluate_web(circle_web(3), cfg) != parse_scalar("-[6][7][8]/([2][3][4])"))
      throw InternalDefect("circle 3 mismatch");
    return std::string("3 circle values");
  });

  // 2. Defining and derived relations under three closures.
  criterion(2, [&] { return summarize(verify_relations(cfg)); });

  // 3. Rewrite-rule table audit and per-rule closures.
  criterion(3, [&] { return summarize(verify_tables(cfg)); });

  // 4. Framing twists per color.
  criterion(4, [&] {
    if (twist_value(1, true, cfg) != parse_scalar("-q^7"))
      throw InternalDefect("color-1 positive twist mismatch");
    if (twist_value(1, false, cfg) != parse_scalar("-q^-7"))
      throw InternalDefect("color-1 negative twist mismatch");
    if (twist_value(2, true, cfg) != parse_scalar("q^12"))
      throw InternalDefect("color-2 twist mismatch: " + twist_value(2, true, cfg).str());
    // Color 3: the positive and negative kinks cancel.
    QScalar t3p = twist_value(3, true, cfg), t3n = twist_value(3, false, cfg);
    if (t3p * t3n != QScalar(1))
      throw InternalDefect("color-3 kinks do not cancel: " + t3p.str() + " * " + t3n.str());
    return "twists -q^7, q^12, color-3 " + t3p.str();
  });

  // 5. Reidemeister II (all color pairs) and III (mixed triples).
  criterion(5, [&] { return summarize(verify_reidemeister(cfg)); });

  // 6. Birman-Murakami-Wenzl relations on three strands.
  criterion(6, [&] { return summarize(verify_bmw(cfg)); });

  // 7. Dubrovnik oracle agreement on the link catalog.
  using Word = std::vector<std::pair<int, bool>>;
  const std::vector<std::pair<int, Word>> catalog = {
      {1, {}},                                              // unknot
      {2, {}},                                              // 2-unlink
      {2, {{1, true}, {1, true}}},                          // Hopf
      {2, {{1, true}, {1, true}, {1, true}}},               // trefoil
      {3, {{1, true}, {2, false}, {1, true}, {2, false}}},  // figure eight
  };
  criterion(7, [&] {
    for (const auto& [n, word] : catalog) {
      ColoredBraidWord b{n, std::vector<int>(static_cast<size_t>(n), 1), word,
                         ColoredBraidWord::Closure::Trace};
      QScalar ours = link_invariant(b, false, cfg);
      QScalar oracle = dubrovnik_closure(n, word);
      if (ours != oracle)
        throw InternalDefect("oracle mismatch on " + std::to_string(n) + "-strand word: " +
                             ours.str() + " vs " + oracle.str());
    }
    return std::string("5 links");
  });

  // 8. Integrality of color-1 link values.
  criterion(8, [&] {
    auto extended = catalog;
    extended.push_back({2, Word{{1, true}, {1, true}, {1, true}, {1, true}}});
    extended.push_back({2, Word{{1, true}, {1, true}, {1, true}, {1, true}, {1, true}}});
    for (const auto& [n, word] : extended) {
      ColoredBraidWord b{n, std::vector<int>(static_cast<size_t>(n), 1), word,
                         ColoredBraidWord::Closure::Trace};
      QScalar v = link_invariant(b, false, cfg);  // throws on a nontrivial denominator
      if (!v.is_integral()) throw InternalDefect("nonintegral value " + v.str());
    }
    return std::string("7 links integral");
  });

  // 9. Annular invariant: identity monomials and specialization.
  criterion(9, [&] {
    QScalar c1 = parse_scalar("1-[7]");
    QScalar c2 = parse_scalar("[7][8]/[4]");
    QScalar c3 = parse_scalar("-[6][7][8]/([2][3][4])");
    ColoredBraidWord id3{1, {3}, {}, ColoredBraidWord::Closure::Trace};
    if (annular_invariant(id3, cfg).str() != "x3")
      throw InternalDefect("identity braid on color 3 is not x3");
    ColoredBraidWord id12{2, {1, 2}, {}, ColoredBraidWord::Closure::Trace};
    if (annular_invariant(id12, cfg).str() != "x1 x2")
      throw InternalDefect("identity braid on colors 1,2 is not x1 x2");
    for (const Word& word :
         {Word{{1, true}, {1, true}}, Word{{1, true}, {1, true}, {1, true}}}) {
      ColoredBraidWord b{2, {1, 1}, word, ColoredBraidWord::Closure::Trace};
      if (annular_invariant(b, cfg).substitute(c1, c2, c3) != link_invariant(b, false, cfg))
        throw InternalDefect("annular specialization mismatch");
    }
    return std::string("identity monomials + Hopf, trefoil specializations");
  });

  // 10. Strategy confluence on random closed ladders.
  criterion(10, [&] { return summarize(verify_confluence(1, 100, cfg)); });

  if (failures) {
    std::cout << failures << " criteria FAILED" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}

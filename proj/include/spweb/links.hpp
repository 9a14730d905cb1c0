// Colored braids and links: crossing expansions into webs, braid closures,
// the resulting link invariant, the annular invariant, and the verification
// harnesses (defining relations, rule tables, Reidemeister moves, the
// Birman–Murakami–Wenzl algebra, and confluence of the rewriting strategy).
#pragma once

#include "spweb/webs.hpp"

namespace spweb {

struct ColoredBraidWord {
  enum class Closure { Trace, Plat };
  int strands = 0;
  std::vector<int> colors;                // one per strand, values 1..3
  std::vector<std::pair<int, bool>> word; // (generator index 1..strands-1, positive?)
  Closure closure = Closure::Trace;

  void validate() const;
};

// Parses a word like "s1 -s2 s1" (tokens s<i> and -s<i>).
std::vector<std::pair<int, bool>> parse_braid_word(const std::string& text);

// Parses the JSON description:
//   {"strands": 2, "colors": [1, 1], "word": ["s1", "s1"], "closure": "trace"}
ColoredBraidWord parse_link_json(const std::string& text);

// The expansion of a single crossing of colors (a, b) into crossing-free
// webs with scalar coefficients.  The positive crossing takes strand a over
// strand b; the inverse is the vertically flipped, bar-conjugated expansion.
WebCombo crossing_expansion(int a, int b, bool positive);

// Expands every crossing in the web, producing a combination of
// crossing-free webs.
WebCombo expand_crossings(const SliceWeb& w);

// The braid word as a slice web (with crossings), colors at the bottom.
SliceWeb braid_tangle(const ColoredBraidWord& b);

// The closed diagram of the braid (trace or plat closure), still with
// crossings.
SliceWeb closed_diagram(const ColoredBraidWord& b);

// The link invariant of the closed braid.  With normalize_framing, divides
// by the twist value of each component's color raised to its self-writhe.
QScalar link_invariant(const ColoredBraidWord& b, bool normalize_framing = false,
                       const RunConfig& cfg = {});

// Value of the positive/negative kink (Reidemeister I curl) on one strand
// of the given color, normalized by the circle of that color.
QScalar twist_value(int color, bool positive, const RunConfig& cfg = {});

// The annular invariant of the braid: the trace-normalized polynomial in
// the circle classes x1, x2, x3.
ChiPolynomial annular_invariant(const ColoredBraidWord& b, const RunConfig& cfg = {});

// ---- verification harnesses -------------------------------------------------

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<CheckItem> verify_relations(const RunConfig& cfg = {});
std::vector<CheckItem> verify_tables(const RunConfig& cfg = {});
std::vector<CheckItem> verify_reidemeister(const RunConfig& cfg = {});
std::vector<CheckItem> verify_bmw(const RunConfig& cfg = {});
std::vector<CheckItem> verify_confluence(unsigned seed = 1, int samples = 100,
                                         const RunConfig& cfg = {});

}  // namespace spweb

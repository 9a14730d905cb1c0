// Slice webs: the diagrammatic surface syntax (trivalent vertices, cups,
// caps, crossings), its text format, translation to ladder morphisms, and
// the trace-closure templates.
#pragma once

#include "spweb/engine.hpp"

namespace spweb {

struct WebAtom {
  enum class Kind { Id, Cup, Cap, Vtx, Covtx, Cross, CrossInv };
  Kind kind = Kind::Id;
  // Labels: Id/Cup/Cap use a; Vtx is (a,b > c); Covtx is (c > a,b);
  // Cross/CrossInv read (a,b) below and (b,a) above.
  int a = 0, b = 0, c = 0;

  std::vector<int> ins() const;
  std::vector<int> outs() const;
  std::string str() const;
  bool operator==(const WebAtom&) const = default;

  static WebAtom id(int a);
  static WebAtom cup(int a);
  static WebAtom cap(int a);
  static WebAtom vtx(int a, int b, int c);
  static WebAtom covtx(int c, int a, int b);
  static WebAtom cross(int a, int b);
  static WebAtom crossinv(int a, int b);
};

struct SliceWeb {
  std::vector<int> domain;                 // strand labels, left to right
  std::vector<std::vector<WebAtom>> rows;  // bottom to top

  std::vector<int> codomain() const;  // validates
  void validate() const;
  bool has_crossings() const;
  std::string str() const;
  bool operator==(const SliceWeb&) const = default;
};

// Parses the web text format:
//   obj: 1 2 3
//   slice: id(1) vtx(1,2>3)
//   # comment
// Errors cite the line and column.
SliceWeb parse_web(const std::string& text);

// Reflections.  Vertical reflection exchanges cup/cap and vtx/covtx and
// reverses the rows; the mirror reverses each row (and the strand order).
SliceWeb vflip_web(const SliceWeb& w);
SliceWeb mirror_web(const SliceWeb& w);

using WebCombo = std::vector<std::pair<QScalar, SliceWeb>>;

// Splits every row so that each carries at most one non-identity atom.
SliceWeb atomize(const SliceWeb& w);

// Translates a crossing-free web into a ladder morphism.
Morphism ladderize(const SliceWeb& w);

// Linear combination of webs as one ladder morphism (lifted boundaries).
Morphism ladderize_combo(const WebCombo& combo);

// Value of a closed crossing-free web.
QScalar evaluate_web(const SliceWeb& w, const RunConfig& cfg = {});

// ---- closure templates -----------------------------------------------------

// TraceRight closes every boundary strand around the right side of the
// diagram; TraceLeft around the left side (computed as the mirror image's
// right trace); Split closes the right half of the strands around the right
// side and then traces the remaining left half (a single strand is split by
// tracing the self-composition instead).
enum class ClosureKind { TraceRight, TraceLeft, Split };

// Nested cups: the empty object to (sig, reversed sig), outermost first.
SliceWeb closure_cups(const std::vector<int>& sig);
SliceWeb closure_caps(const std::vector<int>& sig);

// Closes an endomorphism-shaped morphism (equal nonzero boundary labels)
// with the chosen template and evaluates it.
QScalar closed_trace(const Morphism& h, ClosureKind kind, const RunConfig& cfg = {});

// The three standard pairings used to compare two morphisms f, g with the
// same boundary against a probe p of the opposite boundary:
// trace-right of f.p, trace-left of f.p, and trace-right of p.f.
std::vector<QScalar> closure_values(const Morphism& f, const Morphism& probe,
                                    const RunConfig& cfg = {});

}  // namespace spweb

// The ladder category data model: labeled objects k^(i), ladder objects
// (sequences of labeled objects), E/F rungs, ladders, and formal linear
// combinations of ladders (morphisms).
//
// Conventions:
//   * mass(k^(i)) = k + 2i; total slice mass is conserved by every rung.
//   * An F-rung moves mass from its left upright (column col) to its right
//     upright (column col+1); an E-rung moves mass right-to-left.
//   * A rung stores its label c and the two objects its columns carry above
//     it; its exponent r (rung = c^(r)) is derived from mass preservation.
//     The output objects are genuine data: the rung label alone does not
//     determine them (e.g. mass 3 above a rung can be 3^(0) or 1^(1)).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spweb/qfield.hpp"

namespace spweb {

struct Obj {
  int label = 0;  // in {0,1,2,3}
  int exp = 0;    // >= 0
  int mass() const { return label + 2 * exp; }
  bool operator==(const Obj&) const = default;
  auto operator<=>(const Obj&) const = default;
};

using LObject = std::vector<Obj>;  // a ladder object (possibly empty)

int total_mass(const LObject& o);
std::string lobject_str(const LObject& o);  // "k^i" tokens, space separated

enum class Dir { E, F };

struct Rung {
  int col = 0;     // acts on uprights col and col+1
  Dir dir = Dir::F;
  int label = 0;   // rung label c in {0,1,2,3}
  Obj out_left;    // object on column col above the rung
  Obj out_right;   // object on column col+1 above the rung
  bool operator==(const Rung&) const = default;
  auto operator<=>(const Rung&) const = default;
};

// True iff the unordered label triple {a,b,c} is a legal vertex:
// two equal and the third 0, or {1,1,2}, or {1,2,3}.
bool vertex_ok(int a, int b, int c);

// Validates `rung` against the slice below it and returns the derived rung
// exponent r and the slice above; throws InvalidArgument with one of
// "mass violation", "vertex violation", "negative exponent" otherwise.
struct RungResult {
  int exponent;
  LObject above;
};
RungResult apply_rung(const LObject& slice, const Rung& rung);

// Convenience: builds the rung on `slice` given only (col, dir, label) plus
// the two output labels; output exponents are derived from mass preservation
// with the rung exponent `rexp`, then validated.
Rung make_rung(const LObject& slice, int col, Dir dir, int label, int rexp,
               int out_left_label, int out_right_label);

// All valid rungs on `slice` (any column/direction/label/outputs), used by
// the property-test generators.
std::vector<Rung> enumerate_rungs(const LObject& slice);

struct Ladder {
  LObject domain;
  std::vector<Rung> rungs;  // bottom to top

  LObject codomain() const;
  std::vector<LObject> slices() const;  // size rungs.size()+1, validates
  void validate() const;
  int width() const { return static_cast<int>(domain.size()); }
  std::string str() const;  // canonical serialization / memo key

  bool operator==(const Ladder&) const = default;
  auto operator<=>(const Ladder&) const = default;
};

Ladder identity_ladder(const LObject& o);

// Sorts adjacent rungs acting on disjoint column pairs into ascending column
// order (a sound exchange: distant rungs commute strictly).  Used to put
// height interleavings into a canonical form.
Ladder canonical_heights(Ladder l);

// Mass carried by `rung` over the slice `below` it (label + 2 * exponent).
int rung_mass(const LObject& below, const Rung& rung);

// Adds `delta` to the exponent of upright `col` throughout the ladder: the
// domain entry and the output object of every rung touching the column.
// Labels and rung masses are unchanged, so the result is valid whenever all
// affected exponents stay nonnegative; it is re-validated before returning.
Ladder raise_column(Ladder l, int col, int delta);

// Vertical reflection: rung order reversed, E and F exchanged, outputs
// recomputed from the reflected slices.  Swaps domain and codomain.
Ladder vflip(const Ladder& l);

// Horizontal reflection: columns mirrored, E and F exchanged, outputs
// swapped.  Preserves domain/codomain up to reversal.
Ladder hflip(const Ladder& l);

// Formal QScalar-linear combination of ladders with a common (co)domain.
class Morphism {
 public:
  Morphism() = default;
  Morphism(LObject dom, LObject cod)
      : dom_(std::move(dom)), cod_(std::move(cod)) {}
  static Morphism from_ladder(const Ladder& l, const QScalar& c = QScalar(1));

  const LObject& dom() const { return dom_; }
  const LObject& cod() const { return cod_; }
  const std::map<Ladder, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Ladder& l, const QScalar& c);
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism operator*(const QScalar& c) const;
  bool operator==(const Morphism& o) const = default;

 private:
  LObject dom_, cod_;
  std::map<Ladder, QScalar> terms_;
};

// f after g (g below f); requires cod(g) == dom(f).
Morphism compose(const Morphism& f, const Morphism& g);
// Horizontal juxtaposition, f left of g.
Morphism tensor(const Morphism& f, const Morphism& g);
// Termwise vertical reflection (coefficients unchanged).
Morphism vflip(const Morphism& m);

// Left-right mirror image: boundary orders reversed, every term ladder
// mirrored, coefficients unchanged.
Morphism hflip(const Morphism& m);

}  // namespace spweb

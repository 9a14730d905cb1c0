// The local rewrite-rule database: generic rung explosion, the compiled-in
// explosion tables for 2- and 3-labeled rungs, the rung swap and square
// tables, splicing of local rewrites into host ladders, and materialized
// rule instances for auditing.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spweb/ladder.hpp"

namespace spweb {

// One replacement term of a local rewrite: a coefficient and the rung
// segment (bottom to top) substituted for the matched rungs.
struct LocalTerm {
  QScalar coeff;
  std::vector<Rung> rungs;
};
using LocalCombo = std::vector<LocalTerm>;

// True iff `rung` is an indivisible step over `below`: label 1 carrying
// mass 1, or label 0 carrying mass 2 (written 0').
bool rung_terminal(const LObject& below, const Rung& rung);

// Rewrites one non-terminal rung into combinations whose rungs each carry
// strictly smaller mass.  Throws InvalidArgument on a terminal rung and
// InternalDefect("no table entry ...") on an unmatched table key.
LocalCombo explode(const LObject& below, const Rung& rung);

// Rewrites the adjacent pair (`lower` F-rung, then `upper` E-rung above it,
// both terminal) into combinations with every E-rung below every F-rung:
// distant commutation, the shared-upright swap cases, or the same-column
// square table.  Throws InternalDefect("non-terminal rung"),
// ("no case matched ...") or ("no table entry ...") as appropriate.
LocalCombo reorder(const LObject& below, const Rung& lower, const Rung& upper);

// Replaces rungs [pos, pos+count) of `host` by each term of `combo`.  Each
// resulting ladder is validated; an invalid result is an InternalDefect.
std::vector<std::pair<QScalar, Ladder>> splice(const Ladder& host, size_t pos,
                                               size_t count,
                                               const LocalCombo& combo);

// ---- audit support --------------------------------------------------------

struct RuleInstance {
  std::string tag;    // provenance tag of the matched rule, e.g.
                      // "appA.square.(1,2,1)x(1,2,1)" (maybe with a
                      // ".vflip"/".hflip" reflection suffix)
  Morphism lhs, rhs;  // the two sides materialized on a concrete context
};

// Materializes every rule on every concrete context whose slices have total
// mass at most `max_mass`, closed under horizontal and vertical reflection
// of the materialized instances.  Enumeration doubles as a totality check:
// an unmatched reachable pattern throws.
std::vector<RuleInstance> all_rule_instances(int max_mass);

// The embedded human-readable rule source (provenance-tagged records).
const std::string& rule_source();

}  // namespace spweb

// Independent oracle: the Dubrovnik (Kauffman two-variable) polynomial of a
// braid-word trace closure, specialized at a = -q^7, z = q - q^-1, computed
// by the skein relation alone (no webs, no ladders).
#pragma once

#include <utility>
#include <vector>

#include "spweb/qfield.hpp"

namespace spweb {

// Framed (regular-isotopy) invariant of the trace closure of the braid word
// on the given number of strands; word entries are (generator 1-based,
// positive?).  Throws InternalDefect("crossing budget exceeded") if the
// skein recursion exceeds its step budget.
QScalar dubrovnik_closure(int strands, const std::vector<std::pair<int, bool>>& word);

}  // namespace spweb

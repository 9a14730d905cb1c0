#include "spweb/relations.hpp"

namespace spweb {

// Local rewrite-rule tables, one provenance-tagged record per line:
//
//   <tag>: <term> ; <term> ; ...      (or ": 0" for an empty combination)
//
// Coefficients use the parse_scalar grammar ([n] is the quantum integer).
//
// Explosion records replace one rung by a two-rung stack in the same
// direction and column pair.  Term syntax:
//
//   <coeff> r(<lo>,<hi>;<smid>,<dmid>)
//
// where <lo>/<hi> are the labels of the lower/upper replacement rung
// ("0'" is the 0-labeled rung of mass 2, "1" carries mass 1, "2" mass 2)
// and <smid>/<dmid> are the labels of the intermediate source/destination
// uprights; intermediate exponents follow from mass preservation.  For
// explode2 both replacement rungs are 1-labeled, so they are omitted.
// Keys: explode2 uses (x,w|y,z) = (source below, source above | destination
// below, destination above) labels; explode3 only needs (x,y) since the
// upper labels are forced.
//
// Square records rewrite a 1-labeled F-rung with a 1-labeled E-rung
// directly above it on the same column pair.  The key lists the two
// upright label triples (below, middle, above) on the source and
// destination columns.  Terms:
//
//   <coeff> id          the identity (no rungs)
//   <coeff> sw(l,r)     E-rung then F-rung, both 1-labeled, with
//                       intermediate upright labels l (source column,
//                       mass + 1) and r (destination column, mass - 1)
//   <coeff> sw2(l,r)    the same with 2-labeled rungs and mass +/- 2
//
// Swap records list the coefficients, in display order, of the two
// three-term shared-upright swap cases (middle upright 2^(0) resp. 3^(0));
// the term shapes are built in code (relations.cpp).

const std::string& rule_source() {
  static const std::string kRules = R"RULES(
appA.swap.mid2: 1 ; -[2] ; [2]
appA.swap.mid3: 1 ; -1/[3] ; 1/[3]

appA.explode2.(0,2|0,2): 1/([2][3]) r(1,1)
appA.explode2.(0,2|1,1): 1 r(1,0)
appA.explode2.(0,2|1,3): 1/([2][3]) r(1,2)
appA.explode2.(0,2|2,0): 1/([2][3]) r(1,1)
appA.explode2.(0,2|3,1): 1/([2][3]) r(1,2)
appA.explode2.(1,1|0,2): 1 r(0,1)
appA.explode2.(1,1|1,1): [2][4]/[3]^2 r(0,2) ; [2]^2[7]/([3][6]) r(0,0) ; 1/([3][6]) r(2,2)
appA.explode2.(1,1|1,3): 1 r(0,2)
appA.explode2.(1,1|2,0): 1 r(0,1)
appA.explode2.(1,1|3,1): 1 r(0,2)
appA.explode2.(1,3|0,2): 1/([2][3]) r(2,1)
appA.explode2.(1,3|1,1): 1 r(2,0)
appA.explode2.(1,3|1,3): 1/([2][3]) r(2,2)
appA.explode2.(1,3|2,0): 1/([2][3]) r(2,1)
appA.explode2.(1,3|3,1): 1/([2][3]) r(2,2)
appA.explode2.(2,0|0,2): 1/([2][3]) r(1,1)
appA.explode2.(2,0|1,1): 1 r(1,0)
appA.explode2.(2,0|1,3): 1/([2][3]) r(1,2)
appA.explode2.(2,0|2,0): 1/([2][3]) r(1,1)
appA.explode2.(2,0|3,1): 1/([2][3]) r(1,2)
appA.explode2.(3,1|0,2): 1/([2][3]) r(2,1)
appA.explode2.(3,1|1,1): 1 r(2,0)
appA.explode2.(3,1|1,3): 1/([2][3]) r(2,2)
appA.explode2.(3,1|2,0): 1/([2][3]) r(2,1)
appA.explode2.(3,1|3,1): 1/([2][3]) r(2,2)

appA.explode3.(0,0): 1/([2][3]) r(1,2;1,1)
appA.explode3.(0,1): 1 r(1,2;1,0)
appA.explode3.(0,2): 1 r(2,1;2,0)
appA.explode3.(0,3): 1/([2][3]) r(1,2;1,2)
appA.explode3.(1,0): 1 r(1,2;0,1)
appA.explode3.(1,1): -[2] r(1,2;0,0) ; 1/[3]^2 r(0',1;1,1) ; [2]/[3]^2 r(2,1;1,1)
appA.explode3.(1,2): 1 r(1,2;0,3) ; 1/[3] r(1,2;0,1) ; -1/[3] r(0',1;1,2)
appA.explode3.(1,3): 1 r(1,2;0,2)
appA.explode3.(2,0): 1 r(2,1;0,2)
appA.explode3.(2,1): 1 r(1,2;3,0) ; 1/[3] r(2,1;0,1) ; -1/[3] r(0',1;2,1)
appA.explode3.(2,2): -[2] r(2,1;0,0) ; 1/[3]^2 r(0',1;2,2) ; [2]/[3]^2 r(1,2;1,1)
appA.explode3.(2,3): 1 r(2,1;0,1)
appA.explode3.(3,0): 1/([2][3]) r(2,1;1,2)
appA.explode3.(3,1): 1 r(1,2;2,0)
appA.explode3.(3,2): 1 r(2,1;1,0)
appA.explode3.(3,3): 1/([2][3]) r(2,1;1,1)

appA.square.(0,1,0)x(0,1,0): -[3][8]/[4] id
appA.square.(0,1,0)x(0,1,2): 0
appA.square.(0,1,0)x(1,0,1): 1 id
appA.square.(0,1,0)x(1,2,1): -[2][7] id
appA.square.(0,1,0)x(1,2,3): 0
appA.square.(0,1,0)x(2,1,0): 0
appA.square.(0,1,0)x(2,1,2): [2][3] id
appA.square.(0,1,0)x(2,3,2): -[6] id
appA.square.(0,1,0)x(3,2,1): 0
appA.square.(0,1,0)x(3,2,3): [2][3] id
appA.square.(0,1,2)x(0,1,0): 0
appA.square.(0,1,2)x(0,1,2): 1 sw(1,1)
appA.square.(0,1,2)x(1,0,1): 1 sw(1,0)
appA.square.(0,1,2)x(1,2,1): [4] sw(1,0)
appA.square.(0,1,2)x(1,2,3): 1 sw(1,2)
appA.square.(0,1,2)x(2,1,0): 1 sw(1,1)
appA.square.(0,1,2)x(2,1,2): 1 sw(1,1)
appA.square.(0,1,2)x(2,3,2): 1 sw(1,1)
appA.square.(0,1,2)x(3,2,1): 1 sw(1,2)
appA.square.(0,1,2)x(3,2,3): 0
appA.square.(1,0,1)x(0,1,0): 1 id
appA.square.(1,0,1)x(0,1,2): 1 sw(0,1)
appA.square.(1,0,1)x(1,0,1): 1 sw(0,0)
appA.square.(1,0,1)x(1,2,1): 1 sw(2,0)
appA.square.(1,0,1)x(1,2,3): 1 sw(0,2)
appA.square.(1,0,1)x(2,1,0): 1 sw(0,1)
appA.square.(1,0,1)x(2,1,2): 1 sw(0,1)
appA.square.(1,0,1)x(2,3,2): -[2] id ; [2]/[3]^2 sw(2,1) ; 1/[3]^2 sw(0,1)
appA.square.(1,0,1)x(3,2,1): 1 sw(0,2)
appA.square.(1,0,1)x(3,2,3): 1 sw(0,2)
appA.square.(1,2,1)x(0,1,0): -[2][7] id
appA.square.(1,2,1)x(0,1,2): 1 sw(2,1)
appA.square.(1,2,1)x(1,0,1): 1 sw(2,0)
appA.square.(1,2,1)x(1,2,1): -[2][3][6] id ; [6]/[3] sw(2,0) ; [2][4] sw(0,0)
appA.square.(1,2,1)x(1,2,3): 1 sw(2,2)
appA.square.(1,2,1)x(2,1,0): [4] sw(0,1)
appA.square.(1,2,1)x(2,1,2): 1 sw(2,1)
appA.square.(1,2,1)x(2,3,2): -[3][5] id ; [5]/[2] sw2(3,0) ; [3]/[2] sw2(1,0)
appA.square.(1,2,1)x(3,2,1): 1 sw(2,2)
appA.square.(1,2,1)x(3,2,3): 1 sw(2,2)
appA.square.(1,2,3)x(0,1,0): 0
appA.square.(1,2,3)x(0,1,2): 1 sw(2,1)
appA.square.(1,2,3)x(1,0,1): 1 sw(2,0)
appA.square.(1,2,3)x(1,2,1): [4] sw(2,0)
appA.square.(1,2,3)x(1,2,3): 1 sw(2,2)
appA.square.(1,2,3)x(2,1,0): 1 sw(2,1)
appA.square.(1,2,3)x(2,1,2): 1 sw(2,1)
appA.square.(1,2,3)x(2,3,2): 1 sw(2,1)
appA.square.(1,2,3)x(3,2,1): 1 sw(2,2)
appA.square.(1,2,3)x(3,2,3): 0
appA.square.(2,1,0)x(0,1,0): 0
appA.square.(2,1,0)x(0,1,2): 1 sw(1,1)
appA.square.(2,1,0)x(1,0,1): 1 sw(1,0)
appA.square.(2,1,0)x(1,2,1): [4] sw(1,0)
appA.square.(2,1,0)x(1,2,3): 1 sw(1,2)
appA.square.(2,1,0)x(2,1,0): 1 sw(1,1)
appA.square.(2,1,0)x(2,1,2): 1 sw(1,1)
appA.square.(2,1,0)x(2,3,2): 1 sw(1,1)
appA.square.(2,1,0)x(3,2,1): 1 sw(1,2)
appA.square.(2,1,0)x(3,2,3): 0
appA.square.(2,1,2)x(0,1,0): [2][3] id
appA.square.(2,1,2)x(0,1,2): 1 sw(1,1)
appA.square.(2,1,2)x(1,0,1): 1 sw(1,0)
appA.square.(2,1,2)x(1,2,1): [3]^2 id ; -1/[2] sw(1,0) ; [3]^2/[2] sw(3,0)
appA.square.(2,1,2)x(1,2,3): 1 sw(1,2)
appA.square.(2,1,2)x(2,1,0): 1 sw(1,1)
appA.square.(2,1,2)x(2,1,2): 1 sw(1,1)
appA.square.(2,1,2)x(2,3,2): 1 sw(3,1)
appA.square.(2,1,2)x(3,2,1): 1 sw(1,2)
appA.square.(2,1,2)x(3,2,3): 1 sw(1,2)
appA.square.(2,3,2)x(0,1,0): -[6] id
appA.square.(2,3,2)x(0,1,2): 1 sw(1,1)
appA.square.(2,3,2)x(1,0,1): 1 sw(3,0)
appA.square.(2,3,2)x(1,2,1): -[3][5] id ; [5]/[2] sw(3,0) ; [3]/[2] sw(1,0)
appA.square.(2,3,2)x(1,2,3): 1 sw(3,2)
appA.square.(2,3,2)x(2,1,0): 1 sw(1,1)
appA.square.(2,3,2)x(2,1,2): 1 sw(3,1)
appA.square.(2,3,2)x(2,3,2): -[2][4] id ; [4]/([2][3]) sw(3,1) ; 1/[3] sw(1,1)
appA.square.(2,3,2)x(3,2,1): 1 sw(3,2)
appA.square.(2,3,2)x(3,2,3): 1 sw(3,2)
appA.square.(3,2,1)x(0,1,0): 0
appA.square.(3,2,1)x(0,1,2): 1 sw(2,1)
appA.square.(3,2,1)x(1,0,1): 1 sw(2,0)
appA.square.(3,2,1)x(1,2,1): [4] sw(2,0)
appA.square.(3,2,1)x(1,2,3): 1 sw(2,2)
appA.square.(3,2,1)x(2,1,0): 1 sw(2,1)
appA.square.(3,2,1)x(2,1,2): 1 sw(2,1)
appA.square.(3,2,1)x(2,3,2): 1 sw(2,1)
appA.square.(3,2,1)x(3,2,1): 1 sw(2,2)
appA.square.(3,2,1)x(3,2,3): 0
appA.square.(3,2,3)x(0,1,0): [2][3] id
appA.square.(3,2,3)x(0,1,2): 0
appA.square.(3,2,3)x(1,0,1): 1 sw(2,0)
appA.square.(3,2,3)x(1,2,1): [2]^2[3] id ; -[2] sw(2,0)
appA.square.(3,2,3)x(1,2,3): 0
appA.square.(3,2,3)x(2,1,0): 0
appA.square.(3,2,3)x(2,1,2): 1 sw(2,1)
appA.square.(3,2,3)x(2,3,2): [2]^2 id ; -1/[3] sw(2,1)
appA.square.(3,2,3)x(3,2,1): 0
appA.square.(3,2,3)x(3,2,3): 1 sw(2,2)
)RULES";
  return kRules;
}

}  // namespace spweb

#pragma once

#include <map>
#include <string>

#include "pi/permutation.hpp"
#include "pi/syntax.hpp"

namespace pi {

// Classic reversible gates as permutation programs. Bit vectors are read
// MSB-first, so on arity 2^n the gates act on the standard truth table.
//   not_gate      : arity 2,  swap 0 1
//   cnot_gate     : arity 4,  swap 2 3   (flip the low bit when the high bit
//                                         is 1)
//   toffoli_gate  : arity 8,  swap 6 7
//   fulladder_gate: arity 16, (A, B, Cin, 0) |-> (A, B, S, Cout) with
//                   S = A xor B xor Cin and Cout = majority(A, B, Cin),
//                   wires MSB-first (A = bit 3, heap = bit 0).
PermProgPtr not_gate();
PermProgPtr cnot_gate();
PermProgPtr toffoli_gate();
PermProgPtr fulladder_gate();

// Structured-type counterparts.
TyPtr bool_ty();                    // 1 + 1
TyPtr word3_ty();                   // bool * (bool * bool)
ValPtr bool_val(bool bit);          // true = inl ()
CombPtr not_comb();                 // swap+
CombPtr not_word3_comb();           // not * (not * not)
CombPtr reverse_word3_comb();       // swap* ; ((swap* * id) ; assocr*)

/// Conditional: dist ; ((id * c1) + (id * c2)) ; factor over bool * t,
/// running c1 when the first component is true and c2 when it is false.
CombPtr if_comb(const CombPtr& c1, const CombPtr& c2);
CombPtr if_not_comb();              // cnot on bool * bool
CombPtr if_cnot_comb();             // toffoli on bool * (bool * bool)

/// One named gate: exactly one of the two fields is set.
struct GateEntry {
  PermProgPtr perm;
  CombPtr comb;
};

/// The named gates above in one map. Permutation programs are keyed
/// "not_perm", "cnot_perm", "toffoli_perm", and "fulladder"; combinators are
/// keyed "not", "not_word3", "reverse", "if_not", and "if_cnot".
const std::map<std::string, GateEntry>& gate_library();

}  // namespace pi

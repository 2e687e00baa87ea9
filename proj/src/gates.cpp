#include "pi/gates.hpp"

namespace pi {

PermProgPtr not_gate() { return PermProg::swap(2, 0, 1); }

PermProgPtr cnot_gate() { return PermProg::swap(4, 2, 3); }

PermProgPtr toffoli_gate() { return PermProg::swap(8, 6, 7); }

PermProgPtr fulladder_gate() {
  // Wires MSB-first: (A, B, Cin, heap) = (bit 3, bit 2, bit 1, bit 0); the
  // heap wire enters as 0 and leaves as Cout, Cin leaves as the sum bit.
  //   toffoli(B, Cin -> heap); cnot(B -> Cin);
  //   toffoli(A, Cin -> heap); cnot(A -> Cin)
  const std::uint64_t n = 16;
  const std::uint64_t swaps[][2] = {
      {6, 7},  {14, 15},                      // toffoli(B, Cin -> heap)
      {4, 6},  {5, 7},  {12, 14}, {13, 15},   // cnot(B -> Cin)
      {10, 11}, {14, 15},                     // toffoli(A, Cin -> heap)
      {8, 10}, {9, 11}, {12, 14}, {13, 15},   // cnot(A -> Cin)
  };
  PermProgPtr prog;
  for (const auto& s : swaps) {
    PermProgPtr step = PermProg::swap(n, s[0], s[1]);
    prog = prog ? PermProg::seq(std::move(prog), std::move(step))
                : std::move(step);
  }
  return prog;
}

TyPtr bool_ty() { return Ty::sum(Ty::one(), Ty::one()); }

TyPtr word3_ty() { return Ty::prod(bool_ty(), Ty::prod(bool_ty(), bool_ty())); }

ValPtr bool_val(bool bit) {
  return bit ? Val::inl(Val::unit()) : Val::inr(Val::unit());
}

CombPtr not_comb() { return Comb::prim(Prim::SwapPlus); }

CombPtr not_word3_comb() {
  return Comb::times(not_comb(), Comb::times(not_comb(), not_comb()));
}

CombPtr reverse_word3_comb() {
  return Comb::seq(
      Comb::prim(Prim::SwapTimes),
      Comb::seq(Comb::times(Comb::prim(Prim::SwapTimes), Comb::prim(Prim::Id)),
                Comb::prim(Prim::AssocrTimes)));
}

CombPtr if_comb(const CombPtr& c1, const CombPtr& c2) {
  return Comb::seq(
      Comb::prim(Prim::Dist),
      Comb::seq(Comb::plus(Comb::times(Comb::prim(Prim::Id), c1),
                           Comb::times(Comb::prim(Prim::Id), c2)),
                Comb::prim(Prim::Factor)));
}

CombPtr if_not_comb() { return if_comb(not_comb(), Comb::prim(Prim::Id)); }

CombPtr if_cnot_comb() { return if_comb(if_not_comb(), Comb::prim(Prim::Id)); }

const std::map<std::string, GateEntry>& gate_library() {
  static const std::map<std::string, GateEntry> lib = [] {
    std::map<std::string, GateEntry> m;
    m["not_perm"] = GateEntry{not_gate(), nullptr};
    m["cnot_perm"] = GateEntry{cnot_gate(), nullptr};
    m["toffoli_perm"] = GateEntry{toffoli_gate(), nullptr};
    m["fulladder"] = GateEntry{fulladder_gate(), nullptr};
    m["not"] = GateEntry{nullptr, not_comb()};
    m["not_word3"] = GateEntry{nullptr, not_word3_comb()};
    m["reverse"] = GateEntry{nullptr, reverse_word3_comb()};
    m["if_not"] = GateEntry{nullptr, if_not_comb()};
    m["if_cnot"] = GateEntry{nullptr, if_cnot_comb()};
    return m;
  }();
  return lib;
}

}  // namespace pi

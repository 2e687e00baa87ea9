#include "pi/rewrite.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "pi/parser.hpp"

namespace pi::rw {

// --------------------------------------------------------------- patterns --

PatPtr Pat::cnst(Prim p) {
  return PatPtr(new Pat(PatKind::Const, p, -1, nullptr, nullptr));
}
PatPtr Pat::var(int i) {
  return PatPtr(new Pat(PatKind::Var, Prim::Id, i, nullptr, nullptr));
}
PatPtr Pat::adj(int i) {
  return PatPtr(new Pat(PatKind::AdjVar, Prim::Id, i, nullptr, nullptr));
}
PatPtr Pat::seq(PatPtr a, PatPtr b) {
  return PatPtr(new Pat(PatKind::Seq, Prim::Id, -1, std::move(a), std::move(b)));
}
PatPtr Pat::plus(PatPtr a, PatPtr b) {
  return PatPtr(new Pat(PatKind::Plus, Prim::Id, -1, std::move(a), std::move(b)));
}
PatPtr Pat::times(PatPtr a, PatPtr b) {
  return PatPtr(new Pat(PatKind::Times, Prim::Id, -1, std::move(a), std::move(b)));
}

namespace {

bool pat_composite(const PatPtr& p) {
  return p->kind() == PatKind::Seq || p->kind() == PatKind::Plus ||
         p->kind() == PatKind::Times;
}

void show_pat_rec(const PatPtr& p, std::string& out, bool atom_context) {
  switch (p->kind()) {
    case PatKind::Const:
      out += prim_name(p->prim());
      return;
    case PatKind::Var:
      out += "c" + std::to_string(p->var());
      return;
    case PatKind::AdjVar:
      out += "!c" + std::to_string(p->var());
      return;
    default:
      break;
  }
  if (atom_context) out += '(';
  show_pat_rec(p->left(), out, pat_composite(p->left()));
  switch (p->kind()) {
    case PatKind::Seq: out += " ; "; break;
    case PatKind::Plus: out += " + "; break;
    case PatKind::Times: out += " * "; break;
    default: break;
  }
  show_pat_rec(p->right(), out, pat_composite(p->right()));
  if (atom_context) out += ')';
}

}  // namespace

std::string show(const PatPtr& p) {
  std::string out;
  show_pat_rec(p, out, false);
  return out;
}

TPatPtr TPat::var(int i) {
  return TPatPtr(new TPat(TPatKind::Var, i, nullptr, nullptr));
}
TPatPtr TPat::zero() {
  return TPatPtr(new TPat(TPatKind::Zero, -1, nullptr, nullptr));
}
TPatPtr TPat::one() {
  return TPatPtr(new TPat(TPatKind::One, -1, nullptr, nullptr));
}
TPatPtr TPat::sum(TPatPtr a, TPatPtr b) {
  return TPatPtr(new TPat(TPatKind::Sum, -1, std::move(a), std::move(b)));
}
TPatPtr TPat::prod(TPatPtr a, TPatPtr b) {
  return TPatPtr(new TPat(TPatKind::Prod, -1, std::move(a), std::move(b)));
}

namespace {

bool tpat_composite(const TPatPtr& p) {
  return p->kind() == TPatKind::Sum || p->kind() == TPatKind::Prod;
}

void show_tpat_rec(const TPatPtr& p, std::string& out, bool atom_context) {
  switch (p->kind()) {
    case TPatKind::Var:
      out += "t" + std::to_string(p->var());
      return;
    case TPatKind::Zero:
      out += '0';
      return;
    case TPatKind::One:
      out += '1';
      return;
    default:
      break;
  }
  if (atom_context) out += '(';
  show_tpat_rec(p->left(), out, tpat_composite(p->left()));
  out += (p->kind() == TPatKind::Sum) ? " + " : " * ";
  show_tpat_rec(p->right(), out, tpat_composite(p->right()));
  if (atom_context) out += ')';
}

}  // namespace

std::string show(const TPatPtr& p) {
  std::string out;
  show_tpat_rec(p, out, false);
  return out;
}

// --------------------------------------------------------------- registry --

namespace {

// Pattern shorthands used by the law table below.
PatPtr C(Prim p) { return Pat::cnst(p); }
PatPtr V(int i) { return Pat::var(i); }
PatPtr AV(int i) { return Pat::adj(i); }
PatPtr S(PatPtr a, PatPtr b) { return Pat::seq(std::move(a), std::move(b)); }
PatPtr Pl(PatPtr a, PatPtr b) { return Pat::plus(std::move(a), std::move(b)); }
PatPtr Tm(PatPtr a, PatPtr b) { return Pat::times(std::move(a), std::move(b)); }
PatPtr ID() { return C(Prim::Id); }

TPatPtr tv(int i) { return TPat::var(i); }
TPatPtr tz() { return TPat::zero(); }
TPatPtr tu() { return TPat::one(); }
TPatPtr ts(TPatPtr a, TPatPtr b) { return TPat::sum(std::move(a), std::move(b)); }
TPatPtr tp(TPatPtr a, TPatPtr b) { return TPat::prod(std::move(a), std::move(b)); }

MetaRole role(int v, TPatPtr d, TPatPtr c) {
  return MetaRole{v, std::move(d), std::move(c)};
}

struct RegistryData {
  std::vector<std::unique_ptr<Rule>> owned;
  std::vector<const Rule*> order;
  std::map<std::string, const Rule*> by_name;

  void def(const std::string& base, const std::string& group, int index,
           PatPtr lhs, PatPtr rhs, TPatPtr dom, TPatPtr cod,
           std::vector<MetaRole> metas) {
    auto fwd = std::make_unique<Rule>();
    fwd->name = base + "_l";
    fwd->group = group;
    fwd->index = index;
    fwd->dir = Direction::L2R;
    fwd->lhs = lhs;
    fwd->rhs = rhs;
    fwd->dom = dom;
    fwd->cod = cod;
    fwd->metas = metas;

    auto bwd = std::make_unique<Rule>();
    bwd->name = base + "_r";
    bwd->group = group;
    bwd->index = index;
    bwd->dir = Direction::R2L;
    bwd->lhs = rhs;
    bwd->rhs = lhs;
    bwd->dom = dom;
    bwd->cod = cod;
    bwd->metas = std::move(metas);

    fwd->partner = bwd.get();
    bwd->partner = fwd.get();
    order.push_back(fwd.get());
    order.push_back(bwd.get());
    by_name[fwd->name] = fwd.get();
    by_name[bwd->name] = bwd.get();
    owned.push_back(std::move(fwd));
    owned.push_back(std::move(bwd));
  }
};

RegistryData build_registry() {
  RegistryData reg;

  // -- functors: level-2 homomorphism laws over ; --------------------------
  reg.def("hom_plus_seq", "functors", 1,
          Pl(S(V(1), V(3)), S(V(2), V(4))),
          S(Pl(V(1), V(2)), Pl(V(3), V(4))),
          ts(tv(5), tv(6)), ts(tv(3), tv(4)),
          {role(1, tv(5), tv(1)), role(2, tv(6), tv(2)),
           role(3, tv(1), tv(3)), role(4, tv(2), tv(4))});
  reg.def("hom_times_seq", "functors", 2,
          Tm(S(V(1), V(3)), S(V(2), V(4))),
          S(Tm(V(1), V(2)), Tm(V(3), V(4))),
          tp(tv(5), tv(6)), tp(tv(3), tv(4)),
          {role(1, tv(5), tv(1)), role(2, tv(6), tv(2)),
           role(3, tv(1), tv(3)), role(4, tv(2), tv(4))});

  // -- associativity --------------------------------------------------------
  reg.def("assoc_seq", "associativity", 1,
          S(V(1), S(V(2), V(3))),
          S(S(V(1), V(2)), V(3)),
          tv(1), tv(4),
          {role(1, tv(1), tv(2)), role(2, tv(2), tv(3)),
           role(3, tv(3), tv(4))});
  reg.def("assocl_plus_nat", "associativity", 2,
          S(Pl(V(1), Pl(V(2), V(3))), C(Prim::AssoclPlus)),
          S(C(Prim::AssoclPlus), Pl(Pl(V(1), V(2)), V(3))),
          ts(tv(1), ts(tv(3), tv(5))), ts(ts(tv(2), tv(4)), tv(6)),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("assocl_times_nat", "associativity", 3,
          S(Tm(V(1), Tm(V(2), V(3))), C(Prim::AssoclTimes)),
          S(C(Prim::AssoclTimes), Tm(Tm(V(1), V(2)), V(3))),
          tp(tv(1), tp(tv(3), tv(5))), tp(tp(tv(2), tv(4)), tv(6)),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("assocr_plus_nat", "associativity", 4,
          S(Pl(Pl(V(1), V(2)), V(3)), C(Prim::AssocrPlus)),
          S(C(Prim::AssocrPlus), Pl(V(1), Pl(V(2), V(3)))),
          ts(ts(tv(1), tv(3)), tv(5)), ts(tv(2), ts(tv(4), tv(6))),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("assocr_times_nat", "associativity", 5,
          S(Tm(Tm(V(1), V(2)), V(3)), C(Prim::AssocrTimes)),
          S(C(Prim::AssocrTimes), Tm(V(1), Tm(V(2), V(3)))),
          tp(tp(tv(1), tv(3)), tv(5)), tp(tv(2), tp(tv(4), tv(6))),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("pentagon_plus", "associativity", 6,
          S(C(Prim::AssocrPlus), C(Prim::AssocrPlus)),
          S(S(Pl(C(Prim::AssocrPlus), ID()), C(Prim::AssocrPlus)),
            Pl(ID(), C(Prim::AssocrPlus))),
          ts(ts(ts(tv(1), tv(2)), tv(3)), tv(4)),
          ts(tv(1), ts(tv(2), ts(tv(3), tv(4)))), {});
  reg.def("pentagon_times", "associativity", 7,
          S(C(Prim::AssocrTimes), C(Prim::AssocrTimes)),
          S(S(Tm(C(Prim::AssocrTimes), ID()), C(Prim::AssocrTimes)),
            Tm(ID(), C(Prim::AssocrTimes))),
          tp(tp(tp(tv(1), tv(2)), tv(3)), tv(4)),
          tp(tv(1), tp(tv(2), tp(tv(3), tv(4)))), {});

  // -- distributivity and factoring -----------------------------------------
  reg.def("dist_nat", "distributivity", 1,
          S(Tm(Pl(V(1), V(2)), V(3)), C(Prim::Dist)),
          S(C(Prim::Dist), Pl(Tm(V(1), V(3)), Tm(V(2), V(3)))),
          tp(ts(tv(1), tv(3)), tv(5)),
          ts(tp(tv(2), tv(6)), tp(tv(4), tv(6))),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("distl_nat", "distributivity", 2,
          S(Tm(V(1), Pl(V(2), V(3))), C(Prim::Distl)),
          S(C(Prim::Distl), Pl(Tm(V(1), V(2)), Tm(V(1), V(3)))),
          tp(tv(1), ts(tv(3), tv(5))),
          ts(tp(tv(2), tv(4)), tp(tv(2), tv(6))),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("factor_nat", "distributivity", 3,
          S(Pl(Tm(V(1), V(3)), Tm(V(2), V(3))), C(Prim::Factor)),
          S(C(Prim::Factor), Tm(Pl(V(1), V(2)), V(3))),
          ts(tp(tv(1), tv(5)), tp(tv(3), tv(5))),
          tp(ts(tv(2), tv(4)), tv(6)),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});
  reg.def("factorl_nat", "distributivity", 4,
          S(Pl(Tm(V(1), V(2)), Tm(V(1), V(3))), C(Prim::Factorl)),
          S(C(Prim::Factorl), Tm(V(1), Pl(V(2), V(3)))),
          ts(tp(tv(1), tv(3)), tp(tv(1), tv(5))),
          tp(tv(2), ts(tv(4), tv(6))),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4)),
           role(3, tv(5), tv(6))});

  // -- identity and composition ---------------------------------------------
  reg.def("idl_seq", "identity", 1, S(ID(), V(0)), V(0), tv(1), tv(2),
          {role(0, tv(1), tv(2))});
  reg.def("idr_seq", "identity", 2, S(V(0), ID()), V(0), tv(1), tv(2),
          {role(0, tv(1), tv(2))});
  reg.def("linv_seq", "identity", 3, S(V(0), AV(0)), ID(), tv(1), tv(1),
          {role(0, tv(1), tv(2))});
  reg.def("rinv_seq", "identity", 4, S(AV(0), V(0)), ID(), tv(2), tv(2),
          {role(0, tv(1), tv(2))});
  reg.def("id_plus_id", "identity", 5, Pl(ID(), ID()), ID(),
          ts(tv(1), tv(2)), ts(tv(1), tv(2)), {});
  reg.def("id_times_id", "identity", 6, Tm(ID(), ID()), ID(),
          tp(tv(1), tv(2)), tp(tv(1), tv(2)), {});

  // -- unit ------------------------------------------------------------------
  // Roles: c0 : 0 <-> 0, c1 : 1 <-> 1, c3 : t1 <-> t2.
  reg.def("unitel_plus_nat", "unit", 1,
          S(C(Prim::UnitePlusL), V(3)),
          S(Pl(V(0), V(3)), C(Prim::UnitePlusL)),
          ts(tz(), tv(1)), tv(2),
          {role(0, tz(), tz()), role(3, tv(1), tv(2))});
  reg.def("unitil_plus_nat", "unit", 2,
          S(C(Prim::UnitiPlusL), Pl(V(0), V(3))),
          S(V(3), C(Prim::UnitiPlusL)),
          tv(1), ts(tz(), tv(2)),
          {role(0, tz(), tz()), role(3, tv(1), tv(2))});
  reg.def("uniter_plus_nat", "unit", 3,
          S(C(Prim::UnitePlusR), V(3)),
          S(Pl(V(3), V(0)), C(Prim::UnitePlusR)),
          ts(tv(1), tz()), tv(2),
          {role(0, tz(), tz()), role(3, tv(1), tv(2))});
  reg.def("unitir_plus_nat", "unit", 4,
          S(C(Prim::UnitiPlusR), Pl(V(3), V(0))),
          S(V(3), C(Prim::UnitiPlusR)),
          tv(1), ts(tv(2), tz()),
          {role(0, tz(), tz()), role(3, tv(1), tv(2))});
  reg.def("unitel_times_nat", "unit", 5,
          S(C(Prim::UniteTimesL), V(3)),
          S(Tm(V(1), V(3)), C(Prim::UniteTimesL)),
          tp(tu(), tv(1)), tv(2),
          {role(1, tu(), tu()), role(3, tv(1), tv(2))});
  reg.def("unitil_times_nat", "unit", 6,
          S(C(Prim::UnitiTimesL), Tm(V(1), V(3))),
          S(V(3), C(Prim::UnitiTimesL)),
          tv(1), tp(tu(), tv(2)),
          {role(1, tu(), tu()), role(3, tv(1), tv(2))});
  reg.def("uniter_times_nat", "unit", 7,
          S(C(Prim::UniteTimesR), V(3)),
          S(Tm(V(3), V(1)), C(Prim::UniteTimesR)),
          tp(tv(1), tu()), tv(2),
          {role(1, tu(), tu()), role(3, tv(1), tv(2))});
  reg.def("unitir_times_nat", "unit", 8,
          S(C(Prim::UnitiTimesR), Tm(V(3), V(1))),
          S(V(3), C(Prim::UnitiTimesR)),
          tv(1), tp(tv(2), tu()),
          {role(1, tu(), tu()), role(3, tv(1), tv(2))});
  reg.def("unitel_times_distl", "unit", 9,
          C(Prim::UniteTimesL),
          S(C(Prim::Distl), Pl(C(Prim::UniteTimesL), C(Prim::UniteTimesL))),
          tp(tu(), ts(tv(1), tv(2))), ts(tv(1), tv(2)), {});
  reg.def("unitel_plus_swap", "unit", 10,
          C(Prim::UnitePlusL), S(C(Prim::SwapPlus), C(Prim::UnitePlusR)),
          ts(tz(), tv(1)), tv(1), {});
  reg.def("unitel_times_swap", "unit", 11,
          C(Prim::UniteTimesL), S(C(Prim::SwapTimes), C(Prim::UniteTimesR)),
          tp(tu(), tv(1)), tv(1), {});

  // -- commutativity (and its interaction with associativity) ----------------
  reg.def("swapl_plus_nat", "commutativity", 1,
          S(C(Prim::SwapPlus), Pl(V(1), V(2))),
          S(Pl(V(2), V(1)), C(Prim::SwapPlus)),
          ts(tv(3), tv(1)), ts(tv(2), tv(4)),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4))});
  reg.def("swapl_times_nat", "commutativity", 2,
          S(C(Prim::SwapTimes), Tm(V(1), V(2))),
          S(Tm(V(2), V(1)), C(Prim::SwapTimes)),
          tp(tv(3), tv(1)), tp(tv(2), tv(4)),
          {role(1, tv(1), tv(2)), role(2, tv(3), tv(4))});
  reg.def("hexagonr_plus", "commutativity", 3,
          S(S(C(Prim::AssocrPlus), C(Prim::SwapPlus)), C(Prim::AssocrPlus)),
          S(S(Pl(C(Prim::SwapPlus), ID()), C(Prim::AssocrPlus)),
            Pl(ID(), C(Prim::SwapPlus))),
          ts(ts(tv(1), tv(2)), tv(3)), ts(tv(2), ts(tv(3), tv(1))), {});
  reg.def("hexagonl_plus", "commutativity", 4,
          S(S(C(Prim::AssoclPlus), C(Prim::SwapPlus)), C(Prim::AssoclPlus)),
          S(S(Pl(ID(), C(Prim::SwapPlus)), C(Prim::AssoclPlus)),
            Pl(C(Prim::SwapPlus), ID())),
          ts(tv(1), ts(tv(2), tv(3))), ts(ts(tv(3), tv(1)), tv(2)), {});
  reg.def("hexagonr_times", "commutativity", 5,
          S(S(C(Prim::AssocrTimes), C(Prim::SwapTimes)), C(Prim::AssocrTimes)),
          S(S(Tm(C(Prim::SwapTimes), ID()), C(Prim::AssocrTimes)),
            Tm(ID(), C(Prim::SwapTimes))),
          tp(tp(tv(1), tv(2)), tv(3)), tp(tv(2), tp(tv(3), tv(1))), {});
  reg.def("hexagonl_times", "commutativity", 6,
          S(S(C(Prim::AssoclTimes), C(Prim::SwapTimes)), C(Prim::AssoclTimes)),
          S(S(Tm(ID(), C(Prim::SwapTimes)), C(Prim::AssoclTimes)),
            Tm(C(Prim::SwapTimes), ID())),
          tp(tv(1), tp(tv(2), tv(3))), tp(tp(tv(3), tv(1)), tv(2)), {});

  // -- unit and associativity -------------------------------------------------
  reg.def("unite_assocr_plus", "unit-associativity", 1,
          Pl(C(Prim::UnitePlusR), ID()),
          S(C(Prim::AssocrPlus), Pl(ID(), C(Prim::UnitePlusL))),
          ts(ts(tv(1), tz()), tv(2)), ts(tv(1), tv(2)), {});
  reg.def("unite_assocr_times", "unit-associativity", 2,
          Tm(C(Prim::UniteTimesR), ID()),
          S(C(Prim::AssocrTimes), Tm(ID(), C(Prim::UniteTimesL))),
          tp(tp(tv(1), tu()), tv(2)), tp(tv(1), tv(2)), {});

  // -- zero --------------------------------------------------------------------
  // Role: c1 : t1 <-> t2 (written c in the law group's preamble).
  reg.def("absorbl_nat", "zero", 1,
          S(Tm(V(1), ID()), C(Prim::Absorbl)),
          S(C(Prim::Absorbl), ID()),
          tp(tv(1), tz()), tz(), {role(1, tv(1), tv(2))});
  reg.def("absorbr_nat", "zero", 2,
          S(Tm(ID(), V(1)), C(Prim::Absorbr)),
          S(C(Prim::Absorbr), ID()),
          tp(tz(), tv(1)), tz(), {role(1, tv(1), tv(2))});
  reg.def("factorzl_nat", "zero", 3,
          S(ID(), C(Prim::Factorzl)),
          S(C(Prim::Factorzl), Tm(ID(), V(1))),
          tz(), tp(tz(), tv(2)), {role(1, tv(1), tv(2))});
  reg.def("factorzr_nat", "zero", 4,
          S(ID(), C(Prim::Factorzr)),
          S(C(Prim::Factorzr), Tm(V(1), ID())),
          tz(), tp(tv(2), tz()), {role(1, tv(1), tv(2))});
  reg.def("absorbr_is_absorbl", "zero", 5,
          C(Prim::Absorbr), C(Prim::Absorbl),
          tp(tz(), tz()), tz(), {});
  reg.def("absorbr_distl", "zero", 6,
          C(Prim::Absorbr),
          S(S(C(Prim::Distl), Pl(C(Prim::Absorbr), C(Prim::Absorbr))),
            C(Prim::UnitePlusL)),
          tp(tz(), ts(tv(1), tv(2))), tz(), {});
  reg.def("uniter_times_absorbr", "zero", 7,
          C(Prim::UniteTimesR), C(Prim::Absorbr),
          tp(tz(), tu()), tz(), {});
  reg.def("absorbl_swap", "zero", 8,
          C(Prim::Absorbl), S(C(Prim::SwapTimes), C(Prim::Absorbr)),
          tp(tv(1), tz()), tz(), {});
  reg.def("absorbr_assocl", "zero", 9,
          C(Prim::Absorbr),
          S(S(C(Prim::AssoclTimes), Tm(C(Prim::Absorbr), ID())),
            C(Prim::Absorbr)),
          tp(tz(), tp(tv(1), tv(2))), tz(), {});
  reg.def("absorb_mixed", "zero", 10,
          S(Tm(ID(), C(Prim::Absorbr)), C(Prim::Absorbl)),
          S(S(C(Prim::AssoclTimes), Tm(C(Prim::Absorbl), ID())),
            C(Prim::Absorbr)),
          tp(tv(1), tp(tz(), tv(2))), tz(), {});
  reg.def("unitel_plus_distl", "zero", 11,
          Tm(ID(), C(Prim::UnitePlusL)),
          S(S(C(Prim::Distl), Pl(C(Prim::Absorbl), ID())),
            C(Prim::UnitePlusL)),
          tp(tv(1), ts(tz(), tv(2))), tp(tv(1), tv(2)), {});

  // -- associativity and distributivity ----------------------------------------
  reg.def("dist_assocl_plus", "associativity-distributivity", 1,
          S(S(Tm(C(Prim::AssoclPlus), ID()), C(Prim::Dist)),
            Pl(C(Prim::Dist), ID())),
          S(S(C(Prim::Dist), Pl(ID(), C(Prim::Dist))), C(Prim::AssoclPlus)),
          tp(ts(tv(1), ts(tv(2), tv(3))), tv(4)),
          ts(ts(tp(tv(1), tv(4)), tp(tv(2), tv(4))), tp(tv(3), tv(4))), {});
  reg.def("distl_assocl_times", "associativity-distributivity", 2,
          S(C(Prim::AssoclTimes), C(Prim::Distl)),
          S(S(Tm(ID(), C(Prim::Distl)), C(Prim::Distl)),
            Pl(C(Prim::AssoclTimes), C(Prim::AssoclTimes))),
          tp(tv(1), tp(tv(2), ts(tv(3), tv(4)))),
          ts(tp(tp(tv(1), tv(2)), tv(3)), tp(tp(tv(1), tv(2)), tv(4))), {});
  reg.def("dist_distl_hexagon", "associativity-distributivity", 3,
          S(S(C(Prim::Distl), Pl(C(Prim::Dist), C(Prim::Dist))),
            C(Prim::AssoclPlus)),
          S(C(Prim::Dist),
            S(Pl(C(Prim::Distl), C(Prim::Distl)),
              S(C(Prim::AssoclPlus),
                S(Pl(C(Prim::AssocrPlus), ID()),
                  S(Pl(Pl(ID(), C(Prim::SwapPlus)), ID()),
                    Pl(C(Prim::AssoclPlus), ID())))))),
          tp(ts(tv(1), tv(2)), ts(tv(3), tv(4))),
          ts(ts(ts(tp(tv(1), tv(3)), tp(tv(2), tv(3))), tp(tv(1), tv(4))),
             tp(tv(2), tv(4))),
          {});

  // -- commutativity and distributivity ----------------------------------------
  reg.def("swap_plus_distl", "commutativity-distributivity", 1,
          S(Tm(ID(), C(Prim::SwapPlus)), C(Prim::Distl)),
          S(C(Prim::Distl), C(Prim::SwapPlus)),
          tp(tv(1), ts(tv(2), tv(3))),
          ts(tp(tv(1), tv(3)), tp(tv(1), tv(2))), {});
  reg.def("swap_times_dist", "commutativity-distributivity", 2,
          S(C(Prim::Dist), Pl(C(Prim::SwapTimes), C(Prim::SwapTimes))),
          S(C(Prim::SwapTimes), C(Prim::Distl)),
          tp(ts(tv(1), tv(2)), tv(3)),
          ts(tp(tv(3), tv(1)), tp(tv(3), tv(2))), {});

  return reg;
}

const RegistryData& registry() {
  static const RegistryData reg = build_registry();
  return reg;
}

}  // namespace

const std::vector<const Rule*>& rule_registry() { return registry().order; }

const Rule* rule_by_name(const std::string& name) {
  const auto& m = registry().by_name;
  auto it = m.find(name);
  return it == m.end() ? nullptr : it->second;
}

std::string registry_dump_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rule* r : rule_registry()) {
    nlohmann::json metas = nlohmann::json::array();
    for (const auto& m : r->metas) {
      metas.push_back({{"var", "c" + std::to_string(m.var)},
                       {"dom", show(m.dom)},
                       {"cod", show(m.cod)}});
    }
    arr.push_back({{"name", r->name},
                   {"figure", r->figure()},
                   {"group", r->group},
                   {"index", r->index},
                   {"direction", r->dir == Direction::L2R ? "l2r" : "r2l"},
                   {"lhs", show(r->lhs)},
                   {"rhs", show(r->rhs)},
                   {"dom", show(r->dom)},
                   {"cod", show(r->cod)},
                   {"metas", metas}});
  }
  return arr.dump(2);
}

// --------------------------------------------------------------- rewriting --

RwPtr Rw::prim(const Rule* rule, Bindings bindings) {
  if (!rule) throw std::logic_error("null rule");
  return RwPtr(new Rw(RwKind::Prim, rule, std::move(bindings), nullptr, nullptr));
}
RwPtr Rw::id2() {
  return RwPtr(new Rw(RwKind::Id2, nullptr, {}, nullptr, nullptr));
}
RwPtr Rw::trans2(RwPtr a, RwPtr b) {
  return RwPtr(new Rw(RwKind::Trans2, nullptr, {}, std::move(a), std::move(b)));
}
RwPtr Rw::resp_seq(RwPtr a, RwPtr b) {
  return RwPtr(new Rw(RwKind::RespSeq, nullptr, {}, std::move(a), std::move(b)));
}
RwPtr Rw::resp_plus(RwPtr a, RwPtr b) {
  return RwPtr(new Rw(RwKind::RespPlus, nullptr, {}, std::move(a), std::move(b)));
}
RwPtr Rw::resp_times(RwPtr a, RwPtr b) {
  return RwPtr(new Rw(RwKind::RespTimes, nullptr, {}, std::move(a), std::move(b)));
}

namespace {

enum class MRes { Ok, Shape, NonLinear };

MRes match_pat(const PatPtr& p, const CombPtr& c, Bindings& b,
               std::string& why) {
  switch (p->kind()) {
    case PatKind::Const:
      if (c->kind() == CombKind::Prim && c->prim() == p->prim()) {
        return MRes::Ok;
      }
      why = std::string("expected ") + prim_name(p->prim()) + ", found " +
            show(c);
      return MRes::Shape;
    case PatKind::Var: {
      auto it = b.find(p->var());
      if (it == b.end()) {
        b.emplace(p->var(), c);
        return MRes::Ok;
      }
      if (comb_equal(it->second, c)) return MRes::Ok;
      why = "metavariable c" + std::to_string(p->var()) + " is bound to " +
            show(it->second) + " but the pattern also matched " + show(c);
      return MRes::NonLinear;
    }
    case PatKind::AdjVar: {
      auto it = b.find(p->var());
      if (it == b.end()) {
        b.emplace(p->var(), adjoint(c));
        return MRes::Ok;
      }
      if (comb_equal(adjoint(it->second), c)) return MRes::Ok;
      why = "!c" + std::to_string(p->var()) + " requires " +
            show(adjoint(it->second)) + " but the pattern matched " + show(c);
      return MRes::NonLinear;
    }
    case PatKind::Seq:
    case PatKind::Plus:
    case PatKind::Times: {
      CombKind want = p->kind() == PatKind::Seq    ? CombKind::Seq
                      : p->kind() == PatKind::Plus ? CombKind::Plus
                                                   : CombKind::Times;
      if (c->kind() != want) {
        why = "expected a combinator of shape " + show(p) + ", found " +
              show(c);
        return MRes::Shape;
      }
      MRes l = match_pat(p->left(), c->left(), b, why);
      if (l != MRes::Ok) return l;
      return match_pat(p->right(), c->right(), b, why);
    }
  }
  throw std::logic_error("unknown pattern kind");
}

CombPtr inst_pat(const PatPtr& p, const Bindings& b, const std::string& what) {
  switch (p->kind()) {
    case PatKind::Const:
      return Comb::prim(p->prim());
    case PatKind::Var: {
      auto it = b.find(p->var());
      if (it == b.end()) {
        throw UnboundMetavariableError(
            what + " needs a binding for metavariable c" +
            std::to_string(p->var()) +
            " that the context does not determine");
      }
      return it->second;
    }
    case PatKind::AdjVar: {
      auto it = b.find(p->var());
      if (it == b.end()) {
        throw UnboundMetavariableError(
            what + " needs a binding for metavariable c" +
            std::to_string(p->var()) +
            " that the context does not determine");
      }
      return adjoint(it->second);
    }
    case PatKind::Seq:
      return Comb::seq(inst_pat(p->left(), b, what),
                       inst_pat(p->right(), b, what));
    case PatKind::Plus:
      return Comb::plus(inst_pat(p->left(), b, what),
                        inst_pat(p->right(), b, what));
    case PatKind::Times:
      return Comb::times(inst_pat(p->left(), b, what),
                         inst_pat(p->right(), b, what));
  }
  throw std::logic_error("unknown pattern kind");
}

using TyBindings = std::map<int, TyPtr>;

bool tmatch(const TPatPtr& p, const TyPtr& t, TyBindings& tb) {
  switch (p->kind()) {
    case TPatKind::Var: {
      auto it = tb.find(p->var());
      if (it == tb.end()) {
        tb.emplace(p->var(), t);
        return true;
      }
      return ty_equal(it->second, t);
    }
    case TPatKind::Zero:
      return t->kind() == TyKind::Zero;
    case TPatKind::One:
      return t->kind() == TyKind::One;
    case TPatKind::Sum:
      return t->kind() == TyKind::Sum && tmatch(p->left(), t->left(), tb) &&
             tmatch(p->right(), t->right(), tb);
    case TPatKind::Prod:
      return t->kind() == TyKind::Prod && tmatch(p->left(), t->left(), tb) &&
             tmatch(p->right(), t->right(), tb);
  }
  throw std::logic_error("unknown type pattern kind");
}

// Null when some type variable in p has no binding yet.
TyPtr tinst_partial(const TPatPtr& p, const TyBindings& tb) {
  switch (p->kind()) {
    case TPatKind::Var: {
      auto it = tb.find(p->var());
      return it == tb.end() ? nullptr : it->second;
    }
    case TPatKind::Zero:
      return Ty::zero();
    case TPatKind::One:
      return Ty::one();
    case TPatKind::Sum: {
      TyPtr l = tinst_partial(p->left(), tb);
      TyPtr r = tinst_partial(p->right(), tb);
      if (!l || !r) return nullptr;
      return Ty::sum(std::move(l), std::move(r));
    }
    case TPatKind::Prod: {
      TyPtr l = tinst_partial(p->left(), tb);
      TyPtr r = tinst_partial(p->right(), tb);
      if (!l || !r) return nullptr;
      return Ty::prod(std::move(l), std::move(r));
    }
  }
  throw std::logic_error("unknown type pattern kind");
}

// Checks every bound metavariable against its schematic role, propagating
// type-variable bindings to a fixpoint.
void check_roles(const Rule* rule, const Bindings& b, TyBindings& tb) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& m : rule->metas) {
      auto it = b.find(m.var);
      if (it == b.end()) continue;
      TyPtr dom_m = tinst_partial(m.dom, tb);
      if (!dom_m) continue;
      TyPtr cod_m;
      try {
        cod_m = infer_partial(it->second, dom_m);
      } catch (const TypeError& e) {
        throw TypeError("rule " + rule->name + ": metavariable c" +
                        std::to_string(m.var) + " := " + show(it->second) +
                        " does not satisfy role " + show(m.dom) + " <-> " +
                        show(m.cod) + " (" + e.what() + ")");
      }
      if (!cod_m) continue;
      std::size_t before = tb.size();
      if (!tmatch(m.cod, cod_m, tb)) {
        throw TypeError("rule " + rule->name + ": metavariable c" +
                        std::to_string(m.var) + " := " + show(it->second) +
                        " has codomain " + show(cod_m) +
                        " which does not fit role " + show(m.cod));
      }
      if (tb.size() != before) changed = true;
    }
  }
}

// Typed completion of a Prim application once the bindings are collected.
CombPtr finish_prim(const Rule* rule, const Bindings& b, const CombPtr& c,
                    const TyPtr& dom) {
  TyBindings tb;
  TyPtr cod_c;
  if (dom) {
    if (!tmatch(rule->dom, dom, tb)) {
      throw RewriteMismatchError("rule " + rule->name +
                                 " expects a domain of shape " +
                                 show(rule->dom) + ", got " + show(dom));
    }
    cod_c = infer_partial(c, dom);
    if (cod_c && !tmatch(rule->cod, cod_c, tb)) {
      throw RewriteMismatchError("rule " + rule->name +
                                 " expects a codomain of shape " +
                                 show(rule->cod) + ", got " + show(cod_c));
    }
    check_roles(rule, b, tb);
  }
  CombPtr out = inst_pat(rule->rhs, b, "rule " + rule->name);
  if (dom) {
    if (cod_c) {
      if (!type_checks(out, dom, cod_c)) {
        throw TypeError("rewrite by " + rule->name +
                        " does not preserve the typing " + show(dom) +
                        " <-> " + show(cod_c));
      }
    } else {
      infer_partial(out, dom);  // genuine mismatches throw
    }
  }
  return out;
}

CombPtr eval_prim_rule(const Rule* rule, const Bindings& expl,
                       const CombPtr& c, const TyPtr& dom) {
  Bindings b = expl;
  std::string why;
  MRes res = match_pat(rule->lhs, c, b, why);
  if (res == MRes::Shape) {
    throw RewriteMismatchError("rule " + rule->name + " does not match " +
                               show(c) + ": " + why);
  }
  if (res == MRes::NonLinear) {
    throw NonLinearMismatchError("rule " + rule->name + " on " + show(c) +
                                 ": " + why);
  }
  return finish_prim(rule, b, c, dom);
}

}  // namespace

CombPtr instantiate(const PatPtr& p, const Bindings& b) {
  return inst_pat(p, b, "the pattern");
}

CombPtr eval1(const RwPtr& r, const CombPtr& c, const TyPtr& dom) {
  switch (r->kind()) {
    case RwKind::Id2:
      return c;
    case RwKind::Prim:
      return eval_prim_rule(r->rule(), r->bindings(), c, dom);
    case RwKind::Trans2:
      return eval1(r->right(), eval1(r->left(), c, dom), dom);
    case RwKind::RespSeq: {
      if (c->kind() != CombKind::Seq) {
        throw RewriteMismatchError(
            "';' congruence applied to a combinator that is not a "
            "sequential composition: " +
            show(c));
      }
      TyPtr mid = dom ? infer_partial(c->left(), dom) : nullptr;
      return Comb::seq(eval1(r->left(), c->left(), dom),
                       eval1(r->right(), c->right(), mid));
    }
    case RwKind::RespPlus: {
      if (c->kind() != CombKind::Plus) {
        throw RewriteMismatchError(
            "'(+)' congruence applied to a combinator that is not a sum: " +
            show(c));
      }
      TyPtr dl, dr;
      if (dom) {
        if (dom->kind() != TyKind::Sum) {
          throw TypeError("'(+)' congruence needs a sum domain, got " +
                          show(dom));
        }
        dl = dom->left();
        dr = dom->right();
      }
      return Comb::plus(eval1(r->left(), c->left(), dl),
                        eval1(r->right(), c->right(), dr));
    }
    case RwKind::RespTimes: {
      if (c->kind() != CombKind::Times) {
        throw RewriteMismatchError(
            "'(*)' congruence applied to a combinator that is not a "
            "product: " +
            show(c));
      }
      TyPtr dl, dr;
      if (dom) {
        if (dom->kind() != TyKind::Prod) {
          throw TypeError("'(*)' congruence needs a product domain, got " +
                          show(dom));
        }
        dl = dom->left();
        dr = dom->right();
      }
      return Comb::times(eval1(r->left(), c->left(), dl),
                         eval1(r->right(), c->right(), dr));
    }
  }
  throw std::logic_error("unknown rewrite kind");
}

RwPtr rw_flip(const RwPtr& r) {
  switch (r->kind()) {
    case RwKind::Id2:
      return r;
    case RwKind::Prim:
      return Rw::prim(r->rule()->partner, r->bindings());
    case RwKind::Trans2:
      return Rw::trans2(rw_flip(r->right()), rw_flip(r->left()));
    case RwKind::RespSeq:
      return Rw::resp_seq(rw_flip(r->left()), rw_flip(r->right()));
    case RwKind::RespPlus:
      return Rw::resp_plus(rw_flip(r->left()), rw_flip(r->right()));
    case RwKind::RespTimes:
      return Rw::resp_times(rw_flip(r->left()), rw_flip(r->right()));
  }
  throw std::logic_error("unknown rewrite kind");
}

namespace {

bool exact_prim(const Rule* rule, const Bindings& expl, const CombPtr& c,
                const CombPtr& expected, const TyPtr& dom) {
  try {
    return comb_equal(eval_prim_rule(rule, expl, c, dom), expected);
  } catch (const UnboundMetavariableError&) {
    // Resolve the rule's implicit arguments against the expected result.
  }
  Bindings b = expl;
  std::string why;
  MRes res = match_pat(rule->lhs, c, b, why);
  if (res == MRes::Shape) {
    throw RewriteMismatchError("rule " + rule->name + " does not match " +
                               show(c) + ": " + why);
  }
  if (res == MRes::NonLinear) {
    throw NonLinearMismatchError("rule " + rule->name + " on " + show(c) +
                                 ": " + why);
  }
  res = match_pat(rule->rhs, expected, b, why);
  if (res != MRes::Ok) return false;
  return comb_equal(finish_prim(rule, b, c, dom), expected);
}

}  // namespace

bool exact(const RwPtr& r, const CombPtr& c, const CombPtr& expected,
           const TyPtr& dom) {
  switch (r->kind()) {
    case RwKind::Id2:
      return comb_equal(c, expected);
    case RwKind::Prim:
      return exact_prim(r->rule(), r->bindings(), c, expected, dom);
    case RwKind::Trans2: {
      CombPtr mid = eval1(r->left(), c, dom);
      return exact(r->right(), mid, expected, dom);
    }
    case RwKind::RespSeq: {
      if (c->kind() != CombKind::Seq) {
        throw RewriteMismatchError(
            "';' congruence applied to a combinator that is not a "
            "sequential composition: " +
            show(c));
      }
      if (expected->kind() != CombKind::Seq) return false;
      TyPtr mid = dom ? infer_partial(c->left(), dom) : nullptr;
      return exact(r->left(), c->left(), expected->left(), dom) &&
             exact(r->right(), c->right(), expected->right(), mid);
    }
    case RwKind::RespPlus: {
      if (c->kind() != CombKind::Plus) {
        throw RewriteMismatchError(
            "'(+)' congruence applied to a combinator that is not a sum: " +
            show(c));
      }
      if (expected->kind() != CombKind::Plus) return false;
      TyPtr dl, dr;
      if (dom) {
        if (dom->kind() != TyKind::Sum) {
          throw TypeError("'(+)' congruence needs a sum domain, got " +
                          show(dom));
        }
        dl = dom->left();
        dr = dom->right();
      }
      return exact(r->left(), c->left(), expected->left(), dl) &&
             exact(r->right(), c->right(), expected->right(), dr);
    }
    case RwKind::RespTimes: {
      if (c->kind() != CombKind::Times) {
        throw RewriteMismatchError(
            "'(*)' congruence applied to a combinator that is not a "
            "product: " +
            show(c));
      }
      if (expected->kind() != CombKind::Times) return false;
      TyPtr dl, dr;
      if (dom) {
        if (dom->kind() != TyKind::Prod) {
          throw TypeError("'(*)' congruence needs a product domain, got " +
                          show(dom));
        }
        dl = dom->left();
        dr = dom->right();
      }
      return exact(r->left(), c->left(), expected->left(), dl) &&
             exact(r->right(), c->right(), expected->right(), dr);
    }
  }
  throw std::logic_error("unknown rewrite kind");
}

// ------------------------------------------------------------- rw parsing --

namespace {

bool rw_composite(const RwPtr& r) {
  return r->kind() == RwKind::Trans2 || r->kind() == RwKind::RespSeq ||
         r->kind() == RwKind::RespPlus || r->kind() == RwKind::RespTimes;
}

void show_rw_rec(const RwPtr& r, std::string& out, bool atom_context) {
  switch (r->kind()) {
    case RwKind::Id2:
      out += "id2";
      return;
    case RwKind::Prim:
      out += r->rule()->name;
      return;
    default:
      break;
  }
  if (atom_context) out += '(';
  show_rw_rec(r->left(), out, rw_composite(r->left()));
  switch (r->kind()) {
    case RwKind::Trans2: out += " . "; break;
    case RwKind::RespSeq: out += " ; "; break;
    case RwKind::RespPlus: out += " (+) "; break;
    case RwKind::RespTimes: out += " (*) "; break;
    default: break;
  }
  show_rw_rec(r->right(), out, rw_composite(r->right()));
  if (atom_context) out += ')';
}

/// Minimal cursor for the rw-expression grammar.
class RwCursor {
 public:
  explicit RwCursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool try_lit(const std::string& lit) {
    skip_ws();
    if (text_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message + " in rewrite expression at offset " +
                     std::to_string(pos_));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

RwPtr rw_trans(RwCursor& cur);

RwPtr rw_atom(RwCursor& cur) {
  cur.skip_ws();
  // "(+)" and "(*)" are infix tokens, so a bare '(' here always groups.
  if (cur.try_lit("(")) {
    RwPtr r = rw_trans(cur);
    if (!cur.try_lit(")")) cur.fail("expected ')'");
    return r;
  }
  std::string n = cur.name();
  if (n.empty()) cur.fail("expected a rule name, 'id2', or '('");
  if (n == "id2") return Rw::id2();
  const Rule* rule = rule_by_name(n);
  if (!rule) cur.fail("unknown rule name '" + n + "'");
  return Rw::prim(rule);
}

RwPtr rw_times(RwCursor& cur) {
  RwPtr l = rw_atom(cur);
  if (cur.try_lit("(*)")) return Rw::resp_times(std::move(l), rw_times(cur));
  return l;
}

RwPtr rw_plus(RwCursor& cur) {
  RwPtr l = rw_times(cur);
  if (cur.try_lit("(+)")) return Rw::resp_plus(std::move(l), rw_plus(cur));
  return l;
}

RwPtr rw_seq(RwCursor& cur) {
  RwPtr l = rw_plus(cur);
  if (cur.try_lit(";")) return Rw::resp_seq(std::move(l), rw_seq(cur));
  return l;
}

RwPtr rw_trans(RwCursor& cur) {
  RwPtr l = rw_seq(cur);
  if (cur.try_lit(".")) return Rw::trans2(std::move(l), rw_trans(cur));
  return l;
}

}  // namespace

std::string show(const RwPtr& r) {
  std::string out;
  show_rw_rec(r, out, false);
  return out;
}

RwPtr parse_rw(const std::string& text) {
  RwCursor cur(text);
  RwPtr r = rw_trans(cur);
  if (!cur.done()) cur.fail("trailing input");
  return r;
}

// ------------------------------------------------------------ proof files --

namespace {

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ProofScript parse_proof(const std::string& text) {
  ProofScript script;
  bool have_claim = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (!have_claim) {
      if (line.rfind("claim:", 0) != 0) {
        throw ParseError("proof file must start with a 'claim:' line (line " +
                         std::to_string(lineno) + ")");
      }
      std::string body = line.substr(6);
      std::size_t arrow = body.find("<=>");
      if (arrow == std::string::npos) {
        throw ParseError("claim must have the form 'claim: c1 <=> c2 at t'");
      }
      std::string rest = body.substr(arrow + 3);
      std::size_t at = rest.rfind(" at ");
      if (at == std::string::npos) {
        throw ParseError("claim must end with 'at <type>'");
      }
      script.start = parse_comb(body.substr(0, arrow));
      script.goal = parse_comb(rest.substr(0, at));
      script.dom = parse_ty(rest.substr(at + 4));
      have_claim = true;
      continue;
    }
    if (line.rfind("step:", 0) != 0) {
      throw ParseError("expected a 'step:' line (line " +
                       std::to_string(lineno) + ")");
    }
    std::string body = line.substr(5);
    std::size_t by = body.rfind(" by ");
    if (by == std::string::npos) {
      throw ParseError("step must have the form 'step: <comb> by <rw>' (line " +
                       std::to_string(lineno) + ")");
    }
    ProofStep step;
    step.expected = parse_comb(body.substr(0, by));
    step.just = parse_rw(body.substr(by + 4));
    script.steps.push_back(std::move(step));
  }
  if (!have_claim) throw ParseError("proof file has no claim");
  return script;
}

ProofReport check_proof(const ProofScript& script) {
  ProofReport report;
  report.steps = script.steps.size();

  TyPtr cod;
  try {
    cod = infer(script.start, script.dom);
  } catch (const Error& e) {
    report.failing_step = 0;
    report.message = std::string("claim left-hand side: ") + e.what();
    return report;
  }
  if (!type_checks(script.goal, script.dom, cod)) {
    report.failing_step = 0;
    report.message = "claim right-hand side does not type-check at " +
                     show(script.dom) + " <-> " + show(cod);
    return report;
  }

  CombPtr cur = script.start;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ProofStep& step = script.steps[i];
    report.failing_step = i + 1;
    if (!type_checks(step.expected, script.dom, cod)) {
      report.message = "expected combinator does not type-check at " +
                       show(script.dom) + " <-> " + show(cod);
      return report;
    }
    bool ok;
    try {
      ok = exact(step.just, cur, step.expected, script.dom);
    } catch (const Error& e) {
      report.message = e.display();
      return report;
    }
    if (!ok) {
      report.message = "justification " + show(step.just) +
                       " does not rewrite " + show(cur) + " to " +
                       show(step.expected);
      return report;
    }
    cur = step.expected;
  }
  if (!comb_equal(cur, script.goal)) {
    report.failing_step = script.steps.size();
    report.message =
        "final combinator " + show(cur) +
        " differs from the claim's right-hand side " + show(script.goal);
    return report;
  }
  report.accepted = true;
  report.failing_step = 0;
  report.message = "accepted";
  return report;
}

RwPtr proof_to_rw(const ProofScript& script) {
  if (script.steps.empty()) return Rw::id2();
  RwPtr acc = script.steps.front().just;
  for (std::size_t i = 1; i < script.steps.size(); ++i) {
    acc = Rw::trans2(acc, script.steps[i].just);
  }
  return acc;
}

}  // namespace pi::rw

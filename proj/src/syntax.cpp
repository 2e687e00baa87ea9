#include "pi/syntax.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_map>

namespace pi {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Type: return "TypeError";
    case ErrorKind::Value: return "ValueError";
    case ErrorKind::ImpossibleValue: return "ImpossibleValue";
    case ErrorKind::RefusedTooLarge: return "RefusedTooLarge";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::RewriteMismatch: return "RewriteMismatch";
    case ErrorKind::NonLinearMismatch: return "NonLinearMismatch";
    case ErrorKind::UnboundMetavariable: return "UnboundMetavariable";
    case ErrorKind::Proof: return "ProofError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

// --------------------------------------------------------------------------
// Types
// --------------------------------------------------------------------------

TyPtr Ty::zero() {
  static const TyPtr t(new Ty(TyKind::Zero, nullptr, nullptr));
  return t;
}
TyPtr Ty::one() {
  static const TyPtr t(new Ty(TyKind::One, nullptr, nullptr));
  return t;
}
TyPtr Ty::sum(TyPtr l, TyPtr r) {
  return TyPtr(new Ty(TyKind::Sum, std::move(l), std::move(r)));
}
TyPtr Ty::prod(TyPtr l, TyPtr r) {
  return TyPtr(new Ty(TyKind::Prod, std::move(l), std::move(r)));
}

bool ty_equal(const TyPtr& a, const TyPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TyKind::Zero:
    case TyKind::One:
      return true;
    case TyKind::Sum:
    case TyKind::Prod:
      return ty_equal(a->left(), b->left()) && ty_equal(a->right(), b->right());
  }
  return false;
}

namespace {

bool ty_composite(const TyPtr& t) {
  return t->kind() == TyKind::Sum || t->kind() == TyKind::Prod;
}

void show_ty_rec(const TyPtr& t, std::string& out, bool atom_context) {
  switch (t->kind()) {
    case TyKind::Zero: out += '0'; return;
    case TyKind::One: out += '1'; return;
    case TyKind::Sum:
    case TyKind::Prod: {
      if (atom_context) out += '(';
      show_ty_rec(t->left(), out, ty_composite(t->left()));
      out += (t->kind() == TyKind::Sum) ? " + " : " * ";
      show_ty_rec(t->right(), out, ty_composite(t->right()));
      if (atom_context) out += ')';
      return;
    }
  }
}

}  // namespace

std::string show(const TyPtr& t) {
  std::string out;
  show_ty_rec(t, out, false);
  return out;
}

// --------------------------------------------------------------------------
// Values
// --------------------------------------------------------------------------

ValPtr Val::unit() {
  static const ValPtr v(new Val(ValKind::Unit, nullptr, nullptr));
  return v;
}
ValPtr Val::inl(ValPtr v) {
  return ValPtr(new Val(ValKind::InL, std::move(v), nullptr));
}
ValPtr Val::inr(ValPtr v) {
  return ValPtr(new Val(ValKind::InR, std::move(v), nullptr));
}
ValPtr Val::pair(ValPtr a, ValPtr b) {
  return ValPtr(new Val(ValKind::Pair, std::move(a), std::move(b)));
}

bool val_equal(const ValPtr& a, const ValPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ValKind::Unit:
      return true;
    case ValKind::InL:
    case ValKind::InR:
      return val_equal(a->inner(), b->inner());
    case ValKind::Pair:
      return val_equal(a->first(), b->first()) &&
             val_equal(a->second(), b->second());
  }
  return false;
}

namespace {

void show_val_rec(const ValPtr& v, std::string& out) {
  switch (v->kind()) {
    case ValKind::Unit:
      out += "()";
      return;
    case ValKind::InL:
    case ValKind::InR: {
      out += (v->kind() == ValKind::InL) ? "inl " : "inr ";
      bool wrap = v->inner()->kind() == ValKind::InL ||
                  v->inner()->kind() == ValKind::InR;
      if (wrap) out += '(';
      show_val_rec(v->inner(), out);
      if (wrap) out += ')';
      return;
    }
    case ValKind::Pair:
      out += '(';
      show_val_rec(v->first(), out);
      out += ", ";
      show_val_rec(v->second(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string show(const ValPtr& v) {
  std::string out;
  show_val_rec(v, out);
  return out;
}

// --------------------------------------------------------------------------
// Primitive constants
// --------------------------------------------------------------------------

namespace {

struct PrimInfo {
  Prim prim;
  const char* name;
  Prim adj;
};

constexpr std::array<PrimInfo, kPrimCount> kPrimTable = {{
    {Prim::Id, "id", Prim::Id},
    {Prim::UnitePlusL, "unite+l", Prim::UnitiPlusL},
    {Prim::UnitiPlusL, "uniti+l", Prim::UnitePlusL},
    {Prim::UnitePlusR, "unite+r", Prim::UnitiPlusR},
    {Prim::UnitiPlusR, "uniti+r", Prim::UnitePlusR},
    {Prim::SwapPlus, "swap+", Prim::SwapPlus},
    {Prim::AssoclPlus, "assocl+", Prim::AssocrPlus},
    {Prim::AssocrPlus, "assocr+", Prim::AssoclPlus},
    {Prim::UniteTimesL, "unite*l", Prim::UnitiTimesL},
    {Prim::UnitiTimesL, "uniti*l", Prim::UniteTimesL},
    {Prim::UniteTimesR, "unite*r", Prim::UnitiTimesR},
    {Prim::UnitiTimesR, "uniti*r", Prim::UniteTimesR},
    {Prim::SwapTimes, "swap*", Prim::SwapTimes},
    {Prim::AssoclTimes, "assocl*", Prim::AssocrTimes},
    {Prim::AssocrTimes, "assocr*", Prim::AssoclTimes},
    {Prim::Absorbr, "absorbr", Prim::Factorzl},
    {Prim::Factorzl, "factorzl", Prim::Absorbr},
    {Prim::Absorbl, "absorbl", Prim::Factorzr},
    {Prim::Factorzr, "factorzr", Prim::Absorbl},
    {Prim::Dist, "dist", Prim::Factor},
    {Prim::Factor, "factor", Prim::Dist},
    {Prim::Distl, "distl", Prim::Factorl},
    {Prim::Factorl, "factorl", Prim::Distl},
}};

const PrimInfo& prim_info(Prim p) {
  for (const auto& row : kPrimTable) {
    if (row.prim == p) return row;
  }
  throw std::logic_error("unknown primitive");
}

}  // namespace

const char* prim_name(Prim p) { return prim_info(p).name; }

Prim prim_adjoint(Prim p) { return prim_info(p).adj; }

std::optional<Prim> prim_by_name(const std::string& name) {
  for (const auto& row : kPrimTable) {
    if (name == row.name) return row.prim;
  }
  return std::nullopt;
}

const std::vector<Prim>& all_prims() {
  static const std::vector<Prim> prims = [] {
    std::vector<Prim> v;
    for (const auto& row : kPrimTable) v.push_back(row.prim);
    return v;
  }();
  return prims;
}

// --------------------------------------------------------------------------
// Combinators
// --------------------------------------------------------------------------

CombPtr Comb::prim(Prim p) {
  return CombPtr(new Comb(CombKind::Prim, p, nullptr, nullptr));
}
CombPtr Comb::seq(CombPtr a, CombPtr b) {
  return CombPtr(new Comb(CombKind::Seq, Prim::Id, std::move(a), std::move(b)));
}
CombPtr Comb::plus(CombPtr a, CombPtr b) {
  return CombPtr(
      new Comb(CombKind::Plus, Prim::Id, std::move(a), std::move(b)));
}
CombPtr Comb::times(CombPtr a, CombPtr b) {
  return CombPtr(
      new Comb(CombKind::Times, Prim::Id, std::move(a), std::move(b)));
}

bool comb_equal(const CombPtr& a, const CombPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  if (a->kind() == CombKind::Prim) return a->prim() == b->prim();
  return comb_equal(a->left(), b->left()) && comb_equal(a->right(), b->right());
}

CombPtr adjoint(const CombPtr& c) {
  switch (c->kind()) {
    case CombKind::Prim:
      return Comb::prim(prim_adjoint(c->prim()));
    case CombKind::Seq:
      return Comb::seq(adjoint(c->right()), adjoint(c->left()));
    case CombKind::Plus:
      return Comb::plus(adjoint(c->left()), adjoint(c->right()));
    case CombKind::Times:
      return Comb::times(adjoint(c->left()), adjoint(c->right()));
  }
  throw std::logic_error("unknown combinator kind");
}

namespace {

void show_comb_rec(const CombPtr& c, std::string& out, bool atom_context) {
  if (c->kind() == CombKind::Prim) {
    out += prim_name(c->prim());
    return;
  }
  if (atom_context) out += '(';
  show_comb_rec(c->left(), out, c->left()->kind() != CombKind::Prim);
  switch (c->kind()) {
    case CombKind::Seq: out += " ; "; break;
    case CombKind::Plus: out += " + "; break;
    case CombKind::Times: out += " * "; break;
    default: break;
  }
  show_comb_rec(c->right(), out, c->right()->kind() != CombKind::Prim);
  if (atom_context) out += ')';
}

}  // namespace

std::string show(const CombPtr& c) {
  std::string out;
  show_comb_rec(c, out, false);
  return out;
}

std::uint64_t comb_size(const CombPtr& c) {
  if (c->kind() == CombKind::Prim) return 1;
  return 1 + comb_size(c->left()) + comb_size(c->right());
}

std::uint64_t comb_depth(const CombPtr& c) {
  if (c->kind() == CombKind::Prim) return 1;
  return 1 + std::max(comb_depth(c->left()), comb_depth(c->right()));
}

// --------------------------------------------------------------------------
// Typing via unification over skeletons with holes
// --------------------------------------------------------------------------

namespace {

enum class HKind { Zero, One, Sum, Prod, Hole };

struct HTy;
using HPtr = std::shared_ptr<HTy>;

struct HTy {
  HKind kind;
  HPtr left, right;
  HPtr link;  // set once a hole is solved
};

HPtr h_zero() { return std::make_shared<HTy>(HTy{HKind::Zero, nullptr, nullptr, nullptr}); }
HPtr h_one() { return std::make_shared<HTy>(HTy{HKind::One, nullptr, nullptr, nullptr}); }
HPtr h_sum(HPtr l, HPtr r) {
  return std::make_shared<HTy>(HTy{HKind::Sum, std::move(l), std::move(r), nullptr});
}
HPtr h_prod(HPtr l, HPtr r) {
  return std::make_shared<HTy>(HTy{HKind::Prod, std::move(l), std::move(r), nullptr});
}
HPtr h_hole() { return std::make_shared<HTy>(HTy{HKind::Hole, nullptr, nullptr, nullptr}); }

HPtr resolve(HPtr h) {
  while (h->kind == HKind::Hole && h->link) h = h->link;
  return h;
}

HPtr from_ty(const TyPtr& t) {
  switch (t->kind()) {
    case TyKind::Zero: return h_zero();
    case TyKind::One: return h_one();
    case TyKind::Sum: return h_sum(from_ty(t->left()), from_ty(t->right()));
    case TyKind::Prod: return h_prod(from_ty(t->left()), from_ty(t->right()));
  }
  throw std::logic_error("unknown type kind");
}

// Null when an unsolved hole remains.
TyPtr to_ty(const HPtr& h0) {
  HPtr h = resolve(h0);
  switch (h->kind) {
    case HKind::Zero: return Ty::zero();
    case HKind::One: return Ty::one();
    case HKind::Sum: {
      TyPtr l = to_ty(h->left);
      TyPtr r = to_ty(h->right);
      if (!l || !r) return nullptr;
      return Ty::sum(std::move(l), std::move(r));
    }
    case HKind::Prod: {
      TyPtr l = to_ty(h->left);
      TyPtr r = to_ty(h->right);
      if (!l || !r) return nullptr;
      return Ty::prod(std::move(l), std::move(r));
    }
    case HKind::Hole: return nullptr;
  }
  return nullptr;
}

std::string show_h(const HPtr& h0, bool atom_context = false) {
  HPtr h = resolve(h0);
  switch (h->kind) {
    case HKind::Zero: return "0";
    case HKind::One: return "1";
    case HKind::Hole: return "_";
    case HKind::Sum:
    case HKind::Prod: {
      auto wrap = [](const HPtr& c) {
        HPtr r = resolve(c);
        return r->kind == HKind::Sum || r->kind == HKind::Prod;
      };
      std::string s = show_h(h->left, wrap(h->left)) +
                      (h->kind == HKind::Sum ? " + " : " * ") +
                      show_h(h->right, wrap(h->right));
      if (atom_context) return "(" + s + ")";
      return s;
    }
  }
  return "_";
}

bool occurs(const HPtr& hole, HPtr h) {
  h = resolve(std::move(h));
  if (h.get() == hole.get()) return true;
  if (h->kind == HKind::Sum || h->kind == HKind::Prod)
    return occurs(hole, h->left) || occurs(hole, h->right);
  return false;
}

// Returns false on a constructor clash (caller renders the error).
bool unify(HPtr a, HPtr b) {
  a = resolve(std::move(a));
  b = resolve(std::move(b));
  if (a.get() == b.get()) return true;
  if (a->kind == HKind::Hole) {
    if (occurs(a, b)) return false;
    a->link = b;
    return true;
  }
  if (b->kind == HKind::Hole) return unify(b, a);
  if (a->kind != b->kind) return false;
  if (a->kind == HKind::Sum || a->kind == HKind::Prod)
    return unify(a->left, b->left) && unify(a->right, b->right);
  return true;
}

struct Synth {
  // Domain/codomain skeletons for a primitive, built with shared holes.
  static void prim_sig(Prim p, HPtr& dom, HPtr& cod) {
    HPtr a = h_hole(), b = h_hole(), c = h_hole();
    switch (p) {
      case Prim::Id: dom = a; cod = a; return;
      case Prim::UnitePlusL: dom = h_sum(h_zero(), a); cod = a; return;
      case Prim::UnitiPlusL: dom = a; cod = h_sum(h_zero(), a); return;
      case Prim::UnitePlusR: dom = h_sum(a, h_zero()); cod = a; return;
      case Prim::UnitiPlusR: dom = a; cod = h_sum(a, h_zero()); return;
      case Prim::SwapPlus: dom = h_sum(a, b); cod = h_sum(b, a); return;
      case Prim::AssoclPlus:
        dom = h_sum(a, h_sum(b, c));
        cod = h_sum(h_sum(a, b), c);
        return;
      case Prim::AssocrPlus:
        dom = h_sum(h_sum(a, b), c);
        cod = h_sum(a, h_sum(b, c));
        return;
      case Prim::UniteTimesL: dom = h_prod(h_one(), a); cod = a; return;
      case Prim::UnitiTimesL: dom = a; cod = h_prod(h_one(), a); return;
      case Prim::UniteTimesR: dom = h_prod(a, h_one()); cod = a; return;
      case Prim::UnitiTimesR: dom = a; cod = h_prod(a, h_one()); return;
      case Prim::SwapTimes: dom = h_prod(a, b); cod = h_prod(b, a); return;
      case Prim::AssoclTimes:
        dom = h_prod(a, h_prod(b, c));
        cod = h_prod(h_prod(a, b), c);
        return;
      case Prim::AssocrTimes:
        dom = h_prod(h_prod(a, b), c);
        cod = h_prod(a, h_prod(b, c));
        return;
      case Prim::Absorbr: dom = h_prod(h_zero(), a); cod = h_zero(); return;
      case Prim::Factorzl: dom = h_zero(); cod = h_prod(h_zero(), a); return;
      case Prim::Absorbl: dom = h_prod(a, h_zero()); cod = h_zero(); return;
      case Prim::Factorzr: dom = h_zero(); cod = h_prod(a, h_zero()); return;
      case Prim::Dist:
        dom = h_prod(h_sum(a, b), c);
        cod = h_sum(h_prod(a, c), h_prod(b, c));
        return;
      case Prim::Factor:
        dom = h_sum(h_prod(a, c), h_prod(b, c));
        cod = h_prod(h_sum(a, b), c);
        return;
      case Prim::Distl:
        dom = h_prod(a, h_sum(b, c));
        cod = h_sum(h_prod(a, b), h_prod(a, c));
        return;
      case Prim::Factorl:
        dom = h_sum(h_prod(a, b), h_prod(a, c));
        cod = h_prod(a, h_sum(b, c));
        return;
    }
    throw std::logic_error("unknown primitive");
  }

  // Synthesizes the codomain skeleton of c at the input skeleton.
  static HPtr go(const CombPtr& c, const HPtr& in) {
    switch (c->kind()) {
      case CombKind::Prim: {
        HPtr dom, cod;
        prim_sig(c->prim(), dom, cod);
        if (!unify(dom, in)) {
          throw TypeError(std::string(prim_name(c->prim())) +
                          " expects an input of shape " + show_h(dom) +
                          "; got " + show_h(in));
        }
        return cod;
      }
      case CombKind::Seq: {
        HPtr mid = go(c->left(), in);
        return go(c->right(), mid);
      }
      case CombKind::Plus: {
        HPtr l = h_hole(), r = h_hole();
        if (!unify(h_sum(l, r), in)) {
          throw TypeError("a sum combinator " + show(c) +
                          " expects an input of shape _ + _; got " +
                          show_h(in));
        }
        return h_sum(go(c->left(), l), go(c->right(), r));
      }
      case CombKind::Times: {
        HPtr l = h_hole(), r = h_hole();
        if (!unify(h_prod(l, r), in)) {
          throw TypeError("a product combinator " + show(c) +
                          " expects an input of shape _ * _; got " +
                          show_h(in));
        }
        return h_prod(go(c->left(), l), go(c->right(), r));
      }
    }
    throw std::logic_error("unknown combinator kind");
  }
};

}  // namespace

TyPtr infer(const CombPtr& c, const TyPtr& b_in) {
  HPtr cod = Synth::go(c, from_ty(b_in));
  TyPtr out = to_ty(cod);
  if (!out) {
    throw TypeError("output type of " + show(c) + " at " + show(b_in) +
                    " is underdetermined (" + show_h(cod) +
                    "); factorzl/factorzr need a checking context");
  }
  return out;
}

bool type_checks(const CombPtr& c, const TyPtr& b_in, const TyPtr& b_out) {
  try {
    HPtr cod = Synth::go(c, from_ty(b_in));
    return unify(cod, from_ty(b_out));
  } catch (const TypeError&) {
    return false;
  }
}

TyPtr infer_partial(const CombPtr& c, const TyPtr& b_in) {
  HPtr cod = Synth::go(c, from_ty(b_in));
  return to_ty(cod);
}

namespace {

TyPtr to_ty_fill(const HPtr& h0) {
  HPtr h = resolve(h0);
  switch (h->kind) {
    case HKind::Zero: return Ty::zero();
    case HKind::One: return Ty::one();
    case HKind::Sum: return Ty::sum(to_ty_fill(h->left), to_ty_fill(h->right));
    case HKind::Prod:
      return Ty::prod(to_ty_fill(h->left), to_ty_fill(h->right));
    case HKind::Hole: return Ty::zero();
  }
  return Ty::zero();
}

}  // namespace

TyPtr infer_fill_zero(const CombPtr& c, const TyPtr& b_in) {
  HPtr cod = Synth::go(c, from_ty(b_in));
  return to_ty_fill(cod);
}

}  // namespace pi

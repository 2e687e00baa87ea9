#include "pi/semantics.hpp"

#include <limits>

namespace pi {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw RefusedTooLargeError("type size overflows 64-bit arithmetic");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw RefusedTooLargeError("type size overflows 64-bit arithmetic");
  }
  return a * b;
}

[[noreturn]] void no_clause(Prim p, const ValPtr& v) {
  throw ValueError(std::string(prim_name(p)) + " has no clause for value " +
                   show(v));
}

ValPtr eval_prim(Prim p, const ValPtr& v) {
  switch (p) {
    case Prim::Id:
      return v;
    case Prim::UnitePlusL:
      if (v->kind() == ValKind::InR) return v->inner();
      no_clause(p, v);
    case Prim::UnitiPlusL:
      return Val::inr(v);
    case Prim::UnitePlusR:
      if (v->kind() == ValKind::InL) return v->inner();
      no_clause(p, v);
    case Prim::UnitiPlusR:
      return Val::inl(v);
    case Prim::SwapPlus:
      if (v->kind() == ValKind::InL) return Val::inr(v->inner());
      if (v->kind() == ValKind::InR) return Val::inl(v->inner());
      no_clause(p, v);
    case Prim::AssoclPlus:
      if (v->kind() == ValKind::InL) return Val::inl(Val::inl(v->inner()));
      if (v->kind() == ValKind::InR) {
        const ValPtr& w = v->inner();
        if (w->kind() == ValKind::InL) return Val::inl(Val::inr(w->inner()));
        if (w->kind() == ValKind::InR) return Val::inr(w->inner());
      }
      no_clause(p, v);
    case Prim::AssocrPlus:
      if (v->kind() == ValKind::InL) {
        const ValPtr& w = v->inner();
        if (w->kind() == ValKind::InL) return Val::inl(w->inner());
        if (w->kind() == ValKind::InR) return Val::inr(Val::inl(w->inner()));
      }
      if (v->kind() == ValKind::InR) return Val::inr(Val::inr(v->inner()));
      no_clause(p, v);
    case Prim::UniteTimesL:
      if (v->kind() == ValKind::Pair && v->first()->kind() == ValKind::Unit) {
        return v->second();
      }
      no_clause(p, v);
    case Prim::UnitiTimesL:
      return Val::pair(Val::unit(), v);
    case Prim::UniteTimesR:
      if (v->kind() == ValKind::Pair && v->second()->kind() == ValKind::Unit) {
        return v->first();
      }
      no_clause(p, v);
    case Prim::UnitiTimesR:
      return Val::pair(v, Val::unit());
    case Prim::SwapTimes:
      if (v->kind() == ValKind::Pair) return Val::pair(v->second(), v->first());
      no_clause(p, v);
    case Prim::AssoclTimes:
      if (v->kind() == ValKind::Pair &&
          v->second()->kind() == ValKind::Pair) {
        const ValPtr& bc = v->second();
        return Val::pair(Val::pair(v->first(), bc->first()), bc->second());
      }
      no_clause(p, v);
    case Prim::AssocrTimes:
      if (v->kind() == ValKind::Pair && v->first()->kind() == ValKind::Pair) {
        const ValPtr& ab = v->first();
        return Val::pair(ab->first(), Val::pair(ab->second(), v->second()));
      }
      no_clause(p, v);
    case Prim::Absorbr:
      // absorbr (v1, v2) |-> v1; vacuous on closed values (domain 0 * b).
      if (v->kind() == ValKind::Pair) return v->first();
      no_clause(p, v);
    case Prim::Absorbl:
      // absorbl (v1, v2) |-> v2; vacuous on closed values (domain b * 0).
      if (v->kind() == ValKind::Pair) return v->second();
      no_clause(p, v);
    case Prim::Factorzl:
    case Prim::Factorzr:
      throw ImpossibleValueError(std::string(prim_name(p)) +
                                 " cannot be applied: its domain 0 has no "
                                 "values (got " +
                                 show(v) + ")");
    case Prim::Dist:
      if (v->kind() == ValKind::Pair) {
        const ValPtr& l = v->first();
        if (l->kind() == ValKind::InL)
          return Val::inl(Val::pair(l->inner(), v->second()));
        if (l->kind() == ValKind::InR)
          return Val::inr(Val::pair(l->inner(), v->second()));
      }
      no_clause(p, v);
    case Prim::Factor:
      if (v->kind() == ValKind::InL && v->inner()->kind() == ValKind::Pair) {
        const ValPtr& w = v->inner();
        return Val::pair(Val::inl(w->first()), w->second());
      }
      if (v->kind() == ValKind::InR && v->inner()->kind() == ValKind::Pair) {
        const ValPtr& w = v->inner();
        return Val::pair(Val::inr(w->first()), w->second());
      }
      no_clause(p, v);
    case Prim::Distl:
      if (v->kind() == ValKind::Pair) {
        const ValPtr& r = v->second();
        if (r->kind() == ValKind::InL)
          return Val::inl(Val::pair(v->first(), r->inner()));
        if (r->kind() == ValKind::InR)
          return Val::inr(Val::pair(v->first(), r->inner()));
      }
      no_clause(p, v);
    case Prim::Factorl:
      if (v->kind() == ValKind::InL && v->inner()->kind() == ValKind::Pair) {
        const ValPtr& w = v->inner();
        return Val::pair(w->first(), Val::inl(w->second()));
      }
      if (v->kind() == ValKind::InR && v->inner()->kind() == ValKind::Pair) {
        const ValPtr& w = v->inner();
        return Val::pair(w->first(), Val::inr(w->second()));
      }
      no_clause(p, v);
  }
  throw std::logic_error("unknown primitive");
}

}  // namespace

std::uint64_t size(const TyPtr& t) {
  switch (t->kind()) {
    case TyKind::Zero: return 0;
    case TyKind::One: return 1;
    case TyKind::Sum: return checked_add(size(t->left()), size(t->right()));
    case TyKind::Prod: return checked_mul(size(t->left()), size(t->right()));
  }
  throw std::logic_error("unknown type kind");
}

ValPtr eval(const CombPtr& c, const ValPtr& v) {
  switch (c->kind()) {
    case CombKind::Prim:
      return eval_prim(c->prim(), v);
    case CombKind::Seq:
      return eval(c->right(), eval(c->left(), v));
    case CombKind::Plus:
      if (v->kind() == ValKind::InL) return Val::inl(eval(c->left(), v->inner()));
      if (v->kind() == ValKind::InR) return Val::inr(eval(c->right(), v->inner()));
      throw ValueError("sum combinator " + show(c) + " applied to non-sum value " +
                       show(v));
    case CombKind::Times:
      if (v->kind() == ValKind::Pair) {
        return Val::pair(eval(c->left(), v->first()),
                         eval(c->right(), v->second()));
      }
      throw ValueError("product combinator " + show(c) +
                       " applied to non-pair value " + show(v));
  }
  throw std::logic_error("unknown combinator kind");
}

ValPtr eval_rev(const CombPtr& c, const ValPtr& v) { return eval(adjoint(c), v); }

void for_each_val(const TyPtr& t,
                  const std::function<bool(const ValPtr&)>& f) {
  // Recursive enumerator with continuation-free early exit via return value.
  struct Rec {
    static bool go(const TyPtr& ty,
                   const std::function<bool(const ValPtr&)>& emit) {
      switch (ty->kind()) {
        case TyKind::Zero:
          return true;
        case TyKind::One:
          return emit(Val::unit());
        case TyKind::Sum:
          if (!go(ty->left(),
                  [&](const ValPtr& v) { return emit(Val::inl(v)); })) {
            return false;
          }
          return go(ty->right(),
                    [&](const ValPtr& v) { return emit(Val::inr(v)); });
        case TyKind::Prod:
          return go(ty->left(), [&](const ValPtr& a) {
            return go(ty->right(), [&](const ValPtr& b) {
              return emit(Val::pair(a, b));
            });
          });
      }
      return true;
    }
  };
  Rec::go(t, f);
}

std::vector<ValPtr> enumerate_vals(const TyPtr& t) {
  std::vector<ValPtr> out;
  std::uint64_t n = size(t);
  out.reserve(static_cast<std::size_t>(n));
  for_each_val(t, [&](const ValPtr& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::uint64_t rank(const TyPtr& t, const ValPtr& v) {
  switch (t->kind()) {
    case TyKind::Zero:
      throw ValueError("0 has no values, cannot rank " + show(v));
    case TyKind::One:
      if (v->kind() == ValKind::Unit) return 0;
      throw ValueError(show(v) + " is not a value of 1");
    case TyKind::Sum:
      if (v->kind() == ValKind::InL) return rank(t->left(), v->inner());
      if (v->kind() == ValKind::InR) {
        return checked_add(size(t->left()), rank(t->right(), v->inner()));
      }
      throw ValueError(show(v) + " is not a value of " + show(t));
    case TyKind::Prod:
      if (v->kind() == ValKind::Pair) {
        return checked_add(
            checked_mul(rank(t->left(), v->first()), size(t->right())),
            rank(t->right(), v->second()));
      }
      throw ValueError(show(v) + " is not a value of " + show(t));
  }
  throw std::logic_error("unknown type kind");
}

ValPtr unrank(const TyPtr& t, std::uint64_t index) {
  switch (t->kind()) {
    case TyKind::Zero:
      throw ValueError("0 has no values");
    case TyKind::One:
      if (index == 0) return Val::unit();
      throw ValueError("index " + std::to_string(index) + " out of range for 1");
    case TyKind::Sum: {
      std::uint64_t m = size(t->left());
      if (index < m) return Val::inl(unrank(t->left(), index));
      return Val::inr(unrank(t->right(), index - m));
    }
    case TyKind::Prod: {
      std::uint64_t n = size(t->right());
      if (n == 0) throw ValueError("index out of range for empty type");
      return Val::pair(unrank(t->left(), index / n),
                       unrank(t->right(), index % n));
    }
  }
  throw std::logic_error("unknown type kind");
}

namespace {

EquivReport equiv_loop(const CombPtr& c1, const CombPtr& c2, const TyPtr& b,
                       std::uint64_t cap) {
  std::uint64_t n = size(b);
  if (n > cap) {
    throw RefusedTooLargeError("domain " + show(b) + " has " +
                               std::to_string(n) +
                               " values, above the brute-force cap of " +
                               std::to_string(cap));
  }
  EquivReport report;
  report.equivalent = true;
  for_each_val(b, [&](const ValPtr& v) {
    ValPtr l = eval(c1, v);
    ValPtr r = eval(c2, v);
    ++report.checked;
    if (!val_equal(l, r)) {
      report.equivalent = false;
      report.witness = v;
      report.lhs_out = l;
      report.rhs_out = r;
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace

EquivReport obs_equiv(const CombPtr& c1, const CombPtr& c2, const TyPtr& b,
                      std::uint64_t cap) {
  TyPtr cod1 = infer(c1, b);
  TyPtr cod2 = infer(c2, b);
  if (!ty_equal(cod1, cod2)) {
    throw TypeError("combinators have different codomains at " + show(b) +
                    ": " + show(cod1) + " vs " + show(cod2));
  }
  return equiv_loop(c1, c2, b, cap);
}

EquivReport obs_equiv(const CombPtr& c1, const CombPtr& c2, const TyPtr& b,
                      const TyPtr& cod, std::uint64_t cap) {
  if (!type_checks(c1, b, cod)) {
    throw TypeError("left combinator does not type-check at " + show(b) +
                    " <-> " + show(cod) + ": " + show(c1));
  }
  if (!type_checks(c2, b, cod)) {
    throw TypeError("right combinator does not type-check at " + show(b) +
                    " <-> " + show(cod) + ": " + show(c2));
  }
  return equiv_loop(c1, c2, b, cap);
}

std::vector<CombPtr> seq_components(const CombPtr& c) {
  std::vector<CombPtr> out;
  struct Rec {
    static void go(const CombPtr& c, std::vector<CombPtr>& out) {
      if (c->kind() == CombKind::Seq) {
        go(c->left(), out);
        go(c->right(), out);
      } else {
        out.push_back(c);
      }
    }
  };
  Rec::go(c, out);
  return out;
}

Trace trace_eval(const CombPtr& c, const ValPtr& v) {
  Trace tr;
  tr.input = v;
  ValPtr cur = v;
  for (const CombPtr& comp : seq_components(c)) {
    cur = eval(comp, cur);
    tr.steps.push_back({comp, cur});
  }
  tr.result = cur;
  return tr;
}

}  // namespace pi

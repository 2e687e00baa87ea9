#include "pi/normalize.hpp"

namespace pi {

TyPtr canonical_type(std::uint64_t n) {
  TyPtr t = Ty::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = Ty::sum(Ty::one(), t);
  return t;
}

namespace {

CombPtr cid() { return Comb::prim(Prim::Id); }

}  // namespace

CombPtr normalizer(const TyPtr& b) {
  switch (b->kind()) {
    case TyKind::Zero:
      return cid();
    case TyKind::One:
      return Comb::prim(Prim::UnitiPlusR);
    case TyKind::Sum: {
      const TyPtr& s = b->left();
      const TyPtr& t = b->right();
      switch (s->kind()) {
        case TyKind::Zero:
          return Comb::seq(Comb::prim(Prim::UnitePlusL), normalizer(t));
        case TyKind::One:
          return Comb::plus(cid(), normalizer(t));
        case TyKind::Sum:
          // Reassociate to the right and keep normalizing.
          return Comb::seq(
              Comb::prim(Prim::AssocrPlus),
              normalizer(Ty::sum(s->left(), Ty::sum(s->right(), t))));
        case TyKind::Prod:
          // Normalize the product summand first, then the whole sum.
          return Comb::seq(
              Comb::plus(normalizer(s), cid()),
              normalizer(Ty::sum(canonical_type(size(s)), t)));
      }
      break;
    }
    case TyKind::Prod: {
      const TyPtr& s = b->left();
      const TyPtr& t = b->right();
      switch (s->kind()) {
        case TyKind::Zero:
          return Comb::prim(Prim::Absorbr);
        case TyKind::One:
          return Comb::seq(Comb::prim(Prim::UniteTimesL), normalizer(t));
        case TyKind::Sum:
          return Comb::seq(
              Comb::prim(Prim::Dist),
              normalizer(Ty::sum(Ty::prod(s->left(), t),
                                 Ty::prod(s->right(), t))));
        case TyKind::Prod:
          return Comb::seq(
              Comb::prim(Prim::AssocrTimes),
              normalizer(Ty::prod(s->left(), Ty::prod(s->right(), t))));
      }
      break;
    }
  }
  throw std::logic_error("unknown type kind");
}

bool iso_exists(const TyPtr& b1, const TyPtr& b2) {
  return size(b1) == size(b2);
}

CombPtr iso_witness(const TyPtr& b1, const TyPtr& b2) {
  std::uint64_t n1 = size(b1);
  std::uint64_t n2 = size(b2);
  if (n1 != n2) {
    throw TypeError("no isomorphism: " + show(b1) + " has " +
                    std::to_string(n1) + " values but " + show(b2) + " has " +
                    std::to_string(n2));
  }
  return Comb::seq(normalizer(b1), adjoint(normalizer(b2)));
}

}  // namespace pi

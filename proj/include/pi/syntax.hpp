#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pi/error.hpp"

namespace pi {

// ---------------------------------------------------------------------------
// Types: b ::= 0 | 1 | b + b | b * b
// ---------------------------------------------------------------------------

enum class TyKind { Zero, One, Sum, Prod };

class Ty;
using TyPtr = std::shared_ptr<const Ty>;

class Ty {
 public:
  TyKind kind() const { return kind_; }
  const TyPtr& left() const { return left_; }
  const TyPtr& right() const { return right_; }

  static TyPtr zero();
  static TyPtr one();
  static TyPtr sum(TyPtr l, TyPtr r);
  static TyPtr prod(TyPtr l, TyPtr r);

 private:
  Ty(TyKind k, TyPtr l, TyPtr r)
      : kind_(k), left_(std::move(l)), right_(std::move(r)) {}

  TyKind kind_;
  TyPtr left_, right_;
};

bool ty_equal(const TyPtr& a, const TyPtr& b);
std::string show(const TyPtr& t);

// ---------------------------------------------------------------------------
// Values: v ::= () | inl v | inr v | (v, v)
// ---------------------------------------------------------------------------

enum class ValKind { Unit, InL, InR, Pair };

class Val;
using ValPtr = std::shared_ptr<const Val>;

class Val {
 public:
  ValKind kind() const { return kind_; }
  const ValPtr& inner() const { return left_; }  // InL / InR payload
  const ValPtr& first() const { return left_; }
  const ValPtr& second() const { return right_; }

  static ValPtr unit();
  static ValPtr inl(ValPtr v);
  static ValPtr inr(ValPtr v);
  static ValPtr pair(ValPtr a, ValPtr b);

 private:
  Val(ValKind k, ValPtr l, ValPtr r)
      : kind_(k), left_(std::move(l)), right_(std::move(r)) {}

  ValKind kind_;
  ValPtr left_, right_;
};

bool val_equal(const ValPtr& a, const ValPtr& b);
std::string show(const ValPtr& v);

// ---------------------------------------------------------------------------
// Combinators: the 23 level-1 constants, closed under ; (+) (*).
// The adjoint ! is not an AST node; it is expanded eagerly by adjoint().
// ---------------------------------------------------------------------------

enum class Prim {
  Id,
  UnitePlusL,   // 0 + b <-> b
  UnitiPlusL,   // b <-> 0 + b
  UnitePlusR,   // b + 0 <-> b
  UnitiPlusR,   // b <-> b + 0
  SwapPlus,     // b1 + b2 <-> b2 + b1
  AssoclPlus,   // b1 + (b2 + b3) <-> (b1 + b2) + b3
  AssocrPlus,   // (b1 + b2) + b3 <-> b1 + (b2 + b3)
  UniteTimesL,  // 1 * b <-> b
  UnitiTimesL,  // b <-> 1 * b
  UniteTimesR,  // b * 1 <-> b
  UnitiTimesR,  // b <-> b * 1
  SwapTimes,    // b1 * b2 <-> b2 * b1
  AssoclTimes,  // b1 * (b2 * b3) <-> (b1 * b2) * b3
  AssocrTimes,  // (b1 * b2) * b3 <-> b1 * (b2 * b3)
  Absorbr,      // 0 * b <-> 0
  Factorzl,     // 0 <-> 0 * b
  Absorbl,      // b * 0 <-> 0
  Factorzr,     // 0 <-> b * 0
  Dist,         // (b1 + b2) * b3 <-> (b1 * b3) + (b2 * b3)
  Factor,       // (b1 * b3) + (b2 * b3) <-> (b1 + b2) * b3
  Distl,        // b1 * (b2 + b3) <-> (b1 * b2) + (b1 * b3)
  Factorl,      // (b1 * b2) + (b1 * b3) <-> b1 * (b2 + b3)
};

inline constexpr int kPrimCount = 23;

/// Surface name of a constant, e.g. "unite+l", "swap*", "factorzl".
const char* prim_name(Prim p);
/// Inverse constant: adjoint pairs swap, self-inverse constants map to
/// themselves.
Prim prim_adjoint(Prim p);
/// Lookup by surface name; nullopt if the name is not a constant.
std::optional<Prim> prim_by_name(const std::string& name);
/// All 23 constants in declaration order.
const std::vector<Prim>& all_prims();

enum class CombKind { Prim, Seq, Plus, Times };

class Comb;
using CombPtr = std::shared_ptr<const Comb>;

class Comb {
 public:
  CombKind kind() const { return kind_; }
  Prim prim() const { return prim_; }  // valid when kind == Prim
  const CombPtr& left() const { return left_; }
  const CombPtr& right() const { return right_; }

  static CombPtr prim(Prim p);
  static CombPtr seq(CombPtr a, CombPtr b);
  static CombPtr plus(CombPtr a, CombPtr b);
  static CombPtr times(CombPtr a, CombPtr b);

 private:
  Comb(CombKind k, Prim p, CombPtr l, CombPtr r)
      : kind_(k), prim_(p), left_(std::move(l)), right_(std::move(r)) {}

  CombKind kind_;
  Prim prim_;
  CombPtr left_, right_;
};

/// Structural equality of combinator syntax trees.
bool comb_equal(const CombPtr& a, const CombPtr& b);
/// Syntactic inverse: reverses compositions, dualizes every constant.
CombPtr adjoint(const CombPtr& c);
std::string show(const CombPtr& c);
/// Number of AST nodes.
std::uint64_t comb_size(const CombPtr& c);
std::uint64_t comb_depth(const CombPtr& c);

// ---------------------------------------------------------------------------
// Typing. Terms carry no annotations; infer() synthesizes the codomain from
// a given domain via unification over type skeletons with holes. The output
// of factorzl/factorzr is underdetermined by the input, so infer raises
// TypeError for such terms; type_checks() resolves the holes against an
// expected codomain instead.
// ---------------------------------------------------------------------------

/// Synthesize the codomain of c at domain b_in. Throws TypeError when c does
/// not type-check at b_in or when the codomain is underdetermined.
TyPtr infer(const CombPtr& c, const TyPtr& b_in);

/// True iff c : b_in <-> b_out is derivable. Never throws on mere mismatch.
bool type_checks(const CombPtr& c, const TyPtr& b_in, const TyPtr& b_out);

/// Like infer, but returns null instead of throwing when the codomain is
/// underdetermined. Still throws TypeError on genuine shape mismatches.
TyPtr infer_partial(const CombPtr& c, const TyPtr& b_in);

/// Like infer, but fills underdetermined positions with 0. Undetermined
/// positions only occur inside uninhabited subtrees (they stem from
/// factorzl/factorzr, whose 0 factor annihilates the product), so the
/// filled type has the same canonical value layout as every instantiation.
TyPtr infer_fill_zero(const CombPtr& c, const TyPtr& b_in);

}  // namespace pi

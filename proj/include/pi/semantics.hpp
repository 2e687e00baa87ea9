#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pi/syntax.hpp"

namespace pi {

/// Default cap on the domain size brute-force operations will sweep.
inline constexpr std::uint64_t kDefaultBruteForceCap = 4096;

/// Number of inhabitants of a type. Throws RefusedTooLargeError on overflow
/// of 64-bit arithmetic.
std::uint64_t size(const TyPtr& t);

/// Run c forwards on v. Throws ValueError when a clause does not apply and
/// ImpossibleValueError for factorzl/factorzr (their domain is empty).
ValPtr eval(const CombPtr& c, const ValPtr& v);

/// Run c backwards (eval of the adjoint).
ValPtr eval_rev(const CombPtr& c, const ValPtr& v);

/// All values of t in canonical order: sums enumerate the left summand
/// first; products vary the right component fastest (row-major).
std::vector<ValPtr> enumerate_vals(const TyPtr& t);

/// Visit values of t in canonical order without materializing the vector.
/// The callback returns false to stop early.
void for_each_val(const TyPtr& t, const std::function<bool(const ValPtr&)>& f);

/// Position of v in the canonical enumeration of t. Throws ValueError when
/// v is not a value of t.
std::uint64_t rank(const TyPtr& t, const ValPtr& v);

/// Inverse of rank. Throws ValueError when index >= size(t).
ValPtr unrank(const TyPtr& t, std::uint64_t index);

struct EquivReport {
  bool equivalent = false;
  std::uint64_t checked = 0;     // number of inputs compared
  ValPtr witness;                // first disagreeing input (when inequivalent)
  ValPtr lhs_out, rhs_out;       // the differing outputs
};

/// Brute-force observational equivalence of c1 and c2 at domain b.
/// Throws TypeError when either side fails to type-check at b or the
/// codomains differ, RefusedTooLargeError when size(b) exceeds cap.
EquivReport obs_equiv(const CombPtr& c1, const CombPtr& c2, const TyPtr& b,
                      std::uint64_t cap = kDefaultBruteForceCap);

/// Checking-mode variant: equivalence at a stated codomain. Unlike the
/// inferring overload this accepts combinators whose codomain has holes
/// (factorzl/factorzr tails), since cod supplies the checking context.
EquivReport obs_equiv(const CombPtr& c1, const CombPtr& c2, const TyPtr& b,
                      const TyPtr& cod,
                      std::uint64_t cap = kDefaultBruteForceCap);

struct TraceStep {
  CombPtr component;  // one top-level Seq component
  ValPtr value;       // value after running it
};

struct Trace {
  ValPtr input;
  std::vector<TraceStep> steps;
  ValPtr result;  // equals steps.back().value when steps is nonempty
};

/// Run c on v recording one step per top-level Seq component in execution
/// order. A combinator with no top-level Seq yields a single step.
Trace trace_eval(const CombPtr& c, const ValPtr& v);

/// Flatten the Seq spine of c in execution order.
std::vector<CombPtr> seq_components(const CombPtr& c);

}  // namespace pi

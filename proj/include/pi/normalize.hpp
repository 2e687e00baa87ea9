#pragma once

#include <cstdint>

#include "pi/semantics.hpp"
#include "pi/syntax.hpp"

namespace pi {

/// Canonical type with n inhabitants: canonical_type(0) = 0 and
/// canonical_type(n) = 1 + canonical_type(n - 1), so e.g.
/// canonical_type(2) = 1 + (1 + 0).
TyPtr canonical_type(std::uint64_t n);

/// A combinator b <-> canonical_type(size(b)), built structurally. The
/// witness always type-checks on the nose: infer(normalizer(b), b) equals
/// canonical_type(size(b)) syntactically.
CombPtr normalizer(const TyPtr& b);

/// Two finite types are isomorphic iff they have the same size.
bool iso_exists(const TyPtr& b1, const TyPtr& b2);

/// An executable isomorphism b1 <-> b2 routed through the canonical type.
/// Throws TypeError when the sizes differ.
CombPtr iso_witness(const TyPtr& b1, const TyPtr& b2);

}  // namespace pi

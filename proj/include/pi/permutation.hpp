#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pi/syntax.hpp"

namespace pi {

/// Dense one-line permutation: element k maps to perm[k].
using PermDense = std::vector<std::uint64_t>;

enum class PermKind { Id, Swap, Seq };

class PermProg;
using PermProgPtr = std::shared_ptr<const PermProg>;

/// Arity-indexed permutation programs over {0, ..., n-1}:
///   PId(n) | PSwap(n, i, j) | PSeq(n, p, q)
/// where ; runs the left program first, then the right.
class PermProg {
 public:
  PermKind kind() const { return kind_; }
  std::uint64_t arity() const { return arity_; }
  std::uint64_t i() const { return i_; }  // Swap only
  std::uint64_t j() const { return j_; }  // Swap only
  const PermProgPtr& left() const { return left_; }
  const PermProgPtr& right() const { return right_; }

  static PermProgPtr id(std::uint64_t n);
  /// Transposition of i and j; requires i != j, i < n, j < n (ArityError).
  static PermProgPtr swap(std::uint64_t n, std::uint64_t i, std::uint64_t j);
  /// Sequential composition; both sides must have arity n (ArityError).
  static PermProgPtr seq(PermProgPtr p, PermProgPtr q);

 private:
  PermProg(PermKind k, std::uint64_t n, std::uint64_t i, std::uint64_t j,
           PermProgPtr l, PermProgPtr r)
      : kind_(k), arity_(n), i_(i), j_(j), left_(std::move(l)),
        right_(std::move(r)) {}

  PermKind kind_;
  std::uint64_t arity_;
  std::uint64_t i_ = 0, j_ = 0;
  PermProgPtr left_, right_;
};

/// Image of k under p. Throws ArityError when k >= arity.
std::uint64_t papply(const PermProgPtr& p, std::uint64_t k);

/// Tabulate p as a dense permutation.
PermDense to_dense(const PermProgPtr& p);

/// Structural inverse: swaps are self-inverse, compositions reverse.
PermProgPtr pinvert(const PermProgPtr& p);

/// Inverse of a dense permutation.
PermDense pinvert(const PermDense& p);

/// Sequential composition as a program node.
PermProgPtr pcompose(PermProgPtr p, PermProgPtr q);

/// Dense composition: run p first, then q (result[k] = q[p[k]]).
PermDense pcompose(const PermDense& p, const PermDense& q);

/// True iff p is a permutation of {0, ..., p.size()-1}.
bool is_permutation(const PermDense& p);

/// One-line notation, e.g. "[2 0 1 3]".
std::string show_dense(const PermDense& p);

/// Render a permutation program in the .perm surface syntax (single line,
/// without the arity header), e.g. "swap 0 1 ; swap 1 2" or "id".
std::string show_perm(const PermProgPtr& p);

/// Parse .perm file contents:
///   arity: <n>
///   swap <i> <j> ; swap <k> <l> ; ... (or "id"; ';' may be a newline)
/// '#' starts a line comment. Throws ParseError / ArityError.
PermProgPtr parse_perm(const std::string& text);

/// Default cap on the domain size compile() will tabulate.
inline constexpr std::uint64_t kDefaultCompileCap = 1u << 20;

/// Compile a combinator at domain b to the dense permutation it denotes on
/// canonical ranks. Compositional: no evaluation of the combinator is
/// involved. Throws TypeError when c does not type-check at b and
/// RefusedTooLargeError when size(b) exceeds cap.
PermDense compile(const CombPtr& c, const TyPtr& b,
                  std::uint64_t cap = kDefaultCompileCap);

}  // namespace pi

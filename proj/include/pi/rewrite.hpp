#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pi/syntax.hpp"

namespace pi::rw {

enum class Direction { L2R, R2L };

// ---------------------------------------------------------------------------
// Combinator patterns over metavariables c0, c1, ... cn. AdjVar matches the
// adjoint of the variable's binding (the schema !ci); combinators themselves
// never contain an adjoint node, so Adj only wraps variables.
// ---------------------------------------------------------------------------

enum class PatKind { Const, Var, AdjVar, Seq, Plus, Times };

class Pat;
using PatPtr = std::shared_ptr<const Pat>;

class Pat {
 public:
  PatKind kind() const { return kind_; }
  Prim prim() const { return prim_; }  // Const
  int var() const { return var_; }     // Var / AdjVar
  const PatPtr& left() const { return left_; }
  const PatPtr& right() const { return right_; }

  static PatPtr cnst(Prim p);
  static PatPtr var(int i);
  static PatPtr adj(int i);
  static PatPtr seq(PatPtr a, PatPtr b);
  static PatPtr plus(PatPtr a, PatPtr b);
  static PatPtr times(PatPtr a, PatPtr b);

 private:
  Pat(PatKind k, Prim p, int v, PatPtr l, PatPtr r)
      : kind_(k), prim_(p), var_(v), left_(std::move(l)), right_(std::move(r)) {}

  PatKind kind_;
  Prim prim_;
  int var_;
  PatPtr left_, right_;
};

std::string show(const PatPtr& p);

// Type patterns over type variables t1, t2, ...
enum class TPatKind { Var, Zero, One, Sum, Prod };

class TPat;
using TPatPtr = std::shared_ptr<const TPat>;

class TPat {
 public:
  TPatKind kind() const { return kind_; }
  int var() const { return var_; }
  const TPatPtr& left() const { return left_; }
  const TPatPtr& right() const { return right_; }

  static TPatPtr var(int i);
  static TPatPtr zero();
  static TPatPtr one();
  static TPatPtr sum(TPatPtr a, TPatPtr b);
  static TPatPtr prod(TPatPtr a, TPatPtr b);

 private:
  TPat(TPatKind k, int v, TPatPtr l, TPatPtr r)
      : kind_(k), var_(v), left_(std::move(l)), right_(std::move(r)) {}

  TPatKind kind_;
  int var_;
  TPatPtr left_, right_;
};

std::string show(const TPatPtr& p);

/// Schematic type role of a metavariable, per the law's "Let ci : t1 <-> t2"
/// preamble. Enforced at instantiation when enough type information is known.
struct MetaRole {
  int var;
  TPatPtr dom, cod;
};

/// One directed rewrite rule. Laws are registered in both directions; name
/// carries the _l/_r suffix and partner points to the opposite direction.
struct Rule {
  std::string name;
  std::string group;  // law family, e.g. "associativity"
  int index;          // 1-based position within the group
  Direction dir;
  PatPtr lhs, rhs;
  TPatPtr dom, cod;
  std::vector<MetaRole> metas;
  const Rule* partner = nullptr;

  std::string figure() const { return group + "/" + std::to_string(index); }
};

/// The full catalog, both directions of every law, in stable order.
const std::vector<const Rule*>& rule_registry();
/// Lookup by name ("assoc_seq_l"); null when absent.
const Rule* rule_by_name(const std::string& name);
/// Machine-readable registry dump (JSON array of
/// {name, figure, direction, lhs, rhs, dom, cod}).
std::string registry_dump_json();

/// Metavariable bindings: index -> combinator.
using Bindings = std::map<int, CombPtr>;

/// Instantiate a pattern: metavariables are replaced by their bound
/// combinators, AdjVar by the binding's adjoint. Throws
/// UnboundMetavariableError when a variable has no binding.
CombPtr instantiate(const PatPtr& p, const Bindings& b);

// ---------------------------------------------------------------------------
// Level-2 terms. Prim may carry explicit metavariable bindings for rules
// whose right-hand side introduces metavariables that the left-hand side
// does not mention; without them, eval1 raises UnboundMetavariable and the
// proof checker resolves the bindings from the step's expected combinator
// instead.
// ---------------------------------------------------------------------------

enum class RwKind { Prim, Id2, Trans2, RespSeq, RespPlus, RespTimes };

class Rw;
using RwPtr = std::shared_ptr<const Rw>;

class Rw {
 public:
  RwKind kind() const { return kind_; }
  const Rule* rule() const { return rule_; }        // Prim
  const Bindings& bindings() const { return bindings_; }  // Prim
  const RwPtr& left() const { return left_; }
  const RwPtr& right() const { return right_; }

  static RwPtr prim(const Rule* rule, Bindings bindings = {});
  static RwPtr id2();
  static RwPtr trans2(RwPtr a, RwPtr b);
  static RwPtr resp_seq(RwPtr a, RwPtr b);
  static RwPtr resp_plus(RwPtr a, RwPtr b);
  static RwPtr resp_times(RwPtr a, RwPtr b);

 private:
  Rw(RwKind k, const Rule* rule, Bindings b, RwPtr l, RwPtr r)
      : kind_(k), rule_(rule), bindings_(std::move(b)), left_(std::move(l)),
        right_(std::move(r)) {}

  RwKind kind_;
  const Rule* rule_;
  Bindings bindings_;
  RwPtr left_, right_;
};

/// Surface syntax: id2 | RULENAME | r . r (Trans2) | r ; r (RespSeq) |
/// r (+) r (RespPlus) | r (*) r (RespTimes).
std::string show(const RwPtr& r);
RwPtr parse_rw(const std::string& text);

/// Apply r to c at the root. When dom is given the application is
/// type-directed: the rule's endpoint schemas and every metavariable's role
/// are checked, and the result is verified to preserve c's typing. Errors:
/// RewriteMismatch, NonLinearMismatch, UnboundMetavariable, TypeError.
CombPtr eval1(const RwPtr& r, const CombPtr& c, const TyPtr& dom = nullptr);

/// Direction reversal: Prim maps to the partner rule (keeping explicit
/// bindings), Trans2 reverses its children, Resp* flips childwise.
RwPtr rw_flip(const RwPtr& r);

/// True iff applying r to c yields exactly `expected`. Unlike eval1 this can
/// resolve metavariables that occur only in a rule's right-hand side by
/// matching against `expected`.
bool exact(const RwPtr& r, const CombPtr& c, const CombPtr& expected,
           const TyPtr& dom = nullptr);

// ---------------------------------------------------------------------------
// Proof scripts
// ---------------------------------------------------------------------------

struct ProofStep {
  CombPtr expected;
  RwPtr just;
};

struct ProofScript {
  CombPtr start;
  CombPtr goal;
  TyPtr dom;
  std::vector<ProofStep> steps;
};

/// Parse a .piproof file:
///   claim: <comb> <=> <comb> at <type>
///   step: <comb>  by <rw-expr>
/// '#' starts a line comment.
ProofScript parse_proof(const std::string& text);

struct ProofReport {
  bool accepted = false;
  std::size_t steps = 0;
  std::size_t failing_step = 0;  // 1-based; 0 means the claim itself failed
  std::string message;
};

/// Replay a proof: each step's justification must rewrite the previous
/// combinator exactly to the step's expected combinator, and the last step
/// must reach the claim's right-hand side.
ProofReport check_proof(const ProofScript& script);

/// The Trans2 fold of the script's justifications.
RwPtr proof_to_rw(const ProofScript& script);

}  // namespace pi::rw

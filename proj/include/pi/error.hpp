#pragma once

#include <stdexcept>
#include <string>

namespace pi {

/// Kinds of domain errors surfaced by the toolkit. Every error carries a kind
/// so front ends can render a stable "ERROR <Kind>: <message>" line.
enum class ErrorKind {
  Parse,
  Type,
  Value,
  ImpossibleValue,
  RefusedTooLarge,
  Arity,
  RewriteMismatch,
  NonLinearMismatch,
  UnboundMetavariable,
  Proof,
  Io,
};

const char* error_kind_name(ErrorKind k);

/// Base class for all toolkit errors. what() is the bare message; use
/// display() for the "ERROR <Kind>: <message>" form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string display() const {
    return std::string("ERROR ") + error_kind_name(kind_) + ": " + what();
  }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorKind::Parse, m) {}
};
struct TypeError : Error {
  explicit TypeError(const std::string& m) : Error(ErrorKind::Type, m) {}
};
struct ValueError : Error {
  explicit ValueError(const std::string& m) : Error(ErrorKind::Value, m) {}
};
/// Raised when evaluating a combinator whose domain has no inhabitants
/// (factorzl / factorzr have no evaluation clauses).
struct ImpossibleValueError : Error {
  explicit ImpossibleValueError(const std::string& m)
      : Error(ErrorKind::ImpossibleValue, m) {}
};
/// Raised when a brute-force operation would exceed its configured cap.
struct RefusedTooLargeError : Error {
  explicit RefusedTooLargeError(const std::string& m)
      : Error(ErrorKind::RefusedTooLarge, m) {}
};
struct ArityError : Error {
  explicit ArityError(const std::string& m) : Error(ErrorKind::Arity, m) {}
};
/// A rewrite rule's left-hand side does not match the target combinator.
struct RewriteMismatchError : Error {
  explicit RewriteMismatchError(const std::string& m)
      : Error(ErrorKind::RewriteMismatch, m) {}
};
/// A repeated metavariable matched two structurally different combinators.
struct NonLinearMismatchError : Error {
  explicit NonLinearMismatchError(const std::string& m)
      : Error(ErrorKind::NonLinearMismatch, m) {}
};
/// A rule's right-hand side mentions a metavariable with no binding.
struct UnboundMetavariableError : Error {
  explicit UnboundMetavariableError(const std::string& m)
      : Error(ErrorKind::UnboundMetavariable, m) {}
};
struct ProofError : Error {
  explicit ProofError(const std::string& m) : Error(ErrorKind::Proof, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorKind::Io, m) {}
};

}  // namespace pi

#pragma once

#include <optional>
#include <string>

#include "pi/syntax.hpp"

namespace pi {

/// Parse a type expression: 0 | 1 | t + t | t * t, with * binding tighter
/// than + and both right-associative. Throws ParseError.
TyPtr parse_ty(const std::string& text);

/// Parse a value: () | inl v | inr v | (v, v). Parentheses may also group.
ValPtr parse_val(const std::string& text);

/// Parse a combinator expression. Precedence: ! > * > + > ; with the binary
/// operators right-associative. ! is expanded via adjoint() during parsing
/// and never appears in the AST.
CombPtr parse_comb(const std::string& text);

/// A program file: optional type ascription plus a combinator.
struct Program {
  CombPtr comb;
  TyPtr dom;  // null when the file has no type header
  TyPtr cod;  // null when the file has no type header
};

/// Parse .pi file contents: '#' starts a line comment; an optional header
/// line "type: <ty> <-> <ty>" fixes the intended typing; the remaining text
/// (which may span lines) is the combinator.
Program parse_program(const std::string& text);

}  // namespace pi

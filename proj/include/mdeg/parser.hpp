#pragma once

// Text syntax for connected sums of prime pieces:
//
//   expr   := piece ("#" piece)*
//   piece  := "S2xS1" | sph ["*cyclic(" int ")"] | sfs | tb | tag "(" label ")"
//   sph    := "lens(" int "," int ")" | "prism(" int ")" | "tet" | "oct" | "ico"
//   sfs    := "sfs(" ("o"|"n") int ";" int (";" "(" int "," int ")")* [";"] ")"
//   tb     := "tb[[" int "," int "],[" int "," int "]]"
//   tag    := "tsb" | "hyp" | "psl" | "graph" | "mixed" | "nilother"
//
// Whitespace (including newlines) is ignored between tokens. Columns count bytes.

#include <string>
#include <string_view>
#include <variant>

#include "mdeg/manifold.hpp"

namespace mdeg {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::size_t length = 0;
  std::size_t offset = 0;  // byte offset of the first character

  bool operator==(const SourceSpan&) const = default;
};

enum class ParseErrorKind { UnexpectedToken, BadNumber, ConstraintViolation, UnknownPiece };

struct ParseError {
  SourceSpan span;
  ParseErrorKind kind = ParseErrorKind::UnexpectedToken;
  std::string message;
  std::string constraint;  // set for ConstraintViolation, e.g. "gcd(p,q)=1"
};

using ParseResult = std::variant<ManifoldExpression, ParseError>;

ParseResult parse(std::string_view text);

/// Canonical text for a piece or expression; parse(render(m)) == normalize(m).
std::string render(const PrimeDescriptor& piece);
std::string render(const ManifoldExpression& m);

std::string_view kind_name(ParseErrorKind kind);

/// "line:col: kind: message" followed by the offending line and a caret marker.
std::string format_error(std::string_view text, const ParseError& error);

}  // namespace mdeg

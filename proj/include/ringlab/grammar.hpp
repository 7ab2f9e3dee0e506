#pragma once

// Textual ring-spec grammar (whitespace-insensitive):
//
//   expr    := term { "x" term }
//   term    := atom { "[x]/(x^" int ")" }
//   atom    := "Z" int | "M" int "(" expr ")" | "T" int "(" expr ")"
//            | "Triv(" expr ")" | "Op(" expr ")" | "Corner(" expr "," int ")"
//            | "Ideal(" expr "," intlist ")" | "Quot(" expr "," intlist ")"
//            | "(" expr ")"
//   intlist := "{" [ int { "," int } ] "}" | int { "," int }

#include <string>
#include <string_view>

#include "ringlab/core.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

class ParseError : public RingError {
public:
    ParseError(std::size_t column, const std::string& message);
    /// 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

SpecPtr parse_spec(std::string_view text);

}  // namespace ringlab

#pragma once

// Line-oriented input files. '#' starts a comment; tokens are separated by
// whitespace. The first non-blank line is a header naming the kind:
//
//   tensor <d> <n>   one line per support tuple: d indices in 1..n
//   symm <d> <n>     one line per exponent vector: n entries summing to d
//   mideal <n>       one line per monomial generator: n exponents
//   pideal <n>       generators separated by "--" lines; one term per line,
//                    "<p>/<q> : e1 ... en"
//   matrix <n>       n rows of n rationals
//
// Rationals are "p/q" or bare integers; decimals are rejected.

#include "stablerank/ideal.hpp"
#include "stablerank/tensor.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace stablerank {

/// An InputError that knows which line of the file it came from.
class ParseError : public InputError {
public:
  ParseError(int line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

using InputDocument =
    std::variant<TensorSupport, SymmetricSupport, MonomialIdeal, PolyIdeal, LinearChange>;

/// "tensor", "symm", "mideal", "pideal" or "matrix".
std::string_view kind_name(const InputDocument& doc);

/// Throws ParseError.
InputDocument parse_input(std::string_view text);

/// Canonical text in the same grammar; parse_input(serialize(d)) == d.
std::string serialize(const InputDocument& doc);

/// Reads a file and parses it. Throws InputError if it cannot be read.
InputDocument load_input(const std::string& path);

} // namespace stablerank

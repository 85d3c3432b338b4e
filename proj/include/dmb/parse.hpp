#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmb/bound.hpp"
#include "dmb/poly.hpp"

namespace dmb {

/// Malformed input text; the message carries the character position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParsedPolynomial {
  ExactPoly exact;             // literal value, decimals read exactly
  bool has_decimal = false;    // a decimal literal forces numeric mode
};

/// Accepts expanded or factored expressions in x (implicit multiplication,
/// '^' with nonnegative integer exponents, 'i' as the imaginary unit,
/// division by constants) or {"coeffs": [[re_num, re_den, im_num, im_den], ...]}.
ParsedPolynomial parse_polynomial_text(const std::string& text);

/// Exact polynomial when every literal is rational, otherwise a numeric
/// polynomial rounded at prec. Throws ParseError, or std::invalid_argument
/// for the zero or a constant polynomial.
Polynomial parse_polynomial(const std::string& text, Precision prec = 128);

/// {"edges": [[i, j], ...]} or a preset name.
GraphInput parse_graph(const std::string& text);

/// [{"pair": [a, b], "delta": x}, ...] or [[a, b, x], ...].
std::vector<HintPair> parse_hints(const std::string& text);

/// [i, j, ...]
std::vector<std::size_t> parse_subset(const std::string& text);

}  // namespace dmb

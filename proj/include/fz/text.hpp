#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fz/poly.hpp"
#include "fz/rational.hpp"

namespace fz {

/// Malformed input text; the message carries the 0-based character position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t pos, const std::string& what);
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar: sums of products with implicit multiplication, integer literals
// reduced mod p, `^` with a nonnegative integer exponent, `/`, parentheses.
// Letters: `T` is theta, `t` the motivic variable, `z` the generator of F_q
// over F_p when m > 1.

RationalFunction parse_rational(std::string_view text, const FieldPtr& f);
/// Polynomial in theta; division only by nonzero constants.
UniPoly parse_theta_poly(std::string_view text, const FieldPtr& f);
/// Polynomial in t with F_q coefficients.
UniPoly parse_t_poly(std::string_view text, const FieldPtr& f);
/// Element of A[t].
BiPoly parse_bipoly(std::string_view text, const FieldPtr& f);
/// Monic-or-not polynomial over F_p in `z` (or `x`), coefficients low first.
std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p);

std::string to_string(const FieldPtr& f, Elem c);
std::string to_string(const UniPoly& f);
std::string to_string(const BiPoly& f);
std::string to_string(const RationalFunction& r);

}  // namespace fz

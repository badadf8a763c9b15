#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "betadix/poly.hpp"
#include "betadix/ring.hpp"

namespace betadix {

/// 50 significant decimal digits of working precision; renderings use 30.
using Decimal = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kDecimalDigits = 30;

/// Fixed 30-significant-digit scientific-free rendering ("0.630929753571457437099527114343").
std::string render_decimal(const Decimal& x, int digits = kDecimalDigits);

Decimal to_decimal(const Int& x);

/// Polynomial grammar: sums of terms `c`, `c*x`, `cx`, `x^k`, `c*x^k`, with
/// x, t or i accepted as the variable. Whitespace is ignored.
Poly parse_poly(std::string_view text);

/// Descending-degree rendering in x, e.g. "x^2-3*x+1"; zero renders as "0".
std::string render_poly(const Poly& p);

/// Parses an element of the ring and reduces it modulo f.
AlgebraicInt parse_element(const NumberRing& ring, std::string_view text);

std::string render_element(const AlgebraicInt& a);

/// Comma-separated list of elements, e.g. "0,3" or "0,1+x".
std::vector<AlgebraicInt> parse_element_list(const NumberRing& ring, std::string_view text);

}  // namespace betadix

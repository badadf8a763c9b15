#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betadix {

using Int = mpz_class;
using Rational = mpq_class;

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<Int, unsigned>>;

Int parse_int(std::string_view text);
std::string to_string(const Int& x);

inline Int abs(const Int& x) { return ::abs(x); }

/// Floor division and the matching non-negative remainder (for positive m).
Int floor_div(const Int& a, const Int& m);
Int mod(const Int& a, const Int& m);

Int ipow(const Int& base, unsigned long exponent);

/// q-adic valuation of a nonzero integer.
unsigned long valuation(const Int& x, const Int& q);

/// Largest t with base^t <= limit-ish chunking helpers live in counting; this
/// just reports whether x fits an unsigned 64-bit value.
bool fits_u64(const Int& x);
std::uint64_t to_u64(const Int& x);
Int from_u64(std::uint64_t x);

bool is_probable_prime(const Int& n);

/// Factors |n| >= 1 by trial division followed by Pollard rho on what remains.
Factorization factorize(const Int& n);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Int xgcd(const Int& a, const Int& b, Int& s, Int& t);

Int lcm(const Int& a, const Int& b);

std::size_t hash_value(const Int& x) noexcept;

}  // namespace betadix

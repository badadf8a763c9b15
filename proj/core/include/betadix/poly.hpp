#pragma once

#include <cstdint>
#include <vector>

#include "betadix/integer.hpp"

namespace betadix {

/// Dense univariate polynomial, coefficient of x^i at index i. The zero
/// polynomial is the empty vector once trimmed.
using Poly = std::vector<Int>;

namespace poly {

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
Int eval(const Poly& p, const Int& x);
Int eval_mod(const Poly& p, const Int& x, const Int& m);
Poly derivative(const Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);

/// Division by a monic integer polynomial: a = q*m + r, deg r < deg m.
void divmod_monic(const Poly& a, const Poly& m, Poly& q, Poly& r);

/// Exact test of irreducibility over Q for a monic integer polynomial of
/// degree >= 1. Tries a mod-p irreducibility witness first, then falls back
/// to Kronecker's interpolation search for monic factors.
bool is_irreducible(const Poly& f);

}  // namespace poly

/// Polynomial arithmetic over F_p for a prime p (coefficients kept in [0, p)).
namespace modp {

Poly reduce(const Poly& a, const Int& p);
Poly add(const Poly& a, const Poly& b, const Int& p);
Poly sub(const Poly& a, const Poly& b, const Int& p);
Poly mul(const Poly& a, const Poly& b, const Int& p);
Poly make_monic(const Poly& a, const Int& p);
void divmod(const Poly& a, const Poly& m, const Int& p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& m, const Int& p);
Poly gcd(Poly a, Poly b, const Int& p);
/// base^e mod m.
Poly powmod(const Poly& base, const Int& e, const Poly& m, const Int& p);

/// Distinct roots of a in F_p, sorted ascending.
std::vector<Int> roots(const Poly& a, const Int& p, std::uint64_t seed = 1);

/// Rabin's test; a must be monic of degree >= 1 modulo p.
bool is_irreducible(const Poly& a, const Int& p);

}  // namespace modp

/// Lifts a simple root r of f modulo p to a root modulo p^precision.
Int hensel_lift(const Poly& f, const Int& root, const Int& p, unsigned precision);

}  // namespace betadix

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betadix/integer.hpp"
#include "betadix/ring.hpp"

namespace betadix {

inline constexpr unsigned kDefaultPadicPrecision = 64;

/// A prime ideal P above the rational prime q. For degree-one unramified
/// primes P = (q, theta - r) and `root` is a lift of r with f(root) = 0 mod q^K.
struct PrimeIdealModel {
  Int q;
  Int root;
  unsigned K = 0;
  unsigned e = 0;  // exponent of P in (beta)
  bool unramified = true;
  bool degree_one = true;
  /// For a placeholder describing the part of N(beta) not covered by
  /// degree-one primes: the leftover exponent of q.
  unsigned residual_exponent = 0;

  bool admissible() const noexcept { return unramified && degree_one; }
  friend bool operator==(const PrimeIdealModel&, const PrimeIdealModel&) = default;
};

/// Hard errors (theorem) or flagged models (exploration) for ramified and
/// inertia-degree > 1 primes dividing beta.
enum class HypothesisMode { theorem, exploration };

/// Degree-one primes dividing beta, sorted by (q, root). In theorem mode
/// throws RamifiedPrime / NotDegreeOne; in exploration mode appends flagged
/// models instead.
std::vector<PrimeIdealModel> primes_above(const NumberRing& ring, const AlgebraicInt& beta,
                                          unsigned K = kDefaultPadicPrecision,
                                          HypothesisMode mode = HypothesisMode::theorem);

/// Same prime, root re-lifted to precision K.
PrimeIdealModel with_precision(const PrimeIdealModel& P, const Poly& f, unsigned K);

struct Valuation {
  unsigned long value = 0;
  bool infinite = false;

  static Valuation infinity() { return {0, true}; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return infinity();
    return {a.value + b.value, false};
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    return b.infinite || a.value < b.value;
  }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

/// Residue modulo q^K. Values of different (q, K) do not mix.
class PadicInt {
 public:
  PadicInt(Int value, Int q, unsigned K);

  const Int& value() const noexcept { return value_; }
  const Int& q() const noexcept { return q_; }
  unsigned precision() const noexcept { return K_; }
  const Int& modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == 0; }
  /// q-adic valuation, capped at K for the zero residue.
  unsigned long valuation() const;
  PadicInt with_precision(unsigned K) const;  // K <= precision()

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
  friend bool operator==(const PadicInt& a, const PadicInt& b) = default;

 private:
  Int value_;
  Int q_;
  unsigned K_;
  Int modulus_;
};

/// alpha evaluated at P.root modulo q^K.
PadicInt evaluate_at(const AlgebraicInt& alpha, const PrimeIdealModel& P);

/// v_P(alpha), doubling the precision while the residue is 0 mod q^K; throws
/// PrecisionExhausted after `max_doublings`.
Valuation vp(const AlgebraicInt& alpha, const PrimeIdealModel& P, unsigned max_doublings = 6);

/// Series log on v(x - 1) >= 2; throws OutOfDomain.
PadicInt padic_log(const PadicInt& x);

/// Series exp on v(x) >= 1 (q odd) or v(x) >= 2 (q = 2); throws OutOfDomain.
PadicInt padic_exp(const PadicInt& x);

/// Least u >= 1 with alpha^u = 1 mod P^2; throws NotCoprime when P | alpha.
Int unit_order_u(const AlgebraicInt& alpha, const PrimeIdealModel& P);

struct UnitOrders {
  Int product;
  Int lcm;
  std::vector<Int> per_prime;
};

/// Per-prime orders with their product (the u used downstream) and lcm.
/// Requires admissible models.
UnitOrders combined_u(const AlgebraicInt& alpha, const std::vector<PrimeIdealModel>& models);

/// G_l(x) = alpha^l * exp(x * log(alpha^u)) at P, precision min(K, x's K).
PadicInt interpolate_G(const AlgebraicInt& alpha, const Int& l, const Int& u, const PadicInt& x,
                       const PrimeIdealModel& P);

struct LipschitzConstants {
  unsigned long m0 = 0;
  unsigned long n0 = 0;
  std::vector<unsigned long> per_prime;  // v_P(log alpha^u) for each model
};

/// m0 = 0 and n0 = max_P v_P(log(alpha^u)); exp is an isometry on its domain so
/// v_P(G_l(x) - G_l(y)) = v_P(x - y) + v_P(log(alpha^u)).
LipschitzConstants lipschitz_constants(const AlgebraicInt& alpha, const Int& u,
                                       const std::vector<PrimeIdealModel>& models);

}  // namespace betadix

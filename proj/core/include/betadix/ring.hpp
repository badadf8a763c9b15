#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "betadix/integer.hpp"
#include "betadix/linalg.hpp"
#include "betadix/poly.hpp"

namespace betadix {

class AlgebraicInt;

/// The order Z[theta] = Z[x]/(f) for a monic integer polynomial f.
///
/// Rings are cheap handles onto shared immutable data; copies compare equal.
/// With `check_irreducible` off the quotient is taken as given and any
/// downstream statement that needs a domain is only conditionally valid;
/// `irreducibility_checked()` records which case applies.
class NumberRing {
 public:
  struct Options {
    bool check_irreducible = true;
  };

  /// Throws NotMonic for a non-monic or constant f, Reducible when the check
  /// is enabled and fails.
  static NumberRing create(Poly f, Options options);
  static NumberRing create(Poly f) { return create(std::move(f), Options{}); }

  int degree() const noexcept;
  const Poly& modulus() const noexcept;
  bool irreducibility_checked() const noexcept;

  AlgebraicInt zero() const;
  AlgebraicInt one() const;
  AlgebraicInt theta() const;
  AlgebraicInt from_int(const Int& n) const;
  /// Coefficients in the power basis; shorter vectors are zero-padded,
  /// longer ones are reduced modulo f.
  AlgebraicInt element(std::vector<Int> coeffs) const;

  friend bool operator==(const NumberRing& a, const NumberRing& b) noexcept;

  struct Data;
  const std::shared_ptr<const Data>& data() const noexcept { return data_; }

 private:
  explicit NumberRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend class AlgebraicInt;
};

struct NumberRing::Data {
  Poly f;
  int d = 0;
  bool irreducibility_checked = false;
  // reductions[k] holds theta^(d + k) in the power basis, k = 0..d-2.
  std::vector<std::vector<Int>> reductions;
};

class AlgebraicInt {
 public:
  AlgebraicInt(NumberRing ring, std::vector<Int> coeffs);

  const NumberRing& ring() const noexcept { return ring_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t degree() const noexcept { return coeffs_.size(); }

  bool is_zero() const noexcept;
  /// True when the element lies in Z (all non-constant coefficients vanish).
  bool is_rational() const noexcept;

  AlgebraicInt& operator+=(const AlgebraicInt& o);
  AlgebraicInt& operator-=(const AlgebraicInt& o);
  AlgebraicInt& operator*=(const AlgebraicInt& o);
  AlgebraicInt operator-() const;

  friend AlgebraicInt operator+(AlgebraicInt a, const AlgebraicInt& b) { return a += b; }
  friend AlgebraicInt operator-(AlgebraicInt a, const AlgebraicInt& b) { return a -= b; }
  friend AlgebraicInt operator*(const AlgebraicInt& a, const AlgebraicInt& b);
  friend bool operator==(const AlgebraicInt& a, const AlgebraicInt& b);

  /// Multiplies in place by a rational integer.
  AlgebraicInt& scale(const Int& k);

 private:
  NumberRing ring_;
  std::vector<Int> coeffs_;
};

/// Throws RingMismatch unless both elements live in the same ring.
void require_same_ring(const AlgebraicInt& a, const AlgebraicInt& b);

/// Matrix of x -> a*x in the power basis; column j is a*theta^j.
IntMatrix multiplication_matrix(const AlgebraicInt& a);

/// N(a) = Res(f, a(x)) = det of the multiplication matrix (f monic).
Int norm(const AlgebraicInt& a);

AlgebraicInt pow(const AlgebraicInt& a, std::uint64_t n);
AlgebraicInt pow(const AlgebraicInt& a, const Int& n);

/// Exact division by a fixed nonzero b, with the adjugate of its
/// multiplication matrix precomputed so each division costs O(d^2).
class ExactDivider {
 public:
  explicit ExactDivider(const AlgebraicInt& divisor);

  const AlgebraicInt& divisor() const noexcept { return divisor_; }
  const Int& norm() const noexcept { return norm_; }

  /// q with divisor*q = a, or nullopt when a is not in divisor*Z[theta].
  std::optional<AlgebraicInt> divide(const AlgebraicInt& a) const;

  /// Same as `divide` but the caller guarantees exactness; throws Internal otherwise.
  AlgebraicInt divide_known_exact(const AlgebraicInt& a) const;

 private:
  AlgebraicInt divisor_;
  Int norm_;
  IntMatrix adjugate_;
};

/// Throws DivisionByZero when b == 0.
std::optional<AlgebraicInt> divide_exact(const AlgebraicInt& a, const AlgebraicInt& b);

/// True iff the ideal (a, b) is the whole ring, decided by the index of the
/// lattice a*Z[theta] + b*Z[theta].
bool ideals_coprime(const AlgebraicInt& a, const AlgebraicInt& b);

struct AlgebraicIntHash {
  std::size_t operator()(const AlgebraicInt& a) const noexcept;
};

}  // namespace betadix

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "betadix/linalg.hpp"
#include "betadix/ring.hpp"

namespace betadix {

/// An ordered set of representatives of Z[theta]/beta*Z[theta].
///
/// Digits are addressed by index; expansions carry indices rather than
/// element values. The canonical set {0, 1, ..., |N(beta)|-1} is stored
/// compactly and materializes its elements on demand.
class DigitSet {
 public:
  /// Validates with `is_representative_system`; throws NotRepresentative.
  static DigitSet from_elements(const AlgebraicInt& beta, std::vector<AlgebraicInt> digits);

  const AlgebraicInt& beta() const noexcept { return beta_; }
  const NumberRing& ring() const noexcept { return beta_.ring(); }
  bool canonical() const noexcept { return canonical_; }
  std::size_t size() const noexcept { return size_; }

  AlgebraicInt digit(std::size_t index) const;
  std::vector<AlgebraicInt> elements() const;

  /// Index of the digit equal to x, if any.
  std::optional<std::size_t> find(const AlgebraicInt& x) const;
  std::optional<std::size_t> zero_index() const { return zero_index_; }

 private:
  DigitSet(AlgebraicInt beta, std::vector<AlgebraicInt> digits, bool canonical, std::size_t size);

  AlgebraicInt beta_;
  std::vector<AlgebraicInt> digits_;  // empty for the canonical set
  bool canonical_ = false;
  std::size_t size_ = 0;
  std::optional<std::size_t> zero_index_;

  friend DigitSet digit_set_canonical(const NumberRing& ring, const AlgebraicInt& beta);
};

/// {0, ..., |N(beta)|-1}; throws NormTooSmall when |N(beta)| <= 1 and
/// NotRepresentative when two of those integers are congruent mod beta.
DigitSet digit_set_canonical(const NumberRing& ring, const AlgebraicInt& beta);

/// True iff there are exactly |N(beta)| digits, pairwise incongruent mod beta.
bool is_representative_system(const NumberRing& ring, const AlgebraicInt& beta,
                              std::span<const AlgebraicInt> digits);

/// Canonical residues modulo the lattice beta*Z[theta] and the digit lookup.
class ResidueTable {
 public:
  explicit ResidueTable(const DigitSet& dset);

  const AlgebraicInt& beta() const noexcept { return divider_.divisor(); }
  const IntMatrix& hnf() const noexcept { return hnf_; }
  const Int& abs_norm() const noexcept { return abs_norm_; }

  /// Reduced coefficient vector: 0 <= r[i] < hnf(i,i).
  std::vector<Int> canonical_residue(const AlgebraicInt& x) const;

  /// Mixed-radix index of the canonical residue, in [0, |N(beta)|).
  std::uint64_t residue_index(const AlgebraicInt& x) const;

  /// Index of the digit congruent to x modulo beta.
  std::size_t digit_index(const AlgebraicInt& x) const;

  /// One digit-strip step: returns (x - digit)/beta and stores the digit index.
  AlgebraicInt strip(const AlgebraicInt& x, std::size_t& digit) const;

  const ExactDivider& divider() const noexcept { return divider_; }

 private:
  ExactDivider divider_;
  IntMatrix hnf_;
  Int abs_norm_;
  std::vector<AlgebraicInt> digits_;
  std::vector<std::uint32_t> lookup_;  // residue index -> digit index
  bool rational_ = false;
};

/// The index j with beta | alpha - digits[j].
std::size_t residue_digit(const AlgebraicInt& alpha, const ResidueTable& table,
                          const DigitSet& dset);

/// sum_j digits[prefix[j]] * beta^j.
AlgebraicInt truncation_map(std::span<const std::size_t> prefix, const DigitSet& dset);

}  // namespace betadix

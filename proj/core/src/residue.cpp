#include "betadix/residue.hpp"

#include <limits>
#include <unordered_set>

#include "betadix/error.hpp"

namespace betadix {

namespace {

constexpr std::size_t kPairwiseLimit = 256;
constexpr std::uint64_t kLookupLimit = std::uint64_t{1} << 24;

Int abs_norm_or_throw(const AlgebraicInt& beta) {
  Int n = abs(norm(beta));
  if (n <= 1) throw Error(ErrorCode::norm_too_small, "|N(beta)| must exceed 1");
  return n;
}

}  // namespace

DigitSet::DigitSet(AlgebraicInt beta, std::vector<AlgebraicInt> digits, bool canonical,
                   std::size_t size)
    : beta_(std::move(beta)), digits_(std::move(digits)), canonical_(canonical), size_(size) {
  if (canonical_) {
    zero_index_ = 0;
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i].is_zero()) zero_index_ = i;
    }
  }
}

DigitSet DigitSet::from_elements(const AlgebraicInt& beta, std::vector<AlgebraicInt> digits) {
  for (const auto& x : digits) require_same_ring(x, beta);
  if (!is_representative_system(beta.ring(), beta, digits)) {
    throw Error(ErrorCode::not_representative,
                "digits are not a set of representatives modulo beta");
  }
  const std::size_t n = digits.size();
  return DigitSet(beta, std::move(digits), false, n);
}

AlgebraicInt DigitSet::digit(std::size_t index) const {
  if (index >= size_) throw Error(ErrorCode::invalid_argument, "digit index out of range");
  if (canonical_) return ring().from_int(from_u64(index));
  return digits_[index];
}

std::vector<AlgebraicInt> DigitSet::elements() const {
  std::vector<AlgebraicInt> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(digit(i));
  return out;
}

std::optional<std::size_t> DigitSet::find(const AlgebraicInt& x) const {
  if (canonical_) {
    if (!x.is_rational() || x[0] < 0 || x[0] >= from_u64(size_)) return std::nullopt;
    return static_cast<std::size_t>(to_u64(x[0]));
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == x) return i;
  }
  return std::nullopt;
}

DigitSet digit_set_canonical(const NumberRing& ring, const AlgebraicInt& beta) {
  if (!(beta.ring() == ring)) throw Error(ErrorCode::ring_mismatch, "beta is not in this ring");
  const Int n = abs_norm_or_throw(beta);
  // Integers in beta*Z[theta] form g*Z with g | n; 0..n-1 are pairwise
  // incongruent exactly when g = n, i.e. no n/p is a multiple of beta.
  const ExactDivider div(beta);
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    if (div.divide(ring.from_int(n / p))) {
      throw Error(ErrorCode::not_representative,
                  "canonical digits are not representatives: " + to_string(n / p) +
                      " is divisible by beta");
    }
  }
  if (!fits_u64(n) || n > Int(std::numeric_limits<std::uint32_t>::max())) {
    throw Error(ErrorCode::unsupported, "digit set too large");
  }
  return DigitSet(beta, {}, true, static_cast<std::size_t>(to_u64(n)));
}

bool is_representative_system(const NumberRing& ring, const AlgebraicInt& beta,
                              std::span<const AlgebraicInt> digits) {
  if (!(beta.ring() == ring)) throw Error(ErrorCode::ring_mismatch, "beta is not in this ring");
  const Int n = abs(norm(beta));
  if (n == 0 || Int(static_cast<unsigned long>(digits.size())) != n) return false;
  if (digits.size() <= kPairwiseLimit) {
    const ExactDivider div(beta);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      for (std::size_t j = i + 1; j < digits.size(); ++j) {
        if (div.divide(digits[i] - digits[j])) return false;
      }
    }
    return true;
  }
  // Same test through canonical residues: distinct residues <=> incongruent.
  const IntMatrix h = column_hnf(multiplication_matrix(beta));
  std::unordered_set<AlgebraicInt, AlgebraicIntHash> seen;
  for (const auto& x : digits) {
    std::vector<Int> v = x.coeffs();
    reduce_mod_hnf(h, v);
    if (!seen.insert(ring.element(std::move(v))).second) return false;
  }
  return true;
}

ResidueTable::ResidueTable(const DigitSet& dset)
    : divider_(dset.beta()),
      hnf_(column_hnf(multiplication_matrix(dset.beta()))),
      abs_norm_(abs(divider_.norm())),
      rational_(dset.ring().degree() == 1) {
  if (!fits_u64(abs_norm_) || abs_norm_ != Int(static_cast<unsigned long>(dset.size()))) {
    throw Error(ErrorCode::not_representative, "digit count does not match |N(beta)|");
  }
  if (dset.canonical() && rational_) return;  // residue index is the digit itself
  const std::uint64_t n = to_u64(abs_norm_);
  if (n > kLookupLimit) throw Error(ErrorCode::unsupported, "|N(beta)| too large for a lookup table");
  lookup_.assign(n, std::numeric_limits<std::uint32_t>::max());
  digits_ = dset.elements();
  for (std::size_t i = 0; i < dset.size(); ++i) {
    const std::uint64_t r = residue_index(digits_[i]);
    if (lookup_[r] != std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::not_representative, "two digits share a residue class");
    }
    lookup_[r] = static_cast<std::uint32_t>(i);
  }
}

std::vector<Int> ResidueTable::canonical_residue(const AlgebraicInt& x) const {
  std::vector<Int> v = x.coeffs();
  reduce_mod_hnf(hnf_, v);
  return v;
}

std::uint64_t ResidueTable::residue_index(const AlgebraicInt& x) const {
  if (rational_) return mpz_fdiv_ui(x[0].get_mpz_t(), to_u64(abs_norm_));
  const std::vector<Int> v = canonical_residue(x);
  std::uint64_t idx = 0;
  std::uint64_t radix = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    idx += v[i].get_ui() * radix;
    radix *= hnf_(i, i).get_ui();
  }
  return idx;
}

std::size_t ResidueTable::digit_index(const AlgebraicInt& x) const {
  const std::uint64_t r = residue_index(x);
  if (lookup_.empty()) return static_cast<std::size_t>(r);
  return lookup_[r];
}

AlgebraicInt ResidueTable::strip(const AlgebraicInt& x, std::size_t& digit) const {
  digit = digit_index(x);
  if (lookup_.empty()) {
    Int c = x[0] - static_cast<unsigned long>(digit);
    return divider_.divide_known_exact(AlgebraicInt(x.ring(), {std::move(c)}));
  }
  return divider_.divide_known_exact(x - digits_[digit]);
}

std::size_t residue_digit(const AlgebraicInt& alpha, const ResidueTable& table,
                          const DigitSet& dset) {
  require_same_ring(alpha, dset.beta());
  if (!(table.beta() == dset.beta())) {
    throw Error(ErrorCode::invalid_argument, "residue table and digit set use different beta");
  }
  return table.digit_index(alpha);
}

AlgebraicInt truncation_map(std::span<const std::size_t> prefix, const DigitSet& dset) {
  AlgebraicInt acc = dset.ring().zero();
  for (std::size_t i = prefix.size(); i-- > 0;) {
    acc = acc * dset.beta() + dset.digit(prefix[i]);
  }
  return acc;
}

}  // namespace betadix

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betadix/error.hpp"
#include "betadix/residue.hpp"
#include "betadix/ring.hpp"

namespace betadix {

/// Eventually periodic digit stream a_0 a_1 ... (least significant first),
/// as digit indices. An empty period means the tail is the zero digit
/// repeated forever.
struct BetaExpansion {
  std::vector<std::size_t> preperiod;
  std::vector<std::size_t> period;
  std::size_t alphabet_size = 0;
  std::optional<std::size_t> zero_index;

  bool zero_tail() const noexcept { return period.empty(); }
  bool is_zero_element() const noexcept { return preperiod.empty() && period.empty(); }

  friend bool operator==(const BetaExpansion&, const BetaExpansion&) = default;
};

struct ExpansionOptions {
  std::size_t state_budget = 1'000'000;
};

/// Thrown by `radix_expansion` when the orbit of the digit-strip map enters a
/// nonzero cycle; carries that cycle.
class NotTerminating : public Error {
 public:
  NotTerminating(std::vector<AlgebraicInt> cycle, const std::string& what)
      : Error(ErrorCode::not_terminating, what), cycle_(std::move(cycle)) {}
  const std::vector<AlgebraicInt>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<AlgebraicInt> cycle_;
};

/// First k digits of the beta-adic expansion of alpha.
std::vector<std::size_t> beta_digits(const AlgebraicInt& alpha, const ResidueTable& table,
                                     const DigitSet& dset, std::size_t k);

/// Full eventually periodic expansion; throws StateBudgetExceeded.
BetaExpansion beta_expansion(const AlgebraicInt& alpha, const ResidueTable& table,
                             const DigitSet& dset, const ExpansionOptions& options = {});

/// The finite radix word (least significant digit first, no trailing zeros);
/// throws NotTerminating when the expansion does not end in zeros.
std::vector<std::size_t> radix_expansion(const AlgebraicInt& alpha, const ResidueTable& table,
                                         const DigitSet& dset,
                                         const ExpansionOptions& options = {});

/// True iff digit index b occurs nowhere in the expansion. An empty period
/// counts as an infinite run of the zero digit, except for the zero element
/// itself.
bool omits_digit(const BetaExpansion& exp, std::size_t b);

/// Most-significant-first rendering; the periodic part is written "(...)*"
/// on the left, e.g. "(03)*3" for 1 in base 2 with digits {0,3}.
std::string render_expansion(const BetaExpansion& exp, const DigitSet& dset);

struct CnsVerdict {
  bool is_cns = false;
  std::optional<std::vector<AlgebraicInt>> witness_cycle;
  bool expansivity_ok = false;
  std::size_t closure_size = 0;
};

struct CnsOptions {
  std::size_t closure_budget = 1'000'000;
  /// States explored per generator orbit when beta is not expansive.
  std::size_t witness_budget = 10'000;
};

/// Decides whether (beta, {0, ..., |N(beta)|-1}) is a canonical number system.
/// A non-expansive beta is rejected without building the closure.
CnsVerdict cns_check(const NumberRing& ring, const AlgebraicInt& beta,
                     const CnsOptions& options = {});

/// Exact test that every root of the characteristic polynomial of beta has
/// absolute value > 1 (Schur-Cohn recursion on the reversed polynomial).
bool all_conjugates_outside_unit_circle(const AlgebraicInt& beta);

/// Exact test that every root of an integer polynomial lies strictly inside
/// the unit circle.
bool all_roots_inside_unit_circle(const Poly& p);

/// Where digit b first occurs in the digit stream of alpha.
enum class DigitStream { radix, beta_adic };

struct DigitScan {
  std::optional<std::size_t> first_position;  // nullopt: b never occurs
  std::size_t digits_emitted = 0;
};

/// Streams digits of alpha, stopping at the first occurrence of b. In radix
/// mode the stream ends when the state reaches zero (throws NotTerminating on
/// a nonzero cycle); in beta-adic mode it ends once a full cycle has been
/// traversed (Brent cycle detection, constant memory).
DigitScan scan_for_digit(const AlgebraicInt& alpha, const ResidueTable& table,
                         const DigitSet& dset, std::size_t b, DigitStream mode,
                         const ExpansionOptions& options = {});

}  // namespace betadix

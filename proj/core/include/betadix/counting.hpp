#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betadix/expansion.hpp"
#include "betadix/format.hpp"
#include "betadix/padic.hpp"
#include "betadix/residue.hpp"
#include "betadix/ring.hpp"

namespace betadix {

/// sigma = log(m - 1) / log(m) for m = |N(beta)|, kept as the pair (m - 1, m).
struct Sigma {
  Int numerator_arg;
  Int denominator_arg;
  Decimal value;
};

/// Throws NormTooSmall when |N(beta)| <= 1.
Sigma sigma(const AlgebraicInt& beta);
Sigma sigma_for_norm(const Int& abs_norm);

enum class CountMode { radix, beta_adic };

/// Resumable state of a count: every n < next_n has been processed.
struct CountState {
  std::uint64_t next_n = 1;
  std::vector<std::uint64_t> hits;
  std::vector<std::uint64_t> prefix_counts;  // one entry per power checkpoint
};

struct CountRequest {
  AlgebraicInt alpha;
  DigitSet dset;
  std::size_t b = 0;
  std::uint64_t N = 1;
  CountMode mode = CountMode::radix;
  HypothesisMode hypotheses = HypothesisMode::theorem;
  unsigned jobs = 1;
  ExpansionOptions expansion{};
  std::optional<CountState> resume{};
  /// Called after each power-of-|N(beta)| checkpoint has been passed.
  std::function<void(const CountState&)> progress{};
};

struct CountPoint {
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  Decimal ratio;            // M / N^sigma
  bool power_checkpoint = false;
  /// #{n <= N : digits 0..k-1 of alpha^n avoid b}, N = |N(beta)|^k; power checkpoints only.
  std::optional<std::uint64_t> prefix_count;
};

/// Constants of the counting argument evaluated constructively.
struct BoundConstants {
  Int u;
  Int u_lcm;
  unsigned long m0 = 0;
  unsigned long n0 = 0;
  Int c0_tilde;  // (prod q_j)^n0
  Int c0;        // u * |N|^m0 * c0_tilde
  Int c1;        // c0 * |N|^sigma = c0 * (|N| - 1)
};

struct BoundReport {
  Sigma sigma;
  CountMode mode = CountMode::radix;
  std::size_t b = 0;
  std::uint64_t N = 0;
  bool fast_path = false;
  std::vector<CountPoint> counts;
  std::vector<std::uint64_t> hits;
  Decimal max_ratio;
  std::uint64_t max_ratio_at = 0;
  std::optional<BoundConstants> constants;
  std::optional<bool> narkiewicz_ok;
  /// Set when b is the zero digit: the reading of "omits 0" depends on the mode.
  bool zero_digit_caveat = false;
};

/// Rejects alpha sharing a prime with beta (NotCoprime), roots of unity
/// (RootOfUnity) and, in theorem mode, ramified or inertia-degree > 1 primes.
void check_count_hypotheses(const AlgebraicInt& alpha, const AlgebraicInt& beta,
                            HypothesisMode mode);

/// True iff alpha^t = 1 for some t >= 1.
bool is_root_of_unity(const AlgebraicInt& alpha);

/// u, m0, n0, C~0, C0, C1 for (alpha, beta); requires theorem-mode hypotheses.
BoundConstants bound_constants(const AlgebraicInt& alpha, const AlgebraicInt& beta,
                               unsigned K = kDefaultPadicPrecision);

/// M_b(alpha, beta, N') at the checkpoints N' in {|N(beta)|^k} u {N} and all hits.
BoundReport count_omitting(const CountRequest& req);

/// Powers |N(beta)|^k <= N, then N itself if it is not such a power.
std::vector<std::uint64_t> count_checkpoints(const Int& abs_norm, std::uint64_t N);

struct NarkiewiczReport {
  bool ok = true;
  std::uint64_t N = 0;
  Decimal max_ratio;
  std::uint64_t max_ratio_at = 1;
  /// (N', M(N') / N'^sigma) at every N' where M jumps.
  std::vector<std::pair<std::uint64_t, Decimal>> table;
};

/// M(N') <= 1.62 N'^(log 2 / log 3) for every N' <= N, with alpha = 2, beta = 3, b = 2.
NarkiewiczReport narkiewicz_check(std::uint64_t N);

/// Exponent pair (n, m) for the sequence alpha^l (alpha^u)^n.
struct GapSample {
  std::uint64_t l = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  friend bool operator==(const GapSample&, const GapSample&) = default;
};

/// All pairs n < m <= max_n for every l in [0, u).
std::vector<GapSample> exhaustive_gap_samples(std::uint64_t u, std::uint64_t max_n);

struct GapReport {
  std::size_t k = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_sharing_prefix = 0;
  std::vector<GapSample> violations;
  /// prod over distinct q of q^max(0, max_{P | q} (k e_P - n0)); must divide n - m.
  Int required_modulus;
  /// prod over all P_j of q_j^(k e_j - n0), possibly fractional.
  Rational product_modulus;
  BoundConstants constants;
  /// Largest class #{0 <= n < |N|^k : first k digits of alpha^l (alpha^u)^n equal a word}.
  std::uint64_t max_class_size = 0;
};

struct GapOptions {
  bool strict = true;  // throw HypothesisViolated on the first violation
  unsigned K = kDefaultPadicPrecision;
};

GapReport verify_gap_lemma(const AlgebraicInt& alpha, const DigitSet& dset, std::size_t k,
                           const std::vector<GapSample>& sample, const GapOptions& options = {});

}  // namespace betadix

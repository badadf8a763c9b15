#include "betadix/digits_extra.hpp"

#include <boost/dynamic_bitset.hpp>

#include "betadix/error.hpp"

namespace betadix {

Int sloane_map(const Int& n, unsigned long base) {
  if (base < 2) throw Error(ErrorCode::invalid_argument, "base must be at least 2");
  if (n < 1) throw Error(ErrorCode::invalid_argument, "sloane_map needs n >= 1");
  Int rest = n;
  Int product = 1;
  while (rest > 0) {
    const unsigned long digit = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base);
    if (digit == 0) return 0;
    product *= digit;
  }
  return product;
}

PersistenceRecord persistence(const Int& n, unsigned long base) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "persistence needs n >= 1");
  PersistenceRecord rec{n, base, {n}, 0};
  // S(m) < m for m >= base, so the orbit reaches a single digit, which is fixed.
  while (true) {
    const Int& cur = rec.orbit.back();
    if (cur == 0) break;
    Int next = sloane_map(cur, base);
    if (next == cur) break;
    rec.orbit.push_back(std::move(next));
  }
  rec.l = rec.orbit.size() - 1;
  return rec;
}

bool practical_by_criterion(const Factorization& f) {
  if (f.empty()) return true;
  if (f.front().first != 2) return false;
  Int sigma_partial = 1;  // sigma of the product of the prime powers seen so far
  for (const auto& [p, a] : f) {
    if (p > sigma_partial + 1) return false;
    Int power_sum = 0;
    Int pk = 1;
    for (unsigned i = 0; i <= a; ++i) {
      power_sum += pk;
      pk *= p;
    }
    sigma_partial *= power_sum;
  }
  return true;
}

bool practical_by_criterion(const Int& n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "practicality needs n >= 1");
  return practical_by_criterion(factorize(n));
}

bool practical_by_subset_sum(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "practicality needs n >= 1");
  boost::dynamic_bitset<> reachable(n);
  reachable.set(0);
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) reachable |= (reachable << d);
  }
  // The largest divisor n itself only reaches sums >= n.
  return reachable.all();
}

bool is_practical(const Int& n, std::uint64_t crossover) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "practicality needs n >= 1");
  if (n <= crossover) return practical_by_subset_sum(to_u64(n));
  return practical_by_criterion(n);
}

Factorization central_binomial_factorization(std::uint64_t n) {
  Factorization out;
  const std::uint64_t top = 2 * n;
  std::vector<bool> composite(top + 1, false);
  for (std::uint64_t p = 2; p <= top; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= top; m += p) composite[m] = true;
    // v_p(C(2n, n)) = sum_k (floor(2n/p^k) - 2 floor(n/p^k)).
    unsigned e = 0;
    for (std::uint64_t pk = p; pk <= top; pk *= p) {
      e += static_cast<unsigned>(top / pk - 2 * (n / pk));
      if (pk > top / p) break;
    }
    if (e > 0) out.emplace_back(Int(from_u64(p)), e);
  }
  return out;
}

CentralBinomialRecord central_binomial_practical(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "central binomial needs n >= 1");
  CentralBinomialRecord rec;
  rec.n = n;
  mpz_bin_uiui(rec.value.get_mpz_t(), 2 * n, n);
  rec.practical = rec.value <= 10'000 ? practical_by_subset_sum(to_u64(rec.value))
                                      : practical_by_criterion(central_binomial_factorization(n));
  const bool power_of_two = n >= 2 && (n & (n - 1)) == 0;
  if (power_of_two) {
    bool omits = true;
    for (std::uint64_t m = n; m > 0; m /= 3) {
      if (m % 3 == 2) omits = false;
    }
    rec.implication_applies = omits;
    rec.implication_violated = omits && rec.practical;
  }
  return rec;
}

}  // namespace betadix

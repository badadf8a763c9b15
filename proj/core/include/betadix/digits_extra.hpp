#pragma once

#include <cstdint>
#include <vector>

#include "betadix/integer.hpp"

namespace betadix {

/// Product of the base-b digits of n.
Int sloane_map(const Int& n, unsigned long base);

struct PersistenceRecord {
  Int n;
  unsigned long base = 10;
  std::vector<Int> orbit;  // n, S(n), ..., first fixed point
  std::size_t l = 0;       // least index from which the orbit is constant
};

PersistenceRecord persistence(const Int& n, unsigned long base);

/// Every 1 <= m < n is a sum of distinct divisors of n. Uses the subset-sum
/// definition up to `crossover` and the divisor-sum criterion above it.
bool is_practical(const Int& n, std::uint64_t crossover = 10'000);

/// n = prod p_i^a_i (p_1 < p_2 < ...) is practical iff p_1 = 2 (or n = 1) and
/// p_{i+1} <= 1 + sigma(p_1^a_1 ... p_i^a_i) for every i.
bool practical_by_criterion(const Int& n);
bool practical_by_criterion(const Factorization& f);

/// Bitset subset sums over the divisors; n must be small.
bool practical_by_subset_sum(std::uint64_t n);

/// C(2n, n) with its factorization read off Legendre's formula.
Factorization central_binomial_factorization(std::uint64_t n);

struct CentralBinomialRecord {
  std::uint64_t n = 0;
  Int value;
  bool practical = false;
  /// n is a power of two >= 2 whose ternary digits avoid 2; then C(2n, n)
  /// must not be practical.
  bool implication_applies = false;
  bool implication_violated = false;
};

CentralBinomialRecord central_binomial_practical(std::uint64_t n);

}  // namespace betadix

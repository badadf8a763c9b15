#pragma once

#include <betadix/ring.hpp>

#include <random>
#include <vector>

namespace test {

using betadix::AlgebraicInt;
using betadix::Int;
using betadix::NumberRing;
using betadix::Poly;

inline NumberRing Z() { return NumberRing::create({0, 1}); }
inline NumberRing Zi() { return NumberRing::create({1, 0, 1}); }

/// Rings exercised by the randomized properties.
inline std::vector<NumberRing> sample_rings() {
  return {Z(), Zi(), NumberRing::create({2, -2, 1}), NumberRing::create({-1, -1, 0, 1}),
          NumberRing::create({-2, 0, 0, 1}), NumberRing::create({1, 0, 0, 0, 1})};
}

inline AlgebraicInt random_element(const NumberRing& ring, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Int> c;
  for (int i = 0; i < ring.degree(); ++i) c.emplace_back(dist(rng));
  return ring.element(std::move(c));
}

inline AlgebraicInt random_nonzero(const NumberRing& ring, std::mt19937_64& rng, long bound) {
  while (true) {
    AlgebraicInt x = random_element(ring, rng, bound);
    if (!x.is_zero()) return x;
  }
}

/// Every element with coefficients in [-bound, bound].
inline std::vector<AlgebraicInt> box(const NumberRing& ring, long bound) {
  std::vector<AlgebraicInt> out;
  const int d = ring.degree();
  std::vector<long> c(d, -bound);
  while (true) {
    std::vector<Int> coeffs(c.begin(), c.end());
    out.push_back(ring.element(coeffs));
    int i = 0;
    while (i < d && c[i] == bound) c[i++] = -bound;
    if (i == d) break;
    ++c[i];
  }
  return out;
}

inline std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace test

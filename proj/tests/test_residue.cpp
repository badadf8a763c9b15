#include <doctest.h>

#include <betadix/error.hpp>
#include <betadix/residue.hpp>

#include "support.hpp"

using namespace betadix;
using test::ints;

namespace {

struct Base {
  NumberRing ring;
  AlgebraicInt beta;
  DigitSet dset;
};

std::vector<Base> small_bases() {
  const NumberRing z = test::Z();
  const NumberRing zi = test::Zi();
  const NumberRing z1i = NumberRing::create({2, -2, 1});
  std::vector<Base> out;
  auto canonical = [&](const NumberRing& r, const AlgebraicInt& b) {
    out.push_back({r, b, digit_set_canonical(r, b)});
  };
  canonical(z, z.from_int(2));
  canonical(z, z.from_int(3));
  canonical(z, z.from_int(-2));
  canonical(z, z.from_int(5));
  canonical(z, z.from_int(-4));
  out.push_back({z, z.from_int(2), DigitSet::from_elements(z.from_int(2), {z.from_int(0), z.from_int(3)})});
  canonical(zi, zi.element(ints({-1, 1})));
  canonical(zi, zi.element(ints({1, 1})));
  canonical(zi, zi.element(ints({2, 1})));
  canonical(zi, zi.element(ints({-1, 2})));
  const AlgebraicInt two = zi.from_int(2);
  out.push_back({zi, two, DigitSet::from_elements(two, {zi.zero(), zi.one(), zi.theta(), zi.element(ints({1, 1}))})});
  canonical(z1i, z1i.element(ints({-2, 1})));  // theta - 2 = i - 1
  return out;
}

}  // namespace

TEST_CASE("canonical digit sets") {
  const NumberRing z = test::Z();
  const DigitSet d3 = digit_set_canonical(z, z.from_int(3));
  CHECK(d3.size() == 3);
  CHECK(d3.canonical());
  CHECK(d3.digit(2) == z.from_int(2));
  const NumberRing zi = test::Zi();
  const DigitSet dgi = digit_set_canonical(zi, zi.element(ints({-1, 1})));
  CHECK(dgi.size() == 2);
  CHECK(dgi.elements() == std::vector<AlgebraicInt>{zi.zero(), zi.one()});

  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code([&] { digit_set_canonical(zi, zi.from_int(2)); }) == ErrorCode::not_representative);
  CHECK(code([&] { digit_set_canonical(zi, zi.theta()); }) == ErrorCode::norm_too_small);
  CHECK(code([&] { digit_set_canonical(z, z.from_int(-1)); }) == ErrorCode::norm_too_small);
  CHECK(code([&] { DigitSet::from_elements(z.from_int(2), {z.from_int(0), z.from_int(2)}); }) ==
        ErrorCode::not_representative);
}

TEST_CASE("representative systems") {
  const NumberRing z = test::Z();
  const std::vector<AlgebraicInt> d03{z.from_int(0), z.from_int(3)};
  const std::vector<AlgebraicInt> d02{z.from_int(0), z.from_int(2)};
  CHECK(is_representative_system(z, z.from_int(2), d03));
  CHECK_FALSE(is_representative_system(z, z.from_int(2), d02));
  CHECK_FALSE(is_representative_system(z, z.from_int(3), d03));
  const NumberRing zi = test::Zi();
  const std::vector<AlgebraicInt> d01{zi.zero(), zi.one()};
  CHECK(is_representative_system(zi, zi.element(ints({-1, 1})), d01));
}

TEST_CASE("residue_digit and truncation_map examples") {
  const NumberRing z = test::Z();
  const DigitSet d3 = digit_set_canonical(z, z.from_int(3));
  const ResidueTable t3(d3);
  CHECK(residue_digit(z.from_int(256), t3, d3) == 1);
  CHECK(residue_digit(z.zero(), t3, d3) == 0);
  const DigitSet d03 = DigitSet::from_elements(z.from_int(2), {z.from_int(0), z.from_int(3)});
  const ResidueTable t03(d03);
  CHECK(d03.digit(residue_digit(z.one(), t03, d03)) == z.from_int(3));

  const std::vector<std::size_t> prefix{1, 1, 1, 0, 0, 1};
  CHECK(truncation_map(prefix, d3) == z.from_int(256));
  CHECK(truncation_map({}, d3).is_zero());
  const std::vector<std::size_t> threes{1, 1};
  CHECK(truncation_map(threes, d03) == z.from_int(9));
}

TEST_CASE("level-i truncations are pairwise incongruent modulo beta^i") {
  for (const Base& base : small_bases()) {
    const std::size_t m = base.dset.size();
    REQUIRE(m <= 5);
    AlgebraicInt beta_i = base.ring.one();
    for (std::size_t level = 1; level <= 3; ++level) {
      beta_i = beta_i * base.beta;
      std::vector<AlgebraicInt> values;
      std::vector<std::size_t> prefix(level, 0);
      while (true) {
        values.push_back(truncation_map(prefix, base.dset));
        std::size_t i = 0;
        while (i < level && prefix[i] == m - 1) prefix[i++] = 0;
        if (i == level) break;
        ++prefix[i];
      }
      CHECK(values.size() == static_cast<std::size_t>(std::pow(m, level)));
      for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
          // Dividing by beta one step at a time, as in the level-by-level construction.
          std::optional<AlgebraicInt> q = values[i] - values[j];
          for (std::size_t s = 0; s < level && q; ++s) q = divide_exact(*q, base.beta);
          CHECK_FALSE(q.has_value());
        }
      }
    }
  }
}

TEST_CASE("residue_digit picks the unique congruent digit") {
  std::mt19937_64 rng(21);
  for (const Base& base : small_bases()) {
    const ResidueTable table(base.dset);
    CHECK(abs(determinant(table.hnf())) == abs(norm(base.beta)));
    for (int trial = 0; trial < 500; ++trial) {
      const AlgebraicInt alpha = test::random_element(base.ring, rng, 1000);
      const std::size_t j = residue_digit(alpha, table, base.dset);
      for (std::size_t x = 0; x < base.dset.size(); ++x) {
        const bool divisible = divide_exact(alpha - base.dset.digit(x), base.beta).has_value();
        CHECK(divisible == (x == j));
      }
    }
  }
}

TEST_CASE("larger digit sets compare residues through the HNF") {
  const NumberRing zi = test::Zi();
  const AlgebraicInt beta = zi.element(ints({-20, 1}));  // N = 401, prime
  const DigitSet d = digit_set_canonical(zi, beta);
  CHECK(d.size() == 401);
  std::vector<AlgebraicInt> shifted = d.elements();
  shifted[5] = shifted[5] + beta * zi.element(ints({3, -7}));
  CHECK(is_representative_system(zi, beta, shifted));
  shifted[6] = shifted[7] + beta;
  CHECK_FALSE(is_representative_system(zi, beta, shifted));
}

#include <doctest.h>

#include <betadix/error.hpp>
#include <betadix/expansion.hpp>
#include <betadix/format.hpp>

#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace betadix;
using test::ints;

namespace {

std::vector<std::size_t> idx(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("beta_digits examples") {
  const NumberRing z = test::Z();
  const DigitSet d3 = digit_set_canonical(z, z.from_int(3));
  const ResidueTable t3(d3);
  CHECK(beta_digits(z.from_int(256), t3, d3, 6) == idx({1, 1, 1, 0, 0, 1}));
  const DigitSet d03 = DigitSet::from_elements(z.from_int(2), {z.from_int(0), z.from_int(3)});
  const ResidueTable t03(d03);
  CHECK(beta_digits(z.one(), t03, d03, 6) == idx({1, 1, 0, 1, 0, 1}));
  CHECK(beta_digits(z.zero(), t3, d3, 5) == idx({0, 0, 0, 0, 0}));
}

TEST_CASE("beta_expansion examples") {
  const NumberRing z = test::Z();
  const DigitSet d03 = DigitSet::from_elements(z.from_int(2), {z.from_int(0), z.from_int(3)});
  const ResidueTable t03(d03);
  const BetaExpansion one = beta_expansion(z.one(), t03, d03);
  CHECK(one.preperiod == idx({1}));
  CHECK(one.period == idx({1, 0}));
  CHECK(render_expansion(one, d03) == "(03)*3");

  const DigitSet d3 = digit_set_canonical(z, z.from_int(3));
  const ResidueTable t3(d3);
  const BetaExpansion e256 = beta_expansion(z.from_int(256), t3, d3);
  CHECK(e256.preperiod == idx({1, 1, 1, 0, 0, 1}));
  CHECK(e256.period.empty());
  CHECK(render_expansion(e256, d3) == "100111");

  const BetaExpansion minus_one = beta_expansion(z.from_int(-1), t3, d3);
  CHECK(minus_one.preperiod.empty());
  CHECK(minus_one.period == idx({2}));
  CHECK(beta_expansion(z.zero(), t3, d3).is_zero_element());
}

TEST_CASE("radix_expansion examples") {
  const NumberRing z = test::Z();
  const DigitSet d3 = digit_set_canonical(z, z.from_int(3));
  const ResidueTable t3(d3);
  CHECK(radix_expansion(z.from_int(4), t3, d3) == idx({1, 1}));
  CHECK(radix_expansion(z.one(), t3, d3) == idx({1}));
  try {
    radix_expansion(z.from_int(-1), t3, d3);
    FAIL("expected NotTerminating");
  } catch (const NotTerminating& e) {
    CHECK(e.code() == ErrorCode::not_terminating);
    REQUIRE(e.cycle().size() == 1);
    CHECK(e.cycle()[0] == z.from_int(-1));
  }
}

TEST_CASE("omits_digit examples") {
  const NumberRing z = test::Z();
  const DigitSet d3 = digit_set_canonical(z, z.from_int(3));
  const ResidueTable t3(d3);
  const BetaExpansion e256 = beta_expansion(z.from_int(256), t3, d3);
  CHECK(omits_digit(e256, 2));
  CHECK_FALSE(omits_digit(e256, 0));  // the zero tail contains 0
  CHECK_FALSE(omits_digit(beta_expansion(z.from_int(8), t3, d3), 2));
  CHECK(omits_digit(e256, 7));
  CHECK(omits_digit(beta_expansion(z.zero(), t3, d3), 0));
}

TEST_CASE("CNS verdicts") {
  const NumberRing z = test::Z();
  const NumberRing zi = test::Zi();
  const CnsVerdict negabinary = cns_check(z, z.from_int(-2));
  CHECK(negabinary.is_cns);
  CHECK(negabinary.expansivity_ok);
  CHECK(cns_check(zi, zi.element(ints({-1, 1}))).is_cns);
  const CnsVerdict v = cns_check(zi, zi.element(ints({1, 1})));
  CHECK_FALSE(v.is_cns);
  REQUIRE(v.witness_cycle);
  CHECK(*v.witness_cycle == std::vector<AlgebraicInt>{zi.theta()});
  CHECK_FALSE(cns_check(z, z.from_int(3)).is_cns);  // -1 never terminates
  CHECK(cns_check(zi, zi.element(ints({-2, 1}))).is_cns);
  CHECK(cns_check(zi, zi.element(ints({-3, 1}))).is_cns);
  CHECK_FALSE(cns_check(zi, zi.element(ints({2, 1}))).is_cns);
  CHECK(cns_check(z, z.from_int(-10)).is_cns);
}

TEST_CASE("witness cycles are genuine nonzero cycles") {
  const NumberRing zi = test::Zi();
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) {
      const AlgebraicInt beta = zi.element(ints({a, b}));
      if (abs(norm(beta)) <= 1) continue;
      std::optional<DigitSet> canonical;
      try {
        canonical = digit_set_canonical(zi, beta);
      } catch (const Error&) {
        continue;
      }
      const DigitSet& dset = *canonical;
      const CnsVerdict v = cns_check(zi, beta);
      if (!v.witness_cycle) continue;
      const ResidueTable table(dset);
      const auto& cycle = *v.witness_cycle;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        CHECK_FALSE(cycle[i].is_zero());
        std::size_t digit = 0;
        CHECK(table.strip(cycle[i], digit) == cycle[(i + 1) % cycle.size()]);
      }
    }
  }
}

TEST_CASE("Gaussian CNS bases match the known classification") {
  // (Z[i], -n + i) is a CNS exactly for n >= 1 among bases b + i with |N| > 1.
  const NumberRing zi = test::Zi();
  for (long n = -5; n <= 5; ++n) {
    const AlgebraicInt beta = zi.element(ints({n, 1}));
    if (abs(norm(beta)) <= 1) continue;
    CHECK_MESSAGE(cns_check(zi, beta).is_cns == (n <= -1), "beta = " << render_element(beta));
  }
}

TEST_CASE("prefix congruence") {
  std::mt19937_64 rng(31);
  const NumberRing zi = test::Zi();
  const NumberRing z = test::Z();
  const std::vector<std::pair<AlgebraicInt, DigitSet>> bases{
      {z.from_int(3), digit_set_canonical(z, z.from_int(3))},
      {z.from_int(-2), digit_set_canonical(z, z.from_int(-2))},
      {zi.element(ints({-1, 1})), digit_set_canonical(zi, zi.element(ints({-1, 1})))},
      {zi.element(ints({2, 1})), digit_set_canonical(zi, zi.element(ints({2, 1})))},
  };
  for (const auto& [beta, dset] : bases) {
    const ResidueTable table(dset);
    for (int trial = 0; trial < 50; ++trial) {
      const AlgebraicInt alpha = test::random_element(beta.ring(), rng, 500);
      for (std::size_t k = 1; k <= 12; ++k) {
        const auto digits = beta_digits(alpha, table, dset, k);
        const AlgebraicInt rest = alpha - truncation_map(digits, dset);
        CHECK(divide_exact(rest, pow(beta, std::uint64_t{k})).has_value());
      }
    }
  }
}

TEST_CASE("partial sums of 1 in base 2 with digits {0, 3} converge 2-adically") {
  const NumberRing z = test::Z();
  const DigitSet d03 = DigitSet::from_elements(z.from_int(2), {z.from_int(0), z.from_int(3)});
  const ResidueTable t03(d03);
  const auto digits = beta_digits(z.one(), t03, d03, 30);
  Int partial = 0;
  for (std::size_t i = 1; i <= 30; ++i) {
    partial += d03.digit(digits[i - 1])[0] * (Int(1) << static_cast<mp_bitcnt_t>(i - 1));
    const Int diff = 1 - partial;
    CHECK((diff == 0 || oracle::vq(diff, 2) >= i));
  }
}

TEST_CASE("radix and beta-adic expansions agree for CNS bases") {
  const NumberRing z = test::Z();
  const NumberRing zi = test::Zi();
  for (const auto& beta : {z.from_int(-2), z.from_int(-3), zi.element(ints({-1, 1})), zi.element(ints({-2, 1}))}) {
    REQUIRE(cns_check(beta.ring(), beta).is_cns);
    const DigitSet dset = digit_set_canonical(beta.ring(), beta);
    const ResidueTable table(dset);
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
    for (const auto& alpha : test::box(beta.ring(), 20)) {
      const auto word = radix_expansion(alpha, table, dset);
      const BetaExpansion exp = beta_expansion(alpha, table, dset);
      CHECK(exp.period.empty());
      CHECK(exp.preperiod == word);
      CHECK(seen.emplace(exp.preperiod, exp.period).second);
    }
  }
}

TEST_CASE("expansions are unique on a box for non-CNS digit systems too") {
  const NumberRing zi = test::Zi();
  const AlgebraicInt beta = zi.element(ints({1, 1}));
  const DigitSet dset = digit_set_canonical(zi, beta);
  const ResidueTable table(dset);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  for (const auto& alpha : test::box(zi, 12)) {
    const BetaExpansion exp = beta_expansion(alpha, table, dset);
    CHECK(seen.emplace(exp.preperiod, exp.period).second);
    // The period is primitive and the preperiod cannot be shortened.
    if (!exp.period.empty()) {
      const std::size_t p = exp.period.size();
      for (std::size_t s = 1; s < p; ++s) {
        if (p % s) continue;
        bool repeats = true;
        for (std::size_t i = 0; i < p; ++i) repeats = repeats && exp.period[i] == exp.period[i % s];
        CHECK_FALSE(repeats);
      }
      if (!exp.preperiod.empty()) CHECK(exp.preperiod.back() != exp.period.back());
    }
  }
}

TEST_CASE("CNS implies the canonical digits are representatives") {
  const NumberRing zi = test::Zi();
  const NumberRing cubic = NumberRing::create({-2, 0, 0, 1});
  for (const auto& beta : {zi.element(ints({-1, 1})), zi.element(ints({-3, 1})), zi.element(ints({-4, 1})),
                           cubic.theta(), cubic.element(ints({-2, 1})), cubic.element(ints({-3, 1}))}) {
    const CnsVerdict v = cns_check(beta.ring(), beta);
    if (!v.is_cns) continue;
    const DigitSet dset = digit_set_canonical(beta.ring(), beta);
    const auto elements = dset.elements();
    CHECK(is_representative_system(beta.ring(), beta, elements));
  }
}

TEST_CASE("Schur-Cohn test agrees with numerical roots") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> degree(1, 4);
  int decided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int d = degree(rng);
    std::vector<Int> p(d + 1);
    for (int i = 0; i < d; ++i) p[i] = coeff(rng);
    const long lead = std::uniform_int_distribution<long>(2, 6)(rng);
    p[d] = lead;
    // Roots of p are the roots of q(y) = lead^(d-1) p(y / lead) divided by lead;
    // q is monic with q_i = p_i lead^(d-1-i).
    std::vector<oracle::Z> monic(d + 1);
    for (int i = 0; i < d; ++i) {
      Int f = 1;
      for (int k = 0; k < d - 1 - i; ++k) f *= lead;
      monic[i] = p[i] * f;
    }
    monic[d] = 1;
    long double worst = 0;
    bool near_circle = false;
    for (const auto& r : oracle::polynomial_roots(monic)) {
      const long double mag = std::abs(r) / lead;
      worst = std::max(worst, mag);
      if (std::abs(mag - 1) < 1e-6L) near_circle = true;
    }
    if (near_circle) continue;
    ++decided;
    CHECK(all_roots_inside_unit_circle(p) == (worst < 1));
  }
  CHECK(decided > 300);
}

TEST_CASE("digit scans agree with full expansions") {
  std::mt19937_64 rng(51);
  const NumberRing zi = test::Zi();
  const NumberRing z = test::Z();
  for (const auto& beta : {z.from_int(3), z.from_int(-2), zi.element(ints({-1, 1})), zi.element(ints({1, 1})),
                           zi.element(ints({2, 1}))}) {
    const DigitSet dset = digit_set_canonical(beta.ring(), beta);
    const ResidueTable table(dset);
    for (int trial = 0; trial < 100; ++trial) {
      const AlgebraicInt alpha = test::random_element(beta.ring(), rng, 300);
      const BetaExpansion exp = beta_expansion(alpha, table, dset);
      for (std::size_t b = 0; b < dset.size(); ++b) {
        const DigitScan scan = scan_for_digit(alpha, table, dset, b, DigitStream::beta_adic);
        CHECK(scan.first_position.has_value() == !omits_digit(exp, b));
        if (scan.first_position) {
          std::vector<std::size_t> stream = exp.preperiod;
          while (stream.size() <= *scan.first_position) {
            if (exp.period.empty()) stream.push_back(*exp.zero_index);
            else stream.insert(stream.end(), exp.period.begin(), exp.period.end());
          }
          CHECK(stream[*scan.first_position] == b);
          for (std::size_t i = 0; i < *scan.first_position; ++i) CHECK(stream[i] != b);
        }
        if (exp.period.empty()) {
          const DigitScan radix = scan_for_digit(alpha, table, dset, b, DigitStream::radix);
          const bool in_word = std::find(exp.preperiod.begin(), exp.preperiod.end(), b) != exp.preperiod.end();
          CHECK(radix.first_position.has_value() == in_word);
        }
      }
    }
  }
}

TEST_CASE("state budget guards non-contracting bases") {
  const NumberRing zi = test::Zi();
  // 2 + i has conjugates of modulus sqrt 5 > 1, so a tiny budget is what trips here.
  const AlgebraicInt beta = zi.element(ints({2, 1}));
  const DigitSet dset = digit_set_canonical(zi, beta);
  const ResidueTable table(dset);
  ExpansionOptions tiny;
  tiny.state_budget = 2;
  try {
    beta_expansion(zi.element(ints({1000, 1000})), table, dset, tiny);
    FAIL("expected StateBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::state_budget_exceeded);
  }
  CHECK_FALSE(all_conjugates_outside_unit_circle(zi.theta()));
  CHECK(all_conjugates_outside_unit_circle(beta));
}

TEST_CASE("non-expansive bases are rejected without a closure") {
  const NumberRing cubic = NumberRing::create({-2, 0, 0, 1});
  const AlgebraicInt beta = cubic.element(ints({-2, 1}));  // real conjugate 2^(1/3) - 2
  CHECK_FALSE(all_conjugates_outside_unit_circle(beta));
  const CnsVerdict v = cns_check(cubic, beta, CnsOptions{.closure_budget = 10});
  CHECK_FALSE(v.is_cns);
  CHECK_FALSE(v.expansivity_ok);
  CHECK(v.closure_size == 0);
  if (v.witness_cycle) {
    const ResidueTable table(digit_set_canonical(cubic, beta));
    const AlgebraicInt& start = v.witness_cycle->front();
    std::size_t digit = 0;
    AlgebraicInt x = start;
    for (std::size_t i = 0; i < v.witness_cycle->size(); ++i) x = table.strip(x, digit);
    CHECK(x == start);
    CHECK_FALSE(start.is_zero());
  }
}

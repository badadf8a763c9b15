// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <betadix/counting.hpp>
#include <betadix/digits_extra.hpp>
#include <betadix/error.hpp>
#include <betadix/expansion.hpp>
#include <betadix/padic.hpp>
#include <betadix/residue.hpp>
#include <betadix_cli/run.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace betadix;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

NumberRing Z() { return NumberRing::create({0, 1}); }
NumberRing Zi() { return NumberRing::create({1, 0, 1}); }

Verdict exceptional_exponents() {
  Verdict v;
  cli::ExperimentManifest m;
  m.command = cli::Command::count;
  m.alpha = "2";
  m.beta = "3";
  m.digit = "2";
  m.N = 10000;
  m.count_mode = CountMode::radix;
  std::ostringstream out;
  std::ostringstream err;
  const auto t0 = Clock::now();
  const int code = cli::run(m, out, err);
  const double t = seconds_since(t0);
  v.require(code == cli::kExitOk, "count exited with " + std::to_string(code));
  if (!v.pass) return v;
  const Json j = Json::parse(out.str());
  const auto hits = j.at("hits").get<std::vector<std::uint64_t>>();
  v.require(hits == std::vector<std::uint64_t>{2, 8}, "hits " + j.at("hits").dump());
  v.require(j.at("M") == 2, "M = " + j.at("M").dump());
  v.require(t < 10.0, "took " + fmt_seconds(t));
  if (v.pass) v.detail = "hits {2, 8}, M = 2 in " + fmt_seconds(t);
  return v;
}

Verdict narkiewicz() {
  Verdict v;
  const NarkiewiczReport r = narkiewicz_check(10000);
  v.require(r.ok, "bound fails at some N' <= 10^4");
  v.require(r.max_ratio < Decimal("1.62"), "max ratio " + render_decimal(r.max_ratio));
  if (v.pass) v.detail = "max ratio " + render_decimal(r.max_ratio) + " at N' = " + std::to_string(r.max_ratio_at);
  return v;
}

Verdict worked_expansion() {
  Verdict v;
  const NumberRing z = Z();
  const AlgebraicInt two = z.from_int(2);
  const DigitSet d = DigitSet::from_elements(two, {z.from_int(0), z.from_int(3)});
  const ResidueTable table(d);
  const BetaExpansion e = beta_expansion(z.one(), table, d);
  auto values = [&](const std::vector<std::size_t>& idx) {
    std::vector<Int> out;
    for (auto i : idx) out.push_back(d.digit(i)[0]);
    return out;
  };
  v.require(values(e.preperiod) == std::vector<Int>{3}, "preperiod mismatch");
  v.require(values(e.period) == std::vector<Int>{3, 0}, "period mismatch");
  const auto digits = beta_digits(z.one(), table, d, 30);
  Int partial = 0;
  for (unsigned i = 1; i <= 30; ++i) {
    partial += d.digit(digits[i - 1])[0] * ipow(Int(2), i - 1);
    v.require(oracle::vq(1 - partial, 2) >= i, "v2 below " + std::to_string(i));
  }
  if (v.pass) v.detail = "preperiod (3), period (3,0), v2 bound holds for i <= 30";
  return v;
}

Verdict interpolation() {
  Verdict v;
  const auto t0 = Clock::now();
  const NumberRing z = Z();
  const auto models = primes_above(z, z.from_int(3), 20);
  const PrimeIdealModel& P = models.at(0);
  const Int u = unit_order_u(z.from_int(2), P);
  v.require(u == 6, "u = " + u.get_str());
  const Int m = ipow(Int(3), 20);
  for (unsigned long l = 0; l < 6; ++l) {
    for (unsigned long n = 0; n <= 50; ++n) {
      const PadicInt g = interpolate_G(z.from_int(2), Int(l), u, PadicInt(Int(n), 3, 20), P);
      Int direct;
      const Int e = Int(l + 6 * n);
      mpz_powm(direct.get_mpz_t(), Int(2).get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
      v.require(g.value() == direct, "G_" + std::to_string(l) + "(" + std::to_string(n) + ") differs");
    }
  }
  const double t = seconds_since(t0);
  v.require(t < 1.0, "took " + fmt_seconds(t));
  if (v.pass) v.detail = "u = 6, 306 values agree mod 3^20 in " + fmt_seconds(t);
  return v;
}

Verdict lipschitz_law() {
  Verdict v;
  const NumberRing z = Z();
  const auto models = primes_above(z, z.from_int(3), 64);
  const LipschitzConstants c = lipschitz_constants(z.from_int(2), 6, models);
  v.require(c.n0 == 2, "n0 = " + std::to_string(c.n0));
  std::size_t pairs = 0;
  for (unsigned long n = 2; n <= 300; ++n) {
    const AlgebraicInt a = z.from_int(ipow(Int(64), n));
    for (unsigned long m = 1; m < n; ++m) {
      const Valuation lhs = vp(a - z.from_int(ipow(Int(64), m)), models[0]);
      const Valuation vnm = vp(z.from_int(static_cast<long>(n - m)), models[0]);
      v.require(!lhs.infinite && lhs.value == vnm.value + c.n0,
                "fails at (n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")");
      ++pairs;
    }
  }
  if (v.pass) v.detail = std::to_string(pairs) + " pairs, v3(2^6n - 2^6m) = v3(n - m) + 2";
  return v;
}

Verdict gap_lemma() {
  Verdict v;
  const NumberRing z = Z();
  const DigitSet d = digit_set_canonical(z, z.from_int(3));
  const auto sample = exhaustive_gap_samples(6, 200);
  std::string sizes;
  for (std::size_t k = 1; k <= 3; ++k) {
    const GapReport r = verify_gap_lemma(z.from_int(2), d, k, sample, GapOptions{.strict = false});
    v.require(r.violations.empty(), std::to_string(r.violations.size()) + " violations at k = " + std::to_string(k));
    v.require(r.constants.c0_tilde == 9, "C0~ = " + r.constants.c0_tilde.get_str());
    sizes += (k > 1 ? "/" : "") + std::to_string(r.pairs_sharing_prefix);
  }
  if (v.pass) v.detail = "0 violations for k = 1,2,3 (" + sizes + " sharing pairs), C0~ = 9";
  return v;
}

Verdict cns_verdicts() {
  Verdict v;
  const NumberRing z = Z();
  const NumberRing zi = Zi();
  auto timed = [&](const std::string& name, auto&& fn) {
    const auto t0 = Clock::now();
    fn();
    const double t = seconds_since(t0);
    v.require(t < 1.0, name + " took " + fmt_seconds(t));
  };
  timed("(Z, -2)", [&] { v.require(cns_check(z, z.from_int(-2)).is_cns, "(Z, -2) not CNS"); });
  timed("(Z[i], -1+i)", [&] { v.require(cns_check(zi, zi.element({-1, 1})).is_cns, "(Z[i], -1+i) not CNS"); });
  timed("(Z[i], 1+i)", [&] {
    const CnsVerdict r = cns_check(zi, zi.element({1, 1}));
    v.require(!r.is_cns, "(Z[i], 1+i) accepted");
    v.require(r.witness_cycle && *r.witness_cycle == std::vector<AlgebraicInt>{zi.theta()}, "witness is not {i}");
  });
  timed("(Z[i], 2)", [&] {
    ErrorCode code = ErrorCode::internal;
    try {
      digit_set_canonical(zi, zi.from_int(2));
    } catch (const Error& e) {
      code = e.code();
    }
    v.require(code == ErrorCode::not_representative, "(Z[i], 2) digit set did not fail NotRepresentative");
  });
  if (v.pass) v.detail = "-2 and -1+i are CNS, 1+i has cycle {i}, Z[i] base 2 rejected";
  return v;
}

Verdict bijection_suite() {
  Verdict v;
  const NumberRing z = Z();
  const NumberRing zi = Zi();
  const NumberRing z1i = NumberRing::create({2, -2, 1});
  std::vector<std::pair<AlgebraicInt, DigitSet>> bases;
  for (long b : {2L, 3L, -2L, 4L, 5L, -5L}) bases.emplace_back(z.from_int(b), digit_set_canonical(z, z.from_int(b)));
  for (auto c : {std::vector<Int>{-1, 1}, {1, 1}, {2, 1}, {-1, 2}, {1, -2}}) {
    const AlgebraicInt b = zi.element(c);
    bases.emplace_back(b, digit_set_canonical(zi, b));
  }
  bases.emplace_back(z1i.element({-2, 1}), digit_set_canonical(z1i, z1i.element({-2, 1})));
  const AlgebraicInt two = zi.from_int(2);
  bases.emplace_back(two, DigitSet::from_elements(two, {zi.zero(), zi.one(), zi.theta(), zi.element({1, 1})}));
  std::size_t checked = 0;
  for (const auto& [beta, d] : bases) {
    const std::size_t m = d.size();
    AlgebraicInt beta_i = beta.ring().one();
    for (std::size_t level = 1; level <= 3; ++level) {
      beta_i = beta_i * beta;
      std::vector<AlgebraicInt> values;
      std::vector<std::size_t> prefix(level, 0);
      while (true) {
        values.push_back(truncation_map(prefix, d));
        std::size_t i = 0;
        while (i < level && prefix[i] == m - 1) prefix[i++] = 0;
        if (i == level) break;
        ++prefix[i];
      }
      // |N(beta)|^i values that are pairwise incongruent form a full residue system.
      const ResidueTable table(DigitSet::from_elements(beta_i, values));
      std::vector<bool> seen(values.size(), false);
      for (const auto& x : values) {
        const auto idx = table.residue_index(x);
        v.require(idx < seen.size() && !seen[idx], "two prefixes collide modulo beta^" + std::to_string(level));
        if (idx < seen.size()) seen[idx] = true;
      }
      checked += values.size();
    }
  }
  if (v.pass) v.detail = std::to_string(bases.size()) + " bases, " + std::to_string(checked) + " prefixes, no collisions";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const NumberRing z = Z();
  std::size_t runs = 0;
  for (unsigned long q = 2; q <= 10; ++q) {
    for (unsigned long p = 2; p <= 10; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto expected = oracle::naive_hits_all(p, q, 2000);
      for (unsigned long b = 0; b < q; ++b) {
        const CountRequest req{.alpha = z.from_int(static_cast<long>(p)),
                               .dset = digit_set_canonical(z, z.from_int(static_cast<long>(q))),
                               .b = b,
                               .N = 2000};
        const BoundReport r = count_omitting(req);
        v.require(r.fast_path, "fast path not taken");
        v.require(r.hits == expected[b],
                  "mismatch for (p, q, b) = (" + std::to_string(p) + ", " + std::to_string(q) + ", " +
                      std::to_string(b) + ")");
        ++runs;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(runs) + " (p, q, b) triples agree for N <= 2000";
  return v;
}

Verdict c1_substitute() {
  Verdict v;
  const NumberRing z = Z();
  const CountRequest req{.alpha = z.from_int(2), .dset = digit_set_canonical(z, z.from_int(3)), .b = 2, .N = 19683};
  const BoundReport r = count_omitting(req);
  v.require(r.constants.has_value(), "no constants");
  if (!v.pass) return v;
  const BoundConstants& c = *r.constants;
  v.require(c.m0 == 0 && c.n0 == 2 && c.u == 6, "constructive constants differ from (m0, n0, u) = (0, 2, 6)");
  // C0 |N|^sigma with |N|^sigma = |N| - 1.
  const Decimal bound = to_decimal(c.c0) * to_decimal(abs(norm(z.from_int(3))) - 1);
  Decimal worst = 0;
  for (const CountPoint& p : r.counts) {
    v.require(p.ratio <= bound, "ratio " + render_decimal(p.ratio) + " at N = " + std::to_string(p.N));
    if (p.ratio > worst) worst = p.ratio;
  }
  if (v.pass) {
    v.detail = "max ratio " + render_decimal(worst) + " <= C0*|N|^sigma = " + c.c1.get_str() + " over " +
               std::to_string(r.counts.size()) + " checkpoints";
  }
  return v;
}

Verdict digits_extra() {
  Verdict v;
  const PersistenceRecord p = persistence(39, 10);
  v.require(p.orbit == std::vector<Int>{39, 27, 14, 4} && p.l == 3, "persistence of 39 differs");
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (practical_by_criterion(Int(static_cast<unsigned long>(n))) != practical_by_subset_sum(n)) {
      v.require(false, "criterion and subset sums disagree at " + std::to_string(n));
      break;
    }
  }
  const CentralBinomialRecord c = central_binomial_practical(4);
  v.require(c.value == 70 && !c.practical, "C(8,4) reported practical");
  if (v.pass) v.detail = "39 -> 27 -> 14 -> 4 (l = 3), criterion agrees for n <= 10^4, C(8,4) = 70 not practical";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"exceptional exponents", exceptional_exponents},
      {"Narkiewicz bound", narkiewicz},
      {"worked beta-adic expansion", worked_expansion},
      {"interpolation consistency", interpolation},
      {"constructive Lipschitz law", lipschitz_law},
      {"gap lemma", gap_lemma},
      {"CNS verdicts", cns_verdicts},
      {"prefix bijection", bijection_suite},
      {"fast-path oracle equivalence", oracle_equivalence},
      {"empirical ratio under C0*|N|^sigma", c1_substitute},
      {"persistence and practicality", digits_extra},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}

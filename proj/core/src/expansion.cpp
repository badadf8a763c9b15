#include "betadix/expansion.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "betadix/format.hpp"

namespace betadix {

std::vector<std::size_t> beta_digits(const AlgebraicInt& alpha, const ResidueTable& table,
                                     const DigitSet& dset, std::size_t k) {
  require_same_ring(alpha, dset.beta());
  std::vector<std::size_t> out;
  out.reserve(k);
  AlgebraicInt state = alpha;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t digit = 0;
    state = table.strip(state, digit);
    out.push_back(digit);
  }
  return out;
}

namespace {

struct Orbit {
  std::vector<std::size_t> digits;
  std::vector<AlgebraicInt> states;
  std::size_t cycle_start = 0;  // states[cycle_start] == state after the last digit
};

Orbit trace_orbit(const AlgebraicInt& alpha, const ResidueTable& table,
                  const ExpansionOptions& options) {
  Orbit orbit;
  std::unordered_map<AlgebraicInt, std::size_t, AlgebraicIntHash> seen;
  AlgebraicInt state = alpha;
  while (true) {
    auto [it, inserted] = seen.emplace(state, orbit.states.size());
    if (!inserted) {
      orbit.cycle_start = it->second;
      return orbit;
    }
    if (orbit.states.size() >= options.state_budget) {
      throw Error(ErrorCode::state_budget_exceeded,
                  "digit-strip orbit exceeded the state budget of " +
                      std::to_string(options.state_budget));
    }
    orbit.states.push_back(state);
    std::size_t digit = 0;
    state = table.strip(state, digit);
    orbit.digits.push_back(digit);
  }
}

std::vector<AlgebraicInt> cycle_from(const AlgebraicInt& start, const ResidueTable& table) {
  std::vector<AlgebraicInt> cycle{start};
  std::size_t digit = 0;
  AlgebraicInt x = table.strip(start, digit);
  while (!(x == start)) {
    cycle.push_back(x);
    x = table.strip(x, digit);
  }
  return cycle;
}

std::string describe_cycle(const std::vector<AlgebraicInt>& cycle) {
  std::string s = "{";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += ", ";
    s += render_element(cycle[i]);
  }
  return s + "}";
}

}  // namespace

BetaExpansion beta_expansion(const AlgebraicInt& alpha, const ResidueTable& table,
                             const DigitSet& dset, const ExpansionOptions& options) {
  require_same_ring(alpha, dset.beta());
  Orbit orbit = trace_orbit(alpha, table, options);
  BetaExpansion exp;
  exp.alphabet_size = dset.size();
  exp.zero_index = dset.zero_index();
  exp.preperiod.assign(orbit.digits.begin(), orbit.digits.begin() + orbit.cycle_start);
  exp.period.assign(orbit.digits.begin() + orbit.cycle_start, orbit.digits.end());
  // The fixed point 0 (digit 0) is written as an empty period.
  if (exp.period.size() == 1 && orbit.states[orbit.cycle_start].is_zero()) exp.period.clear();
  return exp;
}

std::vector<std::size_t> radix_expansion(const AlgebraicInt& alpha, const ResidueTable& table,
                                         const DigitSet& dset, const ExpansionOptions& options) {
  if (!dset.zero_index()) {
    throw Error(ErrorCode::invalid_argument, "radix expansions need 0 among the digits");
  }
  Orbit orbit = trace_orbit(alpha, table, options);
  const AlgebraicInt& entry = orbit.states[orbit.cycle_start];
  if (!entry.is_zero()) {
    std::vector<AlgebraicInt> cycle(orbit.states.begin() + orbit.cycle_start, orbit.states.end());
    throw NotTerminating(cycle, "expansion of " + render_element(alpha) +
                                    " does not terminate; cycle " + describe_cycle(cycle));
  }
  orbit.digits.resize(orbit.cycle_start);
  return orbit.digits;
}

bool omits_digit(const BetaExpansion& exp, std::size_t b) {
  if (b >= exp.alphabet_size) return true;
  if (exp.is_zero_element()) return true;
  if (std::find(exp.preperiod.begin(), exp.preperiod.end(), b) != exp.preperiod.end()) return false;
  if (exp.zero_tail()) return !(exp.zero_index && *exp.zero_index == b);
  return std::find(exp.period.begin(), exp.period.end(), b) == exp.period.end();
}

std::string render_expansion(const BetaExpansion& exp, const DigitSet& dset) {
  std::vector<std::string> names(dset.size());
  bool single_chars = true;
  for (std::size_t i = 0; i < dset.size(); ++i) {
    names[i] = render_element(dset.digit(i));
    if (names[i].size() != 1) single_chars = false;
  }
  auto word = [&](const std::vector<std::size_t>& digits) {
    std::string s;
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (!single_chars && !s.empty()) s += ',';
      s += names[digits[i]];
    }
    return s;
  };
  if (exp.is_zero_element()) return "0";
  std::string out;
  if (!exp.period.empty()) out = "(" + word(exp.period) + ")*";
  if (!exp.period.empty() && !single_chars && !exp.preperiod.empty()) out += ',';
  return out + word(exp.preperiod);
}

bool all_roots_inside_unit_circle(const Poly& p_in) {
  Poly a = p_in;
  poly::trim(a);
  if (a.empty()) return false;
  while (poly::degree(a) > 0) {
    const std::size_t n = a.size() - 1;
    if (abs(a[n]) <= abs(a[0])) return false;
    // (a_n a(z) - a_0 a*(z)) / z keeps the count of roots inside the disc.
    Poly b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = a[n] * a[k + 1] - a[0] * a[n - k - 1];
    Int g = 0;
    for (const Int& c : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
      for (Int& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    poly::trim(b);
    a = std::move(b);
  }
  return true;
}

bool all_conjugates_outside_unit_circle(const AlgebraicInt& beta) {
  Poly chi = characteristic_polynomial(multiplication_matrix(beta));
  if (chi[0] == 0) return false;
  std::reverse(chi.begin(), chi.end());
  return all_roots_inside_unit_circle(chi);
}

CnsVerdict cns_check(const NumberRing& ring, const AlgebraicInt& beta, const CnsOptions& options) {
  const DigitSet dset = digit_set_canonical(ring, beta);
  const ResidueTable table(dset);
  CnsVerdict verdict;
  verdict.expansivity_ok = all_conjugates_outside_unit_circle(beta);
  if (!verdict.expansivity_ok) {
    // A CNS base has every conjugate outside the unit circle, so the answer is
    // already no. The closure may be infinite here; only look for a witness
    // among bounded generator orbits.
    AlgebraicInt basis = ring.one();
    for (int j = 0; j < ring.degree() && !verdict.witness_cycle; ++j) {
      for (const AlgebraicInt& start : {basis, -basis}) {
        std::unordered_set<AlgebraicInt, AlgebraicIntHash> seen;
        AlgebraicInt x = start;
        std::size_t digit = 0;
        while (!x.is_zero() && seen.size() < options.witness_budget && seen.insert(x).second) {
          x = table.strip(x, digit);
        }
        if (!x.is_zero() && seen.contains(x)) {
          verdict.witness_cycle = cycle_from(x, table);
          break;
        }
      }
      basis = basis * ring.theta();
    }
    return verdict;
  }

  // Closure E: contains +-theta^j and is closed under x -> T(x + a) for every
  // digit a. If every orbit in E reaches 0 then sums of generators do too.
  std::vector<AlgebraicInt> members;
  std::unordered_map<AlgebraicInt, std::size_t, AlgebraicIntHash> index;
  auto add = [&](const AlgebraicInt& x) {
    if (index.emplace(x, members.size()).second) {
      if (members.size() >= options.closure_budget) {
        throw Error(ErrorCode::closure_budget_exceeded,
                    "CNS closure exceeded " + std::to_string(options.closure_budget) + " elements");
      }
      members.push_back(x);
    }
  };
  AlgebraicInt basis = ring.one();
  for (int j = 0; j < ring.degree(); ++j) {
    add(basis);
    add(-basis);
    basis = basis * ring.theta();
  }
  std::vector<std::size_t> next;  // T(member) as an index into members
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t a = 0; a < dset.size(); ++a) {
      std::size_t digit = 0;
      const AlgebraicInt x = members[i];
      AlgebraicInt y = table.strip(a == 0 ? x : x + dset.digit(a), digit);
      add(y);
    }
  }
  verdict.closure_size = members.size();

  next.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t digit = 0;
    next[i] = index.at(table.strip(members[i], digit));
  }
  // 0: unknown, 1: on the current path, 2: reaches zero.
  std::vector<char> state(members.size(), 0);
  for (std::size_t start = 0; start < members.size(); ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (state[cur] == 0 && !members[cur].is_zero()) {
      state[cur] = 1;
      path.push_back(cur);
      cur = next[cur];
    }
    if (state[cur] == 1) {
      verdict.is_cns = false;
      verdict.witness_cycle = cycle_from(members[cur], table);
      return verdict;
    }
    for (std::size_t p : path) state[p] = 2;
  }
  verdict.is_cns = true;
  return verdict;
}

DigitScan scan_for_digit(const AlgebraicInt& alpha, const ResidueTable& table,
                         const DigitSet& dset, std::size_t b, DigitStream mode,
                         const ExpansionOptions& options) {
  DigitScan scan;
  const auto zero = dset.zero_index();
  if (mode == DigitStream::radix && !zero) {
    throw Error(ErrorCode::invalid_argument, "radix expansions need 0 among the digits");
  }
  if (alpha.is_zero() && zero) return scan;

  AlgebraicInt hare = alpha;
  AlgebraicInt tortoise = alpha;
  std::size_t power = 1;
  std::size_t lam = 0;
  while (true) {
    if (hare.is_zero() && zero) {
      // Remaining digits are all zero.
      if (mode == DigitStream::beta_adic && b == *zero) scan.first_position = scan.digits_emitted;
      return scan;
    }
    if (scan.digits_emitted >= options.state_budget) {
      throw Error(ErrorCode::state_budget_exceeded, "digit scan exceeded the state budget");
    }
    std::size_t digit = 0;
    hare = table.strip(hare, digit);
    if (digit == b) {
      scan.first_position = scan.digits_emitted;
      return scan;
    }
    ++scan.digits_emitted;
    ++lam;
    if (hare == tortoise) {
      if (mode == DigitStream::radix) {
        std::vector<AlgebraicInt> cycle = cycle_from(hare, table);
        throw NotTerminating(cycle, "expansion of " + render_element(alpha) +
                                        " does not terminate; cycle " + describe_cycle(cycle));
      }
      return scan;
    }
    if (lam == power) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
  }
}

}  // namespace betadix

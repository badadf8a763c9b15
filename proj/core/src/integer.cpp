#include "betadix/integer.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "betadix/error.hpp"

namespace betadix {

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Int out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw Error(ErrorCode::invalid_argument, "not an integer: '" + std::string(text) + "'");
  }
  return out;
}

std::string to_string(const Int& x) { return x.get_str(10); }

Int floor_div(const Int& a, const Int& m) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

unsigned long valuation(const Int& x, const Int& q) {
  if (x == 0) throw Error(ErrorCode::invalid_argument, "valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
}

bool fits_u64(const Int& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Int& x) {
  if (!fits_u64(x)) throw Error(ErrorCode::unsupported, "integer exceeds 64 bits: " + to_string(x));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

Int from_u64(std::uint64_t x) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return r;
}

bool is_probable_prime(const Int& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](const Int& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::vector<Int>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(const Int& n_in) {
  Int n = abs(n_in);
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cannot factor zero");
  std::vector<Int> primes;
  for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t hash_value(const Int& x) noexcept {
  const mpz_srcptr z = x.get_mpz_t();
  const auto* limbs = reinterpret_cast<const char*>(mpz_limbs_read(z));
  std::size_t n = mpz_size(z) * sizeof(mp_limb_t);
  std::size_t h = std::hash<std::string_view>{}(std::string_view(limbs, n));
  return h ^ (static_cast<std::size_t>(sgn(x) + 1) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace betadix

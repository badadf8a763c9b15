#include "betadix/poly.hpp"

#include <algorithm>
#include <random>

#include "betadix/error.hpp"

namespace betadix {

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

Int eval(const Poly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int eval_mod(const Poly& p, const Int& x, const Int& m) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = mod(acc * x + *it, m);
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

void divmod_monic(const Poly& a, const Poly& m, Poly& q, Poly& r) {
  const int dm = degree(m);
  if (dm < 0 || m[dm] != 1) throw Error(ErrorCode::not_monic, "divisor is not monic");
  r = a;
  trim(r);
  q.assign(std::max(0, degree(r) - dm + 1), 0);
  for (int i = degree(r); i >= dm; --i) {
    const Int c = r[i];
    if (c == 0) continue;
    q[i - dm] = c;
    for (int j = 0; j <= dm; ++j) r[i - dm + j] -= c * m[j];
  }
  trim(r);
  trim(q);
}

namespace {

std::vector<Int> signed_divisors(const Int& v) {
  std::vector<Int> pos{1};
  for (const auto& [p, e] : factorize(v)) {
    const std::size_t base = pos.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) pos.push_back(pos[i] * pk);
    }
  }
  std::vector<Int> out;
  for (const Int& d : pos) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]); returns false when some
// coefficient is not an integer.
bool interpolate_integral(const std::vector<Int>& xs, const std::vector<Int>& ys, Poly& out) {
  const std::size_t k = xs.size();
  std::vector<Rational> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[j];
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    const Rational scale = Rational(ys[i]) / denom;
    for (std::size_t t = 0; t < k; ++t) acc[t] += basis[t] * scale;
  }
  out.assign(k, 0);
  for (std::size_t t = 0; t < k; ++t) {
    acc[t].canonicalize();
    if (acc[t].get_den() != 1) return false;
    out[t] = acc[t].get_num();
  }
  return true;
}

constexpr double kKroneckerBudget = 5e7;

bool has_monic_factor_of_degree(const Poly& f, int k) {
  // Candidate evaluation points ordered by how cheap f(x) is to enumerate.
  std::vector<std::pair<double, Int>> candidates;
  for (long x = -12; x <= 12; ++x) {
    Int v = poly::eval(f, Int(x));
    if (v == 0) return true;  // integer root, so a linear factor
    candidates.emplace_back(static_cast<double>(signed_divisors(v).size()), Int(x));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Int> xs;
  std::vector<std::vector<Int>> choices;
  double combos = 1;
  for (int i = 0; i < k; ++i) {
    xs.push_back(candidates[i].second);
    choices.push_back(signed_divisors(poly::eval(f, xs.back())));
    combos *= static_cast<double>(choices.back().size());
  }
  if (combos > kKroneckerBudget) {
    throw Error(ErrorCode::unsupported,
                "irreducibility search too large; disable the check for this polynomial");
  }
  std::vector<std::size_t> idx(k, 0);
  std::vector<Int> ys(k);
  while (true) {
    for (int i = 0; i < k; ++i) {
      Int xk;
      mpz_pow_ui(xk.get_mpz_t(), xs[i].get_mpz_t(), static_cast<unsigned long>(k));
      ys[i] = choices[i][idx[i]] - xk;
    }
    Poly g;
    if (interpolate_integral(xs, ys, g)) {
      g.push_back(1);
      Poly q, r;
      divmod_monic(f, g, q, r);
      if (r.empty()) return true;
    }
    int pos = 0;
    while (pos < k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return false;
}

}  // namespace

bool is_irreducible(const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  const int n = degree(f);
  if (n < 1 || f[n] != 1) throw Error(ErrorCode::not_monic, "polynomial is not monic of degree >= 1");
  if (n == 1) return true;
  for (unsigned long p = 2; p < 400; ++p) {
    if (!mpz_probab_prime_p(Int(p).get_mpz_t(), 25)) continue;
    Poly fp = modp::reduce(f, Int(p));
    if (degree(fp) == n && modp::is_irreducible(fp, Int(p))) return true;
  }
  for (int k = 1; k <= n / 2; ++k) {
    if (has_monic_factor_of_degree(f, k)) return false;
  }
  return true;
}

}  // namespace poly

namespace modp {

Poly reduce(const Poly& a, const Int& p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], p);
  poly::trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Int& p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return reduce(c, p);
}

Poly sub(const Poly& a, const Poly& b, const Int& p) {
  return reduce(poly::sub(a, b), p);
}

Poly mul(const Poly& a, const Poly& b, const Int& p) {
  return reduce(poly::mul(a, b), p);
}

Poly make_monic(const Poly& a_in, const Int& p) {
  Poly a = reduce(a_in, p);
  if (a.empty()) return a;
  Int inv;
  mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
  for (Int& c : a) c = mod(c * inv, p);
  return a;
}

void divmod(const Poly& a, const Poly& m_in, const Int& p, Poly& q, Poly& r) {
  Poly m = reduce(m_in, p);
  const int dm = poly::degree(m);
  if (dm < 0) throw Error(ErrorCode::division_by_zero, "polynomial division by zero mod p");
  Int inv;
  mpz_invert(inv.get_mpz_t(), m[dm].get_mpz_t(), p.get_mpz_t());
  r = reduce(a, p);
  q.assign(std::max(0, poly::degree(r) - dm + 1), 0);
  for (int i = poly::degree(r); i >= dm; --i) {
    if (r[i] == 0) continue;
    const Int c = mod(r[i] * inv, p);
    q[i - dm] = c;
    for (int j = 0; j <= dm; ++j) r[i - dm + j] = mod(r[i - dm + j] - c * m[j], p);
  }
  poly::trim(r);
  poly::trim(q);
}

Poly rem(const Poly& a, const Poly& m, const Int& p) {
  Poly q, r;
  divmod(a, m, p, q, r);
  return r;
}

Poly gcd(Poly a, Poly b, const Int& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly powmod(const Poly& base, const Int& e, const Poly& m, const Int& p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

namespace {

void split_roots(const Poly& g, const Int& p, std::mt19937_64& rng, std::vector<Int>& out) {
  const int d = poly::degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(mod(-g[0], p));  // g is monic
    return;
  }
  const Int half = (p - 1) / 2;
  while (true) {
    Int a = from_u64(rng()) % p;
    Poly shifted{a, 1};
    Poly h = sub(powmod(shifted, half, g, p), Poly{1}, p);
    Poly f1 = gcd(g, h, p);
    const int d1 = poly::degree(f1);
    if (d1 > 0 && d1 < d) {
      Poly q, r;
      divmod(g, f1, p, q, r);
      split_roots(f1, p, rng, out);
      split_roots(make_monic(q, p), p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Int> roots(const Poly& a_in, const Int& p, std::uint64_t seed) {
  Poly a = reduce(a_in, p);
  std::vector<Int> out;
  if (a.empty()) throw Error(ErrorCode::invalid_argument, "roots of the zero polynomial");
  if (p < 1024) {
    for (unsigned long x = 0; Int(x) < p; ++x) {
      if (poly::eval_mod(a, Int(x), p) == 0) out.emplace_back(x);
    }
    return out;
  }
  Poly x{0, 1};
  Poly xp = powmod(x, p, a, p);
  Poly g = gcd(a, sub(xp, x, p), p);
  std::mt19937_64 rng(seed);
  split_roots(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const Poly& a_in, const Int& p) {
  Poly a = make_monic(a_in, p);
  const int n = poly::degree(a);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  // x^(p^k) mod a for k = 0..n.
  std::vector<Poly> frob{rem(x, a, p)};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, a, p));
  if (sub(frob[n], rem(x, a, p), p) != Poly{}) return false;
  for (const auto& [r, e] : factorize(Int(n))) {
    (void)e;
    const int k = n / static_cast<int>(r.get_si());
    Poly g = gcd(a, sub(frob[k], x, p), p);
    if (poly::degree(g) != 0) return false;
  }
  return true;
}

}  // namespace modp

Int hensel_lift(const Poly& f, const Int& root, const Int& p, unsigned precision) {
  const Poly df = poly::derivative(f);
  Int r = mod(root, p);
  if (poly::eval_mod(f, r, p) != 0) {
    throw Error(ErrorCode::invalid_argument, "hensel_lift: not a root modulo p");
  }
  if (poly::eval_mod(df, r, p) == 0) {
    throw Error(ErrorCode::ramified_prime, "hensel_lift: root is not simple modulo p");
  }
  unsigned have = 1;
  while (have < precision) {
    have = std::min(precision, 2 * have);
    const Int m = ipow(p, have);
    Int inv;
    const Int deriv = poly::eval_mod(df, r, m);
    mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), m.get_mpz_t());
    r = mod(r - poly::eval_mod(f, r, m) * inv, m);
  }
  return mod(r, ipow(p, precision));
}

}  // namespace betadix

#include "betadix/padic.hpp"

#include <algorithm>

#include "betadix/error.hpp"
#include "betadix/poly.hpp"

namespace betadix {

namespace {

void require_admissible(const PrimeIdealModel& P) {
  if (!P.unramified) {
    throw Error(ErrorCode::ramified_prime, "prime above " + P.q.get_str() + " is ramified");
  }
  if (!P.degree_one) {
    throw Error(ErrorCode::not_degree_one,
                "prime above " + P.q.get_str() + " has inertia degree > 1");
  }
}

void require_compatible(const PadicInt& a, const PadicInt& b) {
  if (a.q() != b.q() || a.precision() != b.precision()) {
    throw Error(ErrorCode::invalid_argument, "p-adic operands differ in prime or precision");
  }
}

// floor(log_q n) for n >= 1.
unsigned long ilog(unsigned long n, unsigned long q) {
  unsigned long k = 0;
  while (n >= q) {
    n /= q;
    ++k;
  }
  return k;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::internal, "inverse_mod: not a unit");
  }
  return inv;
}

}  // namespace

PadicInt::PadicInt(Int value, Int q, unsigned K)
    : q_(std::move(q)), K_(K), modulus_(ipow(q_, K)) {
  if (q_ < 2 || K == 0) throw Error(ErrorCode::invalid_argument, "PadicInt needs q >= 2, K >= 1");
  value_ = mod(value, modulus_);
}

unsigned long PadicInt::valuation() const {
  if (value_ == 0) return K_;
  return betadix::valuation(value_, q_);
}

PadicInt PadicInt::with_precision(unsigned K) const {
  if (K > K_) throw Error(ErrorCode::invalid_argument, "cannot raise the precision of a residue");
  return PadicInt(value_, q_, K);
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  require_compatible(a, b);
  return PadicInt(a.value_ + b.value_, a.q_, a.K_);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  require_compatible(a, b);
  return PadicInt(a.value_ - b.value_, a.q_, a.K_);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  require_compatible(a, b);
  return PadicInt(a.value_ * b.value_, a.q_, a.K_);
}

PrimeIdealModel with_precision(const PrimeIdealModel& P, const Poly& f, unsigned K) {
  require_admissible(P);
  PrimeIdealModel out = P;
  out.root = hensel_lift(f, P.root, P.q, K);
  out.K = K;
  return out;
}

PadicInt evaluate_at(const AlgebraicInt& alpha, const PrimeIdealModel& P) {
  require_admissible(P);
  const Int m = ipow(P.q, P.K);
  return PadicInt(poly::eval_mod(alpha.coeffs(), P.root, m), P.q, P.K);
}

Valuation vp(const AlgebraicInt& alpha, const PrimeIdealModel& P, unsigned max_doublings) {
  require_admissible(P);
  if (alpha.is_zero()) return Valuation::infinity();
  PrimeIdealModel model = P;
  for (unsigned attempt = 0;; ++attempt) {
    PadicInt r = evaluate_at(alpha, model);
    if (!r.is_zero()) return {r.valuation(), false};
    if (attempt == max_doublings) {
      throw Error(ErrorCode::precision_exhausted,
                  "valuation at the prime above " + P.q.get_str() + " exceeds " +
                      std::to_string(model.K));
    }
    model = with_precision(model, alpha.ring().modulus(), model.K * 2);
  }
}

std::vector<PrimeIdealModel> primes_above(const NumberRing& ring, const AlgebraicInt& beta,
                                          unsigned K, HypothesisMode mode) {
  require_same_ring(beta, ring.one());
  const Int n = abs(norm(beta));
  if (n <= 1) throw Error(ErrorCode::norm_too_small, "|N(beta)| <= 1 has no prime divisors");
  const Poly& f = ring.modulus();
  const Poly df = poly::derivative(f);
  std::vector<PrimeIdealModel> out;
  for (const auto& [q, exponent] : factorize(n)) {
    unsigned covered = 0;
    bool ramified_here = false;
    for (const Int& r : modp::roots(f, q)) {
      if (poly::eval_mod(beta.coeffs(), r, q) != 0) continue;  // (q, theta - r) does not divide beta
      PrimeIdealModel P;
      P.q = q;
      if (poly::eval_mod(df, r, q) == 0) {
        if (mode == HypothesisMode::theorem) {
          throw Error(ErrorCode::ramified_prime,
                      "beta is divisible by the ramified prime (" + q.get_str() + ", x-" +
                          r.get_str() + ")");
        }
        P.root = r;
        P.K = 1;
        P.unramified = false;
        ramified_here = true;
        out.push_back(P);
        continue;
      }
      P.root = hensel_lift(f, r, q, K);
      P.K = K;
      P.e = static_cast<unsigned>(vp(beta, P).value);
      covered += P.e;
      out.push_back(P);
    }
    if (covered < exponent && !ramified_here) {
      if (mode == HypothesisMode::theorem) {
        throw Error(ErrorCode::not_degree_one,
                    "beta is divisible by a prime above " + q.get_str() +
                        " of inertia degree > 1");
      }
      PrimeIdealModel P;
      P.q = q;
      P.K = 0;
      P.degree_one = false;
      P.residual_exponent = exponent - covered;
      out.push_back(P);
    }
  }
  return out;
}

PadicInt padic_log(const PadicInt& x) {
  const PadicInt y = x - PadicInt(1, x.q(), x.precision());
  if (y.is_zero()) return y;
  const unsigned long s = y.valuation();
  if (s < 2) {
    throw Error(ErrorCode::out_of_domain,
                "log needs v(x-1) >= 2, got " + std::to_string(s));
  }
  const unsigned long K = x.precision();
  const Int& m = x.modulus();
  // For q beyond 64 bits, v(n) = 0 for every reachable n.
  const unsigned long q = x.q().fits_ulong_p() ? x.q().get_ui() : 0;
  Int unit;
  mpz_divexact(unit.get_mpz_t(), y.value().get_mpz_t(), ipow(x.q(), s).get_mpz_t());
  // term_n = (-1)^(n+1) q^(s n - v(n)) unit^n / (n / q^v(n))
  Int sum = 0;
  Int unit_pow = 1;
  for (unsigned long n = 1;; ++n) {
    const unsigned long bound_loss = q ? ilog(n, q) : 0;
    if (s * n >= K + bound_loss) break;  // every later term is 0 mod q^K
    unit_pow = unit_pow * unit % m;
    unsigned long vn = 0;
    unsigned long rest = n;
    if (q) {
      while (rest % q == 0) {
        rest /= q;
        ++vn;
      }
    }
    const unsigned long shift = s * n - vn;
    if (shift >= K) continue;
    Int term = ipow(x.q(), shift) * unit_pow % m * inverse_mod(Int(rest), m) % m;
    if (n % 2 == 1) sum += term;
    else sum -= term;
  }
  return PadicInt(sum, x.q(), x.precision());
}

PadicInt padic_exp(const PadicInt& x) {
  const PadicInt one(1, x.q(), x.precision());
  if (x.is_zero()) return one;
  const unsigned long s = x.valuation();
  const unsigned long need = x.q() == 2 ? 2 : 1;
  if (s < need) {
    throw Error(ErrorCode::out_of_domain, "exp needs v(x) >= " + std::to_string(need) +
                                              ", got " + std::to_string(s));
  }
  const unsigned long K = x.precision();
  const Int& m = x.modulus();
  const bool small_q = x.q().fits_ulong_p();
  const unsigned long q = small_q ? x.q().get_ui() : 0;
  Int unit;
  mpz_divexact(unit.get_mpz_t(), x.value().get_mpz_t(), ipow(x.q(), s).get_mpz_t());
  // term_n = q^(s n - v(n!)) unit^n / unit_part(n!); v(n!) <= (n-1)/(q-1).
  Int sum = 1;
  Int unit_pow = 1;
  Int fact_unit = 1;
  unsigned long v_fact = 0;
  for (unsigned long n = 1;; ++n) {
    const unsigned long max_loss = small_q ? (n - 1) / (q - 1) : 0;
    if (s * n >= K + max_loss) break;
    unit_pow = unit_pow * unit % m;
    unsigned long rest = n;
    if (small_q) {
      while (rest % q == 0) {
        rest /= q;
        ++v_fact;
      }
    }
    fact_unit = fact_unit * rest % m;
    const unsigned long shift = s * n - v_fact;
    if (shift >= K) continue;
    sum += ipow(x.q(), shift) * unit_pow % m * inverse_mod(fact_unit, m) % m;
  }
  return PadicInt(sum, x.q(), x.precision());
}

Int unit_order_u(const AlgebraicInt& alpha, const PrimeIdealModel& P) {
  require_admissible(P);
  const Int q2 = P.q * P.q;
  const Int a = poly::eval_mod(alpha.coeffs(), P.root, q2);
  if (a % P.q == 0) {
    throw Error(ErrorCode::not_coprime,
                "alpha is divisible by the prime above " + P.q.get_str());
  }
  // The unit group mod q^2 has order q(q-1); strip prime factors of the order.
  Int order = P.q * (P.q - 1);
  Factorization primes = factorize(P.q - 1);
  primes.emplace_back(P.q, 1);
  for (const auto& [p, e] : primes) {
    (void)e;
    while (order % p == 0) {
      Int candidate = order / p;
      Int r;
      mpz_powm(r.get_mpz_t(), a.get_mpz_t(), candidate.get_mpz_t(), q2.get_mpz_t());
      if (r != 1) break;
      order = candidate;
    }
  }
  return order;
}

UnitOrders combined_u(const AlgebraicInt& alpha, const std::vector<PrimeIdealModel>& models) {
  UnitOrders out{1, 1, {}};
  for (const auto& P : models) {
    Int u = unit_order_u(alpha, P);
    out.product *= u;
    out.lcm = lcm(out.lcm, u);
    out.per_prime.push_back(std::move(u));
  }
  return out;
}

PadicInt interpolate_G(const AlgebraicInt& alpha, const Int& l, const Int& u, const PadicInt& x,
                       const PrimeIdealModel& P) {
  if (x.q() != P.q) throw Error(ErrorCode::invalid_argument, "interpolate_G: prime mismatch");
  if (l < 0 || u < 1) throw Error(ErrorCode::invalid_argument, "interpolate_G needs l >= 0, u >= 1");
  const unsigned K = std::min(P.K, x.precision());
  PrimeIdealModel model = P;
  if (P.K > K) model.root = mod(P.root, ipow(P.q, K)), model.K = K;
  const PadicInt a = evaluate_at(alpha, model);
  Int au;
  Int al;
  mpz_powm(au.get_mpz_t(), a.value().get_mpz_t(), u.get_mpz_t(), a.modulus().get_mpz_t());
  mpz_powm(al.get_mpz_t(), a.value().get_mpz_t(), l.get_mpz_t(), a.modulus().get_mpz_t());
  const PadicInt log_au = padic_log(PadicInt(au, P.q, K));
  const PadicInt e = padic_exp(x.with_precision(K) * log_au);
  return PadicInt(al, P.q, K) * e;
}

LipschitzConstants lipschitz_constants(const AlgebraicInt& alpha, const Int& u,
                                       const std::vector<PrimeIdealModel>& models) {
  LipschitzConstants out;
  for (const auto& P : models) {
    const PadicInt a = evaluate_at(alpha, P);
    Int au;
    mpz_powm(au.get_mpz_t(), a.value().get_mpz_t(), u.get_mpz_t(), a.modulus().get_mpz_t());
    const PadicInt lg = padic_log(PadicInt(au, P.q, P.K));
    if (lg.is_zero()) {
      throw Error(ErrorCode::precision_exhausted,
                  "log(alpha^u) vanishes to precision " + std::to_string(P.K) +
                      "; alpha may be a root of unity");
    }
    out.per_prime.push_back(lg.valuation());
    out.n0 = std::max(out.n0, out.per_prime.back());
  }
  return out;
}

}  // namespace betadix

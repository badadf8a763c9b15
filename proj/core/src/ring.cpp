#include "betadix/ring.hpp"

#include <algorithm>

#include "betadix/error.hpp"

namespace betadix {

NumberRing NumberRing::create(Poly f, Options options) {
  poly::trim(f);
  const int d = poly::degree(f);
  if (d < 1) throw Error(ErrorCode::not_monic, "ring polynomial must have degree >= 1");
  if (f[d] != 1) throw Error(ErrorCode::not_monic, "ring polynomial must be monic");
  if (options.check_irreducible && !poly::is_irreducible(f)) {
    throw Error(ErrorCode::reducible, "ring polynomial is reducible over Q");
  }
  auto data = std::make_shared<Data>();
  data->f = f;
  data->d = d;
  data->irreducibility_checked = options.check_irreducible;
  // theta^d = -(f_0 + ... + f_{d-1} theta^{d-1}); higher powers by shifting.
  std::vector<Int> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -f[i];
  for (int k = 0; k + 1 < d; ++k) {
    data->reductions.push_back(cur);
    std::vector<Int> next(d, 0);
    const Int top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < d; ++i) next[i] -= top * f[i];
    cur = std::move(next);
  }
  return NumberRing(std::move(data));
}

int NumberRing::degree() const noexcept { return data_->d; }
const Poly& NumberRing::modulus() const noexcept { return data_->f; }
bool NumberRing::irreducibility_checked() const noexcept { return data_->irreducibility_checked; }

AlgebraicInt NumberRing::zero() const { return AlgebraicInt(*this, {}); }
AlgebraicInt NumberRing::one() const { return from_int(1); }

AlgebraicInt NumberRing::theta() const {
  std::vector<Int> c(degree(), 0);
  if (degree() == 1) {
    c[0] = -data_->f[0];
  } else {
    c[1] = 1;
  }
  return AlgebraicInt(*this, std::move(c));
}

AlgebraicInt NumberRing::from_int(const Int& n) const { return AlgebraicInt(*this, {n}); }

AlgebraicInt NumberRing::element(std::vector<Int> coeffs) const {
  return AlgebraicInt(*this, std::move(coeffs));
}

bool operator==(const NumberRing& a, const NumberRing& b) noexcept {
  return a.data_ == b.data_ || a.data_->f == b.data_->f;
}

AlgebraicInt::AlgebraicInt(NumberRing ring, std::vector<Int> coeffs) : ring_(std::move(ring)) {
  const std::size_t d = static_cast<std::size_t>(ring_.degree());
  if (coeffs.size() > d) {
    Poly q, r;
    poly::divmod_monic(coeffs, ring_.modulus(), q, r);
    coeffs = std::move(r);
  }
  coeffs.resize(d, 0);
  coeffs_ = std::move(coeffs);
}

bool AlgebraicInt::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

bool AlgebraicInt::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Int& c) { return c == 0; });
}

void require_same_ring(const AlgebraicInt& a, const AlgebraicInt& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::ring_mismatch, "elements belong to different rings");
  }
}

AlgebraicInt& AlgebraicInt::operator+=(const AlgebraicInt& o) {
  require_same_ring(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraicInt& AlgebraicInt::operator-=(const AlgebraicInt& o) {
  require_same_ring(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraicInt& AlgebraicInt::operator*=(const AlgebraicInt& o) {
  *this = *this * o;
  return *this;
}

AlgebraicInt AlgebraicInt::operator-() const {
  AlgebraicInt r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

AlgebraicInt& AlgebraicInt::scale(const Int& k) {
  for (Int& c : coeffs_) c *= k;
  return *this;
}

AlgebraicInt operator*(const AlgebraicInt& a, const AlgebraicInt& b) {
  require_same_ring(a, b);
  const std::size_t d = a.coeffs_.size();
  if (d == 1) return AlgebraicInt(a.ring_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<Int> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  const auto& red = a.ring_.data()->reductions;
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& row = red[k - d];
    for (std::size_t i = 0; i < d; ++i) {
      mpz_addmul(prod[i].get_mpz_t(), prod[k].get_mpz_t(), row[i].get_mpz_t());
    }
  }
  prod.resize(d);
  return AlgebraicInt(a.ring_, std::move(prod));
}

bool operator==(const AlgebraicInt& a, const AlgebraicInt& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

IntMatrix multiplication_matrix(const AlgebraicInt& a) {
  const std::size_t d = a.degree();
  IntMatrix m(d, d);
  AlgebraicInt col = a;
  const AlgebraicInt theta = a.ring().theta();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
    if (j + 1 < d) col = col * theta;
  }
  return m;
}

Int norm(const AlgebraicInt& a) { return determinant(multiplication_matrix(a)); }

AlgebraicInt pow(const AlgebraicInt& a, std::uint64_t n) {
  AlgebraicInt result = a.ring().one();
  AlgebraicInt base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

AlgebraicInt pow(const AlgebraicInt& a, const Int& n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative exponent");
  AlgebraicInt result = a.ring().one();
  const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(n.get_mpz_t(), i)) result = result * a;
  }
  return result;
}

ExactDivider::ExactDivider(const AlgebraicInt& divisor) : divisor_(divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
  const IntMatrix m = multiplication_matrix(divisor);
  norm_ = determinant(m);
  if (norm_ == 0) throw Error(ErrorCode::zero_divisor, "divisor is a zero divisor in this quotient ring");
  adjugate_ = adjugate(m, norm_);
}

std::optional<AlgebraicInt> ExactDivider::divide(const AlgebraicInt& a) const {
  require_same_ring(a, divisor_);
  std::vector<Int> q = adjugate_.apply(a.coeffs());
  for (Int& c : q) {
    if (!mpz_divisible_p(c.get_mpz_t(), norm_.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), norm_.get_mpz_t());
  }
  return AlgebraicInt(a.ring(), std::move(q));
}

AlgebraicInt ExactDivider::divide_known_exact(const AlgebraicInt& a) const {
  if (a.degree() == 1) {
    Int q;
    if (!mpz_divisible_p(a[0].get_mpz_t(), divisor_[0].get_mpz_t())) {
      throw Error(ErrorCode::internal, "expected exact division");
    }
    mpz_divexact(q.get_mpz_t(), a[0].get_mpz_t(), divisor_[0].get_mpz_t());
    return AlgebraicInt(a.ring(), {std::move(q)});
  }
  auto q = divide(a);
  if (!q) throw Error(ErrorCode::internal, "expected exact division");
  return *std::move(q);
}

std::optional<AlgebraicInt> divide_exact(const AlgebraicInt& a, const AlgebraicInt& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
  if (a.is_zero()) return a.ring().zero();
  return ExactDivider(b).divide(a);
}

bool ideals_coprime(const AlgebraicInt& a, const AlgebraicInt& b) {
  require_same_ring(a, b);
  if (a.is_zero() && b.is_zero()) return false;
  const std::size_t d = a.degree();
  const IntMatrix ma = multiplication_matrix(a);
  const IntMatrix mb = multiplication_matrix(b);
  IntMatrix joined(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      joined(i, j) = ma(i, j);
      joined(i, d + j) = mb(i, j);
    }
  }
  const IntMatrix h = column_hnf(joined);
  for (std::size_t i = 0; i < d; ++i) {
    if (h(i, i) != 1) return false;
  }
  return true;
}

std::size_t AlgebraicIntHash::operator()(const AlgebraicInt& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Int& c : a.coeffs()) h = (h ^ hash_value(c)) * 0x100000001b3ULL;
  return h;
}

}  // namespace betadix

#include "betadix/linalg.hpp"

#include <utility>

#include "betadix/error.hpp"

namespace betadix {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  std::vector<Int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Int determinant(const IntMatrix& m_in) {
  const std::size_t n = m_in.rows();
  if (n != m_in.cols()) throw Error(ErrorCode::invalid_argument, "determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = m_in;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m, const Int& det) {
  const std::size_t n = m.rows();
  if (det == 0) throw Error(ErrorCode::zero_divisor, "adjugate of a singular matrix");
  // Gauss-Jordan over Q on [m | I], then scale the inverse by det.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = aug[i][n + j] * det;
      v.canonicalize();
      adj(i, j) = v.get_num();
    }
  }
  return adj;
}

Poly characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier; every division below is exact over Z.
  const std::size_t n = a.rows();
  Poly c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntMatrix amk = a * mk;
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    Int coeff = -trace;
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = coeff;
  }
  return c;
}

IntMatrix column_hnf(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols();
  if (cols < n) throw Error(ErrorCode::invalid_argument, "column_hnf: fewer columns than rows");
  IntMatrix h = m;
  auto combine = [&](std::size_t ci, std::size_t cj, const Int& s, const Int& t, const Int& u,
                     const Int& v) {
    // (col_i, col_j) <- (s*col_i + t*col_j, u*col_i + v*col_j)
    for (std::size_t r = 0; r < n; ++r) {
      Int a = h(r, ci), b = h(r, cj);
      h(r, ci) = s * a + t * b;
      h(r, cj) = u * a + v * b;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < cols; ++j) {
      if (h(i, j) == 0) continue;
      Int s, t;
      const Int a = h(i, i), b = h(i, j);
      const Int g = xgcd(a, b, s, t);
      combine(i, j, s, t, -b / g, a / g);
    }
    if (h(i, i) == 0) throw Error(ErrorCode::zero_divisor, "column_hnf: matrix does not have full row rank");
    if (h(i, i) < 0) {
      for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Int q = floor_div(h(i, j), h(i, i));
      if (q == 0) continue;
      for (std::size_t r = i; r < n; ++r) h(r, j) -= q * h(r, i);
    }
  }
  if (cols == n) return h;
  IntMatrix square(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) square(i, j) = h(i, j);
  }
  return square;
}

void reduce_mod_hnf(const IntMatrix& hnf, std::vector<Int>& v) {
  const std::size_t n = hnf.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const Int q = floor_div(v[i], hnf(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < n; ++r) v[r] -= q * hnf(r, i);
  }
}

}  // namespace betadix

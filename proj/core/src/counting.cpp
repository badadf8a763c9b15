#include "betadix/counting.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "betadix/error.hpp"

namespace betadix {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

Decimal ratio_of(std::uint64_t M, std::uint64_t N, const Decimal& sigma_value) {
  if (M == 0) return Decimal(0);
  return Decimal(M) / boost::multiprecision::pow(Decimal(N), sigma_value);
}

// Base-q digit scanner for rational integers, q^t-sized chunks at a time.
class RationalScanner {
 public:
  explicit RationalScanner(unsigned long q) : q_(q), chunk_(q) {
    while (chunk_ <= std::numeric_limits<unsigned long>::max() / q_) {
      chunk_ *= q_;
      ++width_;
    }
  }

  // First position of digit b in x > 0 (kNone if absent); `length` gets the digit count.
  std::uint64_t scan(const Int& x, unsigned long b, std::uint64_t& length) {
    std::uint64_t pos = 0;
    // The low chunk decides most inputs without computing a quotient.
    unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), chunk_);
    bool last = mpz_cmp_ui(x.get_mpz_t(), chunk_) < 0;
    if (std::uint64_t hit = scan_chunk(r, last, b, pos); hit != kNone) return hit;
    if (last) {
      length = pos;
      return kNone;
    }
    mpz_fdiv_q_ui(rest_.get_mpz_t(), x.get_mpz_t(), chunk_);
    while (true) {
      r = mpz_fdiv_q_ui(rest_.get_mpz_t(), rest_.get_mpz_t(), chunk_);
      last = rest_ == 0;
      if (std::uint64_t hit = scan_chunk(r, last, b, pos); hit != kNone) return hit;
      if (last) {
        length = pos;
        return kNone;
      }
    }
  }

 private:
  std::uint64_t scan_chunk(unsigned long r, bool last, unsigned long b, std::uint64_t& pos) const {
    for (unsigned i = 0; i < width_; ++i) {
      if (last && r == 0) break;
      if (r % q_ == b) return pos;
      r /= q_;
      ++pos;
    }
    return kNone;
  }

  unsigned long q_;
  unsigned long chunk_;
  unsigned width_ = 1;
  Int rest_;
};

struct BlockResult {
  std::vector<std::uint64_t> hits;
  std::vector<std::uint64_t> prefix;
};

struct CountContext {
  const CountRequest& req;
  const ResidueTable& table;
  std::vector<std::uint64_t> powers;  // |N(beta)|^k <= N
  bool fast = false;
  unsigned long q = 0;
  unsigned long p = 0;  // 0 when alpha does not fit an unsigned long
  std::optional<std::size_t> zero;

  void record(std::uint64_t n, bool hit, std::uint64_t prefix_pos, BlockResult& out) const {
    if (hit) out.hits.push_back(n);
    auto it = std::lower_bound(powers.begin(), powers.end(), n);
    for (auto k = static_cast<std::size_t>(it - powers.begin()); k < powers.size(); ++k) {
      if (prefix_pos < k) break;
      ++out.prefix[k];
    }
  }

  BlockResult run_block(std::uint64_t start, std::uint64_t end) const {
    BlockResult out;
    out.prefix.assign(powers.size(), 0);
    if (fast) run_fast(start, end, out);
    else run_general(start, end, out);
    return out;
  }

  void run_fast(std::uint64_t start, std::uint64_t end, BlockResult& out) const {
    RationalScanner scanner(q);
    const Int& alpha = req.alpha[0];
    Int x;
    mpz_pow_ui(x.get_mpz_t(), alpha.get_mpz_t(), start);
    const bool beta_adic = req.mode == CountMode::beta_adic;
    for (std::uint64_t n = start; n <= end; ++n) {
      std::uint64_t length = 0;
      std::uint64_t pos = scanner.scan(x, req.b, length);
      bool hit = pos == kNone;
      if (pos == kNone && req.b == 0) {
        // The zero tail starts right after the word.
        pos = length;
        if (beta_adic) hit = false;
      }
      record(n, hit, pos, out);
      if (p) mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), p);
      else x *= alpha;
    }
  }

  void run_general(std::uint64_t start, std::uint64_t end, BlockResult& out) const {
    const DigitStream stream =
        req.mode == CountMode::radix ? DigitStream::radix : DigitStream::beta_adic;
    AlgebraicInt x = pow(req.alpha, start);
    for (std::uint64_t n = start; n <= end; ++n) {
      DigitScan scan = scan_for_digit(x, table, req.dset, req.b, stream, req.expansion);
      bool hit = !scan.first_position.has_value();
      std::uint64_t pos = hit ? kNone : *scan.first_position;
      if (hit && stream == DigitStream::radix && zero && req.b == *zero) pos = scan.digits_emitted;
      record(n, hit, pos, out);
      x *= req.alpha;
    }
  }
};

int euler_phi(int t) {
  int result = t;
  for (int p = 2; p * p <= t; ++p) {
    if (t % p == 0) {
      while (t % p == 0) t /= p;
      result -= result / p;
    }
  }
  if (t > 1) result -= result / t;
  return result;
}

}  // namespace

Sigma sigma_for_norm(const Int& abs_norm) {
  if (abs_norm <= 1) throw Error(ErrorCode::norm_too_small, "sigma needs |N(beta)| > 1");
  Sigma s{abs_norm - 1, abs_norm, Decimal(0)};
  if (abs_norm > 2) {
    s.value = boost::multiprecision::log(to_decimal(s.numerator_arg)) /
              boost::multiprecision::log(to_decimal(s.denominator_arg));
  }
  return s;
}

Sigma sigma(const AlgebraicInt& beta) { return sigma_for_norm(abs(norm(beta))); }

bool is_root_of_unity(const AlgebraicInt& alpha) {
  if (abs(norm(alpha)) != 1) return false;
  const int d = alpha.ring().degree();
  // phi(t) >= sqrt(t / 2), so every t with phi(t) <= d is below 2 d^2 + 2.
  int bound = 1;
  for (int t = 1; t <= 2 * d * d + 2; ++t) {
    if (euler_phi(t) <= d) bound = t;
  }
  const AlgebraicInt one = alpha.ring().one();
  AlgebraicInt x = alpha;
  for (int t = 1; t <= 2 * bound; ++t) {
    if (x == one) return true;
    x *= alpha;
  }
  return false;
}

void check_count_hypotheses(const AlgebraicInt& alpha, const AlgebraicInt& beta,
                            HypothesisMode mode) {
  require_same_ring(alpha, beta);
  if (mode == HypothesisMode::theorem) {
    (void)primes_above(beta.ring(), beta, kDefaultPadicPrecision, HypothesisMode::theorem);
  }
  if (alpha.is_zero() || !ideals_coprime(alpha, beta)) {
    throw Error(ErrorCode::not_coprime, "alpha and beta share a prime ideal");
  }
  if (is_root_of_unity(alpha)) throw Error(ErrorCode::root_of_unity, "alpha is a root of unity");
}

BoundConstants bound_constants(const AlgebraicInt& alpha, const AlgebraicInt& beta, unsigned K) {
  const auto models = primes_above(beta.ring(), beta, K, HypothesisMode::theorem);
  const UnitOrders u = combined_u(alpha, models);
  const LipschitzConstants lip = lipschitz_constants(alpha, u.product, models);
  BoundConstants c;
  c.u = u.product;
  c.u_lcm = u.lcm;
  c.m0 = lip.m0;
  c.n0 = lip.n0;
  Int prod_q = 1;
  for (const auto& P : models) prod_q *= P.q;
  const Int n_abs = abs(norm(beta));
  c.c0_tilde = ipow(prod_q, c.n0);
  c.c0 = c.u * ipow(n_abs, c.m0) * c.c0_tilde;
  c.c1 = c.c0 * (n_abs - 1);
  return c;
}

std::vector<std::uint64_t> count_checkpoints(const Int& abs_norm, std::uint64_t N) {
  std::vector<std::uint64_t> out;
  Int p = 1;
  while (p <= N) {
    out.push_back(to_u64(p));
    p *= abs_norm;
  }
  if (out.empty() || out.back() != N) out.push_back(N);
  return out;
}

BoundReport count_omitting(const CountRequest& req) {
  const AlgebraicInt& beta = req.dset.beta();
  require_same_ring(req.alpha, beta);
  if (req.b >= req.dset.size()) {
    throw Error(ErrorCode::invalid_argument, "digit index out of range for the digit set");
  }
  if (req.N == 0) throw Error(ErrorCode::invalid_argument, "N must be positive");
  check_count_hypotheses(req.alpha, beta, req.hypotheses);

  const ResidueTable table(req.dset);
  BoundReport report;
  report.sigma = sigma_for_norm(table.abs_norm());
  report.mode = req.mode;
  report.b = req.b;
  report.N = req.N;
  report.zero_digit_caveat = req.dset.zero_index() && *req.dset.zero_index() == req.b;

  CountContext ctx{req, table, {}, false, 0, 0, req.dset.zero_index()};
  const std::vector<std::uint64_t> checkpoints = count_checkpoints(table.abs_norm(), req.N);
  for (Int p = 1; p <= req.N; p *= table.abs_norm()) ctx.powers.push_back(to_u64(p));

  if (req.alpha.ring().degree() == 1 && req.dset.canonical() && beta[0] > 1 &&
      req.alpha[0] > 0 && beta[0].fits_ulong_p()) {
    ctx.fast = true;
    ctx.q = beta[0].get_ui();
    ctx.p = req.alpha[0].fits_ulong_p() ? req.alpha[0].get_ui() : 0;
  }
  report.fast_path = ctx.fast;

  CountState state;
  state.prefix_counts.assign(ctx.powers.size(), 0);
  if (req.resume) {
    if (req.resume->prefix_counts.size() != ctx.powers.size() || req.resume->next_n == 0 ||
        req.resume->next_n > req.N + 1) {
      throw Error(ErrorCode::invalid_argument, "resume state does not match this request");
    }
    state = *req.resume;
  }

  const unsigned jobs = std::max(1u, req.jobs);
  while (state.next_n <= req.N) {
    // A round ends at the next power checkpoint so progress lands on it.
    auto next_power = std::lower_bound(ctx.powers.begin(), ctx.powers.end(), state.next_n);
    std::uint64_t round_end = next_power == ctx.powers.end() ? req.N : *next_power;
    const std::uint64_t span = round_end - state.next_n + 1;
    const std::uint64_t blocks = std::min<std::uint64_t>(jobs, span);
    std::vector<BlockResult> results(blocks);
    std::vector<std::exception_ptr> errors(blocks);
    auto work = [&](std::uint64_t i) {
      const std::uint64_t lo = state.next_n + span * i / blocks;
      const std::uint64_t hi = state.next_n + span * (i + 1) / blocks - 1;
      try {
        results[i] = ctx.run_block(lo, hi);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (blocks == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::uint64_t i = 1; i < blocks; ++i) threads.emplace_back(work, i);
      work(0);
      for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& r : results) {
      state.hits.insert(state.hits.end(), r.hits.begin(), r.hits.end());
      for (std::size_t k = 0; k < r.prefix.size(); ++k) state.prefix_counts[k] += r.prefix[k];
    }
    state.next_n = round_end + 1;
    if (req.progress && next_power != ctx.powers.end()) req.progress(state);
  }

  report.hits = std::move(state.hits);
  for (std::uint64_t c : checkpoints) {
    CountPoint point;
    point.N = c;
    point.M = static_cast<std::uint64_t>(
        std::upper_bound(report.hits.begin(), report.hits.end(), c) - report.hits.begin());
    point.ratio = ratio_of(point.M, c, report.sigma.value);
    auto it = std::lower_bound(ctx.powers.begin(), ctx.powers.end(), c);
    if (it != ctx.powers.end() && *it == c) {
      point.power_checkpoint = true;
      point.prefix_count = state.prefix_counts[static_cast<std::size_t>(it - ctx.powers.begin())];
    }
    if (report.counts.empty() || point.ratio > report.max_ratio) {
      report.max_ratio = point.ratio;
      report.max_ratio_at = c;
    }
    report.counts.push_back(point);
  }

  try {
    report.constants = bound_constants(req.alpha, beta);
  } catch (const Error&) {
    if (req.hypotheses == HypothesisMode::theorem) throw;
  }

  const bool classical = req.alpha.ring().degree() == 1 && req.alpha[0] == 2 && beta[0] == 3 &&
                         req.dset.canonical() && req.b == 2;
  if (classical) {
    const Decimal bound("1.62");
    bool ok = true;
    for (std::size_t i = 0; i < report.hits.size(); ++i) {
      if (ratio_of(i + 1, report.hits[i], report.sigma.value) > bound) ok = false;
    }
    report.narkiewicz_ok = ok;
  }
  return report;
}

NarkiewiczReport narkiewicz_check(std::uint64_t N) {
  const NumberRing z = NumberRing::create({0, 1});
  const AlgebraicInt three = z.from_int(3);
  CountRequest req{z.from_int(2), digit_set_canonical(z, three)};
  req.b = 2;
  req.N = N;
  req.mode = CountMode::radix;
  const BoundReport counted = count_omitting(req);

  NarkiewiczReport out;
  out.N = N;
  out.max_ratio = 0;
  const Decimal bound("1.62");
  // M is a step function and N^sigma increases, so the ratio peaks where M jumps.
  for (std::size_t i = 0; i < counted.hits.size(); ++i) {
    const Decimal r = ratio_of(i + 1, counted.hits[i], counted.sigma.value);
    out.table.emplace_back(counted.hits[i], r);
    if (r > out.max_ratio) {
      out.max_ratio = r;
      out.max_ratio_at = counted.hits[i];
    }
    if (r > bound) out.ok = false;
  }
  return out;
}

std::vector<GapSample> exhaustive_gap_samples(std::uint64_t u, std::uint64_t max_n) {
  std::vector<GapSample> out;
  for (std::uint64_t l = 0; l < u; ++l) {
    for (std::uint64_t n = 0; n <= max_n; ++n) {
      for (std::uint64_t m = n + 1; m <= max_n; ++m) out.push_back({l, n, m});
    }
  }
  return out;
}

GapReport verify_gap_lemma(const AlgebraicInt& alpha, const DigitSet& dset, std::size_t k,
                           const std::vector<GapSample>& sample, const GapOptions& options) {
  const AlgebraicInt& beta = dset.beta();
  require_same_ring(alpha, beta);
  check_count_hypotheses(alpha, beta, HypothesisMode::theorem);
  const auto models = primes_above(beta.ring(), beta, options.K, HypothesisMode::theorem);

  GapReport report;
  report.k = k;
  report.constants = bound_constants(alpha, beta, options.K);
  const auto n0 = static_cast<long>(report.constants.n0);

  std::map<Int, long> exponent_by_q;
  report.product_modulus = 1;
  for (const auto& P : models) {
    const long ex = static_cast<long>(k) * P.e - n0;
    auto [it, inserted] = exponent_by_q.emplace(P.q, ex);
    if (!inserted) it->second = std::max(it->second, ex);
    const Int factor = ipow(P.q, static_cast<unsigned long>(ex < 0 ? -ex : ex));
    if (ex >= 0) report.product_modulus *= Rational(factor);
    else report.product_modulus /= Rational(factor);
  }
  report.required_modulus = 1;
  for (const auto& [q, ex] : exponent_by_q) {
    if (ex > 0) report.required_modulus *= ipow(q, static_cast<unsigned long>(ex));
  }

  const ResidueTable table(dset);
  const AlgebraicInt alpha_u = pow(alpha, report.constants.u);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>> cache;
  auto prefix = [&](std::uint64_t l, std::uint64_t n) -> const std::vector<std::size_t>& {
    auto key = std::make_pair(l, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const AlgebraicInt x = pow(alpha, l) * pow(alpha_u, n);
      it = cache.emplace(key, beta_digits(x, table, dset, k)).first;
    }
    return it->second;
  };

  for (const GapSample& s : sample) {
    ++report.pairs_checked;
    if (s.n == s.m) continue;
    if (prefix(s.l, s.n) != prefix(s.l, s.m)) continue;
    ++report.pairs_sharing_prefix;
    const Int diff = Int(s.n > s.m ? s.n - s.m : s.m - s.n);
    if (diff % report.required_modulus != 0) {
      report.violations.push_back(s);
      if (options.strict) {
        throw Error(ErrorCode::hypothesis_violated,
                    "exponents " + std::to_string(s.n) + " and " + std::to_string(s.m) +
                        " share " + std::to_string(k) + " digits but " +
                        report.required_modulus.get_str() + " does not divide their difference");
      }
    }
  }

  // Word classes over one full period of exponents, when small enough to enumerate.
  const Int classes_span = ipow(table.abs_norm(), k);
  if (fits_u64(report.constants.u) && classes_span <= 1'000'000) {
    const std::uint64_t span = to_u64(classes_span);
    const std::uint64_t u = to_u64(report.constants.u);
    for (std::uint64_t l = 0; l < u && span * u <= 4'000'000; ++l) {
      std::map<std::vector<std::size_t>, std::uint64_t> sizes;
      AlgebraicInt x = pow(alpha, l);
      for (std::uint64_t n = 0; n < span; ++n) {
        const auto c = ++sizes[beta_digits(x, table, dset, k)];
        report.max_class_size = std::max(report.max_class_size, c);
        x *= alpha_u;
      }
    }
  }
  return report;
}

}  // namespace betadix

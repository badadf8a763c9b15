#include "betadix_cli/run.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <betadix/counting.hpp>
#include <betadix/digits_extra.hpp>
#include <betadix/error.hpp>
#include <betadix/expansion.hpp>
#include <betadix/format.hpp>
#include <betadix/padic.hpp>
#include <betadix/serialize.hpp>

namespace betadix::cli {

namespace {

[[noreturn]] void missing(const char* flag) {
  throw Error(ErrorCode::invalid_argument, std::string(flag) + " is required for this command");
}

NumberRing make_ring(const ExperimentManifest& m) {
  return NumberRing::create(parse_poly(m.ring), {m.check_irreducible});
}

AlgebraicInt need_element(const NumberRing& ring, const std::optional<std::string>& text,
                          const char* flag) {
  if (!text) missing(flag);
  return parse_element(ring, *text);
}

DigitSet make_digits(const NumberRing& ring, const AlgebraicInt& beta, const ExperimentManifest& m) {
  if (!m.digits) return digit_set_canonical(ring, beta);
  return DigitSet::from_elements(beta, parse_element_list(ring, *m.digits));
}

Int need_int(const std::optional<std::string>& text, const char* flag) {
  if (!text) missing(flag);
  return parse_int(*text);
}

// Rational elements as JSON integers, others as polynomial text.
Json element_value(const AlgebraicInt& x) {
  if (x.is_rational()) return int_to_json(x[0]);
  return render_element(x);
}

std::size_t digit_index_of(const DigitSet& dset, const ExperimentManifest& m) {
  const AlgebraicInt b = need_element(dset.ring(), m.digit, "--digit");
  auto idx = dset.find(b);
  if (!idx) {
    throw Error(ErrorCode::invalid_argument, "--digit " + *m.digit + " is not in the digit set");
  }
  return *idx;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int do_expand(const ExperimentManifest& m, std::ostream& out) {
  const NumberRing ring = make_ring(m);
  const AlgebraicInt beta = need_element(ring, m.beta, "--beta");
  const DigitSet dset = make_digits(ring, beta, m);
  const ResidueTable table(dset);
  const AlgebraicInt x = need_element(ring, m.value ? m.value : m.alpha, "--value");

  const BetaExpansion exp = beta_expansion(x, table, dset);
  Json j{{"ring", to_json(ring)}, {"beta", render_element(beta)}, {"digit_set", to_json(dset)},
         {"value", render_element(x)}, {"expansion", to_json(exp)},
         {"rendering", render_expansion(exp, dset)}};
  std::vector<std::size_t> prefix;
  if (m.k) {
    prefix = beta_digits(x, table, dset, *m.k);
    Json values = Json::array();
    for (std::size_t i : prefix) values.push_back(element_value(dset.digit(i)));
    j["digits"] = values;
  }
  if (dset.zero_index()) {
    if (exp.zero_tail()) {
      Json word = Json::array();
      for (std::size_t i : exp.preperiod) word.push_back(element_value(dset.digit(i)));
      j["radix"] = word;
    } else {
      j["radix"] = nullptr;  // does not terminate
    }
  }

  switch (m.format) {
    case OutputFormat::json: emit(out, j); break;
    case OutputFormat::csv: {
      out << "position,digit\n";
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        out << i << ',' << render_element(dset.digit(prefix[i])) << '\n';
      }
      break;
    }
    case OutputFormat::text: {
      if (m.k) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
          out << (i ? "," : "") << render_element(dset.digit(prefix[i]));
        }
        out << '\n';
      }
      out << render_expansion(exp, dset) << '\n';
      break;
    }
  }
  return kExitOk;
}

int do_cns_check(const ExperimentManifest& m, std::ostream& out) {
  const NumberRing ring = make_ring(m);
  const AlgebraicInt beta = need_element(ring, m.beta, "--beta");
  const CnsVerdict v = cns_check(ring, beta);
  Json j = to_json(v);
  switch (m.format) {
    case OutputFormat::json: emit(out, j); break;
    case OutputFormat::csv:
    case OutputFormat::text: {
      std::string cycle;
      if (v.witness_cycle) {
        for (std::size_t i = 0; i < v.witness_cycle->size(); ++i) {
          cycle += (i ? ";" : "") + render_element((*v.witness_cycle)[i]);
        }
      }
      if (m.format == OutputFormat::csv) {
        out << "is_cns,expansivity_ok,closure_size,witness_cycle\n"
            << v.is_cns << ',' << v.expansivity_ok << ',' << v.closure_size << ',' << cycle << '\n';
      } else {
        out << "is_cns: " << (v.is_cns ? "true" : "false") << '\n'
            << "expansivity_ok: " << (v.expansivity_ok ? "true" : "false") << '\n';
        if (v.witness_cycle) out << "witness_cycle: " << cycle << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    f << text;
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

int do_count(const ExperimentManifest& m, std::ostream& out, std::ostream& err, bool bound_report) {
  const NumberRing ring = make_ring(m);
  const AlgebraicInt alpha = need_element(ring, m.alpha, "--alpha");
  const AlgebraicInt beta = need_element(ring, m.beta, "--beta");
  const DigitSet dset = make_digits(ring, beta, m);
  if (!m.N) missing("--N");

  CountRequest req{alpha, dset};
  req.b = digit_index_of(dset, m);
  req.N = *m.N;
  req.mode = m.count_mode;
  req.hypotheses = m.hypotheses;
  req.jobs = m.jobs;

  Json manifest_key = render(m);
  manifest_key.erase("format");
  manifest_key.erase("jobs");
  if (m.checkpoint && std::filesystem::exists(*m.checkpoint)) {
    std::ifstream f(*m.checkpoint);
    const Json saved = Json::parse(f);
    if (saved.at("manifest") != manifest_key) {
      throw Error(ErrorCode::invalid_argument,
                  "checkpoint " + *m.checkpoint + " belongs to a different experiment");
    }
    req.resume = count_state_from_json(saved.at("state"));
    err << Json{{"resume", {{"next_n", req.resume->next_n}}}}.dump() << '\n';
  }
  req.progress = [&](const CountState& s) {
    err << Json{{"progress", {{"next_n", s.next_n}, {"M", s.hits.size()}}}}.dump() << '\n';
    if (m.checkpoint) {
      write_atomically(*m.checkpoint, Json{{"manifest", manifest_key}, {"state", to_json(s)}}.dump());
    }
  };

  const BoundReport report = count_omitting(req);
  Json j = to_json(report);
  std::optional<NarkiewiczReport> nark;
  if (bound_report) {
    if (report.narkiewicz_ok) nark = narkiewicz_check(req.N);
    if (nark) j["narkiewicz"] = to_json(*nark);
    if (report.constants) {
      j["bounded_by_formula"] = report.max_ratio <= to_decimal(report.constants->c1);
    }
  }

  switch (m.format) {
    case OutputFormat::json: emit(out, j); break;
    case OutputFormat::csv: out << to_csv(report); break;
    case OutputFormat::text: {
      out << "M_b(N=" << report.N << ") = " << report.hits.size() << '\n'
          << "sigma = " << render_decimal(report.sigma.value) << '\n'
          << "max M/N^sigma = " << render_decimal(report.max_ratio) << " at N=" << report.max_ratio_at
          << '\n';
      if (report.constants) out << "C1 (formula) = " << report.constants->c1.get_str() << '\n';
      if (report.narkiewicz_ok) out << "narkiewicz_ok = " << (*report.narkiewicz_ok ? "true" : "false") << '\n';
      out << "hits:\n" << hits_text(report);
      break;
    }
  }
  return kExitOk;
}

int do_interpolate(const ExperimentManifest& m, std::ostream& out) {
  const NumberRing ring = make_ring(m);
  const AlgebraicInt alpha = need_element(ring, m.alpha, "--alpha");
  const AlgebraicInt beta = need_element(ring, m.beta, "--beta");
  const unsigned K = m.K.value_or(kDefaultPadicPrecision);
  std::vector<PrimeIdealModel> models;
  for (auto& P : primes_above(ring, beta, K, m.hypotheses)) {
    if (P.admissible()) models.push_back(std::move(P));
  }
  const UnitOrders orders = combined_u(alpha, models);
  const Int u = m.u ? parse_int(*m.u) : orders.product;
  const Int l = Int(static_cast<unsigned long>(m.l.value_or(0)));
  const Int x = m.value ? parse_int(*m.value) : Int(0);
  const LipschitzConstants lip = lipschitz_constants(alpha, u, models);

  Json per_prime = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const PrimeIdealModel& P = models[i];
    const PadicInt g = interpolate_G(alpha, l, u, PadicInt(x, P.q, K), P);
    Json row{{"model", to_json(P)}, {"u_p", int_to_json(orders.per_prime[i])},
             {"log_valuation", lip.per_prime[i]}, {"G", to_json(g)}};
    if (x >= 0) {
      const PadicInt a = evaluate_at(alpha, P);
      Int direct;
      const Int e = l + u * x;
      mpz_powm(direct.get_mpz_t(), a.value().get_mpz_t(), e.get_mpz_t(), a.modulus().get_mpz_t());
      row["direct_power_agrees"] = direct == g.value();
    }
    text << "q=" << P.q.get_str() << " G=" << g.value().get_str() << " (mod " << P.q.get_str() << "^" << K << ")\n";
    per_prime.push_back(row);
  }
  Json j{{"alpha", render_element(alpha)}, {"beta", render_element(beta)}, {"K", K},
         {"l", int_to_json(l)}, {"u", int_to_json(u)}, {"u_product", int_to_json(orders.product)},
         {"u_lcm", int_to_json(orders.lcm)}, {"x", int_to_json(x)}, {"m0", lip.m0}, {"n0", lip.n0},
         {"primes", per_prime}};
  if (m.format == OutputFormat::text) out << text.str();
  else if (m.format == OutputFormat::csv) {
    out << "q,K,G\n";
    for (const auto& row : per_prime) {
      out << row["model"]["q"].dump() << ',' << K << ',' << row["G"]["value"].get<std::string>() << '\n';
    }
  } else emit(out, j);
  return kExitOk;
}

int do_gap_check(const ExperimentManifest& m, std::ostream& out, std::ostream& err) {
  const NumberRing ring = make_ring(m);
  const AlgebraicInt alpha = need_element(ring, m.alpha, "--alpha");
  const AlgebraicInt beta = need_element(ring, m.beta, "--beta");
  const DigitSet dset = make_digits(ring, beta, m);
  const std::uint64_t k = m.k.value_or(3);
  const std::uint64_t max_n = m.max_n.value_or(200);
  GapOptions options;
  options.strict = false;
  options.K = m.K.value_or(kDefaultPadicPrecision);
  const BoundConstants c = bound_constants(alpha, beta, options.K);
  if (!fits_u64(c.u)) throw Error(ErrorCode::unsupported, "u does not fit 64 bits");
  const std::uint64_t u = to_u64(c.u);

  std::vector<GapSample> sample;
  if (m.samples) {
    std::mt19937_64 rng(m.seed);
    std::uniform_int_distribution<std::uint64_t> pick_l(0, u - 1), pick_n(0, max_n);
    for (std::uint64_t i = 0; i < *m.samples; ++i) sample.push_back({pick_l(rng), pick_n(rng), pick_n(rng)});
  } else {
    sample = exhaustive_gap_samples(u, max_n);
  }
  const GapReport report = verify_gap_lemma(alpha, dset, k, sample, options);
  if (m.format == OutputFormat::text) {
    out << "k=" << report.k << " pairs=" << report.pairs_checked << " shared=" << report.pairs_sharing_prefix
        << " violations=" << report.violations.size() << " C0_tilde=" << report.constants.c0_tilde.get_str()
        << '\n';
  } else if (m.format == OutputFormat::csv) {
    out << "k,pairs_checked,pairs_sharing_prefix,violations,required_modulus,C0_tilde,max_class_size\n"
        << report.k << ',' << report.pairs_checked << ',' << report.pairs_sharing_prefix << ','
        << report.violations.size() << ',' << report.required_modulus.get_str() << ','
        << report.constants.c0_tilde.get_str() << ',' << report.max_class_size << '\n';
  } else {
    emit(out, to_json(report));
  }
  if (!report.violations.empty()) {
    err << Json{{"error", std::string(error_code_name(ErrorCode::hypothesis_violated))},
                {"message", "gap divisibility refuted by a sampled pair"}}.dump() << '\n';
    return kExitError;
  }
  return kExitOk;
}

int do_persistence(const ExperimentManifest& m, std::ostream& out) {
  const Int first = need_int(m.value, "--value");
  const unsigned long base = m.base.value_or(10);
  const Int last = m.N ? Int(static_cast<unsigned long>(*m.N)) : first;
  std::vector<PersistenceRecord> records;
  for (Int n = first; n <= last; ++n) records.push_back(persistence(n, base));
  if (m.format == OutputFormat::csv) {
    out << persistence_csv_header();
    for (const auto& r : records) out << to_csv_row(r);
  } else if (m.format == OutputFormat::text) {
    for (const auto& r : records) {
      for (std::size_t i = 0; i < r.orbit.size(); ++i) out << (i ? "->" : "") << r.orbit[i].get_str();
      out << " l=" << r.l << '\n';
    }
  } else if (records.size() == 1) {
    emit(out, to_json(records.front()));
  } else {
    Json rows = Json::array();
    std::size_t max_l = 0;
    for (const auto& r : records) {
      rows.push_back(to_json(r));
      max_l = std::max(max_l, r.l);
    }
    emit(out, Json{{"base", base}, {"max_l", max_l}, {"records", rows}});
  }
  return kExitOk;
}

int do_practical(const ExperimentManifest& m, std::ostream& out) {
  const Int n = need_int(m.value, "--value");
  Json j;
  if (m.central_binomial) {
    if (n < 1 || !fits_u64(n)) throw Error(ErrorCode::invalid_argument, "--value must be a positive 64-bit n");
    const CentralBinomialRecord rec = central_binomial_practical(to_u64(n));
    if (rec.implication_violated) {
      throw Error(ErrorCode::hypothesis_violated,
                  "C(2n, n) is practical although n is a power of 2 omitting the ternary digit 2");
    }
    j = to_json(rec);
  } else {
    j = Json{{"n", int_to_json(n)}, {"practical", is_practical(n)},
             {"method", n <= 10'000 ? "subset-sum" : "divisor-sum criterion"}};
  }
  if (m.format == OutputFormat::json) emit(out, j);
  else if (m.format == OutputFormat::csv) out << "n,practical\n" << n.get_str() << ',' << j["practical"].get<bool>() << '\n';
  else out << (j["practical"].get<bool>() ? "practical" : "not practical") << '\n';
  return kExitOk;
}

}  // namespace

std::string error_code_help() {
  return "Error codes (stderr JSON {\"error\": CODE, \"message\": ...}):\n"
         "  InvalidArgument        malformed input or flag combination (exit 1)\n"
         "  NotMonic               ring polynomial is not monic (exit 1)\n"
         "  Reducible              ring polynomial is reducible over Q (exit 1)\n"
         "  RingMismatch           elements from different rings (exit 1)\n"
         "  DivisionByZero         division by the zero element (exit 1)\n"
         "  ZeroDivisor            singular multiplication matrix (exit 1)\n"
         "  NormTooSmall           |N(beta)| <= 1 (exit 1)\n"
         "  NotRepresentative      digits are not a residue system mod beta (exit 1)\n"
         "  StateBudgetExceeded    digit-strip orbit too long (exit 1)\n"
         "  NotTerminating         radix expansion does not terminate (exit 1)\n"
         "  ClosureBudgetExceeded  CNS closure too large (exit 1)\n"
         "  RamifiedPrime          beta is divisible by a ramified prime (exit 2)\n"
         "  NotDegreeOne           beta is divisible by a prime of inertia degree > 1 (exit 2)\n"
         "  NotCoprime             alpha and beta share a prime (exit 2)\n"
         "  RootOfUnity            alpha is a root of unity (exit 2)\n"
         "  PrecisionExhausted     p-adic precision cap reached (exit 1)\n"
         "  OutOfDomain            p-adic log/exp argument outside its disc (exit 1)\n"
         "  HypothesisViolated     a proved inequality failed: implementation bug (exit 1)\n"
         "  Unsupported            input beyond implemented limits (exit 1)\n"
         "  Internal               unexpected failure (exit 1)\n";
}

int run(const ExperimentManifest& m, std::ostream& out, std::ostream& err) {
  try {
    switch (m.command) {
      case Command::expand: return do_expand(m, out);
      case Command::cns_check: return do_cns_check(m, out);
      case Command::count: return do_count(m, out, err, false);
      case Command::bound_report: return do_count(m, out, err, true);
      case Command::interpolate: return do_interpolate(m, out);
      case Command::gap_check: return do_gap_check(m, out, err);
      case Command::persistence: return do_persistence(m, out);
      case Command::practical: return do_practical(m, out);
    }
    return kExitError;
  } catch (const NotTerminating& e) {
    Json cycle = Json::array();
    for (const auto& x : e.cycle()) cycle.push_back(render_element(x));
    err << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"cycle", cycle}}.dump()
        << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return is_hypothesis_rejection(e.code()) ? kExitHypothesis : kExitError;
  } catch (const std::exception& e) {
    err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitError;
  }
}

}  // namespace betadix::cli

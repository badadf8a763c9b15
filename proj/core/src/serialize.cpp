#include "betadix/serialize.hpp"

#include <sstream>

#include "betadix/error.hpp"
#include "betadix/format.hpp"

namespace betadix {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::invalid_argument, "malformed JSON: " + what);
}

Json int_list(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

std::vector<Int> int_list_from(const Json& j) {
  if (!j.is_array()) malformed("expected an integer list");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

template <class T>
Json index_list(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x);
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  if (x > 0 && fits_u64(x)) return Json(to_u64(x));
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  malformed("expected an integer");
}

Json to_json(const NumberRing& ring) { return Json{{"f", int_list(ring.modulus())}}; }

NumberRing ring_from_json(const Json& j, NumberRing::Options options) {
  return NumberRing::create(int_list_from(field(j, "f")), options);
}

Json to_json(const AlgebraicInt& a) { return Json{{"coeffs", int_list(a.coeffs())}}; }

AlgebraicInt element_from_json(const NumberRing& ring, const Json& j) {
  std::vector<Int> coeffs = int_list_from(field(j, "coeffs"));
  if (coeffs.size() != static_cast<std::size_t>(ring.degree())) {
    malformed("element has " + std::to_string(coeffs.size()) + " coefficients, ring degree is " +
              std::to_string(ring.degree()));
  }
  return ring.element(std::move(coeffs));
}

Json to_json(const DigitSet& d) {
  if (d.canonical()) return Json{{"canonical", d.size()}};
  Json out = Json::array();
  for (const auto& x : d.elements()) out.push_back(int_list(x.coeffs()));
  return out;
}

DigitSet digit_set_from_json(const AlgebraicInt& beta, const Json& j) {
  if (j.is_object()) {
    DigitSet d = digit_set_canonical(beta.ring(), beta);
    if (Int(static_cast<unsigned long>(d.size())) != int_from_json(field(j, "canonical"))) {
      malformed("canonical digit count does not match |N(beta)|");
    }
    return d;
  }
  if (!j.is_array()) malformed("digit set must be a list or {\"canonical\": m}");
  std::vector<AlgebraicInt> digits;
  for (const auto& x : j) digits.push_back(beta.ring().element(int_list_from(x)));
  return DigitSet::from_elements(beta, std::move(digits));
}

Json to_json(const BetaExpansion& e) {
  return Json{{"preperiod", index_list(e.preperiod)}, {"period", index_list(e.period)}};
}

BetaExpansion expansion_from_json(const Json& j, const DigitSet& d) {
  BetaExpansion e;
  e.preperiod = field(j, "preperiod").get<std::vector<std::size_t>>();
  e.period = field(j, "period").get<std::vector<std::size_t>>();
  e.alphabet_size = d.size();
  e.zero_index = d.zero_index();
  return e;
}

Json to_json(const PrimeIdealModel& P) {
  Json out{{"q", int_to_json(P.q)}, {"root", int_to_json(P.root)}, {"K", P.K}, {"e", P.e}};
  if (!P.unramified) out["unramified"] = false;
  if (!P.degree_one) {
    out["degree_one"] = false;
    out["residual_exponent"] = P.residual_exponent;
  }
  return out;
}

PrimeIdealModel model_from_json(const Json& j) {
  PrimeIdealModel P;
  P.q = int_from_json(field(j, "q"));
  P.root = int_from_json(field(j, "root"));
  P.K = field(j, "K").get<unsigned>();
  P.e = field(j, "e").get<unsigned>();
  P.unramified = j.value("unramified", true);
  P.degree_one = j.value("degree_one", true);
  P.residual_exponent = j.value("residual_exponent", 0u);
  return P;
}

Json to_json(const PadicInt& x) {
  return Json{{"q", int_to_json(x.q())}, {"K", x.precision()}, {"value", x.value().get_str()}};
}

PadicInt padic_from_json(const Json& j) {
  return PadicInt(int_from_json(field(j, "value")), int_from_json(field(j, "q")),
                  field(j, "K").get<unsigned>());
}

Json to_json(const Sigma& s) {
  return Json{{"log_numerator", int_to_json(s.numerator_arg)},
              {"log_denominator", int_to_json(s.denominator_arg)},
              {"decimal", render_decimal(s.value)}};
}

Json to_json(const CnsVerdict& v) {
  Json out{{"is_cns", v.is_cns}, {"expansivity_ok", v.expansivity_ok},
           {"closure_size", v.closure_size}};
  if (v.witness_cycle) {
    Json cycle = Json::array();
    for (const auto& x : *v.witness_cycle) cycle.push_back(render_element(x));
    out["witness_cycle"] = cycle;
  } else {
    out["witness_cycle"] = nullptr;
  }
  return out;
}

Json to_json(const BoundConstants& c) {
  return Json{{"u", int_to_json(c.u)},         {"u_lcm", int_to_json(c.u_lcm)},
              {"m0", c.m0},                    {"n0", c.n0},
              {"C0_tilde", int_to_json(c.c0_tilde)}, {"C0", int_to_json(c.c0)},
              {"C1", int_to_json(c.c1)}};
}

std::string mode_name(CountMode m) { return m == CountMode::radix ? "radix" : "beta-adic"; }

std::string mode_name(HypothesisMode m) {
  return m == HypothesisMode::theorem ? "theorem" : "exploration";
}

Json to_json(const BoundReport& r) {
  Json counts = Json::array();
  for (const auto& p : r.counts) {
    Json row{{"N", p.N}, {"M", p.M}, {"ratio", render_decimal(p.ratio)},
             {"power_checkpoint", p.power_checkpoint}};
    if (p.prefix_count) row["prefix_count"] = *p.prefix_count;
    counts.push_back(row);
  }
  Json hits = Json::array();
  for (std::size_t i = 0; i < r.hits.size() && i < kMaxSerializedHits; ++i) hits.push_back(r.hits[i]);
  Json out{{"mode", mode_name(r.mode)},
           {"b", r.b},
           {"N", r.N},
           {"M", r.hits.size()},
           {"sigma", to_json(r.sigma)},
           {"counts", counts},
           {"hits", hits},
           {"hits_truncated", r.hits.size() > kMaxSerializedHits},
           {"max_ratio", render_decimal(r.max_ratio)},
           {"max_ratio_at", r.max_ratio_at}};
  out["constants"] = r.constants ? to_json(*r.constants) : Json(nullptr);
  if (r.constants) {
    out["C1_formula_bound"] = int_to_json(r.constants->c1);
  }
  out["narkiewicz_ok"] = r.narkiewicz_ok ? Json(*r.narkiewicz_ok) : Json(nullptr);
  if (r.zero_digit_caveat) {
    out["caveat"] = r.mode == CountMode::radix
                        ? "b is the zero digit: counted on the finite radix word only"
                        : "b is the zero digit: an eventually-zero tail counts as containing it";
  }
  return out;
}

Json to_json(const NarkiewiczReport& r) {
  Json table = Json::array();
  for (const auto& [n, ratio] : r.table) table.push_back(Json{{"N", n}, {"ratio", render_decimal(ratio)}});
  return Json{{"ok", r.ok},
              {"N", r.N},
              {"bound", "1.62"},
              {"max_ratio", render_decimal(r.max_ratio)},
              {"max_ratio_at", r.max_ratio_at},
              {"jumps", table}};
}

Json to_json(const GapReport& r) {
  Json violations = Json::array();
  for (const auto& s : r.violations) violations.push_back(Json{{"l", s.l}, {"n", s.n}, {"m", s.m}});
  return Json{{"k", r.k},
              {"pairs_checked", r.pairs_checked},
              {"pairs_sharing_prefix", r.pairs_sharing_prefix},
              {"violations", violations},
              {"required_modulus", int_to_json(r.required_modulus)},
              {"product_modulus", r.product_modulus.get_str()},
              {"max_class_size", r.max_class_size},
              {"constants", to_json(r.constants)}};
}

Json to_json(const PersistenceRecord& r) {
  return Json{{"n", int_to_json(r.n)}, {"base", r.base}, {"l", r.l}, {"orbit", int_list(r.orbit)}};
}

Json to_json(const CentralBinomialRecord& r) {
  return Json{{"n", r.n},
              {"value", r.value.get_str()},
              {"practical", r.practical},
              {"implication_applies", r.implication_applies},
              {"implication_violated", r.implication_violated}};
}

Json to_json(const CountState& s) {
  return Json{{"next_n", s.next_n}, {"hits", index_list(s.hits)},
              {"prefix_counts", index_list(s.prefix_counts)}};
}

CountState count_state_from_json(const Json& j) {
  CountState s;
  s.next_n = field(j, "next_n").get<std::uint64_t>();
  s.hits = field(j, "hits").get<std::vector<std::uint64_t>>();
  s.prefix_counts = field(j, "prefix_counts").get<std::vector<std::uint64_t>>();
  return s;
}

std::string to_csv(const BoundReport& r) {
  std::ostringstream os;
  os << "N,M_b,ratio,power_checkpoint,prefix_count\n";
  for (const auto& p : r.counts) {
    os << p.N << ',' << p.M << ',' << render_decimal(p.ratio) << ','
       << (p.power_checkpoint ? 1 : 0) << ',';
    if (p.prefix_count) os << *p.prefix_count;
    os << '\n';
  }
  return os.str();
}

std::string hits_text(const BoundReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.hits.size() && i < kMaxSerializedHits; ++i) os << r.hits[i] << '\n';
  return os.str();
}

std::string persistence_csv_header() { return "n,base,l,orbit\n"; }

std::string to_csv_row(const PersistenceRecord& r) {
  std::string orbit;
  for (std::size_t i = 0; i < r.orbit.size(); ++i) {
    if (i) orbit += ';';
    orbit += r.orbit[i].get_str();
  }
  return r.n.get_str() + ',' + std::to_string(r.base) + ',' + std::to_string(r.l) + ',' + orbit + '\n';
}

}  // namespace betadix

#include <doctest.h>

#include <betadix/error.hpp>
#include <betadix/format.hpp>
#include <betadix/serialize.hpp>

#include "support.hpp"

using namespace betadix;
using test::ints;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("polynomial grammar") {
  CHECK(parse_poly("x^2+1") == ints({1, 0, 1}));
  CHECK(parse_poly("x") == ints({0, 1}));
  CHECK(parse_poly(" x ^ 3 - x - 1 ") == ints({-1, -1, 0, 1}));
  CHECK(parse_poly("-1+i") == ints({-1, 1}));
  CHECK(parse_poly("2t") == ints({0, 2}));
  CHECK(parse_poly("3*x^2-2*x+2") == ints({2, -2, 3}));
  CHECK(parse_poly("x+x") == ints({0, 2}));
  CHECK(parse_poly("123456789012345678901234567890") == std::vector<Int>{Int("123456789012345678901234567890")});
  for (const char* bad : {"", "x^", "2**x", "x+", "y", "1.5", "x^-1", "(x+1)"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_poly(bad); }) == ErrorCode::invalid_argument);
  }
}

TEST_CASE("polynomial rendering round trips") {
  CHECK(render_poly(ints({1, -3, 1})) == "x^2-3*x+1");
  CHECK(render_poly(ints({0})) == "0");
  CHECK(render_poly(ints({-1, 1})) == "x-1");
  CHECK(render_poly(ints({0, -1})) == "-x");
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Int> p(1 + rng() % 6);
    for (auto& x : p) x = c(rng);
    poly::trim(p);
    if (p.empty()) continue;
    CHECK(parse_poly(render_poly(p)) == p);
  }
}

TEST_CASE("elements reduce modulo the ring polynomial") {
  const NumberRing zi = test::Zi();
  CHECK(parse_element(zi, "x^2") == zi.from_int(-1));
  CHECK(parse_element(zi, "1+i") == zi.element(ints({1, 1})));
  CHECK(render_element(zi.element(ints({-1, 2}))) == "2*x-1");
  const auto list = parse_element_list(zi, "0,1, x ,1+x");
  REQUIRE(list.size() == 4);
  CHECK(list[3] == zi.element(ints({1, 1})));
  CHECK(code_of([&] { parse_element_list(zi, "0,,1"); }) == ErrorCode::invalid_argument);
}

TEST_CASE("decimal rendering uses 30 significant digits") {
  const std::string s = render_decimal(Decimal(2) / 3);
  CHECK(s.rfind("0.6666", 0) == 0);
  std::size_t digits = 0;
  for (char ch : s) digits += (ch >= '0' && ch <= '9');
  CHECK(digits == 31);  // leading zero plus 30 significant digits
  CHECK(render_decimal(Decimal(0)).find('e') == std::string::npos);
  CHECK(to_decimal(Int("1000000000000000000000")) == Decimal("1e21"));
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(82);
  for (const NumberRing& ring : test::sample_rings()) {
    const Json jr = to_json(ring);
    CHECK(ring_from_json(jr).modulus() == ring.modulus());
    for (int trial = 0; trial < 50; ++trial) {
      AlgebraicInt a = test::random_element(ring, rng, 1000);
      if (trial % 5 == 0) a = pow(a, std::uint64_t{9});  // coefficients beyond 64 bits
      CHECK(element_from_json(ring, to_json(a)) == a);
    }
  }
  CHECK(int_from_json(int_to_json(Int("-98765432109876543210987654321"))) ==
        Int("-98765432109876543210987654321"));
  CHECK(int_to_json(Int(42)).is_number());

  const NumberRing z = test::Z();
  const AlgebraicInt two = z.from_int(2);
  const DigitSet d03 = DigitSet::from_elements(two, {z.from_int(0), z.from_int(3)});
  const Json jd = to_json(d03);
  CHECK(digit_set_from_json(two, jd).elements() == d03.elements());
  const DigitSet canonical = digit_set_canonical(z, z.from_int(3));
  CHECK(to_json(canonical) == Json::parse(R"({"canonical": 3})"));
  CHECK(digit_set_from_json(z.from_int(3), to_json(canonical)).canonical());

  const BetaExpansion e = beta_expansion(z.one(), ResidueTable(d03), d03);
  const Json je = to_json(e);
  CHECK(je == Json::parse(R"({"preperiod": [1], "period": [1, 0]})"));
  const BetaExpansion back = expansion_from_json(je, d03);
  CHECK(back.preperiod == e.preperiod);
  CHECK(back.period == e.period);

  const NumberRing zi = test::Zi();
  for (const auto& P : primes_above(zi, zi.from_int(65), 30)) CHECK(model_from_json(to_json(P)) == P);

  const PadicInt x(Int("123456789123456789"), 7, 30);
  CHECK(padic_from_json(to_json(x)) == x);

  CountState s{.next_n = 101, .hits = {2, 8}, .prefix_counts = {0, 1, 2}};
  const CountState s2 = count_state_from_json(to_json(s));
  CHECK(s2.next_n == 101);
  CHECK(s2.hits == s.hits);
  CHECK(s2.prefix_counts == s.prefix_counts);
}

TEST_CASE("malformed JSON is rejected") {
  const NumberRing zi = test::Zi();
  CHECK(code_of([&] { element_from_json(zi, Json::parse(R"({"coeffs": [1]})")); }) != ErrorCode::internal);
  CHECK(code_of([&] { element_from_json(zi, Json::parse(R"({"coeffs": ["a", 1]})")); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([&] { ring_from_json(Json::parse(R"({"g": [1, 1]})")); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { padic_from_json(Json::parse(R"({"q": 3})")); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { ring_from_json(Json::parse(R"({"f": [1, 2]})")); }) == ErrorCode::not_monic);
}

TEST_CASE("report serialization") {
  const NumberRing z = test::Z();
  CountRequest req{.alpha = z.from_int(2), .dset = digit_set_canonical(z, z.from_int(3)), .b = 2, .N = 100};
  const BoundReport r = count_omitting(req);
  const Json j = to_json(r);
  CHECK(j["hits"] == Json::parse("[2, 8]"));
  CHECK(j["mode"] == "radix");
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("N,M_b,ratio,power_checkpoint,prefix_count\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.counts.size()) + 1);
  CHECK(hits_text(r) == "2\n8\n");
  // Same input, same bytes.
  CHECK(to_json(count_omitting(req)).dump() == j.dump());

  const PersistenceRecord p = persistence(39, 10);
  CHECK(to_csv_row(p) == "39,10,3,39;27;14;4\n");
  CHECK(persistence_csv_header() == "n,base,l,orbit\n");
}

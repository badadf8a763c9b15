#include "betadix/format.hpp"

#include <cctype>
#include <sstream>

#include "betadix/error.hpp"

namespace betadix {

std::string render_decimal(const Decimal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Decimal to_decimal(const Int& x) { return Decimal(x.get_str()); }

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::invalid_argument,
              "cannot parse polynomial '" + std::string(text) + "': " + why);
}

bool is_var(char c) { return c == 'x' || c == 't' || c == 'i'; }

}  // namespace

Poly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) bad(text, "empty input");
  Poly p;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      bad(text, "expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Int coeff = 1;
    bool has_coeff = pos > start;
    if (has_coeff) coeff = Int(s.substr(start, pos - start));
    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) bad(text, "'*' without a coefficient");
      ++pos;
      if (pos >= s.size() || !is_var(s[pos])) bad(text, "expected variable after '*'");
    }
    if (pos < s.size() && is_var(s[pos])) {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t e0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == e0) bad(text, "missing exponent");
        exponent = std::stoul(s.substr(e0, pos - e0));
        if (exponent > 4096) bad(text, "exponent too large");
      }
    } else if (!has_coeff) {
      bad(text, "expected a term at offset " + std::to_string(start));
    }
    if (p.size() <= exponent) p.resize(exponent + 1, 0);
    p[exponent] += sign * coeff;
  }
  poly::trim(p);
  return p;
}

std::string render_poly(const Poly& p_in) {
  Poly p = p_in;
  poly::trim(p);
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Int& c = p[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

AlgebraicInt parse_element(const NumberRing& ring, std::string_view text) {
  return ring.element(parse_poly(text));
}

std::string render_element(const AlgebraicInt& a) { return render_poly(a.coeffs()); }

std::vector<AlgebraicInt> parse_element_list(const NumberRing& ring, std::string_view text) {
  std::vector<AlgebraicInt> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_element(ring, text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

}  // namespace betadix

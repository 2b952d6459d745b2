#include "rational.hpp"

#include <cctype>

#include "err.hpp"

namespace edim {

std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ParseError("invalid integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("invalid integer: '" + text + "'");
  }
  // BigInt's own parser accepts '-' but not '+'.
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw ParseError("empty rational");
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t));
  const BigInt num = parse_integer(strip(t.substr(0, slash)));
  const BigInt den = parse_integer(strip(t.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  // The component constructor rejects negative denominators.
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

bool rational_is_square(const Rational& r, Rational* sqrt_out) {
  if (r < 0) return false;
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  if (sqrt_out != nullptr) *sqrt_out = Rational(sn, sd);
  return true;
}

void squarefree_decompose(const BigInt& n, BigInt& s_out, BigInt& m_out) {
  if (n == 0) throw InvalidArgument("squarefree_decompose: zero input");
  BigInt rest = boost::multiprecision::abs(n);
  BigInt s = 1;
  BigInt m = (n < 0) ? BigInt(-1) : BigInt(1);
  for (BigInt d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    unsigned mult = 0;
    while (rest % d == 0) {
      rest /= d;
      ++mult;
    }
    for (unsigned i = 0; i + 1 < mult; i += 2) s *= d;
    if (mult % 2 == 1) m *= d;
  }
  m *= rest;  // remaining factor is prime, multiplicity one
  s_out = s;
  m_out = m;
}

}  // namespace edim

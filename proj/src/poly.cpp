#include "poly.hpp"

#include <map>

#include "err.hpp"

namespace edim {

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_x() { return Poly{Rational(0), Rational(1)}; }

bool poly_is_zero(const Poly& p) { return p.empty(); }

bool poly_is_monic(const Poly& p) { return !p.empty() && p.back() == 1; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return Poly{};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (c == 0) return Poly{};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  Poly rem = a;
  Poly quot;
  const int db = poly_degree(b);
  if (poly_degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
  while (poly_degree(rem) >= db) {
    const int k = poly_degree(rem) - db;
    const Rational f = rem.back() / b.back();
    quot[static_cast<std::size_t>(k)] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      rem[static_cast<std::size_t>(k) + i] -= f * b[i];
    poly_trim(rem);
  }
  poly_trim(quot);
  return {quot, rem};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.empty())
    throw Error("inexact polynomial division: " + poly_to_string(a) + " by " +
                poly_to_string(b));
  return q;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw InvalidArgument("cyclotomic_polynomial: order must be >= 1");
  std::map<unsigned, Poly> phi;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    Poly num(e + 1, Rational(0));  // x^e - 1
    num[0] = -1;
    num[e] = 1;
    for (const auto& [f, pf] : phi)
      if (e % f == 0) num = poly_exact_div(num, pf);
    phi[e] = num;
  }
  return phi[d];
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    const bool lead = out.empty();
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (lead) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1) && i > 0;
    if (!unit) out += rational_to_string(mag);
    if (i >= 1) {
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace edim

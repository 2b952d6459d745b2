#include "numberfield.hpp"

#include <numeric>

#include "err.hpp"

namespace edim {

namespace {

// No rational root. Complete for irreducibility only in degrees 2 and 3.
bool has_rational_root(const Poly& p) {
  if (p.empty() || p[0] == 0) return true;  // x divides p
  // Clear denominators to a primitive integer polynomial.
  BigInt common_den = 1;
  for (const auto& c : p)
    common_den = boost::multiprecision::lcm(common_den, denominator(c));
  std::vector<BigInt> ip;
  ip.reserve(p.size());
  for (const auto& c : p) {
    Rational scaled = c * common_den;
    ip.push_back(numerator(scaled));
  }
  BigInt content = 0;
  for (const auto& c : ip) content = boost::multiprecision::gcd(content, c);
  for (auto& c : ip) c /= content;

  auto divisors = [](BigInt n) {
    n = boost::multiprecision::abs(n);
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
    return out;
  };

  for (const BigInt& num : divisors(ip.front())) {
    for (const BigInt& den : divisors(ip.back())) {
      if (boost::multiprecision::gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        const Rational cand(sign * num, den);
        if (poly_eval(p, cand) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

FieldPtr NumberField::create(Poly modulus, std::string label) {
  poly_trim(modulus);
  const int d = poly_degree(modulus);
  if (d < 1) throw InvalidArgument("field modulus must have degree >= 1");
  if (!poly_is_monic(modulus)) throw InvalidArgument("field modulus must be monic");
  if (d == 2 || d == 3) {
    if (has_rational_root(modulus))
      throw InvalidArgument("reducible modulus: " + poly_to_string(modulus));
  }
  return FieldPtr(new NumberField(std::move(modulus), std::move(label)));
}

FieldPtr NumberField::rationals() {
  return FieldPtr(new NumberField(poly_x(), "q"));
}

FieldPtr NumberField::cyclotomic(unsigned d) {
  Poly phi = cyclotomic_polynomial(d);
  // Irreducible by construction; degrees 2 and 3 pass the root test anyway.
  return FieldPtr(new NumberField(std::move(phi), "zeta" + std::to_string(d)));
}

FieldPtr NumberField::quadratic(const BigInt& squarefree_d) {
  if (squarefree_d == 0 || squarefree_d == 1)
    throw InvalidArgument("quadratic field requires d != 0, 1");
  BigInt s, m;
  squarefree_decompose(squarefree_d, s, m);
  if (s != 1)
    throw InvalidArgument("quadratic field requires a squarefree discriminant");
  Poly mod{Rational(-squarefree_d), Rational(0), Rational(1)};
  const std::string label =
      squarefree_d < 0 ? "sqrtm" + BigInt(-squarefree_d).str()
                       : "sqrt" + squarefree_d.str();
  return FieldPtr(new NumberField(std::move(mod), label));
}

FieldElement::FieldElement(FieldPtr field, Poly value) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("field element without a field");
  Poly reduced = poly_divmod(value, field_->modulus()).second;
  coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  for (std::size_t i = 0; i < reduced.size(); ++i) coeffs_[i] = reduced[i];
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  return FieldElement(field, Poly{});
}

FieldElement FieldElement::one(const FieldPtr& field) {
  return FieldElement(field, Poly{Rational(1)});
}

FieldElement FieldElement::of(const FieldPtr& field, const Rational& value) {
  return FieldElement(field, Poly{value});
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, poly_x());
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational())
    throw InvalidArgument("field element is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (field_ == rhs.field_) return;
  if (field_->same(*rhs.field_)) return;
  throw InvalidArgument("field mismatch: " + field_->label() + " vs " +
                        rhs.field_->label());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  FieldElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += rhs.coeffs_[i];
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  FieldElement r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= rhs.coeffs_[i];
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  Poly a(coeffs_.begin(), coeffs_.end());
  Poly b(rhs.coeffs_.begin(), rhs.coeffs_.end());
  poly_trim(a);
  poly_trim(b);
  return FieldElement(field_, poly_mul(a, b));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement FieldElement::scaled(const Rational& c) const {
  FieldElement r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in " + field_->label());
  // Extended Euclid on (value, modulus): u * value + v * modulus = g.
  Poly r_prev(coeffs_.begin(), coeffs_.end());
  poly_trim(r_prev);
  Poly r_cur = field_->modulus();
  Poly u_prev{Rational(1)};
  Poly u_cur{};
  while (!r_cur.empty()) {
    auto [q, rem] = poly_divmod(r_prev, r_cur);
    Poly u_next = poly_sub(u_prev, poly_mul(q, u_cur));
    r_prev = std::move(r_cur);
    r_cur = std::move(rem);
    u_prev = std::move(u_cur);
    u_cur = std::move(u_next);
  }
  if (poly_degree(r_prev) != 0)
    throw Error("non-invertible element: modulus " +
                poly_to_string(field_->modulus()) + " is reducible");
  return FieldElement(field_, poly_scale(u_prev, Rational(1) / r_prev[0]));
}

FieldElement FieldElement::pow(unsigned long long k) const {
  FieldElement acc = one(field_);
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1ULL) acc = acc * base;
    base = base * base;
    k >>= 1ULL;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  check_same_field(rhs);
  return coeffs_ == rhs.coeffs_;
}

QuadraticRoots adjoin_quadratic_root(const Rational& a, const Rational& b,
                                     const Rational& c) {
  if (a == 0) throw InvalidArgument("adjoin_quadratic_root: leading coefficient is zero");
  const Rational disc = b * b - 4 * a * c;
  Rational sq;
  if (rational_is_square(disc, &sq)) {
    FieldPtr q = NumberField::rationals();
    return {q, FieldElement::of(q, (-b + sq) / (2 * a)),
            FieldElement::of(q, (-b - sq) / (2 * a))};
  }
  // disc = (num * den) / den^2, so sqrt(disc) = sqrt(num * den) / den.
  const BigInt num = numerator(disc);
  const BigInt den = denominator(disc);
  BigInt s, m;
  squarefree_decompose(num * den, s, m);
  FieldPtr field = NumberField::quadratic(m);
  // sqrt(disc) = (s / den) * x in Q[x]/(x^2 - m).
  const Rational coef = Rational(s, den) / (2 * a);
  const Rational base = -b / (2 * a);
  FieldElement root1(field, Poly{base, coef});
  FieldElement root2(field, Poly{base, -coef});
  return {field, root1, root2};
}

FieldElement map_rational_into(const FieldPtr& field, const FieldElement& x) {
  return FieldElement::of(field, x.rational_value());
}

}  // namespace edim

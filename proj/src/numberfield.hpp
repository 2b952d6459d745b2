#ifndef EDIM_NUMBERFIELD_HPP
#define EDIM_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace edim {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[x]/(m(x)) for a monic modulus m, represented once and shared by its
// elements. There are no field towers: every field is a single quotient of
// Q[x], and quadratic extensions are normalized to a squarefree discriminant
// before the modulus is formed (so Q(sqrt(-28)) is constructed as x^2 + 7).
//
// Irreducibility of the modulus is verified up to degree 3 via the rational
// root test; cyclotomic moduli are irreducible by construction. Higher-degree
// ad hoc moduli (e.g. from a matrix input file) are accepted as given, and a
// zero divisor surfaces as a failed inversion.
class NumberField {
public:
  // Verifies: monic, degree >= 1, and no rational root when 2 <= degree <= 3.
  static FieldPtr create(Poly modulus, std::string label);

  // Q itself, as the degree-1 quotient Q[x]/(x).
  static FieldPtr rationals();

  // Q(zeta_d) with modulus the d-th cyclotomic polynomial, label "zeta<d>".
  static FieldPtr cyclotomic(unsigned d);

  // Q(sqrt(d)) for squarefree d != 0, 1; modulus x^2 - d, label "sqrt<d>"
  // (negative d rendered as "sqrtm<|d|>").
  static FieldPtr quadratic(const BigInt& squarefree_d);

  int degree() const { return poly_degree(modulus_); }
  const Poly& modulus() const { return modulus_; }
  const std::string& label() const { return label_; }

  // Structural identity: equal moduli. Labels are presentation only.
  bool same(const NumberField& other) const { return modulus_ == other.modulus_; }

private:
  NumberField(Poly modulus, std::string label)
      : modulus_(std::move(modulus)), label_(std::move(label)) {}

  Poly modulus_;
  std::string label_;
};

// An element of a NumberField in the power basis 1, x, ..., x^(d-1).
// Arithmetic between elements requires structurally identical fields.
class FieldElement {
public:
  FieldElement(FieldPtr field, Poly value);  // value is reduced mod the modulus

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement of(const FieldPtr& field, const Rational& value);
  static FieldElement generator(const FieldPtr& field);  // the class of x

  const FieldPtr& field() const { return field_; }
  // Exactly degree() coefficients, constant term first.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // True iff all non-constant coefficients vanish.
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement scaled(const Rational& c) const;

  // Extended Euclid against the modulus. Throws on zero; a non-constant gcd
  // (possible only with an untrusted reducible modulus) also throws.
  FieldElement inverse() const;
  FieldElement pow(unsigned long long k) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

private:
  void check_same_field(const FieldElement& rhs) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

struct QuadraticRoots {
  FieldPtr field;      // rationals() when the discriminant is a square
  FieldElement root1;  // (-b + sqrt(D)) / (2a) with sqrt(D) oriented along +x
  FieldElement root2;
};

// Exact roots of a*t^2 + b*t + c with a != 0. A non-square discriminant D is
// normalized to its squarefree part m (D = s^2 * m) and the roots are
// returned in Q[x]/(x^2 - m).
QuadraticRoots adjoin_quadratic_root(const Rational& a, const Rational& b,
                                     const Rational& c);

// The same rational value re-expressed in another field. Requires
// x.is_rational().
FieldElement map_rational_into(const FieldPtr& field, const FieldElement& x);

}  // namespace edim

#endif

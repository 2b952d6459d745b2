#ifndef EDIM_POLY_HPP
#define EDIM_POLY_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace edim {

// Dense univariate polynomial over Q. c[i] is the coefficient of x^i.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
using Poly = std::vector<Rational>;

int poly_degree(const Poly& p);  // -1 for the zero polynomial
void poly_trim(Poly& p);
Poly poly_x();  // the monomial x

bool poly_is_zero(const Poly& p);
bool poly_is_monic(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);

// Quotient and remainder with deg(r) < deg(b). Throws on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Division that must leave no remainder; throws otherwise.
Poly poly_exact_div(const Poly& a, const Poly& b);

Rational poly_eval(const Poly& p, const Rational& x);

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// The d-th cyclotomic polynomial, computed by exact division of x^d - 1 by
// the cyclotomic polynomials of the proper divisors of d. Requires d >= 1.
Poly cyclotomic_polynomial(unsigned d);

// Human-readable rendering, e.g. "x^2 - x + 1"; for diagnostics and labels.
std::string poly_to_string(const Poly& p, const std::string& var = "x");

}  // namespace edim

#endif

#ifndef EDIM_RATIONAL_HPP
#define EDIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace edim {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values normalized:
// lowest terms, denominator > 0, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with an optional leading sign. Throws ParseError.
Rational rational_from_string(const std::string& text);

// True iff r is the square of a rational; the square root (>= 0) is written
// to sqrt_out when provided.
bool rational_is_square(const Rational& r, Rational* sqrt_out = nullptr);

// Writes n = s^2 * m with s > 0 and m squarefree; the sign of n goes to m.
// Requires n != 0.
void squarefree_decompose(const BigInt& n, BigInt& s_out, BigInt& m_out);

}  // namespace edim

#endif

#ifndef EDIM_CLIFFORD_HPP
#define EDIM_CLIFFORD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace edim {

// Sparse element of the real Clifford algebra on generators e_1, ..., e_n
// with e_i^2 = 1 and e_i e_j = -e_j e_i for i != j, over exact rationals.
// Basis blades are subsets of {1..n} stored as bitmasks (bit i-1 set when
// e_i participates); a blade's generators are kept in ascending index order.
// terms never stores a zero coefficient, and the empty blade (mask 0) is the
// scalar component.
class CliffordElement {
public:
  explicit CliffordElement(int rank);  // zero element
  static CliffordElement scalar(int rank, const Rational& c);
  static CliffordElement generator(int rank, int i);  // e_i, 1-based
  // e_i - e_j, the unnormalized vector whose square is the scalar 2.
  static CliffordElement vector_diff(int rank, int i, int j);

  int rank() const { return rank_; }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // True when no blade other than the scalar one carries a coefficient.
  bool is_scalar() const;
  Rational scalar_value() const;  // requires is_scalar(); zero element gives 0

  CliffordElement operator+(const CliffordElement& rhs) const;
  CliffordElement operator-(const CliffordElement& rhs) const;
  CliffordElement operator*(const CliffordElement& rhs) const;
  CliffordElement operator-() const;
  CliffordElement scaled(const Rational& c) const;

  bool operator==(const CliffordElement& rhs) const;
  bool operator!=(const CliffordElement& rhs) const { return !(*this == rhs); }

private:
  void check_same_rank(const CliffordElement& rhs) const;
  void add_term(std::uint32_t blade, const Rational& c);

  int rank_;
  std::map<std::uint32_t, Rational> terms_;
};

// "5/2" for the scalar blade, "e1e3e4" otherwise; terms joined with " + " /
// " - " in blade order, "0" for the zero element.
std::string clifford_to_string(const CliffordElement& x);

}  // namespace edim

#endif

#ifndef EDIM_FIXLOCUS_HPP
#define EDIM_FIXLOCUS_HPP

#include <vector>

#include "linalg.hpp"
#include "numberfield.hpp"
#include "perm.hpp"

namespace edim {

// A character of a finite abelian permutation group, with values in the
// cyclotomic field Q(zeta_e) for e the group exponent. values[i] is the value
// on group.elements[i]; generator_exponents[k] records the value on
// group.generators[k] as the power of zeta_e.
struct Character {
  FieldPtr field;
  std::vector<int> generator_exponents;
  std::vector<FieldElement> values;
};

// Least common multiple of the element orders.
int group_exponent(const PermGroup& g);

// All |A| characters of an abelian group A, found by enumerating
// root-of-unity assignments to the generators and keeping exactly those that
// extend to a multiplicative map on the full element list. Sorted
// lexicographically by generator exponent tuple (trivial character first).
// Throws InvalidArgument when A is not abelian.
std::vector<Character> characters(const PermGroup& a);

// A common eigenspace of the permutation action on C^n: the image of the
// averaging projector P = (1/|A|) sum_a chi(a)^(-1) rho(a), where rho
// permutes coordinates by (rho(a) v)_{a(i)} = v_i. basis holds the reduced
// echelon rows of the column space of P, so every basis vector has leading
// coefficient 1 and each satisfies rho(a) v = chi(a) v for all a in A.
struct Eigenspace {
  Character character;
  std::vector<std::vector<FieldElement>> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

// The permutation matrix of rho(a) over the given field.
FMatrix permutation_matrix(const FieldPtr& field, const Permutation& a);

Eigenspace eigenspace(const PermGroup& a, const Character& chi, int n);

// All eigenspaces of nonzero dimension, in character order. Their dimensions
// always sum to n (checked; the projectors resolve the identity).
std::vector<Eigenspace> fixed_locus(const PermGroup& a, int n);

}  // namespace edim

#endif

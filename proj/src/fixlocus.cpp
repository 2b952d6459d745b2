#include "fixlocus.hpp"

#include <algorithm>
#include <numeric>

#include "err.hpp"

namespace edim {

int group_exponent(const PermGroup& g) {
  int e = 1;
  for (const auto& p : g.elements) e = std::lcm(e, element_order(p));
  return e;
}

namespace {

std::size_t element_index(const PermGroup& g, const Permutation& p) {
  const auto it = std::lower_bound(g.elements.begin(), g.elements.end(), p);
  if (it == g.elements.end() || *it != p)
    throw Error("element not found in group table");
  return static_cast<std::size_t>(it - g.elements.begin());
}

// Multiplies exponent assignments through the group by breadth-first
// expansion from the identity, then verifies multiplicativity on every pair.
// Returns false when the generator assignment does not extend.
bool extend_assignment(const PermGroup& g, const std::vector<int>& gen_exponents,
                       int exponent, std::vector<int>& out_values) {
  const std::size_t order = g.elements.size();
  std::vector<int> value(order, -1);
  const Permutation id(g.degree);
  value[element_index(g, id)] = 0;
  std::vector<std::size_t> frontier{element_index(g, id)};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (const std::size_t idx : frontier) {
      for (std::size_t k = 0; k < g.generators.size(); ++k) {
        const Permutation prod = compose(g.generators[k], g.elements[idx]);
        const std::size_t pidx = element_index(g, prod);
        const int want = (value[idx] + gen_exponents[k]) % exponent;
        if (value[pidx] == -1) {
          value[pidx] = want;
          next.push_back(pidx);
        } else if (value[pidx] != want) {
          return false;
        }
      }
    }
    frontier = std::move(next);
  }
  for (const int v : value)
    if (v < 0) return false;  // generators fail to reach the element
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t ij = element_index(g, compose(g.elements[i], g.elements[j]));
      if (value[ij] != (value[i] + value[j]) % exponent) return false;
    }
  out_values = std::move(value);
  return true;
}

}  // namespace

std::vector<Character> characters(const PermGroup& a) {
  if (!is_abelian(a)) throw InvalidArgument("characters: group is not abelian");
  const int e = group_exponent(a);
  const FieldPtr field = NumberField::cyclotomic(static_cast<unsigned>(e));
  const FieldElement zeta = FieldElement::generator(field);

  // Precompute the powers of zeta_e once.
  std::vector<FieldElement> zeta_pow;
  zeta_pow.reserve(static_cast<std::size_t>(e));
  for (int k = 0; k < e; ++k)
    zeta_pow.push_back(zeta.pow(static_cast<unsigned long long>(k)));

  // chi(gen_k) must be a root of unity of order dividing ord(gen_k), i.e. an
  // exponent that is a multiple of e / ord(gen_k).
  std::vector<int> steps;
  for (const auto& gen : a.generators)
    steps.push_back(e / element_order(gen));

  std::vector<Character> result;
  std::vector<int> gen_exponents(a.generators.size(), 0);
  while (true) {
    std::vector<int> values;
    if (extend_assignment(a, gen_exponents, e, values)) {
      Character chi;
      chi.field = field;
      chi.generator_exponents = gen_exponents;
      chi.values.reserve(values.size());
      for (const int v : values)
        chi.values.push_back(zeta_pow[static_cast<std::size_t>(v)]);
      result.push_back(std::move(chi));
    }
    // Odometer over the admissible exponents, last generator fastest.
    std::size_t k = a.generators.size();
    while (k-- > 0) {
      gen_exponents[k] += steps[k];
      if (gen_exponents[k] < e) break;
      gen_exponents[k] = 0;
      if (k == 0) {
        k = SIZE_MAX;
        break;
      }
    }
    if (k == SIZE_MAX) break;
  }

  if (result.size() != a.order())
    throw Error("character enumeration incomplete: found " +
                std::to_string(result.size()) + " of " +
                std::to_string(a.order()));
  std::sort(result.begin(), result.end(),
            [](const Character& lhs, const Character& rhs) {
              return lhs.generator_exponents < rhs.generator_exponents;
            });
  return result;
}

FMatrix permutation_matrix(const FieldPtr& field, const Permutation& a) {
  FMatrix m(field, a.degree(), a.degree());
  for (int i = 1; i <= a.degree(); ++i)
    m.at(a.apply(i) - 1, i - 1) = FieldElement::one(field);
  return m;
}

Eigenspace eigenspace(const PermGroup& a, const Character& chi, int n) {
  if (a.degree != n)
    throw InvalidArgument("eigenspace: group degree differs from the ambient degree");
  if (chi.values.size() != a.order())
    throw InvalidArgument("eigenspace: character does not match the group");
  const FieldPtr& field = chi.field;

  FMatrix projector(field, n, n);
  for (std::size_t idx = 0; idx < a.elements.size(); ++idx) {
    const Permutation& perm = a.elements[idx];
    // chi(a)^(-1) = chi(a^(-1)).
    const FieldElement coeff = chi.values[element_index(a, perm.inverse())];
    for (int i = 1; i <= n; ++i) {
      const int j = perm.apply(i);
      projector.at(j - 1, i - 1) = projector.at(j - 1, i - 1) + coeff;
    }
  }
  const Rational inv_order(1, static_cast<long>(a.order()));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      projector.at(r, c) = projector.at(r, c).scaled(inv_order);

  // Canonical basis: reduced echelon rows of the column space.
  const RrefResult red = rref(projector.transpose());
  Eigenspace space;
  space.character = chi;
  for (int r = 0; r < red.rank; ++r) {
    std::vector<FieldElement> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) row.push_back(red.matrix.at(r, c));
    space.basis.push_back(std::move(row));
  }
  return space;
}

std::vector<Eigenspace> fixed_locus(const PermGroup& a, int n) {
  const std::vector<Character> chars = characters(a);
  std::vector<Eigenspace> spaces;
  int total = 0;
  for (const auto& chi : chars) {
    Eigenspace space = eigenspace(a, chi, n);
    total += space.dimension();
    if (space.dimension() > 0) spaces.push_back(std::move(space));
  }
  if (total != n)
    throw Error("eigenspace dimensions sum to " + std::to_string(total) +
                ", expected " + std::to_string(n));
  return spaces;
}

}  // namespace edim

#ifndef EDIM_PERM_HPP
#define EDIM_PERM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace edim {

// Permutation of {1, ..., degree}. All public indices are 1-based; the
// internal image table is 0-based. Composition is fixed globally as
// compose(p, q) = p after q, i.e. compose(p, q)(i) = p(q(i)).
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  static Permutation from_images(const std::vector<int>& images_1based);
  static Permutation transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const;  // 1-based
  bool is_identity() const;

  Permutation inverse() const;
  int parity() const;  // +1 even, -1 odd

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }
  bool operator<(const Permutation& rhs) const;  // lexicographic on images

private:
  std::vector<int> images_;  // images_[i] = image of i, 0-based
};

Permutation compose(const Permutation& p, const Permutation& q);

// Parses a product of cycles, e.g. "(1 2 3)(4 5 6)"; the rightmost cycle is
// applied first. Indices may be separated by spaces or commas. "()" and the
// empty string denote the identity. Cycles need not be disjoint.
Permutation parse_cycles(const std::string& text, int degree);

// Canonical disjoint cycle form: each cycle starts at its smallest point,
// cycles ordered by smallest point, fixed points omitted; identity is "()".
std::string to_cycle_string(const Permutation& p);

inline constexpr std::size_t kDefaultClosureCap = 3628800;  // 10!

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, identity first

  std::size_t order() const { return elements.size(); }
};

// Breadth-first closure of the generating set under composition and inverse.
// Throws if the element count exceeds cap.
PermGroup closure(const std::vector<Permutation>& generators,
                  std::size_t cap = kDefaultClosureCap);

bool is_abelian(const PermGroup& g);

// Orbits of the natural action on {1, ..., degree}; each orbit is sorted and
// orbits are ordered by their minimum.
std::vector<std::vector<int>> orbits(const PermGroup& g);

// Order of a single element (size of its cyclic group).
int element_order(const Permutation& p);

}  // namespace edim

#endif

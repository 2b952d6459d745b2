#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

#include "err.hpp"

namespace edim {

Permutation::Permutation(int degree) {
  if (degree < 1) throw InvalidArgument("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images_1based) {
  Permutation p(static_cast<int>(images_1based.size()));
  std::vector<bool> seen(images_1based.size(), false);
  for (std::size_t i = 0; i < images_1based.size(); ++i) {
    const int img = images_1based[i];
    if (img < 1 || img > static_cast<int>(images_1based.size()))
      throw InvalidArgument("image out of range: " + std::to_string(img));
    if (seen[static_cast<std::size_t>(img - 1)])
      throw InvalidArgument("duplicate image: " + std::to_string(img));
    seen[static_cast<std::size_t>(img - 1)] = true;
    p.images_[i] = img - 1;
  }
  return p;
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i < 1 || j < 1 || i > degree || j > degree || i == j)
    throw InvalidArgument("invalid transposition (" + std::to_string(i) + " " +
                          std::to_string(j) + ") in degree " +
                          std::to_string(degree));
  Permutation p(degree);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)],
            p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

int Permutation::apply(int i) const {
  if (i < 1 || i > degree())
    throw InvalidArgument("point out of range: " + std::to_string(i));
  return images_[static_cast<std::size_t>(i - 1)] + 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return inv;
}

int Permutation::parity() const {
  std::vector<bool> seen(images_.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(images_[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

bool Permutation::operator<(const Permutation& rhs) const {
  return images_ < rhs.images_;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()));
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    images[static_cast<std::size_t>(i - 1)] = p.apply(q.apply(i));
  return Permutation::from_images(images);
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at position " + std::to_string(pos) +
                       " in '" + text + "'");
    ++pos;
    std::vector<int> cycle;
    std::set<int> seen;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
      if (pos >= text.size())
        throw ParseError("unterminated cycle in '" + text + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                         "' in '" + text + "'");
      int value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) +
                         " out of range for degree " + std::to_string(degree));
      if (!seen.insert(value).second)
        throw ParseError("repeated point " + std::to_string(value) +
                         " within a cycle in '" + text + "'");
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  // Rightmost cycle acts first: fold left to right, each new cycle entering
  // as the inner factor of the composition.
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i] - 1)] =
          cycle[(i + 1) % cycle.size()];
    result = compose(result, Permutation::from_images(images));
  }
  return result;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    int i = start;
    do {
      seen[static_cast<std::size_t>(i - 1)] = true;
      cycle.push_back(i);
      i = p.apply(i);
    } while (i != start);
    if (cycle.size() < 2) continue;
    out += "(";
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += " ";
      out += std::to_string(cycle[k]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup closure(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty())
    throw InvalidArgument("closure requires at least one generator");
  const int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidArgument("closure: generators of mixed degree");

  std::set<Permutation> elements;
  std::queue<Permutation> frontier;
  const Permutation id(degree);
  elements.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop();
    for (const auto& g : generators) {
      for (const Permutation& next :
           {compose(g, current), compose(g.inverse(), current)}) {
        if (elements.insert(next).second) {
          if (elements.size() > cap)
            throw Error("closure exceeds cap of " + std::to_string(cap) +
                        " elements");
          frontier.push(next);
        }
      }
    }
  }

  PermGroup group;
  group.degree = degree;
  group.generators = generators;
  group.elements.assign(elements.begin(), elements.end());
  return group;
}

bool is_abelian(const PermGroup& g) {
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = i + 1; j < g.elements.size(); ++j)
      if (compose(g.elements[i], g.elements[j]) !=
          compose(g.elements[j], g.elements[i]))
        return false;
  return true;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.degree), false);
  for (int start = 1; start <= g.degree; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::set<int> orbit;
    std::queue<int> todo;
    orbit.insert(start);
    todo.push(start);
    while (!todo.empty()) {
      const int point = todo.front();
      todo.pop();
      for (const auto& gen : g.generators) {
        const int image = gen.apply(point);
        if (orbit.insert(image).second) todo.push(image);
      }
    }
    for (int point : orbit) seen[static_cast<std::size_t>(point - 1)] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

int element_order(const Permutation& p) {
  Permutation acc = p;
  int order = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, p);
    ++order;
  }
  return order;
}

}  // namespace edim

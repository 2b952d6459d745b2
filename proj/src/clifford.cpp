#include "clifford.hpp"

#include <bit>

#include "err.hpp"

namespace edim {

namespace {

constexpr int kMaxRank = 16;

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw InvalidArgument("clifford rank must be in [1, " +
                          std::to_string(kMaxRank) + "], got " +
                          std::to_string(rank));
}

void check_index(int rank, int i) {
  if (i < 1 || i > rank)
    throw InvalidArgument("generator index " + std::to_string(i) +
                          " out of range for rank " + std::to_string(rank));
}

// Sign of e_A * e_B when both blades are written in ascending order: each
// generator of B walks left past the generators of A strictly above it, one
// anticommutation per crossing. Equal indices then contract via e_i^2 = 1,
// which costs no extra sign, so the product is sign * e_(A xor B).
int blade_sign(std::uint32_t a, std::uint32_t b) {
  int crossings = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    crossings += std::popcount(a >> (i + 1));
  }
  return (crossings % 2 == 0) ? 1 : -1;
}

}  // namespace

CliffordElement::CliffordElement(int rank) : rank_(rank) { check_rank(rank); }

CliffordElement CliffordElement::scalar(int rank, const Rational& c) {
  CliffordElement x(rank);
  if (c != 0) x.terms_[0] = c;
  return x;
}

CliffordElement CliffordElement::generator(int rank, int i) {
  CliffordElement x(rank);
  check_index(rank, i);
  x.terms_[std::uint32_t{1} << (i - 1)] = 1;
  return x;
}

CliffordElement CliffordElement::vector_diff(int rank, int i, int j) {
  check_index(rank, i);
  check_index(rank, j);
  if (i == j) throw InvalidArgument("vector_diff requires distinct indices");
  CliffordElement x(rank);
  x.terms_[std::uint32_t{1} << (i - 1)] = 1;
  x.terms_[std::uint32_t{1} << (j - 1)] = -1;
  return x;
}

bool CliffordElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational CliffordElement::scalar_value() const {
  if (!is_scalar())
    throw InvalidArgument("scalar_value on a non-scalar element");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void CliffordElement::check_same_rank(const CliffordElement& rhs) const {
  if (rank_ != rhs.rank_)
    throw InvalidArgument("clifford rank mismatch: " + std::to_string(rank_) +
                          " vs " + std::to_string(rhs.rank_));
}

void CliffordElement::add_term(std::uint32_t blade, const Rational& c) {
  auto it = terms_.find(blade);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(blade, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CliffordElement CliffordElement::operator+(const CliffordElement& rhs) const {
  check_same_rank(rhs);
  CliffordElement out = *this;
  for (const auto& [blade, c] : rhs.terms_) out.add_term(blade, c);
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& rhs) const {
  check_same_rank(rhs);
  CliffordElement out = *this;
  for (const auto& [blade, c] : rhs.terms_) out.add_term(blade, -c);
  return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& rhs) const {
  check_same_rank(rhs);
  CliffordElement out(rank_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) {
      Rational c = ca * cb;
      if (blade_sign(a, b) < 0) c = -c;
      out.add_term(a ^ b, c);
    }
  return out;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out(rank_);
  for (const auto& [blade, c] : terms_) out.terms_[blade] = -c;
  return out;
}

CliffordElement CliffordElement::scaled(const Rational& c) const {
  CliffordElement out(rank_);
  if (c == 0) return out;
  for (const auto& [blade, coeff] : terms_) out.terms_[blade] = coeff * c;
  return out;
}

bool CliffordElement::operator==(const CliffordElement& rhs) const {
  return rank_ == rhs.rank_ && terms_ == rhs.terms_;
}

std::string clifford_to_string(const CliffordElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [blade, c] : x.terms()) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    std::string blade_str;
    for (std::uint32_t rest = blade; rest != 0; rest &= rest - 1)
      blade_str += "e" + std::to_string(std::countr_zero(rest) + 1);
    if (blade_str.empty()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + "*";
      out += blade_str;
    }
  }
  return out;
}

}  // namespace edim

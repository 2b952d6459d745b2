#include "variety.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "err.hpp"

namespace edim {

FieldElement power_sum_eval(const std::vector<FieldElement>& point, int k) {
  if (point.empty()) throw InvalidArgument("power sum of an empty point");
  if (k < 1) throw InvalidArgument("power sum degree must be >= 1");
  bool nonzero = false;
  for (const auto& x : point) nonzero = nonzero || !x.is_zero();
  if (!nonzero) throw InvalidArgument("power sum at the zero point");
  FieldElement acc = FieldElement::zero(point.front().field());
  for (const auto& x : point) acc = acc + x.pow(static_cast<unsigned long long>(k));
  return acc;
}

namespace {

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || a->same(*b);
}

bool is_rational_field(const FieldPtr& f) { return f->degree() == 1; }

FieldElement dot(const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
  FieldElement acc = FieldElement::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

bool all_rational(const std::vector<std::vector<FieldElement>>& rows) {
  for (const auto& row : rows)
    for (const auto& x : row)
      if (!x.is_rational()) return false;
  return true;
}

Rational require_rational(const FieldElement& x, const char* what) {
  if (!x.is_rational())
    throw Error(std::string("restricted ") + what +
                " has irrational coefficients; this shape is out of scope");
  return x.rational_value();
}

// point = sum_i params[i] * basis[i], with params and basis over the same
// field up to structural equality.
std::vector<FieldElement> combine(
    const std::vector<std::vector<FieldElement>>& basis,
    const std::vector<FieldElement>& params) {
  const FieldPtr& field = params.front().field();
  std::vector<FieldElement> point(basis.front().size(),
                                  FieldElement::zero(field));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < point.size(); ++j)
      point[j] = point[j] + params[i] * basis[i][j];
  return point;
}

// Brings a solution parameter vector over K and a basis over F into a common
// field: K itself when it agrees with F, F when the parameters are rational,
// and otherwise K with the (necessarily rational) basis lifted into it.
std::vector<FieldElement> combine_solution(
    const std::vector<std::vector<FieldElement>>& basis,
    const std::vector<FieldElement>& params) {
  const FieldPtr F = basis.front().front().field();
  const FieldPtr K = params.front().field();
  if (same_field(K, F)) return combine(basis, params);
  if (is_rational_field(K)) {
    std::vector<FieldElement> lifted;
    lifted.reserve(params.size());
    for (const auto& p : params) lifted.push_back(map_rational_into(F, p));
    return combine(basis, lifted);
  }
  if (!all_rational(basis))
    throw Error("quadratic extension over an irrational basis is out of scope");
  std::vector<std::vector<FieldElement>> lifted_basis;
  lifted_basis.reserve(basis.size());
  for (const auto& row : basis) {
    std::vector<FieldElement> lifted_row;
    lifted_row.reserve(row.size());
    for (const auto& x : row) lifted_row.push_back(map_rational_into(K, x));
    lifted_basis.push_back(std::move(lifted_row));
  }
  return combine(lifted_basis, params);
}

// Solutions (u : w) of q2 u^2 + q1 uw + q0 w^2 = 0, the form not identically
// zero. Solving a genuine quadratic requires rational coefficients (the
// adjoin step works over Q); degenerate leading coefficients stay in-field.
std::vector<std::vector<FieldElement>> solve_binary_quadratic(
    const FieldElement& q2, const FieldElement& q1, const FieldElement& q0) {
  const FieldPtr& base = q2.field();
  std::vector<std::vector<FieldElement>> out;
  if (q2.is_zero()) {
    // q = w (q1 u + q0 w): the point at infinity of the dehomogenization,
    // plus the zero of the linear factor when it is a genuine line.
    out.push_back({FieldElement::one(base), FieldElement::zero(base)});
    if (!q1.is_zero())
      out.push_back({-(q0 * q1.inverse()), FieldElement::one(base)});
    return out;
  }
  // Dehomogenize at w = 1; (1 : 0) is not a root since q2 != 0.
  const Rational a = require_rational(q2, "quadratic");
  const Rational b = require_rational(q1, "quadratic");
  const Rational c = require_rational(q0, "quadratic");
  const QuadraticRoots roots = adjoin_quadratic_root(a, b, c);
  out.push_back({roots.root1, FieldElement::one(roots.field)});
  if (roots.root1 != roots.root2)
    out.push_back({roots.root2, FieldElement::one(roots.field)});
  return out;
}

void check_solution(const std::vector<FieldElement>& point) {
  if (!power_sum_eval(point, 1).is_zero() || !power_sum_eval(point, 2).is_zero())
    throw Error("solver produced a non-solution; this must not happen");
}

}  // namespace

SolveResult solve_power_sum_constraints(
    const std::vector<std::vector<FieldElement>>& basis) {
  if (basis.empty()) throw InvalidArgument("empty span");
  const std::size_t dim = basis.size();
  const std::size_t n = basis.front().size();
  for (const auto& row : basis)
    if (row.size() != n) throw InvalidArgument("ragged basis");
  if (dim > 3)
    throw InvalidArgument("span dimension " + std::to_string(dim) +
                          " is out of scope (max 3)");
  const FieldPtr field = basis.front().front().field();

  // Restriction of p_1 (linear) and p_2 (quadratic) to the span.
  std::vector<FieldElement> alpha;
  for (const auto& row : basis) alpha.push_back(power_sum_eval(row, 1));
  std::vector<std::vector<FieldElement>> gram(
      dim, std::vector<FieldElement>(dim, FieldElement::zero(field)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      gram[i][j] = gram[j][i] = dot(basis[i], basis[j]);

  SolveResult result;

  if (dim == 1) {
    if (alpha[0].is_zero() && gram[0][0].is_zero()) {
      result.points.push_back(basis[0]);
      check_solution(result.points.back());
    }
    return result;
  }

  if (dim == 2) {
    if (alpha[0].is_zero() && alpha[1].is_zero()) {
      const FieldElement q2 = gram[0][0];
      const FieldElement q1 = gram[0][1] + gram[0][1];
      const FieldElement q0 = gram[1][1];
      if (q2.is_zero() && q1.is_zero() && q0.is_zero()) {
        result.degenerate = true;
        return result;
      }
      for (const auto& params : solve_binary_quadratic(q2, q1, q0)) {
        result.points.push_back(combine_solution(basis, params));
        check_solution(result.points.back());
      }
      return result;
    }
    // The linear form has the single projective zero (alpha2 : -alpha1);
    // it is a solution iff the quadratic vanishes there too.
    const std::vector<FieldElement> params{alpha[1], -alpha[0]};
    std::vector<FieldElement> point = combine(basis, params);
    if (power_sum_eval(point, 2).is_zero()) {
      check_solution(point);
      result.points.push_back(std::move(point));
    }
    return result;
  }

  // dim == 3: a plane; the expected shape is line (p_1 = 0) meets conic
  // (p_2 = 0).
  if (alpha[0].is_zero() && alpha[1].is_zero() && alpha[2].is_zero()) {
    // p_1 vanishes on the whole plane, so the solutions form a conic: never
    // finitely many over an algebraically closed field.
    result.degenerate = true;
    return result;
  }
  std::size_t pivot = 0;
  while (alpha[pivot].is_zero()) ++pivot;
  const std::array<std::size_t, 2> free = [&] {
    std::array<std::size_t, 2> f{};
    std::size_t w = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != pivot) f[w++] = i;
    return f;
  }();
  const FieldElement inv_pivot = alpha[pivot].inverse();
  const FieldElement ca = -(alpha[free[0]] * inv_pivot);
  const FieldElement cb = -(alpha[free[1]] * inv_pivot);

  // Substitute param_pivot = ca*u + cb*w into the quadratic form.
  const FieldElement two = FieldElement::of(field, Rational(2));
  const FieldElement q2 = gram[free[0]][free[0]] +
                          two * ca * gram[free[0]][pivot] +
                          ca * ca * gram[pivot][pivot];
  const FieldElement q0 = gram[free[1]][free[1]] +
                          two * cb * gram[free[1]][pivot] +
                          cb * cb * gram[pivot][pivot];
  const FieldElement q1 = two * gram[free[0]][free[1]] +
                          two * cb * gram[free[0]][pivot] +
                          two * ca * gram[free[1]][pivot] +
                          two * ca * cb * gram[pivot][pivot];
  if (q2.is_zero() && q1.is_zero() && q0.is_zero()) {
    result.degenerate = true;
    return result;
  }
  for (const auto& uw : solve_binary_quadratic(q2, q1, q0)) {
    const FieldPtr K = uw.front().field();
    std::vector<FieldElement> params(3, FieldElement::zero(K));
    if (same_field(K, field)) {
      params[free[0]] = uw[0];
      params[free[1]] = uw[1];
      params[pivot] = ca * uw[0] + cb * uw[1];
    } else if (is_rational_field(K)) {
      const FieldElement u = map_rational_into(field, uw[0]);
      const FieldElement w = map_rational_into(field, uw[1]);
      params.assign(3, FieldElement::zero(field));
      params[free[0]] = u;
      params[free[1]] = w;
      params[pivot] = ca * u + cb * w;
    } else {
      if (!ca.is_rational() || !cb.is_rational())
        throw Error(
            "quadratic extension over an irrational basis is out of scope");
      params[free[0]] = uw[0];
      params[free[1]] = uw[1];
      params[pivot] = map_rational_into(K, ca) * uw[0] +
                      map_rational_into(K, cb) * uw[1];
    }
    result.points.push_back(combine_solution(basis, params));
    check_solution(result.points.back());
  }
  return result;
}

SolveResult solve_on_eigenspace(const Eigenspace& space) {
  return solve_power_sum_constraints(space.basis);
}

namespace {

std::vector<FieldElement> rescale_last_to(const std::vector<FieldElement>& point,
                                          const Rational& target) {
  std::size_t last = point.size();
  for (std::size_t i = point.size(); i-- > 0;)
    if (!point[i].is_zero()) {
      last = i;
      break;
    }
  if (last == point.size()) throw Error("cannot normalize the zero point");
  const FieldElement factor =
      FieldElement::of(point.front().field(), target) * point[last].inverse();
  std::vector<FieldElement> out;
  out.reserve(point.size());
  for (const auto& x : point) out.push_back(factor * x);
  return out;
}

std::vector<FieldElement> rescale_leading_to_one(
    const std::vector<FieldElement>& point) {
  for (const auto& x : point)
    if (!x.is_zero()) {
      const FieldElement inv = x.inverse();
      std::vector<FieldElement> out;
      out.reserve(point.size());
      for (const auto& y : point) out.push_back(inv * y);
      return out;
    }
  throw Error("cannot normalize the zero point");
}

}  // namespace

CaseIReport verify_case_i() {
  CaseIReport report;
  const int n = 7;
  const Permutation g1 = parse_cycles("(1 2 3)", n);
  const Permutation g2 = parse_cycles("(4 5 6)", n);
  const PermGroup a = closure({g1, g2});
  report.generator_cycles = {to_cycle_string(g1), to_cycle_string(g2)};
  report.degree = n;
  report.group_order = a.order();

  const std::vector<Eigenspace> spaces = fixed_locus(a, n);
  if (!spaces.empty()) report.cyclotomic_field = spaces.front().character.field;

  bool degenerate_seen = false;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const Eigenspace& space = spaces[s];
    EigenspaceInfo info;
    info.character_exponents = space.character.generator_exponents;
    const FieldElement zeta = FieldElement::generator(space.character.field);
    for (const int k : info.character_exponents)
      info.character_on_generators.push_back(
          zeta.pow(static_cast<unsigned long long>(k)));
    info.basis = space.basis;
    info.dimension = space.dimension();
    report.eigenspaces.push_back(std::move(info));

    const SolveResult solved = solve_on_eigenspace(space);
    degenerate_seen = degenerate_seen || solved.degenerate;
    for (const auto& raw : solved.points) {
      const bool family = space.dimension() >= 2;
      std::vector<FieldElement> coords =
          family ? rescale_last_to(raw, Rational(6))
                 : rescale_leading_to_one(raw);
      FieldElement p3 = power_sum_eval(coords, 3);
      const bool p3_nonzero = !p3.is_zero();
      report.candidates.push_back(CandidateInfo{
          static_cast<int>(s),
          family ? "last-coordinate-6" : "leading-coordinate-1",
          std::move(coords), std::move(p3), p3_nonzero});
    }
  }

  report.eigenspace_count_ok = spaces.size() == 5;
  std::multiset<int> dims;
  for (const auto& space : spaces) dims.insert(space.dimension());
  report.dimensions_ok = dims == std::multiset<int>{1, 1, 1, 1, 3};
  report.candidate_count_ok = report.candidates.size() == 6;
  report.all_p3_nonzero =
      !report.candidates.empty() &&
      std::all_of(report.candidates.begin(), report.candidates.end(),
                  [](const CandidateInfo& c) { return c.p3_nonzero; });

  // Closed-form family pair: (l1 l1 l1 l2 l2 l2 6) for l1 = -1 + sqrt(-7),
  // l2 = -1 - sqrt(-7), together with the conjugate assignment.
  {
    std::vector<const CandidateInfo*> family;
    for (const auto& cand : report.candidates)
      if (cand.normalization == "last-coordinate-6") family.push_back(&cand);
    if (family.size() == 2) {
      const QuadraticRoots rt =
          adjoin_quadratic_root(Rational(1), Rational(2), Rational(8));
      const auto expected = [&](const FieldElement& l1, const FieldElement& l2) {
        std::vector<FieldElement> pt(7, FieldElement::of(rt.field, Rational(6)));
        pt[0] = pt[1] = pt[2] = l1;
        pt[3] = pt[4] = pt[5] = l2;
        return pt;
      };
      const std::vector<FieldElement> e1 = expected(rt.root1, rt.root2);
      const std::vector<FieldElement> e2 = expected(rt.root2, rt.root1);
      const auto matches = [&](const CandidateInfo& c,
                               const std::vector<FieldElement>& e) {
        return c.coordinates.front().field()->same(*rt.field) &&
               projectively_equal(c.coordinates, e);
      };
      report.family_matches_closed_form =
          (matches(*family[0], e1) && matches(*family[1], e2)) ||
          (matches(*family[0], e2) && matches(*family[1], e1));
    }
  }

  report.claim_verified = report.eigenspace_count_ok && report.dimensions_ok &&
                          report.candidate_count_ok && report.all_p3_nonzero &&
                          report.family_matches_closed_form && !degenerate_seen;
  report.conclusion =
      report.claim_verified
          ? "p_3 is nonzero at every point of P^6 fixed by A with "
            "p_1 = p_2 = 0; the A-fixed locus of the threefold is empty"
          : "verification failed";
  report.citations = {
      "Prokhorov: classification of rationally connected threefolds with a "
      "faithful A7-action",
      "threefold case (i): the intersection of the degree 1, 2, 3 power sum "
      "hypersurfaces in P^6",
      "Reichstein-Youssin: a smooth proper model acted on by an abelian group "
      "of rank equal to its dimension must have a fixed point"};
  return report;
}

}  // namespace edim

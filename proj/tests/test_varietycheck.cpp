#include <doctest.h>

#include <vector>

#include "err.hpp"
#include "fixlocus.hpp"
#include "linalg.hpp"
#include "numberfield.hpp"
#include "perm.hpp"
#include "properties.hpp"
#include "variety.hpp"

using namespace edim;

namespace {

using Vec = std::vector<FieldElement>;

Vec from_ints(const FieldPtr& field, const std::vector<int>& entries) {
  Vec v;
  for (const int e : entries) v.push_back(FieldElement::of(field, Rational(e)));
  return v;
}

// the standard isotropic zero-sum vectors over Q(zeta_3)
Vec isotropic_head(const FieldPtr& f) {
  const FieldElement z = FieldElement::generator(f);
  return {FieldElement::one(f), z,      z.pow(2),           FieldElement::zero(f),
          FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f)};
}

Vec isotropic_tail(const FieldPtr& f) {
  const FieldElement z = FieldElement::generator(f);
  return {FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f),
          FieldElement::one(f),  z,                     z.pow(2),
          FieldElement::zero(f)};
}

bool contains_projectively(const std::vector<Vec>& points, const Vec& target) {
  for (const auto& p : points)
    if (projectively_equal(p, target)) return true;
  return false;
}

}  // namespace

TEST_SUITE("varietycheck") {

TEST_CASE("power sum evaluation") {
  const FieldPtr q = NumberField::rationals();
  const Vec v = from_ints(q, {1, 2, 3});
  CHECK(power_sum_eval(v, 1) == FieldElement::of(q, 6));
  CHECK(power_sum_eval(v, 2) == FieldElement::of(q, 14));
  CHECK(power_sum_eval(v, 3) == FieldElement::of(q, 36));
  CHECK_THROWS_AS(power_sum_eval(from_ints(q, {0, 0}), 1), InvalidArgument);
  CHECK_THROWS_AS(power_sum_eval(v, 0), InvalidArgument);
  CHECK_THROWS_AS(power_sum_eval(Vec{}, 1), InvalidArgument);
}

TEST_CASE("dimension 1 spans") {
  const FieldPtr f = NumberField::cyclotomic(3);
  const SolveResult hit = solve_power_sum_constraints({isotropic_tail(f)});
  CHECK_FALSE(hit.degenerate);
  REQUIRE(hit.points.size() == 1);
  CHECK(hit.points[0] == isotropic_tail(f));

  // p_1 != 0 kills the span
  const SolveResult miss1 =
      solve_power_sum_constraints({from_ints(f, {1, 0, 0, 0, 0, 0, 0})});
  CHECK_FALSE(miss1.degenerate);
  CHECK(miss1.points.empty());

  // p_1 = 0 but p_2 != 0
  const SolveResult miss2 =
      solve_power_sum_constraints({from_ints(f, {1, -1, 0, 0, 0, 0, 0})});
  CHECK_FALSE(miss2.degenerate);
  CHECK(miss2.points.empty());
}

TEST_CASE("dimension 2: two disjoint isotropic lines span a degenerate pencil") {
  const FieldPtr f = NumberField::cyclotomic(3);
  const SolveResult r =
      solve_power_sum_constraints({isotropic_head(f), isotropic_tail(f)});
  CHECK(r.degenerate);
  CHECK(r.points.empty());
}

TEST_CASE("dimension 2: root at infinity plus a second rational root") {
  const FieldPtr f = NumberField::cyclotomic(3);
  const FieldElement z = FieldElement::generator(f);
  const Vec p1 = isotropic_head(f);
  Vec d(7, FieldElement::zero(f));
  d[1] = z.pow(2) - z;
  d[2] = z - z.pow(2);

  const SolveResult r = solve_power_sum_constraints({p1, d});
  CHECK_FALSE(r.degenerate);
  REQUIRE(r.points.size() == 2);
  Vec shifted(7, FieldElement::zero(f));
  shifted[0] = FieldElement::one(f);
  shifted[1] = z.pow(2);
  shifted[2] = z;
  CHECK(contains_projectively(r.points, p1));
  CHECK(contains_projectively(r.points, shifted));

  // same plane through the other basis exercises the generic quadratic path
  const SolveResult swapped = solve_power_sum_constraints({d, p1});
  CHECK_FALSE(swapped.degenerate);
  REQUIRE(swapped.points.size() == 2);
  for (const auto& p : swapped.points)
    CHECK(contains_projectively(r.points, p));
}

TEST_CASE("dimension 2: conjugate pair lands in a quadratic extension") {
  const FieldPtr q = NumberField::rationals();
  const SolveResult r = solve_power_sum_constraints(
      {from_ints(q, {1, -1, 0, 0, 0, 0, 0}), from_ints(q, {0, 0, 1, -1, 0, 0, 0})});
  CHECK_FALSE(r.degenerate);
  REQUIRE(r.points.size() == 2);
  const FieldPtr k = r.points[0].front().field();
  CHECK(k->label() == "sqrtm1");
  CHECK(k->modulus() == Poly{1, 0, 1});
  const FieldElement i = FieldElement::generator(k);
  const Vec expected1 = {i,
                         -i,
                         FieldElement::one(k),
                         -FieldElement::one(k),
                         FieldElement::zero(k),
                         FieldElement::zero(k),
                         FieldElement::zero(k)};
  const Vec expected2 = {-i,
                         i,
                         FieldElement::one(k),
                         -FieldElement::one(k),
                         FieldElement::zero(k),
                         FieldElement::zero(k),
                         FieldElement::zero(k)};
  CHECK(contains_projectively(r.points, expected1));
  CHECK(contains_projectively(r.points, expected2));
  CHECK_FALSE(projectively_equal(r.points[0], r.points[1]));
}

TEST_CASE("dimension 2: irrational restricted quadratic is out of scope") {
  const FieldPtr f = NumberField::cyclotomic(3);
  const FieldElement z = FieldElement::generator(f);
  Vec v(7, FieldElement::zero(f));
  v[0] = FieldElement::one(f);
  v[1] = z + z;
  v[2] = -(FieldElement::one(f) + z + z);
  const Vec w = from_ints(f, {0, 0, 0, 1, -1, 0, 0});
  CHECK_THROWS_WITH_AS(
      solve_power_sum_constraints({v, w}),
      "restricted quadratic has irrational coefficients; this shape is out of "
      "scope",
      Error);
}

TEST_CASE("dimension 3: the invariant plane carries the conjugate family") {
  const FieldPtr f = NumberField::cyclotomic(3);
  const std::vector<Vec> basis = {from_ints(f, {1, 1, 1, 0, 0, 0, 0}),
                                  from_ints(f, {0, 0, 0, 1, 1, 1, 0}),
                                  from_ints(f, {0, 0, 0, 0, 0, 0, 1})};
  const SolveResult r = solve_power_sum_constraints(basis);
  CHECK_FALSE(r.degenerate);
  REQUIRE(r.points.size() == 2);
  const FieldPtr k = r.points[0].front().field();
  CHECK(k->label() == "sqrtm7");
  const FieldElement s = FieldElement::generator(k);  // s^2 = -7
  const FieldElement l1 = s - FieldElement::one(k);
  const FieldElement l2 = -s - FieldElement::one(k);
  const FieldElement six = FieldElement::of(k, 6);
  const Vec e1 = {l1, l1, l1, l2, l2, l2, six};
  const Vec e2 = {l2, l2, l2, l1, l1, l1, six};
  CHECK(contains_projectively(r.points, e1));
  CHECK(contains_projectively(r.points, e2));
}

TEST_CASE("dimension 3 degeneracies") {
  const FieldPtr q = NumberField::rationals();
  const FieldPtr f = NumberField::cyclotomic(3);

  // p_1 vanishes on the whole plane
  const SolveResult flat = solve_power_sum_constraints(
      {from_ints(q, {1, -1, 0, 0, 0, 0, 0}), from_ints(q, {0, 0, 1, -1, 0, 0, 0}),
       from_ints(q, {0, 0, 0, 0, 1, -1, 0})});
  CHECK(flat.degenerate);

  // the line p_1 = 0 lies inside the conic p_2 = 0
  const SolveResult inside = solve_power_sum_constraints(
      {isotropic_head(f), isotropic_tail(f), from_ints(f, {0, 0, 0, 0, 0, 0, 1})});
  CHECK(inside.degenerate);
}

TEST_CASE("spans of dimension above 3 are rejected") {
  const FieldPtr q = NumberField::rationals();
  std::vector<Vec> basis;
  for (int i = 0; i < 4; ++i) {
    Vec row(7, FieldElement::zero(q));
    row[static_cast<std::size_t>(i)] = FieldElement::one(q);
    basis.push_back(std::move(row));
  }
  CHECK_THROWS_AS(solve_power_sum_constraints(basis), InvalidArgument);
  CHECK_THROWS_AS(solve_power_sum_constraints({}), InvalidArgument);
}

TEST_CASE("full fixed-locus verification") {
  const CaseIReport r = verify_case_i();
  CHECK(r.claim_verified);
  CHECK(r.generator_cycles == std::vector<std::string>{"(1 2 3)", "(4 5 6)"});
  CHECK(r.degree == 7);
  CHECK(r.group_order == 9);
  REQUIRE(r.cyclotomic_field);
  CHECK(r.cyclotomic_field->label() == "zeta3");

  REQUIRE(r.eigenspaces.size() == 5);
  const std::vector<std::vector<int>> chars = {
      {0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
  const std::vector<int> dims = {3, 1, 1, 1, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(r.eigenspaces[i].character_exponents == chars[i]);
    CHECK(r.eigenspaces[i].dimension == dims[i]);
  }
  const FieldElement z = FieldElement::generator(r.cyclotomic_field);
  CHECK(r.eigenspaces[1].character_on_generators ==
        std::vector<FieldElement>{FieldElement::one(r.cyclotomic_field), z});

  REQUIRE(r.candidates.size() == 6);
  CHECK(r.eigenspace_count_ok);
  CHECK(r.dimensions_ok);
  CHECK(r.candidate_count_ok);
  CHECK(r.all_p3_nonzero);
  CHECK(r.family_matches_closed_form);

  // two family members on the invariant plane, scaled to end in 6
  const CandidateInfo& fam0 = r.candidates[0];
  const CandidateInfo& fam1 = r.candidates[1];
  CHECK(fam0.eigenspace_index == 0);
  CHECK(fam1.eigenspace_index == 0);
  CHECK(fam0.normalization == "last-coordinate-6");
  const FieldPtr k = fam0.coordinates.front().field();
  CHECK(k->label() == "sqrtm7");
  {
    const FieldElement s = FieldElement::generator(k);
    const FieldElement l1 = s - FieldElement::one(k);
    const FieldElement l2 = -s - FieldElement::one(k);
    const FieldElement six = FieldElement::of(k, 6);
    const Vec e1 = {l1, l1, l1, l2, l2, l2, six};
    const Vec e2 = {l2, l2, l2, l1, l1, l1, six};
    const bool direct = fam0.coordinates == e1 && fam1.coordinates == e2;
    const bool swapped = fam0.coordinates == e2 && fam1.coordinates == e1;
    CHECK((direct || swapped));
    CHECK(fam0.p3 == FieldElement::of(k, 336));
    CHECK(fam1.p3 == FieldElement::of(k, 336));
  }

  // four isolated candidates, one per line, echelon normalized
  const FieldElement zero = FieldElement::zero(r.cyclotomic_field);
  const FieldElement one = FieldElement::one(r.cyclotomic_field);
  const std::vector<Vec> isolated = {
      {zero, zero, zero, one, z.pow(2), z, zero},
      {zero, zero, zero, one, z, z.pow(2), zero},
      {one, z.pow(2), z, zero, zero, zero, zero},
      {one, z, z.pow(2), zero, zero, zero, zero}};
  for (int i = 2; i < 6; ++i) {
    const CandidateInfo& c = r.candidates[static_cast<std::size_t>(i)];
    CHECK(c.eigenspace_index == i - 1);
    CHECK(c.normalization == "leading-coordinate-1");
    CHECK(c.p3 == FieldElement::of(r.cyclotomic_field, 3));
    CHECK(c.p3_nonzero);
  }
  // the isolated candidates are exactly the swapped-exponent eigenvectors
  CHECK(r.candidates[2].coordinates[4] == z.pow(2));
  CHECK(r.candidates[3].coordinates[4] == z);
  CHECK(r.candidates[4].coordinates[1] == z.pow(2));
  CHECK(r.candidates[5].coordinates[1] == z);
  for (int i = 2; i < 6; ++i)
    CHECK(contains_projectively(isolated,
                                r.candidates[static_cast<std::size_t>(i)].coordinates));

  CHECK(r.conclusion ==
        "p_3 is nonzero at every point of P^6 fixed by A with p_1 = p_2 = 0; "
        "the A-fixed locus of the threefold is empty");
  CHECK(r.citations.size() == 3);
}

TEST_CASE("solver agrees with the resultant oracle") {
  CHECK(props::solver_oracle_agreement() == "");
}

}  // TEST_SUITE

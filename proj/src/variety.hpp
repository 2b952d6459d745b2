#ifndef EDIM_VARIETY_HPP
#define EDIM_VARIETY_HPP

#include <string>
#include <vector>

#include "fixlocus.hpp"
#include "numberfield.hpp"

namespace edim {

// p_k(x) = x_1^k + ... + x_n^k. Homogeneous of degree k, so scaling the point
// by c scales the value by c^k; the zero locus is projectively well defined.
struct PowerSumConstraint {
  int degree;
  int arity;
};

// Requires at least one nonzero coordinate.
FieldElement power_sum_eval(const std::vector<FieldElement>& point, int k);

// Solutions of p_1 = p_2 = 0 on the projectivized span of the basis rows.
// Supported spans have dimension 1, 2, or 3 (point, pencil, plane in P^(n-1));
// the restricted system is one linear and one quadratic form in the
// parameters. Points are returned in the span's field when the parameters are
// rational, and otherwise in the quadratic extension produced by
// adjoin_quadratic_root (which requires the restricted forms and basis to be
// rational; other shapes throw).
//
// degenerate means infinitely many projective solutions: the restricted
// linear form vanishes identically on a plane, or the restricted quadratic
// vanishes identically where the linear form does.
struct SolveResult {
  bool degenerate = false;
  std::vector<std::vector<FieldElement>> points;
};

SolveResult solve_power_sum_constraints(
    const std::vector<std::vector<FieldElement>>& basis);

SolveResult solve_on_eigenspace(const Eigenspace& space);

struct CandidateInfo {
  int eigenspace_index = 0;      // into CaseIReport::eigenspaces
  std::string normalization;     // "leading-coordinate-1" | "last-coordinate-6"
  std::vector<FieldElement> coordinates;
  FieldElement p3;               // value at the stored normalization
  bool p3_nonzero = false;
};

struct EigenspaceInfo {
  std::vector<int> character_exponents;
  std::vector<FieldElement> character_on_generators;
  std::vector<std::vector<FieldElement>> basis;
  int dimension = 0;
};

// Fixed-locus analysis of A = <(1 2 3), (4 5 6)> acting on the threefold
// X = {p_1 = p_2 = p_3 = 0} in P^6. The A-fixed locus of P^6 is the union of
// the projectivized common eigenspaces; on each, p_1 = p_2 = 0 leaves
// finitely many candidate points, and p_3 is evaluated at each. The claim is
// that p_3 vanishes nowhere, i.e. the A-fixed locus of X is empty.
//
// Candidates from a multi-dimensional eigenspace ("the family") are rescaled
// so the last nonzero coordinate equals 6; isolated candidates keep their
// echelon normalization with leading coordinate 1. The two family candidates
// are cross-checked, as a set, against the closed-form pair
// (-1 +- sqrt(-7) : ... : -1 -+ sqrt(-7) : ... : 6).
struct CaseIReport {
  std::vector<std::string> generator_cycles;
  int degree = 0;
  std::size_t group_order = 0;
  FieldPtr cyclotomic_field;
  std::vector<EigenspaceInfo> eigenspaces;
  std::vector<CandidateInfo> candidates;
  bool eigenspace_count_ok = false;
  bool dimensions_ok = false;
  bool candidate_count_ok = false;
  bool all_p3_nonzero = false;
  bool family_matches_closed_form = false;
  bool claim_verified = false;
  std::string conclusion;
  std::vector<std::string> citations;
};

CaseIReport verify_case_i();

}  // namespace edim

#endif

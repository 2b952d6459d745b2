#ifndef EDIM_SPINCOVER_HPP
#define EDIM_SPINCOVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifford.hpp"
#include "linalg.hpp"
#include "perm.hpp"

namespace edim {

// Lift of an even permutation into the even part of the rank-n Clifford
// algebra: the ordered product of s_ij = e_i - e_j over the transposition
// word. Conjugation by a single s_ij sends e_k to minus the (i j)-swapped
// generator, so an even-length product conjugates generators exactly by the
// permutation; this covering identity is checked eagerly on every lift.
struct Lift {
  Permutation permutation;
  std::vector<std::pair<int, int>> word;
  CliffordElement element;
  CliffordElement inverse_element;  // product of s_ij / 2, reversed order
};

// word is a list of transpositions (i, j) whose right-to-left product (the
// rightmost applied first, matching parse_cycles) equals sigma; sigma must be
// even. The empty word lifts the identity. Throws when the word product
// disagrees with sigma, the word has odd length, or the covering check
// fails.
Lift lift(const Permutation& sigma, const std::vector<std::pair<int, int>>& word);

// b1 b2 b1^-1 b2^-1. When the underlying permutations commute this lies in
// the kernel {+1, -1} of the covering map and the exact value (+1 or -1) is
// independent of the chosen words. A non-scalar result means the underlying
// permutations do not commute and is an error.
Rational scalar_commutator(const Lift& b1, const Lift& b2);

struct LiftInfo {
  std::string permutation;
  std::vector<std::pair<int, int>> word;
  std::string element;  // rendered blade expansion
  bool covering_ok = false;
};

struct CaseIIReport {
  std::vector<std::string> generator_cycles;
  std::size_t group_order = 0;
  bool abelian = false;
  std::vector<LiftInfo> lifts;
  Rational commutator = 0;
  std::vector<std::string> control_cycles;
  std::vector<LiftInfo> control_lifts;
  Rational control_commutator = 0;
  bool commutator_is_minus_one = false;
  bool control_is_plus_one = false;
  bool claim_verified = false;
  std::string conclusion;
  std::string rationale;
  std::vector<std::string> citations;
};

// Lifts the generators of A = <(1 2)(3 4), (1 2)(5 6)> into the rank-7
// algebra and computes their scalar commutator, expected -1: the preimages
// of the two permutations fail to commute in every representation where the
// central element of the double cover acts by -1, so the preimage B of A in
// GL_4(C) is not abelian. The control pair (1 2 3), (4 5 6) must give +1.
CaseIIReport verify_case_ii();

struct MatrixCommutatorResult {
  bool scalar = false;
  bool identity = false;
  std::optional<FieldElement> value;  // present iff scalar
};

// M1 M2 M1^-1 M2^-1, classified exactly: a scalar matrix yields its scalar
// and whether that scalar is 1; anything else is reported non-scalar.
// Throws on singular input or a shape/field mismatch.
MatrixCommutatorResult matrix_commutator_check(const FMatrix& m1,
                                               const FMatrix& m2);

struct NamedMatrix {
  std::string name;
  FMatrix matrix;
};

struct MatrixFileData {
  FieldPtr field;
  int size = 0;
  std::vector<NamedMatrix> matrices;
};

struct MatrixPairResult {
  std::string first;
  std::string second;
  bool scalar = false;
  bool identity = false;
  std::optional<FieldElement> value;
};

struct MatrixCheckReport {
  FieldPtr field;
  int size = 0;
  std::vector<std::string> names;
  std::vector<MatrixPairResult> pairs;  // all unordered pairs, input order
};

// Pairwise commutator classification for user-supplied matrices (e.g. a
// transcription of the Blichfeldt generators). Requires at least two
// matrices.
MatrixCheckReport check_matrices(const MatrixFileData& data);

}  // namespace edim

#endif

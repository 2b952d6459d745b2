#ifndef EDIM_TESTS_PROPERTIES_HPP
#define EDIM_TESTS_PROPERTIES_HPP

#include <string>

#include "numberfield.hpp"

// Randomized property checks shared between the unit suites and the
// acceptance runner. Every check is deterministic for a fixed seed and
// returns an empty string on success, or a description of the first failure.
namespace props {

std::string field_axioms(const edim::FieldPtr& field, int triples,
                         unsigned seed);
std::string clifford_associativity(int rank, int triples, unsigned seed);
std::string eigenspace_completeness(int group_count, unsigned seed);
std::string lift_well_definedness();
std::string propagate_confluence(int orderings, int max_n);

// Compares solve_power_sum_constraints against a brute-force pencil solver
// that reconstructs the restricted forms by evaluation and interpolation.
// Runs at least 20 pencils; the count actually run is appended to *pencils
// when non-null.
std::string solver_oracle_agreement(int* pencils = nullptr);

std::string commutator_agreement();

}  // namespace props

#endif

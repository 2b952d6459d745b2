#ifndef EDIM_ORCHESTRATE_HPP
#define EDIM_ORCHESTRATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "spincover.hpp"
#include "variety.hpp"

namespace edim {

struct BoundsOptions {
  int max_n = 30;
  bool exclusion = true;
  std::string seeds_path;  // empty means no extra seed file
};

// A bounds run plus everything that fed it. When exclusion is requested,
// both case verifications run first and the fact "ed(A_7) != 3" enters the
// seed list only if both verify; the closed-form comparison is meaningful
// only then.
struct BoundsRunResult {
  int max_n = 30;
  bool exclusion_requested = true;
  bool exclusion_applied = false;
  std::vector<SeedFact> seeds;  // the complete list fed to propagate
  std::optional<CaseIReport> case_i;
  std::optional<CaseIIReport> case_ii;
  BoundTable table;
  std::optional<ClosedFormReport> closed_form;
  bool verified = false;
};

// Requires max_n >= 7 (the engine itself accepts smaller ranges; the
// orchestrated run needs A_7 and S_7 present).
BoundsRunResult run_bounds(const BoundsOptions& options);

struct TheoremResult {
  std::string target;  // group key, "S:7" or "A:7"
  BoundsRunResult bounds;
  ProofChain chain_s7;
  ProofChain chain_a7;
  bool verified = false;
  std::string verdict;
};

// "s7" or "a7".
GroupId parse_prove_target(const std::string& text);

// Full derivation of the headline value: both case verifications, the bound
// table, and both proof chains. verified means both cases passed and the
// table pins ed(S_7) and ed(A_7) to [4, 4].
TheoremResult run_prove(const GroupId& target, const BoundsOptions& options);

}  // namespace edim

#endif

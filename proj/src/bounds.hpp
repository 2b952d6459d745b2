#ifndef EDIM_BOUNDS_HPP
#define EDIM_BOUNDS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace edim {

enum class Family { S, A };

struct GroupId {
  Family family = Family::S;
  int n = 1;

  bool operator==(const GroupId& rhs) const {
    return family == rhs.family && n == rhs.n;
  }
};

std::string group_key(const GroupId& g);      // "S:7"
std::string group_display(const GroupId& g);  // "S_7"

enum class FactKind { Lower, Upper, ExcludedValue };

// One derived or seeded statement about ed of a single group, with its full
// provenance: the rule that produced it and the arena indices of the premise
// facts. Base facts (seeds, non-negativity, the n >= 5 display bounds) have
// no premises.
struct BoundFact {
  GroupId group;
  FactKind kind = FactKind::Lower;
  int value = 0;
  std::string rule;  // "seed", "nonneg", or "R1".."R8"
  std::vector<std::size_t> premises;
  std::string citation;
};

struct SeedFact {
  Family family = Family::S;
  int n = 1;
  FactKind kind = FactKind::Lower;
  int value = 0;
  std::string citation;
};

// Best interval and excluded values known for one group, each component
// pointing at the arena fact that established it.
struct TableEntry {
  int lower = 0;
  std::optional<int> upper;
  std::set<int> excluded;
  std::size_t lower_fact = 0;
  std::optional<std::size_t> upper_fact;
  std::map<int, std::size_t> excluded_facts;
};

struct BoundTable {
  int max_n = 0;
  std::vector<BoundFact> facts;            // append-only arena
  std::map<std::string, TableEntry> entries;  // keyed by group_key

  bool has(const GroupId& g) const;
  const TableEntry& entry(const GroupId& g) const;  // throws when absent
};

struct RuleInfo {
  std::string id;
  std::string statement;
  std::string citation;
};

// R1..R8 in canonical order. R1..R4 are premise-free display bounds; R5/R6
// are the two step recursions, applied in both interval directions; R7 is
// subgroup monotonicity along the embeddings A_n <= S_n, S_n <= S_{n+1},
// A_n <= A_{n+1} and S_n <= A_{n+2}, also in both directions; R8 advances a
// lower endpoint sitting on an excluded value.
const std::vector<RuleInfo>& rule_set();

// The one fact the surrounding literature contributes: ed(A_6) = 3.
std::vector<SeedFact> default_seeds();

// Fixpoint of the rules over both families for 1 <= n <= max_n, starting
// from non-negativity and the given seeds. Intervals only tighten and values
// live in [0, max_n], so termination is guaranteed. order_seed 0 applies the
// iterated rules in canonical order; any other value shuffles the order each
// sweep (deterministically per seed value), which must not change the
// resulting bounds. Throws InconsistencyError when some lower bound exceeds
// an upper bound, quoting both derivations.
BoundTable propagate(const std::vector<SeedFact>& seeds, int max_n,
                     unsigned order_seed = 0);

std::string fact_statement(const BoundFact& f);

// Indented derivation tree of one fact, premises recursively expanded.
std::string render_derivation(const BoundTable& table, std::size_t fact_index);

struct ClosedFormRow {
  GroupId group;
  int expected_lower = 0;
  int actual_lower = 0;
  int expected_upper = 0;
  std::optional<int> actual_upper;
  bool ok = false;
};

struct ClosedFormReport {
  int max_n = 0;
  std::vector<ClosedFormRow> rows;
  int mismatches = 0;
  bool all_ok = false;
};

// Compares the table against the closed-form displays, for 5 <= n <= max_n:
// lower(S_n) >= floor(n/2), and from n >= 6 also floor((n+1)/2);
// lower(A_n) >= 2*floor(n/4), and from n >= 6 also n/2 for even n,
// (n-1)/2 for n = 1 mod 4, (n+1)/2 for n = 3 mod 4; upper bounds equal
// n - 3 throughout. Expects a table propagated with the exclusion fact.
ClosedFormReport closed_form_check(const BoundTable& table, int max_n);

struct ChainStep {
  std::string statement;
  std::string justification;
  std::string citation;
};

struct ProofChain {
  std::string target;  // group_key form
  std::vector<ChainStep> steps;
  std::string exclusion_note;  // citation of the A_7 exclusion, when present
  int final_lower = 0;
  std::optional<int> final_upper;
  bool exact = false;
  std::string conclusion;
};

// The inequality chain 4 >= ed_k(S_7) >= ed_k(A_7) >= ed_C(A_7) >= ed_C(A_6)
// = 3, rendered for target S_7 (five steps), A_7 (four steps, entering the
// chain at its own upper bound) or A_6 (the seed fact alone). Conclusions
// come from the table's interval for the target.
ProofChain proof_chain(const BoundTable& table, const GroupId& target);

}  // namespace edim

#endif

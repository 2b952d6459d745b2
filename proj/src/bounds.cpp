#include "bounds.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "err.hpp"

namespace edim {

std::string group_key(const GroupId& g) {
  return (g.family == Family::S ? "S:" : "A:") + std::to_string(g.n);
}

std::string group_display(const GroupId& g) {
  return (g.family == Family::S ? "S_" : "A_") + std::to_string(g.n);
}

bool BoundTable::has(const GroupId& g) const {
  return entries.find(group_key(g)) != entries.end();
}

const TableEntry& BoundTable::entry(const GroupId& g) const {
  const auto it = entries.find(group_key(g));
  if (it == entries.end())
    throw InvalidArgument("no table entry for " + group_display(g));
  return it->second;
}

namespace {

const char kDisplaySPair[] = "Buhler-Reichstein: n - 3 >= ed(S_n) >= floor(n/2) for n >= 5";
const char kDisplayAPair[] = "Buhler-Reichstein: n - 3 >= ed(A_n) >= 2*floor(n/4) for n >= 5";
const char kRecursionS[] = "Buhler-Reichstein: ed(S_{n+2}) >= ed(S_n) + 1 for n >= 1";
const char kRecursionA[] = "Buhler-Reichstein: ed(A_{n+4}) >= ed(A_n) + 2 for n >= 4";
const char kSubgroup[] = "standard fact: ed(G) >= ed(H) for any subgroup H of G";
const char kExclusionRule[] = "an integer interval whose lower endpoint is an excluded value starts above it";
const char kNonneg[] = "essential dimension is a non-negative integer";

}  // namespace

const std::vector<RuleInfo>& rule_set() {
  static const std::vector<RuleInfo> rules = {
      {"R1", "ed(S_n) <= n - 3 for n >= 5", kDisplaySPair},
      {"R2", "ed(S_n) >= floor(n/2) for n >= 5", kDisplaySPair},
      {"R3", "ed(A_n) <= n - 3 for n >= 5", kDisplayAPair},
      {"R4", "ed(A_n) >= 2*floor(n/4) for n >= 5", kDisplayAPair},
      {"R5", "ed(S_{n+2}) >= ed(S_n) + 1 for n >= 1, in both interval directions",
       kRecursionS},
      {"R6", "ed(A_{n+4}) >= ed(A_n) + 2 for n >= 4, in both interval directions",
       kRecursionA},
      {"R7",
       "ed(G) >= ed(H) along the embeddings A_n <= S_n, S_n <= S_{n+1}, "
       "A_n <= A_{n+1}, S_n <= A_{n+2}, in both interval directions",
       kSubgroup},
      {"R8", "a lower bound equal to an excluded value advances past it",
       kExclusionRule},
  };
  return rules;
}

std::vector<SeedFact> default_seeds() {
  return {SeedFact{Family::A, 6, FactKind::Lower, 3, "Serre: ed(A_6) = 3"},
          SeedFact{Family::A, 6, FactKind::Upper, 3, "Serre: ed(A_6) = 3"}};
}

std::string fact_statement(const BoundFact& f) {
  const std::string g = "ed(" + group_display(f.group) + ")";
  switch (f.kind) {
    case FactKind::Lower:
      return g + " >= " + std::to_string(f.value);
    case FactKind::Upper:
      return g + " <= " + std::to_string(f.value);
    case FactKind::ExcludedValue:
      return g + " != " + std::to_string(f.value);
  }
  throw Error("unreachable fact kind");
}

namespace {

void render_rec(const BoundTable& table, std::size_t idx, int depth,
                std::string& out) {
  if (idx >= table.facts.size())
    throw InvalidArgument("fact index out of range");
  const BoundFact& f = table.facts[idx];
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += fact_statement(f) + "  [" + f.rule + ": " + f.citation + "]\n";
  for (const std::size_t p : f.premises) render_rec(table, p, depth + 1, out);
}

class Engine {
public:
  explicit Engine(int max_n) {
    if (max_n < 1) throw InvalidArgument("max_n must be at least 1");
    table_.max_n = max_n;
    for (int n = 1; n <= max_n; ++n)
      for (const Family f : {Family::S, Family::A}) {
        const GroupId g{f, n};
        table_.facts.push_back(
            BoundFact{g, FactKind::Lower, 0, "nonneg", {}, kNonneg});
        TableEntry e;
        e.lower = 0;
        e.lower_fact = table_.facts.size() - 1;
        table_.entries.emplace(group_key(g), std::move(e));
      }
  }

  BoundTable take() { return std::move(table_); }

  void apply_seeds(const std::vector<SeedFact>& seeds) {
    for (const SeedFact& s : seeds) {
      if (s.n < 1 || s.n > table_.max_n)
        throw InvalidArgument("seed for n = " + std::to_string(s.n) +
                              " outside [1, " + std::to_string(table_.max_n) +
                              "]");
      if (s.value < 0) throw InvalidArgument("seed value must be >= 0");
      const GroupId g{s.family, s.n};
      switch (s.kind) {
        case FactKind::Lower:
          add_lower(g, s.value, "seed", {}, s.citation);
          break;
        case FactKind::Upper:
          add_upper(g, s.value, "seed", {}, s.citation);
          break;
        case FactKind::ExcludedValue:
          add_excluded(g, s.value, "seed", {}, s.citation);
          break;
      }
    }
  }

  void apply_display_bounds() {
    for (int n = 5; n <= table_.max_n; ++n) {
      add_upper({Family::S, n}, n - 3, "R1", {}, kDisplaySPair);
      add_lower({Family::S, n}, n / 2, "R2", {}, kDisplaySPair);
      add_upper({Family::A, n}, n - 3, "R3", {}, kDisplayAPair);
      add_lower({Family::A, n}, 2 * (n / 4), "R4", {}, kDisplayAPair);
    }
  }

  void run(unsigned order_seed) {
    std::vector<std::function<bool()>> passes = {
        [this] { return recursion_forward(Family::S, 2, 1, 1, "R5", kRecursionS); },
        [this] { return recursion_backward(Family::S, 2, 1, 1, "R5", kRecursionS); },
        [this] { return recursion_forward(Family::A, 4, 2, 4, "R6", kRecursionA); },
        [this] { return recursion_backward(Family::A, 4, 2, 4, "R6", kRecursionA); },
        [this] { return subgroup_forward(); },
        [this] { return subgroup_backward(); },
        [this] { return exclusion_pass(); },
    };
    std::vector<std::size_t> order(passes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937 rng(order_seed);
    bool changed = true;
    while (changed) {
      changed = false;
      if (order_seed != 0) std::shuffle(order.begin(), order.end(), rng);
      for (const std::size_t i : order) changed = passes[i]() || changed;
    }
  }

private:
  TableEntry& entry(const GroupId& g) { return table_.entries.at(group_key(g)); }

  [[noreturn]] void fail(const GroupId& g, std::size_t lower_idx,
                         std::size_t upper_idx) {
    std::string msg = "inconsistent bounds for ed(" + group_display(g) +
                      "): " + fact_statement(table_.facts[lower_idx]) +
                      " conflicts with " +
                      fact_statement(table_.facts[upper_idx]) +
                      "\nlower bound derivation:\n";
    render_rec(table_, lower_idx, 1, msg);
    msg += "upper bound derivation:\n";
    render_rec(table_, upper_idx, 1, msg);
    throw InconsistencyError(msg);
  }

  bool add_lower(const GroupId& g, int value, const std::string& rule,
                 std::vector<std::size_t> premises,
                 const std::string& citation) {
    value = std::min(value, table_.max_n);
    TableEntry& e = entry(g);
    if (value <= e.lower) return false;
    table_.facts.push_back(
        BoundFact{g, FactKind::Lower, value, rule, std::move(premises),
                  citation});
    const std::size_t idx = table_.facts.size() - 1;
    if (e.upper && value > *e.upper) fail(g, idx, *e.upper_fact);
    e.lower = value;
    e.lower_fact = idx;
    return true;
  }

  bool add_upper(const GroupId& g, int value, const std::string& rule,
                 std::vector<std::size_t> premises,
                 const std::string& citation) {
    TableEntry& e = entry(g);
    if (e.upper && value >= *e.upper) return false;
    table_.facts.push_back(
        BoundFact{g, FactKind::Upper, value, rule, std::move(premises),
                  citation});
    const std::size_t idx = table_.facts.size() - 1;
    if (value < e.lower) fail(g, e.lower_fact, idx);
    e.upper = value;
    e.upper_fact = idx;
    return true;
  }

  bool add_excluded(const GroupId& g, int value, const std::string& rule,
                    std::vector<std::size_t> premises,
                    const std::string& citation) {
    TableEntry& e = entry(g);
    if (e.excluded.count(value) != 0) return false;
    table_.facts.push_back(BoundFact{g, FactKind::ExcludedValue, value, rule,
                                     std::move(premises), citation});
    e.excluded.insert(value);
    e.excluded_facts.emplace(value, table_.facts.size() - 1);
    return true;
  }

  // lower(F_{n+step}) >= lower(F_n) + gain for n >= min_n.
  bool recursion_forward(Family f, int step, int gain, int min_n,
                         const std::string& rule, const std::string& cite) {
    bool changed = false;
    for (int n = min_n; n + step <= table_.max_n; ++n) {
      const TableEntry& src = entry({f, n});
      changed = add_lower({f, n + step}, src.lower + gain, rule,
                          {src.lower_fact}, cite) ||
                changed;
    }
    return changed;
  }

  // The same inequality read downward: upper(F_n) <= upper(F_{n+step}) - gain.
  bool recursion_backward(Family f, int step, int gain, int min_n,
                          const std::string& rule, const std::string& cite) {
    bool changed = false;
    for (int n = min_n; n + step <= table_.max_n; ++n) {
      const TableEntry& src = entry({f, n + step});
      if (!src.upper) continue;
      changed = add_upper({f, n}, *src.upper - gain, rule, {*src.upper_fact},
                          cite) ||
                changed;
    }
    return changed;
  }

  struct Embedding {
    GroupId sub;
    GroupId super;
  };

  std::vector<Embedding> embeddings() const {
    std::vector<Embedding> out;
    for (int n = 1; n <= table_.max_n; ++n) {
      out.push_back({{Family::A, n}, {Family::S, n}});
      if (n + 1 <= table_.max_n) {
        out.push_back({{Family::S, n}, {Family::S, n + 1}});
        out.push_back({{Family::A, n}, {Family::A, n + 1}});
      }
      if (n + 2 <= table_.max_n)
        out.push_back({{Family::S, n}, {Family::A, n + 2}});
    }
    return out;
  }

  bool subgroup_forward() {
    bool changed = false;
    for (const Embedding& em : embeddings()) {
      const TableEntry& sub = entry(em.sub);
      changed = add_lower(em.super, sub.lower, "R7", {sub.lower_fact},
                          std::string(kSubgroup) + " (" +
                              group_display(em.sub) + " <= " +
                              group_display(em.super) + ")") ||
                changed;
    }
    return changed;
  }

  bool subgroup_backward() {
    bool changed = false;
    for (const Embedding& em : embeddings()) {
      const TableEntry& super = entry(em.super);
      if (!super.upper) continue;
      changed = add_upper(em.sub, *super.upper, "R7", {*super.upper_fact},
                          std::string(kSubgroup) + " (" +
                              group_display(em.sub) + " <= " +
                              group_display(em.super) + ")") ||
                changed;
    }
    return changed;
  }

  bool exclusion_pass() {
    bool changed = false;
    for (auto& [key, e] : table_.entries) {
      while (e.excluded.count(e.lower) != 0) {
        const GroupId g = table_.facts[e.lower_fact].group;
        if (!add_lower(g, e.lower + 1, "R8",
                       {e.lower_fact, e.excluded_facts.at(e.lower)},
                       kExclusionRule))
          break;  // the clamp at max_n refused the advance
        changed = true;
      }
    }
    return changed;
  }

  BoundTable table_;
};

}  // namespace

BoundTable propagate(const std::vector<SeedFact>& seeds, int max_n,
                     unsigned order_seed) {
  Engine engine(max_n);
  engine.apply_display_bounds();
  engine.apply_seeds(seeds);
  engine.run(order_seed);
  return engine.take();
}

std::string render_derivation(const BoundTable& table, std::size_t fact_index) {
  std::string out;
  render_rec(table, fact_index, 0, out);
  return out;
}

ClosedFormReport closed_form_check(const BoundTable& table, int max_n) {
  if (max_n > table.max_n)
    throw InvalidArgument("closed form range exceeds the table range");
  ClosedFormReport report;
  report.max_n = max_n;
  for (int n = 5; n <= max_n; ++n)
    for (const Family f : {Family::S, Family::A}) {
      const GroupId g{f, n};
      const TableEntry& e = table.entry(g);
      int expected = f == Family::S ? n / 2 : 2 * (n / 4);
      if (n >= 6) {
        if (f == Family::S) {
          expected = std::max(expected, (n + 1) / 2);
        } else {
          const int refined = n % 2 == 0 ? n / 2
                              : n % 4 == 1 ? (n - 1) / 2
                                           : (n + 1) / 2;
          expected = std::max(expected, refined);
        }
      }
      ClosedFormRow row;
      row.group = g;
      row.expected_lower = expected;
      row.actual_lower = e.lower;
      row.expected_upper = n - 3;
      row.actual_upper = e.upper;
      row.ok = e.lower >= expected && e.upper && *e.upper == n - 3;
      if (!row.ok) ++report.mismatches;
      report.rows.push_back(std::move(row));
    }
  report.all_ok = report.mismatches == 0;
  return report;
}

namespace {

const char kFieldReduction[] =
    "field reduction: ed_k(G) >= ed_C(G) for every characteristic-0 field k "
    "(Berhuy-Favi: pass to an algebraic closure; "
    "Brosnan-Reichstein-Vistoli: essential dimension agrees between "
    "algebraically closed fields of characteristic 0)";

std::string interval_conclusion(const GroupId& g, const TableEntry& e) {
  const std::string name = "ed(" + group_display(g) + ")";
  if (e.upper && *e.upper == e.lower)
    return name + " = " + std::to_string(e.lower);
  if (e.upper)
    return name + " in [" + std::to_string(e.lower) + ", " +
           std::to_string(*e.upper) + "]";
  return name + " >= " + std::to_string(e.lower);
}

}  // namespace

ProofChain proof_chain(const BoundTable& table, const GroupId& target) {
  const bool s7 = target.family == Family::S && target.n == 7;
  const bool a7 = target.family == Family::A && target.n == 7;
  const bool a6 = target.family == Family::A && target.n == 6;
  if (!s7 && !a7 && !a6)
    throw InvalidArgument("proof chain targets are S_7, A_7 and A_6; got " +
                          group_display(target));

  const TableEntry& e = table.entry(target);
  ProofChain chain;
  chain.target = group_key(target);
  chain.final_lower = e.lower;
  chain.final_upper = e.upper;
  chain.exact = e.upper && *e.upper == e.lower;
  chain.conclusion = interval_conclusion(target, e);

  if (a6) {
    chain.steps.push_back(ChainStep{"ed_C(A_6) = 3", "seed value",
                                    "Serre: ed(A_6) = 3"});
    return chain;
  }

  if (s7) {
    chain.steps.push_back(ChainStep{
        "4 >= ed_k(S_7)", "upper display bound at n = 7", kDisplaySPair});
    chain.steps.push_back(ChainStep{"ed_k(S_7) >= ed_k(A_7)",
                                    "subgroup monotonicity along A_7 <= S_7",
                                    kSubgroup});
  } else {
    chain.steps.push_back(ChainStep{
        "4 >= ed_k(A_7)", "upper display bound at n = 7", kDisplayAPair});
  }
  chain.steps.push_back(ChainStep{"ed_k(A_7) >= ed_C(A_7)",
                                  "reduction to the complex numbers",
                                  kFieldReduction});
  chain.steps.push_back(ChainStep{"ed_C(A_7) >= ed_C(A_6)",
                                  "subgroup monotonicity along A_6 <= A_7",
                                  kSubgroup});
  chain.steps.push_back(
      ChainStep{"ed_C(A_6) = 3", "seed value", "Serre: ed(A_6) = 3"});

  const TableEntry& a7_entry = table.entry({Family::A, 7});
  const auto excl = a7_entry.excluded_facts.find(3);
  if (excl != a7_entry.excluded_facts.end())
    chain.exclusion_note = table.facts[excl->second].citation;
  return chain;
}

}  // namespace edim

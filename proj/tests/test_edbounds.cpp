#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "err.hpp"
#include "properties.hpp"

using namespace edim;

namespace {

SeedFact exclusion_seed() {
  return SeedFact{Family::A, 7, FactKind::ExcludedValue, 3, "test exclusion"};
}

std::vector<SeedFact> seeds_with_exclusion() {
  std::vector<SeedFact> seeds = default_seeds();
  seeds.push_back(exclusion_seed());
  return seeds;
}

void check_interval(const BoundTable& t, Family f, int n, int lo,
                    std::optional<int> up) {
  const TableEntry& e = t.entry({f, n});
  CHECK(e.lower == lo);
  CHECK(e.upper == up);
}

}  // namespace

TEST_SUITE("edbounds") {

TEST_CASE("group naming") {
  CHECK(group_key({Family::S, 7}) == "S:7");
  CHECK(group_key({Family::A, 6}) == "A:6");
  CHECK(group_display({Family::S, 7}) == "S_7");
  CHECK(group_display({Family::A, 12}) == "A_12");
}

TEST_CASE("rule set and default seeds") {
  const std::vector<RuleInfo>& rules = rule_set();
  REQUIRE(rules.size() == 8);
  for (std::size_t i = 0; i < rules.size(); ++i)
    CHECK(rules[i].id == "R" + std::to_string(i + 1));

  const std::vector<SeedFact> seeds = default_seeds();
  REQUIRE(seeds.size() == 2);
  for (const SeedFact& s : seeds) {
    CHECK(s.family == Family::A);
    CHECK(s.n == 6);
    CHECK(s.value == 3);
    CHECK(s.citation == "Serre: ed(A_6) = 3");
  }
  CHECK(seeds[0].kind == FactKind::Lower);
  CHECK(seeds[1].kind == FactKind::Upper);
}

TEST_CASE("fact statements") {
  CHECK(fact_statement(BoundFact{{Family::S, 7}, FactKind::Lower, 4, "seed",
                                 {}, ""}) == "ed(S_7) >= 4");
  CHECK(fact_statement(BoundFact{{Family::A, 6}, FactKind::Upper, 3, "seed",
                                 {}, ""}) == "ed(A_6) <= 3");
  CHECK(fact_statement(BoundFact{{Family::A, 7}, FactKind::ExcludedValue, 3,
                                 "seed", {}, ""}) == "ed(A_7) != 3");
}

TEST_CASE("propagation without the exclusion fact") {
  const BoundTable t = propagate(default_seeds(), 30);
  CHECK(t.max_n == 30);
  check_interval(t, Family::S, 5, 2, 2);
  check_interval(t, Family::S, 6, 3, 3);
  check_interval(t, Family::A, 5, 2, 2);
  check_interval(t, Family::A, 6, 3, 3);
  check_interval(t, Family::S, 7, 3, 4);
  check_interval(t, Family::A, 7, 3, 4);
  check_interval(t, Family::S, 8, 4, 5);
  // the backward recursion pins the small symmetric groups
  check_interval(t, Family::S, 1, 0, 0);
  const TableEntry& a4 = t.entry({Family::A, 4});
  REQUIRE(a4.upper.has_value());
  CHECK(*a4.upper <= 2);
  CHECK(t.entry({Family::A, 7}).excluded.empty());
}

TEST_CASE("the exclusion fact pins n = 7") {
  const BoundTable t = propagate(seeds_with_exclusion(), 30);
  check_interval(t, Family::A, 7, 4, 4);
  check_interval(t, Family::S, 7, 4, 4);
  CHECK(t.entry({Family::A, 7}).excluded == std::set<int>{3});
  // groups below n = 7 are untouched by the exclusion
  check_interval(t, Family::A, 6, 3, 3);
  check_interval(t, Family::S, 6, 3, 3);
}

TEST_CASE("closed form check") {
  const BoundTable t = propagate(seeds_with_exclusion(), 30);
  const ClosedFormReport r = closed_form_check(t, 30);
  CHECK(r.max_n == 30);
  CHECK(r.all_ok);
  CHECK(r.mismatches == 0);
  REQUIRE(r.rows.size() == 52);  // n = 5..30, both families

  for (const ClosedFormRow& row : r.rows) {
    CHECK(row.ok);
    CHECK(row.expected_upper == row.group.n - 3);
    REQUIRE(row.actual_upper.has_value());
    CHECK(*row.actual_upper == row.group.n - 3);
    CHECK(row.actual_lower >= row.expected_lower);
  }

  const auto row_for = [&](Family f, int n) {
    for (const ClosedFormRow& row : r.rows)
      if (row.group == GroupId{f, n}) return row;
    throw Error("row not found");
  };
  CHECK(row_for(Family::S, 9).expected_lower == 5);
  CHECK(row_for(Family::A, 11).expected_lower == 6);
  CHECK(row_for(Family::A, 10).expected_lower == 5);
  CHECK(row_for(Family::A, 13).expected_lower == 6);

  CHECK_THROWS_AS(closed_form_check(t, 31), InvalidArgument);
}

TEST_CASE("lower bounds are monotone along the embeddings") {
  const BoundTable t = propagate(seeds_with_exclusion(), 30);
  for (int n = 1; n < 30; ++n) {
    CHECK(t.entry({Family::S, n + 1}).lower >= t.entry({Family::S, n}).lower);
    CHECK(t.entry({Family::A, n + 1}).lower >= t.entry({Family::A, n}).lower);
  }
  for (int n = 1; n <= 30; ++n)
    CHECK(t.entry({Family::S, n}).lower >= t.entry({Family::A, n}).lower);
}

TEST_CASE("every stored fact replays against its premises") {
  const BoundTable t = propagate(seeds_with_exclusion(), 30);
  REQUIRE(!t.facts.empty());
  for (const BoundFact& f : t.facts) {
    const auto premise = [&](std::size_t slot) -> const BoundFact& {
      REQUIRE(slot < f.premises.size());
      REQUIRE(f.premises[slot] < t.facts.size());
      return t.facts[f.premises[slot]];
    };
    // lower bounds are clamped into [0, max_n] when recorded
    const auto matches_lower = [&](int expected) {
      return f.value == std::min(expected, t.max_n);
    };

    if (f.rule == "nonneg") {
      CHECK(f.premises.empty());
      CHECK(f.kind == FactKind::Lower);
      CHECK(f.value == 0);
    } else if (f.rule == "seed") {
      CHECK(f.premises.empty());
    } else if (f.rule == "R1" || f.rule == "R3") {
      CHECK(f.premises.empty());
      CHECK(f.kind == FactKind::Upper);
      CHECK(f.value == f.group.n - 3);
      CHECK(f.group.n >= 5);
    } else if (f.rule == "R2") {
      CHECK(f.premises.empty());
      CHECK(f.kind == FactKind::Lower);
      CHECK(matches_lower(f.group.n / 2));
    } else if (f.rule == "R4") {
      CHECK(f.premises.empty());
      CHECK(f.kind == FactKind::Lower);
      CHECK(matches_lower(2 * (f.group.n / 4)));
    } else if (f.rule == "R5" || f.rule == "R6") {
      const int step = f.rule == "R5" ? 2 : 4;
      const int gain = f.rule == "R5" ? 1 : 2;
      REQUIRE(f.premises.size() == 1);
      const BoundFact& p = premise(0);
      CHECK(p.group.family == f.group.family);
      CHECK(p.kind == f.kind);
      if (f.kind == FactKind::Lower) {
        CHECK(p.group.n == f.group.n - step);
        CHECK(matches_lower(p.value + gain));
      } else {
        REQUIRE(f.kind == FactKind::Upper);
        CHECK(p.group.n == f.group.n + step);
        CHECK(f.value == p.value - gain);
      }
    } else if (f.rule == "R7") {
      REQUIRE(f.premises.size() == 1);
      const BoundFact& p = premise(0);
      CHECK(p.kind == f.kind);
      CHECK(p.value == f.value);
      const GroupId& sub = f.kind == FactKind::Lower ? p.group : f.group;
      const GroupId& super = f.kind == FactKind::Lower ? f.group : p.group;
      const bool embeds =
          (sub.family == Family::A && super.family == Family::S &&
           sub.n == super.n) ||
          (sub.family == super.family && super.n == sub.n + 1) ||
          (sub.family == Family::S && super.family == Family::A &&
           super.n == sub.n + 2);
      CHECK(embeds);
    } else if (f.rule == "R8") {
      REQUIRE(f.premises.size() == 2);
      const BoundFact& low = premise(0);
      const BoundFact& ex = premise(1);
      CHECK(f.kind == FactKind::Lower);
      CHECK(low.kind == FactKind::Lower);
      CHECK(ex.kind == FactKind::ExcludedValue);
      CHECK(low.group == f.group);
      CHECK(ex.group == f.group);
      CHECK(low.value == ex.value);
      CHECK(f.value == low.value + 1);
    } else {
      FAIL("unknown rule " << f.rule);
    }
  }
}

TEST_CASE("derivations render as indented trees") {
  const BoundTable t = propagate(seeds_with_exclusion(), 10);
  const TableEntry& s7 = t.entry({Family::S, 7});
  const std::string tree = render_derivation(t, s7.lower_fact);
  CHECK(tree.find("ed(S_7) >= 4") == 0);
  CHECK(tree.find("ed(A_7) >= 4") != std::string::npos);
  CHECK(tree.find("ed(A_7) != 3") != std::string::npos);
  CHECK(tree.find("Serre: ed(A_6) = 3") != std::string::npos);
  CHECK(tree.find("\n  ") != std::string::npos);
  CHECK_THROWS_AS(render_derivation(t, t.facts.size()), InvalidArgument);
}

TEST_CASE("conflicting bounds raise an inconsistency with both derivations") {
  std::vector<SeedFact> seeds = default_seeds();
  seeds.push_back(SeedFact{Family::S, 5, FactKind::Upper, 1, "bogus claim"});
  try {
    propagate(seeds, 10);
    FAIL("expected InconsistencyError");
  } catch (const InconsistencyError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("inconsistent bounds for ed(S_5)") != std::string::npos);
    CHECK(msg.find("ed(S_5) >= 2") != std::string::npos);
    CHECK(msg.find("ed(S_5) <= 1") != std::string::npos);
    CHECK(msg.find("lower bound derivation:") != std::string::npos);
    CHECK(msg.find("upper bound derivation:") != std::string::npos);
    CHECK(msg.find("bogus claim") != std::string::npos);
  }

  // the exclusion advance can collide with an upper seed as well
  std::vector<SeedFact> pinned = seeds_with_exclusion();
  pinned.push_back(SeedFact{Family::A, 7, FactKind::Upper, 3, "bogus pin"});
  CHECK_THROWS_AS(propagate(pinned, 10), InconsistencyError);
}

TEST_CASE("seed and range validation") {
  CHECK_THROWS_AS(propagate(default_seeds(), 0), InvalidArgument);
  CHECK_THROWS_AS(propagate(default_seeds(), 5), InvalidArgument);  // A_6 seed
  CHECK_THROWS_AS(
      propagate({SeedFact{Family::S, 0, FactKind::Lower, 1, "x"}}, 10),
      InvalidArgument);
  CHECK_THROWS_AS(
      propagate({SeedFact{Family::S, 11, FactKind::Lower, 1, "x"}}, 10),
      InvalidArgument);
  CHECK_THROWS_AS(
      propagate({SeedFact{Family::S, 5, FactKind::Lower, -1, "x"}}, 10),
      InvalidArgument);
  const BoundTable t = propagate(default_seeds(), 10);
  CHECK(t.has({Family::S, 10}));
  CHECK_FALSE(t.has({Family::S, 11}));
  CHECK_THROWS_AS(t.entry({Family::S, 11}), InvalidArgument);
}

TEST_CASE("rule application order does not change the fixpoint") {
  CHECK(props::propagate_confluence(5, 25) == "");
}

TEST_CASE("proof chain for the symmetric target") {
  const BoundTable t = propagate(seeds_with_exclusion(), 30);
  const ProofChain c = proof_chain(t, {Family::S, 7});
  CHECK(c.target == "S:7");
  REQUIRE(c.steps.size() == 5);
  CHECK(c.steps[0].statement == "4 >= ed_k(S_7)");
  CHECK(c.steps[1].statement == "ed_k(S_7) >= ed_k(A_7)");
  CHECK(c.steps[1].justification == "subgroup monotonicity along A_7 <= S_7");
  CHECK(c.steps[2].statement == "ed_k(A_7) >= ed_C(A_7)");
  CHECK(c.steps[2].citation.find("Berhuy-Favi") != std::string::npos);
  CHECK(c.steps[3].statement == "ed_C(A_7) >= ed_C(A_6)");
  CHECK(c.steps[4].statement == "ed_C(A_6) = 3");
  CHECK(c.exclusion_note == "test exclusion");
  CHECK(c.final_lower == 4);
  CHECK(c.final_upper == 4);
  CHECK(c.exact);
  CHECK(c.conclusion == "ed(S_7) = 4");
}

TEST_CASE("proof chain for the alternating targets") {
  const BoundTable t = propagate(seeds_with_exclusion(), 30);
  const ProofChain a7 = proof_chain(t, {Family::A, 7});
  CHECK(a7.target == "A:7");
  REQUIRE(a7.steps.size() == 4);
  CHECK(a7.steps[0].statement == "4 >= ed_k(A_7)");
  CHECK(a7.steps[1].statement == "ed_k(A_7) >= ed_C(A_7)");
  CHECK(a7.conclusion == "ed(A_7) = 4");
  CHECK(a7.exact);

  const ProofChain a6 = proof_chain(t, {Family::A, 6});
  REQUIRE(a6.steps.size() == 1);
  CHECK(a6.steps[0].statement == "ed_C(A_6) = 3");
  CHECK(a6.conclusion == "ed(A_6) = 3");
  CHECK(a6.exclusion_note.empty());

  CHECK_THROWS_AS(proof_chain(t, {Family::S, 5}), InvalidArgument);
}

TEST_CASE("proof chain without the exclusion stays an interval") {
  const BoundTable t = propagate(default_seeds(), 30);
  const ProofChain c = proof_chain(t, {Family::S, 7});
  CHECK(c.conclusion == "ed(S_7) in [3, 4]");
  CHECK_FALSE(c.exact);
  CHECK(c.exclusion_note.empty());
  CHECK(c.final_lower == 3);
  CHECK(c.final_upper == 4);
}

}  // TEST_SUITE

#include "reports.hpp"

#include <fstream>
#include <sstream>

#include "err.hpp"
#include "poly.hpp"

namespace edim {

namespace {

std::string element_text(const FieldElement& x) {
  return poly_to_string(x.coeffs(), x.field()->label());
}

std::string vector_text(const std::vector<FieldElement>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += element_text(v[i]);
  }
  return out + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

Json vector_json(const std::vector<FieldElement>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(element_json(x));
  return out;
}

Json basis_json(const std::vector<std::vector<FieldElement>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(vector_json(row));
  return out;
}

Json derivation_json(const BoundTable& table, std::size_t idx) {
  const BoundFact& f = table.facts.at(idx);
  Json out;
  out["statement"] = fact_statement(f);
  out["rule"] = f.rule;
  out["citation"] = f.citation;
  Json premises = Json::array();
  for (const std::size_t p : f.premises)
    premises.push_back(derivation_json(table, p));
  out["premises"] = std::move(premises);
  return out;
}

std::string kind_to_string(FactKind kind) {
  switch (kind) {
    case FactKind::Lower: return "lower";
    case FactKind::Upper: return "upper";
    case FactKind::ExcludedValue: return "excluded_value";
  }
  throw Error("unreachable fact kind");
}

std::string seed_statement(const SeedFact& s) {
  return fact_statement(BoundFact{GroupId{s.family, s.n}, s.kind, s.value,
                                  "seed", {}, s.citation});
}

Json seed_json(const SeedFact& s) {
  Json out;
  out["family"] = s.family == Family::S ? "S" : "A";
  out["n"] = s.n;
  out["kind"] = kind_to_string(s.kind);
  out["value"] = s.value;
  out["citation"] = s.citation;
  return out;
}

Json chain_json(const ProofChain& chain) {
  Json out;
  out["target"] = chain.target;
  Json steps = Json::array();
  for (const ChainStep& s : chain.steps) {
    Json step;
    step["statement"] = s.statement;
    step["justification"] = s.justification;
    step["citation"] = s.citation;
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["exclusion_note"] = chain.exclusion_note;
  out["final_lower"] = chain.final_lower;
  if (chain.final_upper)
    out["final_upper"] = *chain.final_upper;
  else
    out["final_upper"] = nullptr;
  out["exact"] = chain.exact;
  out["conclusion"] = chain.conclusion;
  return out;
}

std::string chain_text(const ProofChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& s = chain.steps[i];
    out += "  " + std::to_string(i + 1) + ". " + s.statement + "\n";
    out += "     " + s.justification + "  [" + s.citation + "]\n";
  }
  if (!chain.exclusion_note.empty())
    out += "  exclusion step: " + chain.exclusion_note + "\n";
  out += "  conclusion: " + chain.conclusion + "\n";
  return out;
}

std::string interval_text(const TableEntry& e) {
  return "[" + std::to_string(e.lower) + ", " +
         (e.upper ? std::to_string(*e.upper) : std::string("?")) + "]";
}

}  // namespace

Json field_json(const FieldPtr& field) {
  if (!field) return nullptr;
  Json out;
  Json modulus = Json::array();
  for (const Rational& c : field->modulus())
    modulus.push_back(rational_to_string(c));
  out["modulus"] = std::move(modulus);
  out["label"] = field->label();
  return out;
}

Json element_json(const FieldElement& x) {
  Json out = Json::array();
  for (const Rational& c : x.coeffs()) out.push_back(rational_to_string(c));
  return out;
}

Json case_i_json(const CaseIReport& report) {
  Json out;
  out["report"] = "case-i";
  out["claim_verified"] = report.claim_verified;
  Json group;
  group["generators"] = report.generator_cycles;
  group["degree"] = report.degree;
  group["order"] = report.group_order;
  out["group"] = std::move(group);
  out["cyclotomic_field"] = field_json(report.cyclotomic_field);
  Json spaces = Json::array();
  for (const EigenspaceInfo& e : report.eigenspaces) {
    Json space;
    space["character_exponents"] = e.character_exponents;
    Json on_gens = Json::array();
    for (const FieldElement& v : e.character_on_generators)
      on_gens.push_back(element_json(v));
    space["character_on_generators"] = std::move(on_gens);
    space["dimension"] = e.dimension;
    space["basis"] = basis_json(e.basis);
    spaces.push_back(std::move(space));
  }
  out["eigenspaces"] = std::move(spaces);
  Json candidates = Json::array();
  for (const CandidateInfo& c : report.candidates) {
    Json cand;
    cand["eigenspace_index"] = c.eigenspace_index;
    cand["normalization"] = c.normalization;
    cand["field"] = field_json(c.coordinates.front().field());
    cand["coordinates"] = vector_json(c.coordinates);
    cand["p3"] = element_json(c.p3);
    cand["p3_nonzero"] = c.p3_nonzero;
    candidates.push_back(std::move(cand));
  }
  out["candidates"] = std::move(candidates);
  Json checks;
  checks["eigenspace_count_ok"] = report.eigenspace_count_ok;
  checks["dimensions_ok"] = report.dimensions_ok;
  checks["candidate_count_ok"] = report.candidate_count_ok;
  checks["all_p3_nonzero"] = report.all_p3_nonzero;
  checks["family_matches_closed_form"] = report.family_matches_closed_form;
  out["checks"] = std::move(checks);
  out["conclusion"] = report.conclusion;
  out["citations"] = report.citations;
  return out;
}

std::string case_i_text(const CaseIReport& report) {
  std::ostringstream out;
  out << "case-i verification: fixed locus of A = <";
  for (std::size_t i = 0; i < report.generator_cycles.size(); ++i)
    out << (i > 0 ? ", " : "") << report.generator_cycles[i];
  out << "> on the power-sum threefold in P^" << report.degree - 1 << "\n";
  out << "claim_verified: " << yesno(report.claim_verified) << "\n";
  out << "group: degree " << report.degree << ", order " << report.group_order
      << "\n";
  if (report.cyclotomic_field)
    out << "eigenspace field: " << report.cyclotomic_field->label()
        << " = Q[x]/(" << poly_to_string(report.cyclotomic_field->modulus())
        << ")\n";
  out << "eigenspaces: " << report.eigenspaces.size() << "\n";
  for (std::size_t i = 0; i < report.eigenspaces.size(); ++i) {
    const EigenspaceInfo& e = report.eigenspaces[i];
    out << "  [" << i << "] chi(generators) = (";
    for (std::size_t k = 0; k < e.character_on_generators.size(); ++k)
      out << (k > 0 ? ", " : "") << element_text(e.character_on_generators[k]);
    out << "), dimension " << e.dimension << "\n";
    for (const auto& row : e.basis)
      out << "      basis " << vector_text(row) << "\n";
  }
  out << "candidates with p_1 = p_2 = 0: " << report.candidates.size() << "\n";
  for (const CandidateInfo& c : report.candidates) {
    out << "  eigenspace " << c.eigenspace_index << ", " << c.normalization
        << ", field " << c.coordinates.front().field()->label() << "\n";
    out << "      point " << vector_text(c.coordinates) << "\n";
    out << "      p_3 = " << element_text(c.p3) << " ("
        << (c.p3_nonzero ? "nonzero" : "ZERO") << ")\n";
  }
  out << "checks: eigenspace_count " << yesno(report.eigenspace_count_ok)
      << ", dimensions " << yesno(report.dimensions_ok) << ", candidate_count "
      << yesno(report.candidate_count_ok) << ", all_p3_nonzero "
      << yesno(report.all_p3_nonzero) << ", family_closed_form "
      << yesno(report.family_matches_closed_form) << "\n";
  out << "conclusion: " << report.conclusion << "\n";
  out << "citations:\n";
  for (const std::string& c : report.citations) out << "  - " << c << "\n";
  return out.str();
}

namespace {

Json lift_json(const LiftInfo& l) {
  Json out;
  out["permutation"] = l.permutation;
  Json word = Json::array();
  for (const auto& [i, j] : l.word) word.push_back(Json::array({i, j}));
  out["word"] = std::move(word);
  out["element"] = l.element;
  out["covering_ok"] = l.covering_ok;
  return out;
}

void lift_text(std::ostringstream& out, const LiftInfo& l) {
  out << "  lift of " << l.permutation << " via word";
  for (const auto& [i, j] : l.word) out << " (" << i << " " << j << ")";
  out << "\n      element " << l.element << "\n      covering check: "
      << yesno(l.covering_ok) << "\n";
}

}  // namespace

Json case_ii_json(const CaseIIReport& report) {
  Json out;
  out["report"] = "case-ii";
  out["claim_verified"] = report.claim_verified;
  Json group;
  group["generators"] = report.generator_cycles;
  group["order"] = report.group_order;
  group["abelian"] = report.abelian;
  out["group"] = std::move(group);
  Json lifts = Json::array();
  for (const LiftInfo& l : report.lifts) lifts.push_back(lift_json(l));
  out["lifts"] = std::move(lifts);
  out["commutator"] = rational_to_string(report.commutator);
  out["commutator_is_minus_one"] = report.commutator_is_minus_one;
  Json control;
  control["generators"] = report.control_cycles;
  Json control_lifts = Json::array();
  for (const LiftInfo& l : report.control_lifts)
    control_lifts.push_back(lift_json(l));
  control["lifts"] = std::move(control_lifts);
  control["commutator"] = rational_to_string(report.control_commutator);
  control["is_plus_one"] = report.control_is_plus_one;
  out["control"] = std::move(control);
  out["conclusion"] = report.conclusion;
  out["rationale"] = report.rationale;
  out["citations"] = report.citations;
  return out;
}

std::string case_ii_text(const CaseIIReport& report) {
  std::ostringstream out;
  out << "case-ii verification: double-cover commutator for A = <";
  for (std::size_t i = 0; i < report.generator_cycles.size(); ++i)
    out << (i > 0 ? ", " : "") << report.generator_cycles[i];
  out << ">\n";
  out << "claim_verified: " << yesno(report.claim_verified) << "\n";
  out << "group: order " << report.group_order << ", abelian "
      << yesno(report.abelian) << "\n";
  for (const LiftInfo& l : report.lifts) lift_text(out, l);
  out << "scalar commutator: " << rational_to_string(report.commutator)
      << " (expected -1: " << yesno(report.commutator_is_minus_one) << ")\n";
  out << "control pair <";
  for (std::size_t i = 0; i < report.control_cycles.size(); ++i)
    out << (i > 0 ? ", " : "") << report.control_cycles[i];
  out << ">\n";
  for (const LiftInfo& l : report.control_lifts) lift_text(out, l);
  out << "control commutator: "
      << rational_to_string(report.control_commutator) << " (expected +1: "
      << yesno(report.control_is_plus_one) << ")\n";
  out << "conclusion: " << report.conclusion << "\n";
  out << "rationale: " << report.rationale << "\n";
  out << "citations:\n";
  for (const std::string& c : report.citations) out << "  - " << c << "\n";
  return out.str();
}

Json matrix_check_json(const MatrixCheckReport& report) {
  Json out;
  out["report"] = "check-matrices";
  out["field"] = field_json(report.field);
  out["size"] = report.size;
  out["matrices"] = report.names;
  Json pairs = Json::array();
  for (const MatrixPairResult& p : report.pairs) {
    Json pair;
    pair["first"] = p.first;
    pair["second"] = p.second;
    pair["scalar"] = p.scalar;
    pair["identity"] = p.identity;
    pair["value"] = p.value ? element_json(*p.value) : Json(nullptr);
    pairs.push_back(std::move(pair));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

std::string matrix_check_text(const MatrixCheckReport& report) {
  std::ostringstream out;
  out << "matrix commutator classification\n";
  if (report.field)
    out << "field: " << report.field->label() << " = Q[x]/("
        << poly_to_string(report.field->modulus()) << ")\n";
  out << "size: " << report.size << "x" << report.size << "\n";
  out << "matrices:";
  for (const std::string& n : report.names) out << " " << n;
  out << "\n";
  for (const MatrixPairResult& p : report.pairs) {
    out << "  [" << p.first << ", " << p.second << "]: ";
    if (!p.scalar) {
      out << "non-scalar commutator\n";
    } else {
      out << "scalar " << element_text(*p.value)
          << (p.identity ? " (the matrices commute)"
                         : " (central, nontrivial)")
          << "\n";
    }
  }
  return out.str();
}

Json bounds_json(const BoundsRunResult& result) {
  Json out;
  out["report"] = "bounds";
  out["max_n"] = result.max_n;
  out["exclusion_requested"] = result.exclusion_requested;
  out["exclusion_applied"] = result.exclusion_applied;
  out["verified"] = result.verified;
  Json seeds = Json::array();
  for (const SeedFact& s : result.seeds) seeds.push_back(seed_json(s));
  out["seeds"] = std::move(seeds);
  out["case_i"] = result.case_i ? case_i_json(*result.case_i) : Json(nullptr);
  out["case_ii"] =
      result.case_ii ? case_ii_json(*result.case_ii) : Json(nullptr);
  Json table;
  for (int n = 1; n <= result.max_n; ++n)
    for (const Family f : {Family::S, Family::A}) {
      const GroupId g{f, n};
      const TableEntry& e = result.table.entry(g);
      Json entry;
      entry["lower"] = e.lower;
      entry["upper"] = e.upper ? Json(*e.upper) : Json(nullptr);
      entry["excluded"] = Json::array();
      for (const int v : e.excluded) entry["excluded"].push_back(v);
      entry["lower_derivation"] = derivation_json(result.table, e.lower_fact);
      entry["upper_derivation"] =
          e.upper_fact ? derivation_json(result.table, *e.upper_fact)
                       : Json(nullptr);
      Json excl = Json::array();
      for (const auto& [value, fact] : e.excluded_facts)
        excl.push_back(derivation_json(result.table, fact));
      entry["excluded_derivations"] = std::move(excl);
      table[group_key(g)] = std::move(entry);
    }
  out["table"] = std::move(table);
  if (result.closed_form) {
    Json cf;
    cf["max_n"] = result.closed_form->max_n;
    cf["mismatches"] = result.closed_form->mismatches;
    cf["all_ok"] = result.closed_form->all_ok;
    Json rows = Json::array();
    for (const ClosedFormRow& r : result.closed_form->rows) {
      Json row;
      row["group"] = group_key(r.group);
      row["expected_lower"] = r.expected_lower;
      row["actual_lower"] = r.actual_lower;
      row["expected_upper"] = r.expected_upper;
      row["actual_upper"] = r.actual_upper ? Json(*r.actual_upper) : Json(nullptr);
      row["ok"] = r.ok;
      rows.push_back(std::move(row));
    }
    cf["rows"] = std::move(rows);
    out["closed_form"] = std::move(cf);
  } else {
    out["closed_form"] = nullptr;
  }
  return out;
}

std::string bounds_text(const BoundsRunResult& result) {
  std::ostringstream out;
  out << "essential dimension bounds, 1 <= n <= " << result.max_n << "\n";
  out << "exclusion requested: " << yesno(result.exclusion_requested)
      << ", applied: " << yesno(result.exclusion_applied) << "\n";
  out << "verified: " << yesno(result.verified) << "\n";
  out << "seeds:\n";
  for (const SeedFact& s : result.seeds)
    out << "  - " << seed_statement(s) << "  [" << s.citation << "]\n";
  if (result.case_i)
    out << "case-i claim_verified: " << yesno(result.case_i->claim_verified)
        << "\n";
  if (result.case_ii)
    out << "case-ii claim_verified: " << yesno(result.case_ii->claim_verified)
        << "\n";
  out << "\n   n |      ed(S_n) |      ed(A_n)\n";
  for (int n = 1; n <= result.max_n; ++n) {
    const std::string s = interval_text(result.table.entry({Family::S, n}));
    const std::string a = interval_text(result.table.entry({Family::A, n}));
    out << "  " << (n < 10 ? " " : "") << n << " | ";
    out.width(12);
    out << s << " | ";
    out.width(12);
    out << a << "\n";
  }
  bool any_excluded = false;
  for (int n = 1; n <= result.max_n; ++n)
    for (const Family f : {Family::S, Family::A}) {
      const TableEntry& e = result.table.entry({f, n});
      for (const int v : e.excluded) {
        if (!any_excluded) out << "excluded values:\n";
        any_excluded = true;
        out << "  ed(" << group_display({f, n}) << ") != " << v << "\n";
      }
    }
  if (result.closed_form) {
    out << "closed-form displays, 5 <= n <= " << result.closed_form->max_n
        << ": " << result.closed_form->rows.size() << " rows checked, "
        << result.closed_form->mismatches << " mismatches\n";
    for (const ClosedFormRow& r : result.closed_form->rows)
      if (!r.ok)
        out << "  MISMATCH " << group_display(r.group) << ": lower "
            << r.actual_lower << " (expected >= " << r.expected_lower
            << "), upper "
            << (r.actual_upper ? std::to_string(*r.actual_upper)
                               : std::string("?"))
            << " (expected " << r.expected_upper << ")\n";
  }
  return out.str();
}

Json theorem_json(const TheoremResult& result) {
  Json out;
  out["report"] = "theorem";
  out["target"] = result.target;
  out["verdict"] = result.verdict;
  out["verified"] = result.verified;
  out["proof_chains"] = Json::object();
  out["proof_chains"]["S:7"] = chain_json(result.chain_s7);
  out["proof_chains"]["A:7"] = chain_json(result.chain_a7);
  out["bounds"] = bounds_json(result.bounds);
  return out;
}

std::string theorem_text(const TheoremResult& result) {
  std::ostringstream out;
  out << "theorem verification: essential dimensions of A_7 and S_7\n";
  out << "target: " << result.target << "\n";
  out << "verdict: " << result.verdict << "\n";
  out << "verified: " << yesno(result.verified) << "\n\n";
  out << "proof chain for S_7:\n" << chain_text(result.chain_s7) << "\n";
  out << "proof chain for A_7:\n" << chain_text(result.chain_a7) << "\n";
  out << bounds_text(result.bounds);
  return out.str();
}

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const Json& require(const Json& obj, const char* key,
                    const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

std::string require_string(const Json& obj, const char* key,
                           const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_string())
    throw ParseError(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

int require_int(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number_integer())
    throw ParseError(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

std::vector<SeedFact> parse_seed_file(const std::string& path) {
  const Json doc = load_json(path);
  if (!doc.is_array()) throw ParseError(path + ": expected a JSON array");
  std::vector<SeedFact> seeds;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = path + " seed " + std::to_string(i);
    const Json& item = doc.at(i);
    SeedFact s;
    const std::string family = require_string(item, "family", where);
    if (family == "S") {
      s.family = Family::S;
    } else if (family == "A") {
      s.family = Family::A;
    } else {
      throw ParseError(where + ": family must be \"S\" or \"A\"");
    }
    s.n = require_int(item, "n", where);
    const std::string kind = require_string(item, "kind", where);
    if (kind == "lower") {
      s.kind = FactKind::Lower;
    } else if (kind == "upper") {
      s.kind = FactKind::Upper;
    } else if (kind == "excluded_value") {
      s.kind = FactKind::ExcludedValue;
    } else {
      throw ParseError(where +
                       ": kind must be lower, upper or excluded_value");
    }
    s.value = require_int(item, "value", where);
    if (s.value < 0) throw ParseError(where + ": value must be >= 0");
    s.citation = require_string(item, "citation", where);
    seeds.push_back(std::move(s));
  }
  return seeds;
}

MatrixFileData parse_matrix_file(const std::string& path) {
  const Json doc = load_json(path);
  MatrixFileData data;
  const Json& field_obj = require(doc, "field", path);
  const Json& modulus = require(field_obj, "modulus", path + " field");
  if (!modulus.is_array() || modulus.empty())
    throw ParseError(path + ": field modulus must be a nonempty array");
  Poly m;
  for (const Json& c : modulus) {
    if (!c.is_string())
      throw ParseError(path + ": modulus coefficients must be strings");
    m.push_back(rational_from_string(c.get<std::string>()));
  }
  poly_trim(m);
  const std::string label = require_string(field_obj, "label", path + " field");
  try {
    data.field = NumberField::create(std::move(m), label);
  } catch (const InvalidArgument& e) {
    throw ParseError(path + ": bad field modulus: " + e.what());
  }
  data.size = require_int(doc, "size", path);
  if (data.size < 1) throw ParseError(path + ": size must be >= 1");
  const Json& matrices = require(doc, "matrices", path);
  if (!matrices.is_array() || matrices.size() < 2)
    throw ParseError(path + ": need an array of at least two matrices");
  const int degree = data.field->degree();
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const std::string where = path + " matrix " + std::to_string(k);
    const Json& mat = matrices.at(k);
    NamedMatrix named{require_string(mat, "name", where),
                      FMatrix(data.field, data.size, data.size)};
    const Json& entries = require(mat, "entries", where);
    const std::size_t expected =
        static_cast<std::size_t>(data.size) * static_cast<std::size_t>(data.size);
    if (!entries.is_array() || entries.size() != expected)
      throw ParseError(where + ": entries must list " +
                       std::to_string(expected) + " elements row-major");
    for (std::size_t idx = 0; idx < expected; ++idx) {
      const Json& coeffs = entries.at(idx);
      if (!coeffs.is_array() || coeffs.empty() ||
          coeffs.size() > static_cast<std::size_t>(degree))
        throw ParseError(where + ": element " + std::to_string(idx) +
                         " must list 1.." + std::to_string(degree) +
                         " coefficient strings");
      Poly p;
      for (const Json& c : coeffs) {
        if (!c.is_string())
          throw ParseError(where + ": coefficients must be strings");
        p.push_back(rational_from_string(c.get<std::string>()));
      }
      poly_trim(p);
      named.matrix.at(static_cast<int>(idx) / data.size,
                      static_cast<int>(idx) % data.size) =
          FieldElement(data.field, std::move(p));
    }
    data.matrices.push_back(std::move(named));
  }
  return data;
}

}  // namespace edim

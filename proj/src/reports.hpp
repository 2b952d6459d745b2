#ifndef EDIM_REPORTS_HPP
#define EDIM_REPORTS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "orchestrate.hpp"
#include "spincover.hpp"
#include "variety.hpp"

namespace edim {

// All report JSON uses ordered maps so that a report rendered twice is
// byte-identical. Exact values (rationals, field element coefficients)
// always appear as strings; structural integers (dimensions, bounds, n)
// appear as JSON numbers.
using Json = nlohmann::ordered_json;

Json field_json(const FieldPtr& field);
Json element_json(const FieldElement& x);

Json case_i_json(const CaseIReport& report);
std::string case_i_text(const CaseIReport& report);

Json case_ii_json(const CaseIIReport& report);
std::string case_ii_text(const CaseIIReport& report);

Json matrix_check_json(const MatrixCheckReport& report);
std::string matrix_check_text(const MatrixCheckReport& report);

Json bounds_json(const BoundsRunResult& result);
std::string bounds_text(const BoundsRunResult& result);

Json theorem_json(const TheoremResult& result);
std::string theorem_text(const TheoremResult& result);

// Seed file: a JSON array of {"family": "S"|"A", "n": int,
// "kind": "lower"|"upper"|"excluded_value", "value": int >= 0,
// "citation": string}. Unreadable file -> IoError; malformed content ->
// ParseError.
std::vector<SeedFact> parse_seed_file(const std::string& path);

// Matrix file: {"field": {"modulus": [rational strings, constant first,
// monic], "label": string}, "size": int, "matrices": [{"name": string,
// "entries": [row-major size*size elements, each a list of <= degree
// coefficient strings]}]}. Unreadable file -> IoError; malformed content ->
// ParseError.
MatrixFileData parse_matrix_file(const std::string& path);

}  // namespace edim

#endif

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <edim/edim.h>

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / ("edim_capi_" + name);
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

struct ReportGuard {
  edim_report* report = nullptr;
  ~ReportGuard() { edim_report_free(report); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("case-i through the shared library surface") {
  ReportGuard g;
  REQUIRE(edim_verify_case_i(&g.report) == EDIM_OK);
  CHECK(edim_report_verified(g.report) == 1);
  CHECK(std::string(edim_last_error()).empty());

  const char* text = edim_report_render(g.report, EDIM_FORMAT_TEXT);
  REQUIRE(text != nullptr);
  CHECK(std::string(text).find("claim_verified: yes") != std::string::npos);

  const char* json = edim_report_render(g.report, EDIM_FORMAT_JSON);
  REQUIRE(json != nullptr);
  const auto doc = nlohmann::json::parse(json);
  CHECK(doc.at("report") == "case-i");
  CHECK(doc.at("claim_verified") == true);
  CHECK(doc.at("eigenspaces").size() == 5);
}

TEST_CASE("case-ii through the shared library surface") {
  ReportGuard g;
  REQUIRE(edim_verify_case_ii(&g.report) == EDIM_OK);
  CHECK(edim_report_verified(g.report) == 1);
  const auto doc =
      nlohmann::json::parse(edim_report_render(g.report, EDIM_FORMAT_JSON));
  CHECK(doc.at("commutator") == "-1");
  CHECK(doc.at("control").at("commutator") == "1");
}

TEST_CASE("bounds with default options") {
  ReportGuard g;
  REQUIRE(edim_bounds(nullptr, &g.report) == EDIM_OK);
  CHECK(edim_report_verified(g.report) == 1);
  const auto doc =
      nlohmann::json::parse(edim_report_render(g.report, EDIM_FORMAT_JSON));
  CHECK(doc.at("max_n") == 30);
  CHECK(doc.at("table").at("S:7").at("lower") == 4);
  CHECK(doc.at("table").at("S:7").at("upper") == 4);
  CHECK(doc.at("closed_form").at("all_ok") == true);
}

TEST_CASE("bounds options validation") {
  edim_bounds_options options;
  edim_bounds_options_init(&options);
  CHECK(options.max_n == 30);
  CHECK(options.exclusion == 1);
  CHECK(options.seeds_path == nullptr);

  options.max_n = 6;
  ReportGuard g;
  CHECK(edim_bounds(&options, &g.report) == EDIM_ERR_INVALID_ARGUMENT);
  CHECK(g.report == nullptr);
  CHECK(std::string(edim_last_error()).find("max_n") != std::string::npos);
}

TEST_CASE("bounds without the exclusion step") {
  edim_bounds_options options;
  edim_bounds_options_init(&options);
  options.max_n = 12;
  options.exclusion = 0;
  ReportGuard g;
  REQUIRE(edim_bounds(&options, &g.report) == EDIM_OK);
  CHECK(edim_report_verified(g.report) == 1);
  const auto doc =
      nlohmann::json::parse(edim_report_render(g.report, EDIM_FORMAT_JSON));
  CHECK(doc.at("table").at("S:7").at("lower") == 3);
  CHECK(doc.at("table").at("S:7").at("upper") == 4);
  CHECK(doc.at("case_i").is_null());
}

TEST_CASE("an inconsistent seed file surfaces as EDIM_ERR_INCONSISTENT") {
  const std::string path = temp_file("seeds_conflict.json", R"([
    {"family": "S", "n": 7, "kind": "upper", "value": 3, "citation": "bogus"}
  ])");
  edim_bounds_options options;
  edim_bounds_options_init(&options);
  options.seeds_path = path.c_str();
  ReportGuard g;
  CHECK(edim_bounds(&options, &g.report) == EDIM_ERR_INCONSISTENT);
  CHECK(std::string(edim_last_error()).find("inconsistent bounds") !=
        std::string::npos);
}

TEST_CASE("prove") {
  ReportGuard g;
  REQUIRE(edim_prove("a7", nullptr, &g.report) == EDIM_OK);
  CHECK(edim_report_verified(g.report) == 1);
  const auto doc =
      nlohmann::json::parse(edim_report_render(g.report, EDIM_FORMAT_JSON));
  CHECK(doc.at("report") == "theorem");
  CHECK(doc.at("target") == "A:7");
  CHECK(doc.at("verdict") == "ed_k(A_7) = ed_k(S_7) = 4");

  ReportGuard bad;
  CHECK(edim_prove("x9", nullptr, &bad.report) == EDIM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(edim_last_error()).find("prove targets") !=
        std::string::npos);
  ReportGuard null_target;
  CHECK(edim_prove(nullptr, nullptr, &null_target.report) ==
        EDIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix checks") {
  const std::string good = temp_file("matrices.json", R"({
    "field": {"modulus": ["0", "1"], "label": "q"},
    "size": 2,
    "matrices": [
      {"name": "swap", "entries": [["0"], ["1"], ["1"], ["0"]]},
      {"name": "sign", "entries": [["1"], ["0"], ["0"], ["-1"]]}
    ]
  })");
  ReportGuard g;
  REQUIRE(edim_check_matrices(good.c_str(), &g.report) == EDIM_OK);
  CHECK(edim_report_verified(g.report) == 1);
  const auto doc =
      nlohmann::json::parse(edim_report_render(g.report, EDIM_FORMAT_JSON));
  CHECK(doc.at("report") == "check-matrices");
  CHECK(doc.at("pairs").size() == 1);
  CHECK(doc.at("pairs").at(0).at("scalar") == true);

  ReportGuard missing;
  CHECK(edim_check_matrices("/nonexistent/m.json", &missing.report) ==
        EDIM_ERR_IO);
  ReportGuard malformed;
  const std::string bad = temp_file("matrices_bad.json", "{\"field\": 3}");
  CHECK(edim_check_matrices(bad.c_str(), &malformed.report) == EDIM_ERR_PARSE);
  ReportGuard null_path;
  CHECK(edim_check_matrices(nullptr, &null_path.report) ==
        EDIM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("handle and error discipline") {
  CHECK(edim_report_verified(nullptr) == -1);
  CHECK(edim_report_render(nullptr, EDIM_FORMAT_TEXT) == nullptr);
  edim_report_free(nullptr);  // must be a no-op

  CHECK(edim_verify_case_i(nullptr) == EDIM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(edim_last_error()).find("output handle") !=
        std::string::npos);

  ReportGuard g;
  REQUIRE(edim_verify_case_ii(&g.report) == EDIM_OK);
  CHECK(std::string(edim_last_error()).empty());
  CHECK(edim_report_render(g.report, static_cast<edim_format>(99)) == nullptr);
}

TEST_CASE("version string") {
  CHECK(std::string(edim_version()) == "1.0.0");
}

}  // TEST_SUITE

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "edim/edim.h"

// Exit codes: 0 report verified, 1 report not verified, 2 usage error,
// 3 the computation itself failed (bad file, inconsistent seeds, ...).

namespace {

struct Output {
  std::string format = "text";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, Output* output) {
  cmd->add_option("--format", output->format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", output->out_path,
                  "Write the report to this file instead of stdout");
}

int emit(edim_report* report, const Output& output) {
  const char* rendered = edim_report_render(
      report, output.format == "json" ? EDIM_FORMAT_JSON : EDIM_FORMAT_TEXT);
  if (rendered == nullptr) {
    std::cerr << "error: report rendering failed\n";
    edim_report_free(report);
    return 3;
  }
  if (output.out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output.out_path);
    out << rendered;
    out.close();
    if (!out) {
      std::cerr << "error: cannot write " << output.out_path << "\n";
      edim_report_free(report);
      return 3;
    }
  }
  const int verified = edim_report_verified(report);
  edim_report_free(report);
  return verified == 1 ? 0 : 1;
}

int finish(edim_status status, edim_report* report, const Output& output) {
  if (status != EDIM_OK) {
    std::cerr << "error: " << edim_last_error() << "\n";
    return 3;
  }
  return emit(report, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of the essential dimension of A_7 and S_7"};
  app.require_subcommand(1);

  Output output;
  int max_n = 30;
  bool no_exclusion = false;
  std::string seeds_path;
  std::string matrix_path;
  std::string prove_target;

  CLI::App* verify =
      app.add_subcommand("verify", "Run one of the two case verifications");
  verify->require_subcommand(1);
  CLI::App* case_i = verify->add_subcommand(
      "case-i",
      "Fixed locus of <(1 2 3), (4 5 6)> on the power-sum threefold");
  add_output_flags(case_i, &output);
  CLI::App* case_ii = verify->add_subcommand(
      "case-ii", "Double-cover commutator of (1 2)(3 4) and (1 2)(5 6)");
  add_output_flags(case_ii, &output);

  CLI::App* check = app.add_subcommand(
      "check-matrices",
      "Classify pairwise matrix commutators from a JSON file");
  check->add_option("file", matrix_path, "Matrix file (JSON)")->required();
  add_output_flags(check, &output);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "Derive the bound table for ed(S_n) and ed(A_n)");
  bounds->add_option("--max-n", max_n, "Largest n in the table")
      ->check(CLI::Range(7, 100000))
      ->capture_default_str();
  bounds->add_option("--seeds", seeds_path, "Extra seed facts (JSON)");
  bounds->add_flag(
      "--no-exclusion", no_exclusion,
      "Skip the case verifications and the resulting fact ed(A_7) != 3");
  add_output_flags(bounds, &output);

  CLI::App* prove = app.add_subcommand(
      "prove", "Derive ed_k(A_7) = ed_k(S_7) = 4 end to end");
  prove->add_option("target", prove_target, "a7 or s7")
      ->required()
      ->check(CLI::IsMember({"a7", "s7"}));
  prove->add_option("--max-n", max_n, "Largest n in the bound table")
      ->check(CLI::Range(7, 100000))
      ->capture_default_str();
  prove->add_option("--seeds", seeds_path, "Extra seed facts (JSON)");
  add_output_flags(prove, &output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  edim_bounds_options options;
  edim_bounds_options_init(&options);
  options.max_n = max_n;
  options.exclusion = no_exclusion ? 0 : 1;
  options.seeds_path = seeds_path.empty() ? nullptr : seeds_path.c_str();

  // The status call must complete before finish() reads the report pointer,
  // so keep the two on separate statements.
  edim_report* report = nullptr;
  edim_status status = EDIM_ERR_INVALID_ARGUMENT;
  if (case_i->parsed()) {
    status = edim_verify_case_i(&report);
  } else if (case_ii->parsed()) {
    status = edim_verify_case_ii(&report);
  } else if (check->parsed()) {
    status = edim_check_matrices(matrix_path.c_str(), &report);
  } else if (bounds->parsed()) {
    status = edim_bounds(&options, &report);
  } else if (prove->parsed()) {
    status = edim_prove(prove_target.c_str(), &options, &report);
  } else {
    return 2;
  }
  return finish(status, report, output);
}

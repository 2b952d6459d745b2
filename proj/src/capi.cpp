#include "edim/edim.h"

#include <exception>
#include <memory>
#include <string>

#include "err.hpp"
#include "orchestrate.hpp"
#include "reports.hpp"
#include "spincover.hpp"
#include "variety.hpp"

struct edim_report {
  int verified = 0;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

edim_status fail(edim_status status, const char* what) {
  g_last_error = what;
  return status;
}

std::string dump(const edim::Json& j) { return j.dump(2) + "\n"; }

template <typename Fn>
edim_status run(edim_report** out, Fn&& fn) {
  if (out == nullptr)
    return fail(EDIM_ERR_INVALID_ARGUMENT, "output handle is null");
  *out = nullptr;
  try {
    auto report = std::make_unique<edim_report>();
    fn(*report);
    g_last_error.clear();
    *out = report.release();
    return EDIM_OK;
  } catch (const edim::InvalidArgument& e) {
    return fail(EDIM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const edim::ParseError& e) {
    return fail(EDIM_ERR_PARSE, e.what());
  } catch (const edim::IoError& e) {
    return fail(EDIM_ERR_IO, e.what());
  } catch (const edim::InconsistencyError& e) {
    return fail(EDIM_ERR_INCONSISTENT, e.what());
  } catch (const std::exception& e) {
    return fail(EDIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EDIM_ERR_INTERNAL, "unknown error");
  }
}

edim::BoundsOptions convert(const edim_bounds_options* options) {
  edim::BoundsOptions opts;
  if (options != nullptr) {
    opts.max_n = options->max_n;
    opts.exclusion = options->exclusion != 0;
    if (options->seeds_path != nullptr) opts.seeds_path = options->seeds_path;
  }
  return opts;
}

}  // namespace

extern "C" {

void edim_bounds_options_init(edim_bounds_options* options) {
  if (options == nullptr) return;
  options->max_n = 30;
  options->exclusion = 1;
  options->seeds_path = nullptr;
}

edim_status edim_verify_case_i(edim_report** out) {
  return run(out, [](edim_report& r) {
    const edim::CaseIReport report = edim::verify_case_i();
    r.verified = report.claim_verified ? 1 : 0;
    r.text = edim::case_i_text(report);
    r.json = dump(edim::case_i_json(report));
  });
}

edim_status edim_verify_case_ii(edim_report** out) {
  return run(out, [](edim_report& r) {
    const edim::CaseIIReport report = edim::verify_case_ii();
    r.verified = report.claim_verified ? 1 : 0;
    r.text = edim::case_ii_text(report);
    r.json = dump(edim::case_ii_json(report));
  });
}

edim_status edim_check_matrices(const char* path, edim_report** out) {
  if (path == nullptr) {
    if (out != nullptr) *out = nullptr;
    return fail(EDIM_ERR_INVALID_ARGUMENT, "path is null");
  }
  const std::string path_copy = path;
  return run(out, [&path_copy](edim_report& r) {
    const edim::MatrixFileData data = edim::parse_matrix_file(path_copy);
    const edim::MatrixCheckReport report = edim::check_matrices(data);
    r.verified = 1;  // classification only, nothing to falsify
    r.text = edim::matrix_check_text(report);
    r.json = dump(edim::matrix_check_json(report));
  });
}

edim_status edim_bounds(const edim_bounds_options* options,
                        edim_report** out) {
  const edim::BoundsOptions opts = convert(options);
  return run(out, [&opts](edim_report& r) {
    const edim::BoundsRunResult result = edim::run_bounds(opts);
    r.verified = result.verified ? 1 : 0;
    r.text = edim::bounds_text(result);
    r.json = dump(edim::bounds_json(result));
  });
}

edim_status edim_prove(const char* target, const edim_bounds_options* options,
                       edim_report** out) {
  if (target == nullptr) {
    if (out != nullptr) *out = nullptr;
    return fail(EDIM_ERR_INVALID_ARGUMENT, "target is null");
  }
  const std::string target_copy = target;
  const edim::BoundsOptions opts = convert(options);
  return run(out, [&target_copy, &opts](edim_report& r) {
    const edim::GroupId group = edim::parse_prove_target(target_copy);
    const edim::TheoremResult result = edim::run_prove(group, opts);
    r.verified = result.verified ? 1 : 0;
    r.text = edim::theorem_text(result);
    r.json = dump(edim::theorem_json(result));
  });
}

int edim_report_verified(const edim_report* report) {
  return report == nullptr ? -1 : report->verified;
}

const char* edim_report_render(const edim_report* report,
                               edim_format format) {
  if (report == nullptr) return nullptr;
  switch (format) {
    case EDIM_FORMAT_TEXT: return report->text.c_str();
    case EDIM_FORMAT_JSON: return report->json.c_str();
  }
  return nullptr;
}

void edim_report_free(edim_report* report) { delete report; }

const char* edim_last_error(void) { return g_last_error.c_str(); }

const char* edim_version(void) { return "1.0.0"; }

}  // extern "C"

#include "twospec/twospec.h"

#include <cstring>
#include <new>
#include <string>

#include "twospec/fuzz.hpp"
#include "twospec/pipeline.hpp"
#include "twospec/problem.hpp"

struct ts_problem {
  twospec::Problem problem;
};

struct ts_result {
  twospec::Outcome outcome;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

ts_status record(ts_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

ts_status status_for(twospec::ErrorCode code) {
  switch (code) {
    case twospec::ErrorCode::ParseError:
      return TS_ERR_PARSE;
    case twospec::ErrorCode::Unsupported:
      return TS_ERR_UNSUPPORTED;
    case twospec::ErrorCode::Internal:
      return TS_ERR_INTERNAL;
    default:
      return TS_ERR_INVALID_ARGUMENT;
  }
}

// Runs `body`, translating exceptions into a status and a thread-local message.
template <class F>
ts_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return TS_OK;
  } catch (const twospec::Error& e) {
    return record(status_for(e.code()), std::string(twospec::to_string(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return record(TS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(TS_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(TS_ERR_INTERNAL, "unknown failure");
  }
}

template <class F>
ts_status run_command(const ts_problem* problem, ts_result** out, F&& command) {
  if (!problem || !out) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new ts_result{command(problem->problem), {}}; });
}

}  // namespace

extern "C" {

const char* ts_version(void) { return "1.0.0"; }

const char* ts_status_name(ts_status status) {
  switch (status) {
    case TS_OK: return "OK";
    case TS_ERR_NULL_ARGUMENT: return "NULL_ARGUMENT";
    case TS_ERR_PARSE: return "PARSE_ERROR";
    case TS_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case TS_ERR_UNSUPPORTED: return "UNSUPPORTED";
    case TS_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* ts_last_error(void) { return g_last_error.c_str(); }

ts_status ts_problem_parse(const char* json_text, ts_problem** out) {
  if (!json_text || !out) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new ts_problem{twospec::parse_problem_text(json_text)}; });
}

void ts_problem_free(ts_problem* problem) { delete problem; }

ts_status ts_problem_set_arithmetic(ts_problem* problem, const char* arithmetic) {
  if (!problem || !arithmetic) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { problem->problem.arithmetic = twospec::parse_arithmetic(arithmetic); });
}

ts_status ts_problem_set_profile(ts_problem* problem, const char* profile) {
  if (!problem || !profile) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { problem->problem.profile = twospec::parse_profile(profile); });
}

ts_status ts_problem_set_strategy(ts_problem* problem, const char* strategy) {
  if (!problem || !strategy) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { problem->problem.strategy = twospec::parse_strategy(strategy); });
}

ts_status ts_problem_set_param(ts_problem* problem, const char* key, const char* value) {
  if (!problem || !key || !value) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] { twospec::set_param(problem->problem, key, value); });
}

ts_status ts_problem_mathematica(const ts_problem* problem, char** out) {
  if (!problem || !out) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    const std::string text = twospec::emit_mathematica(problem->problem);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void ts_string_free(char* text) { delete[] text; }

ts_status ts_check(const ts_problem* problem, ts_result** out) {
  return run_command(problem, out, twospec::cmd_check);
}

ts_status ts_reconstruct(const ts_problem* problem, ts_result** out) {
  return run_command(problem, out, twospec::cmd_reconstruct);
}

ts_status ts_circuits(const ts_problem* problem, ts_result** out) {
  return run_command(problem, out, twospec::cmd_circuits);
}

ts_status ts_fuzz(const ts_fuzz_options* options, ts_result** out) {
  if (!options || !out) return record(TS_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    twospec::FuzzOptions opt;
    if (options->setting) opt.setting = twospec::parse_setting(options->setting);
    if (options->arithmetic) opt.arithmetic = twospec::parse_arithmetic(options->arithmetic);
    if (options->profile) opt.profile = twospec::parse_profile(options->profile);
    opt.n = options->n;
    opt.m = options->m;
    opt.count = options->count;
    opt.seed = options->seed;
    *out = new ts_result{twospec::cmd_fuzz(opt), {}};
  });
}

const char* ts_result_json(ts_result* result, int indent) {
  if (!result) {
    record(TS_ERR_NULL_ARGUMENT, "null argument");
    return nullptr;
  }
  result->text = result->outcome.document.dump(indent < 0 ? -1 : indent);
  return result->text.c_str();
}

int ts_result_exit_code(const ts_result* result) { return result ? result->outcome.exit_code : TS_EXIT_USAGE; }

void ts_result_free(ts_result* result) { delete result; }

}  // extern "C"

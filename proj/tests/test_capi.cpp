#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "twospec/twospec.h"

namespace {

const char* kFourNodes = R"({"setting": "real", "zn": ["1", "2", "3", "4"], "zm": ["3/2", "7/2"]})";

bool contains(const char* haystack, const char* needle) { return std::string(haystack).find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ts_version()).size() > 0);
  CHECK(std::string(ts_status_name(TS_OK)) == "OK");
  CHECK(std::string(ts_status_name(TS_ERR_PARSE)).size() > 0);
}

TEST_CASE("null arguments are reported") {
  ts_problem* problem = nullptr;
  CHECK(ts_problem_parse(nullptr, &problem) == TS_ERR_NULL_ARGUMENT);
  CHECK(ts_problem_parse(kFourNodes, nullptr) == TS_ERR_NULL_ARGUMENT);
  ts_result* result = nullptr;
  CHECK(ts_check(nullptr, &result) == TS_ERR_NULL_ARGUMENT);
  CHECK(result == nullptr);
  CHECK(ts_fuzz(nullptr, &result) == TS_ERR_NULL_ARGUMENT);
  CHECK(ts_result_json(nullptr, 2) == nullptr);
  ts_problem_free(nullptr);
  ts_result_free(nullptr);
  ts_string_free(nullptr);
}

TEST_CASE("parse errors set the last error") {
  ts_problem* problem = nullptr;
  CHECK(ts_problem_parse("{\"setting\": ", &problem) == TS_ERR_PARSE);
  CHECK(problem == nullptr);
  CHECK(contains(ts_last_error(), "PARSE_ERROR"));
}

TEST_CASE("reconstruct through the C interface") {
  ts_problem* problem = nullptr;
  REQUIRE(ts_problem_parse(kFourNodes, &problem) == TS_OK);

  ts_result* result = nullptr;
  REQUIRE(ts_reconstruct(problem, &result) == TS_OK);
  CHECK(ts_result_exit_code(result) == TS_EXIT_VERIFIED);
  CHECK(contains(ts_result_json(result, -1), R"("omega":["2/5","2/3","2/3","2/5"])"));
  ts_result_free(result);

  CHECK(ts_problem_set_strategy(problem, "coefficients") == TS_OK);
  CHECK(ts_problem_set_param(problem, "s1", "3") == TS_OK);
  REQUIRE(ts_reconstruct(problem, &result) == TS_OK);
  CHECK(contains(ts_result_json(result, 2), "14/15"));
  ts_result_free(result);

  char* call = nullptr;
  REQUIRE(ts_problem_mathematica(problem, &call) == TS_OK);
  CHECK(contains(call, "{s[1] -> 3}"));
  ts_string_free(call);

  CHECK(ts_problem_set_arithmetic(problem, "float64") == TS_OK);
  CHECK(ts_problem_set_profile(problem, "strict") == TS_OK);
  REQUIRE(ts_circuits(problem, &result) == TS_OK);
  CHECK(ts_result_exit_code(result) == TS_EXIT_VERIFIED);
  ts_result_free(result);

  CHECK(ts_problem_set_arithmetic(problem, "octal") == TS_ERR_PARSE);
  CHECK(ts_problem_set_param(problem, "q1", "3") == TS_ERR_PARSE);
  ts_problem_free(problem);
}

TEST_CASE("rejections are results, not call failures") {
  ts_problem* problem = nullptr;
  REQUIRE(ts_problem_parse(R"({"setting": "real", "zn": ["1","2","3"], "zm": ["1/4"]})", &problem) == TS_OK);
  ts_result* result = nullptr;
  REQUIRE(ts_check(problem, &result) == TS_OK);
  CHECK(ts_result_exit_code(result) == TS_EXIT_REJECTED);
  CHECK(contains(ts_result_json(result, -1), "OUT_OF_RANGE"));
  ts_result_free(result);
  ts_problem_free(problem);
}

TEST_CASE("fuzz through the C interface") {
  ts_fuzz_options opt{"circle", nullptr, nullptr, 5, 2, 10, 3};
  ts_result* result = nullptr;
  REQUIRE(ts_fuzz(&opt, &result) == TS_OK);
  CHECK(ts_result_exit_code(result) == TS_EXIT_VERIFIED);
  CHECK(contains(ts_result_json(result, -1), R"("passed":10)"));
  ts_result_free(result);

  opt.setting = "sphere";
  CHECK(ts_fuzz(&opt, &result) == TS_ERR_PARSE);
}

// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twospec/twospec.h"

namespace {

struct ProblemDeleter {
  void operator()(ts_problem* p) const { ts_problem_free(p); }
};
struct ResultDeleter {
  void operator()(ts_result* r) const { ts_result_free(r); }
};
using ProblemPtr = std::unique_ptr<ts_problem, ProblemDeleter>;
using ResultPtr = std::unique_ptr<ts_result, ResultDeleter>;

struct Flags {
  std::string input;
  std::string output;
  std::string arithmetic;
  std::string profile;
  std::string strategy;
  std::vector<std::string> params;
  bool mathematica = false;
  int indent = 2;

  std::string setting = "real";
  std::string fuzz_arithmetic = "float64";
  std::size_t n = 8;
  std::size_t m = 3;
  std::uint64_t count = 100;
  std::uint64_t seed = 7;
};

// Writes a usage/parse failure as JSON and returns exit code 1. Library
// errors arrive as "CODE: message"; anything else is reported as USAGE.
int usage_error(const std::string& command, const std::string& message) {
  std::string code = "USAGE";
  std::string detail = message;
  const auto colon = message.find(": ");
  if (colon != std::string::npos && colon > 0 &&
      message.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZ_") == colon) {
    code = message.substr(0, colon);
    detail = message.substr(colon + 2);
  }
  nlohmann::json doc{{"schema", "v1"}, {"command", command}, {"error", {{"code", code}, {"message", detail}}}};
  std::cout << doc.dump(2) << '\n';
  std::cerr << "twospec: " << message << '\n';
  return TS_EXIT_USAGE;
}

bool read_input(const std::string& path, std::string& text, std::string& error) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open input file " + path;
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bool write_output(const Flags& f, const std::string& text) {
  if (f.output.empty() || f.output == "-") {
    std::cout << text << '\n';
    return true;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out) return false;
  out << text << '\n';
  return static_cast<bool>(out);
}

int emit(const Flags& f, ts_result* raw, const std::string& command) {
  ResultPtr result(raw);
  const char* json = ts_result_json(result.get(), f.indent);
  if (!write_output(f, json)) return usage_error(command, "cannot write output file " + f.output);
  return ts_result_exit_code(result.get());
}

using Command = ts_status (*)(const ts_problem*, ts_result**);

int run_problem_command(const Flags& f, const std::string& command, Command fn) {
  std::string text;
  std::string error;
  if (!read_input(f.input, text, error)) return usage_error(command, error);

  ts_problem* raw = nullptr;
  if (ts_problem_parse(text.c_str(), &raw) != TS_OK) return usage_error(command, ts_last_error());
  ProblemPtr problem(raw);

  if (!f.arithmetic.empty() && ts_problem_set_arithmetic(problem.get(), f.arithmetic.c_str()) != TS_OK)
    return usage_error(command, ts_last_error());
  if (!f.profile.empty() && ts_problem_set_profile(problem.get(), f.profile.c_str()) != TS_OK)
    return usage_error(command, ts_last_error());
  if (!f.strategy.empty() && ts_problem_set_strategy(problem.get(), f.strategy.c_str()) != TS_OK)
    return usage_error(command, ts_last_error());
  if (!f.params.empty() && f.strategy.empty())
    ts_problem_set_strategy(problem.get(), "coefficients");
  for (const std::string& p : f.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) return usage_error(command, "--param expects key=value, got " + p);
    if (ts_problem_set_param(problem.get(), p.substr(0, eq).c_str(), p.substr(eq + 1).c_str()) != TS_OK)
      return usage_error(command, ts_last_error());
  }

  if (f.mathematica) {
    char* call = nullptr;
    if (ts_problem_mathematica(problem.get(), &call) != TS_OK) return usage_error(command, ts_last_error());
    std::fputs(call, stdout);
    ts_string_free(call);
    return TS_EXIT_VERIFIED;
  }

  ts_result* result = nullptr;
  if (fn(problem.get(), &result) != TS_OK) {
    std::cerr << "twospec: " << ts_last_error() << '\n';
    return TS_EXIT_RECONSTRUCTION;
  }
  return emit(f, result, command);
}

int run_fuzz(const Flags& f) {
  ts_fuzz_options opt{};
  opt.setting = f.setting.c_str();
  opt.arithmetic = f.fuzz_arithmetic.c_str();
  opt.profile = f.profile.empty() ? nullptr : f.profile.c_str();
  opt.n = f.n;
  opt.m = f.m;
  opt.count = f.count;
  opt.seed = f.seed;
  ts_result* result = nullptr;
  if (ts_fuzz(&opt, &result) != TS_OK) return usage_error("fuzz", ts_last_error());
  return emit(f, result, "fuzz");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct Jacobi and unitary pentadiagonal matrices from two interlacing spectra"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("-i,--input", f.input, "Problem file (JSON); '-' or omitted reads stdin");
  app.add_option("-o,--out", f.output, "Write the JSON result here instead of stdout");
  app.add_option("--arithmetic", f.arithmetic, "rational | float64 (default: rational when all inputs are exact)");
  app.add_option("--profile", f.profile, "strict | standard | numeric tolerance");
  app.add_option("--strategy", f.strategy, "sum_all | coefficients | cover");
  app.add_option("--param", f.params, "Coefficient of an admissible circuit, e.g. s1=3 (repeatable)");
  app.add_flag("--emit-mathematica", f.mathematica, "Print the problem as a Mathematica OPRLFamily call");
  app.add_option("--indent", f.indent, "JSON indentation; negative for a single line");

  auto* check = app.add_subcommand("check", "Validate interlacing and print the band decomposition");
  auto* reconstruct = app.add_subcommand("reconstruct", "Run the full reconstruction and verification");
  auto* circuits = app.add_subcommand("circuits", "Enumerate admissible circuits");
  auto* fuzz = app.add_subcommand("fuzz", "Reconstruct and verify seeded random instances");
  fuzz->add_option("--setting", f.setting, "real | circle")->check(CLI::IsMember({"real", "circle"}));
  fuzz->add_option("--n", f.n, "Number of nodes")->check(CLI::Range(std::size_t{2}, std::size_t{200}));
  fuzz->add_option("--m", f.m, "Number of interlaced points, 1 <= m < n");
  fuzz->add_option("--count", f.count, "Number of instances");
  fuzz->add_option("--seed", f.seed, "Base seed; instance i replays with seed + i and count 1");
  fuzz->add_option("--fuzz-arithmetic", f.fuzz_arithmetic, "float64 | rational (real setting only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return TS_EXIT_USAGE;
  }

  if (*check) return run_problem_command(f, "check", ts_check);
  if (*reconstruct) return run_problem_command(f, "reconstruct", ts_reconstruct);
  if (*circuits) return run_problem_command(f, "circuits", ts_circuits);
  if (*fuzz) return run_fuzz(f);
  return TS_EXIT_USAGE;
}

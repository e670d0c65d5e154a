#pragma once

#include <algorithm>
#include <optional>

#include <json.hpp>

#include "twospec/interlacing.hpp"
#include "twospec/kernel.hpp"
#include "twospec/oprl.hpp"
#include "twospec/popuc.hpp"
#include "twospec/problem.hpp"
#include "twospec/verify.hpp"

namespace twospec {

enum ExitCode : int {
  kExitVerified = 0,
  kExitUsage = 1,
  kExitRejected = 2,
  kExitReconstruction = 3,
  kExitVerification = 4,
};

/// Exit status for an error escaping a command: input/interlacing problems
/// map to 2, parse errors to 1, everything else to 3.
int exit_code_for(ErrorCode code) noexcept;

/// Circuits kept in a reconstruction for reporting.
inline constexpr std::size_t kRecordLimit = 1000;

template <class T>
struct RealReconstruction {
  RealSpectrumPair<T> pair;
  InterlacingVerdict verdict;
  BandDecomposition bands;
  std::optional<AdmissibleFamily> family;
  WeightResult<T> weights;
  RealMomentSequence<T> moments;
  JacobiData<T> jacobi;
  Matrix<T> j_n;
  Matrix<T> j_m;
  VerificationReport report;
};

struct CircleReconstruction {
  CircleSpectrumPair pair;
  InterlacingVerdict verdict;
  BandDecomposition bands;
  std::optional<AdmissibleFamily> family;
  WeightResult<double> weights;
  PopucReconstruction popuc;
  VerificationReport report;
};

namespace detail {

[[noreturn]] inline void reject(const InterlacingVerdict& v) {
  fail(v.violation->code, v.violation->message);
}

}  // namespace detail

/// Interlacing, bands, circuits, positive weight, Stieltjes and verification.
/// Throws on rejection or on any reconstruction error; verification failures
/// are recorded in the report.
template <class T>
RealReconstruction<T> reconstruct_real(const RealSpectrumPair<T>& pair, const WeightRequest<T>& request,
                                       const ToleranceProfile& profile) {
  RealReconstruction<T> out;
  out.pair = pair;
  out.verdict = check_interlace_real(pair);
  if (!out.verdict.accepted) detail::reject(out.verdict);
  out.bands = bands_real(pair, out.verdict);
  out.family.emplace(out.bands);
  out.weights = positive_weight<T>(
      *out.family, pair.n(), request, [&](const std::vector<std::size_t>& s) { return circuit_real(pair, s); },
      kRecordLimit, [&] { return sum_all_real(pair, out.bands); });
  out.moments = moments_real<T>(pair.xs, out.weights.omega, 2 * pair.n());
  out.jacobi = stieltjes<T>(pair.xs, out.weights.omega);
  out.j_n = jacobi_matrix(out.jacobi);
  out.j_m = out.j_n.leading(pair.m());
  out.report = verify_oprl<T>(pair, out.weights.omega, out.jacobi, profile);
  return out;
}

CircleReconstruction reconstruct_circle(const CircleSpectrumPair& pair, const WeightRequest<double>& request,
                                        const ToleranceProfile& profile);

/// Sorted copy of the problem's real data in the working scalar type.
template <class T>
RealSpectrumPair<T> real_pair(const Problem& p) {
  RealSpectrumPair<T> pair;
  std::vector<Rational> zn = p.real_zn;
  std::vector<Rational> zm = p.real_zm;
  std::sort(zn.begin(), zn.end());
  std::sort(zm.begin(), zm.end());
  for (const Rational& v : zn) {
    if constexpr (is_exact_v<T>) pair.xs.push_back(v);
    else pair.xs.push_back(v.get_d());
  }
  for (const Rational& v : zm) {
    if constexpr (is_exact_v<T>) pair.ys.push_back(v);
    else pair.ys.push_back(v.get_d());
  }
  return pair;
}

template <class T>
WeightRequest<T> weight_request(const Problem& p) {
  WeightRequest<T> r;
  r.strategy = p.strategy;
  for (const auto& [k, t] : p.coefficients) {
    if constexpr (is_exact_v<T>) r.coefficients[k] = t;
    else r.coefficients[k] = t.get_d();
  }
  return r;
}

struct Outcome {
  nlohmann::json document;
  int exit_code = kExitVerified;
};

Outcome cmd_check(const Problem& p);
Outcome cmd_reconstruct(const Problem& p);
Outcome cmd_circuits(const Problem& p);

}  // namespace twospec

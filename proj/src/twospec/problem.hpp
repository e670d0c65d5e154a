#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twospec/interlacing.hpp"
#include "twospec/kernel.hpp"
#include "twospec/scalar.hpp"
#include "twospec/verify.hpp"

namespace twospec {

inline constexpr std::string_view kSchemaVersion = "v1";

enum class Arithmetic { Rational, Float64 };

std::string_view to_string(Arithmetic a) noexcept;
std::string_view to_string(Setting s) noexcept;

Arithmetic parse_arithmetic(std::string_view text);
WeightStrategy parse_strategy(std::string_view text);
/// "strict", "standard", or a positive number used as the tolerance.
ToleranceProfile parse_profile(std::string_view text);
Setting parse_setting(std::string_view text);

/// A parsed problem file. Real inputs are held as exact rationals (decimal
/// strings and JSON numbers convert exactly); `inputs_exact` records whether
/// every value was written as an exact literal.
struct Problem {
  Setting setting = Setting::Real;

  std::vector<Rational> real_zn;
  std::vector<Rational> real_zm;
  bool inputs_exact = true;

  std::vector<CirclePoint> circle_zn;
  std::vector<CirclePoint> circle_zm;

  std::optional<Arithmetic> arithmetic;  // explicit request, if any
  WeightStrategy strategy = WeightStrategy::SumAll;
  std::map<std::uint64_t, Rational> coefficients;  // family position -> t
  ToleranceProfile profile = ToleranceProfile::standard();

  /// Rational when every real input is exact and nothing else was asked for.
  Arithmetic resolved_arithmetic() const;
};

/// Point at angle r * pi; quarter turns are exact.
CirclePoint circle_point_from_pi_fraction(const Rational& r);

Problem parse_problem(const nlohmann::json& doc);
Problem parse_problem_text(std::string_view text);

/// Applies a "--param sK=v" override: coefficient of the K-th admissible
/// circuit after the first (K >= 1).
void set_param(Problem& p, std::string_view key, std::string_view value);

/// Rejects combinations the pipeline cannot run (circle with rational
/// arithmetic) with UNSUPPORTED.
void validate(const Problem& p);

/// Problem rendered as a Mathematica OPRLFamily call.
std::string emit_mathematica(const Problem& p);

}  // namespace twospec

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace twospec {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Per-scalar behaviour shared by the templated real pipeline. Exact types
/// compare against zero exactly; floating types compare against a caller
/// supplied tolerance.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float64";
  static double to_double(double v) { return v; }
  static double magnitude(double v) { return std::fabs(v); }
  static int sign(double v) { return (v > 0.0) - (v < 0.0); }
  static bool is_zero(double v, double tol) { return std::fabs(v) <= tol; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static double to_double(const Rational& v) { return v.get_d(); }
  static double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
  static int sign(const Rational& v) { return sgn(v); }
  static bool is_zero(const Rational& v, double /*tol*/) { return sgn(v) == 0; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "complex64";
  static double to_double(const Complex& v) { return v.real(); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static bool is_zero(const Complex& v, double tol) { return std::abs(v) <= tol; }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// ("-1.25e-3") into an exact rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical text of a rational: "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& v);

/// Shortest decimal text that round-trips to the same binary64.
std::string format_double(double v);

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace twospec

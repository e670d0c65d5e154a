#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "twospec/interlacing.hpp"
#include "twospec/scalar.hpp"

namespace th {

using twospec::Complex;
using twospec::Rational;

inline Rational q(const char* s) { return twospec::parse_rational(s); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline twospec::RealSpectrumPair<Rational> qpair(std::initializer_list<const char*> xs,
                                                 std::initializer_list<const char*> ys) {
  return {qs(xs), qs(ys)};
}

inline twospec::RealSpectrumPair<double> dpair(const twospec::RealSpectrumPair<Rational>& p) {
  twospec::RealSpectrumPair<double> out;
  for (const auto& x : p.xs) out.xs.push_back(x.get_d());
  for (const auto& y : p.ys) out.ys.push_back(y.get_d());
  return out;
}

inline twospec::CirclePoint at_pi(const char* fraction) {
  return twospec::CirclePoint::from_angle(q(fraction).get_d() * twospec::kPi);
}

inline std::vector<twospec::CirclePoint> at_pis(std::initializer_list<const char*> items) {
  std::vector<twospec::CirclePoint> out;
  for (const char* s : items) out.push_back(at_pi(s));
  return out;
}

/// Three-node circle data, normalized.
inline twospec::CircleSpectrumPair circle_three() {
  return twospec::normalize_circle(at_pis({"1/2", "4/3", "5/3"}), at_pis({"0", "1"}));
}

/// Seven nodes at multiples of pi/6, three points; bands {1,2,3},{4,5,6},{7}.
inline twospec::CircleSpectrumPair circle_seven() {
  return twospec::normalize_circle(at_pis({"1/6", "1/3", "1/2", "2/3", "5/6", "7/6", "3/2"}),
                                   at_pis({"1/12", "7/12", "5/4"}));
}

/// Same nodes with the last point moved to pi; bands {1,2,3},{4,5},{6,7}.
inline twospec::CircleSpectrumPair circle_seven_balanced() {
  return twospec::normalize_circle(at_pis({"1/6", "1/3", "1/2", "2/3", "5/6", "7/6", "3/2"}),
                                   at_pis({"1/12", "7/12", "1"}));
}

/// Code of the twospec::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<twospec::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const twospec::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace th

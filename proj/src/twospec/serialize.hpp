#pragma once

#include <vector>

#include <json.hpp>

#include "twospec/interlacing.hpp"
#include "twospec/kernel.hpp"
#include "twospec/matrix.hpp"
#include "twospec/polynomial.hpp"
#include "twospec/scalar.hpp"
#include "twospec/verify.hpp"

// JSON encoding of library values. Rationals become strings, doubles become
// numbers (shortest round-trip), complex numbers {re, im} objects. Node
// indices are 1-based on the wire.
namespace twospec::wire {

using nlohmann::json;

inline json value(const Rational& v) { return format_rational(v); }
// Negative zero is written as 0 so equal values serialize identically.
inline json value(double v) { return v == 0.0 ? 0.0 : v; }
inline json value(const Complex& v) { return json{{"re", value(v.real())}, {"im", value(v.imag())}}; }

template <class T>
json values(const std::vector<T>& v) {
  json out = json::array();
  for (const T& x : v) out.push_back(value(x));
  return out;
}

template <class T>
json polynomial(const Polynomial<T>& p) {
  return values(p.coeffs());
}

template <class T>
json matrix(const Matrix<T>& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(value(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json index_set(const std::vector<std::size_t>& zero_based);
json bands(const BandDecomposition& b);
json verdict(const InterlacingVerdict& v);
json report(const VerificationReport& r);
json error(ErrorCode code, const std::string& message);

template <class T>
json circuit(const CircuitVector<T>& c) {
  return json{{"support", index_set(c.support)}, {"omega", values(c.weights)}};
}

/// Rational strings back to values; inverse of value(Rational).
std::vector<Rational> rationals(const json& array);

}  // namespace twospec::wire

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twospec/error.hpp"
#include "twospec/scalar.hpp"

namespace twospec {

/// Prescribed zero sets on the real line: xs (the n nodes) and ys (the m
/// zeros of the lower-degree polynomial), both strictly increasing.
template <class T>
struct RealSpectrumPair {
  std::vector<T> xs;
  std::vector<T> ys;
  std::size_t n() const { return xs.size(); }
  std::size_t m() const { return ys.size(); }
};

/// A point of the unit circle together with the argument it is represented by.
struct CirclePoint {
  Complex z;
  double angle = 0.0;

  static CirclePoint from_angle(double radians);
  /// Throws NOT_UNIT_MODULUS when | |z| - 1 | exceeds kUnitModulusTolerance.
  static CirclePoint from_complex(Complex z);
};

inline constexpr double kUnitModulusTolerance = 1e-10;
/// Two circle points are the same point when they differ by at most this much.
inline constexpr double kCircleCollisionTolerance = 1e-12;

/// Normalized circle data: phis[0] is the base point, every other argument
/// lies in (phis[0], phis[0] + 2 pi), and both sets are listed in increasing
/// argument.
struct CircleSpectrumPair {
  std::vector<Complex> zetas;
  std::vector<Complex> xis;
  std::vector<double> thetas;
  std::vector<double> phis;
  std::size_t n() const { return zetas.size(); }
  std::size_t m() const { return xis.size(); }
};

struct Violation {
  ErrorCode code;
  std::size_t index;  // 0-based index of the offending y (real) or band (circle)
  std::string message;
};

struct InterlacingVerdict {
  bool accepted = false;
  /// Real case: i_0 = 0 < i_1 < ... < i_m < i_{m+1} = n, where i_k counts the
  /// nodes below y_k. Empty for the circle case.
  std::vector<std::size_t> indices;
  std::optional<Violation> violation;
};

/// Partition of the node indices {0, ..., n-1} into consecutive bands.
struct BandDecomposition {
  std::vector<std::size_t> indices;  // real case only, mirrors the verdict
  std::vector<std::vector<std::size_t>> bands;
};

template <class T>
InterlacingVerdict check_interlace_real(const RealSpectrumPair<T>& pair) {
  InterlacingVerdict v;
  const std::size_t n = pair.n();
  const std::size_t m = pair.m();
  auto reject = [&](ErrorCode code, std::size_t index, std::string msg) {
    v.accepted = false;
    v.indices.clear();
    v.violation = Violation{code, index, std::move(msg)};
    return v;
  };
  if (m < 1 || m >= n) {
    return reject(ErrorCode::InvalidDimensions, 0,
                  "need 1 <= m < n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  for (std::size_t j = 1; j < n; ++j)
    if (!(pair.xs[j - 1] < pair.xs[j]))
      return reject(ErrorCode::NotSorted, j, "nodes are not strictly increasing at x[" + std::to_string(j + 1) + "]");
  for (std::size_t k = 1; k < m; ++k)
    if (!(pair.ys[k - 1] < pair.ys[k]))
      return reject(ErrorCode::NotSorted, k, "zeros are not strictly increasing at y[" + std::to_string(k + 1) + "]");

  v.indices.push_back(0);
  for (std::size_t k = 0; k < m; ++k) {
    const T& y = pair.ys[k];
    const auto it = std::lower_bound(pair.xs.begin(), pair.xs.end(), y);
    const std::size_t below = static_cast<std::size_t>(it - pair.xs.begin());
    const std::string label = "y[" + std::to_string(k + 1) + "]";
    if (it != pair.xs.end() && *it == y)
      return reject(ErrorCode::SharedPoint, k, label + " coincides with x[" + std::to_string(below + 1) + "]");
    if (below == 0 || below == n)
      return reject(ErrorCode::OutOfRange, k, label + " lies outside (x[1], x[n])");
    if (below == v.indices.back())
      return reject(ErrorCode::GapOverfull, k,
                    label + " shares the gap (x[" + std::to_string(below) + "], x[" + std::to_string(below + 1) +
                        "]) with y[" + std::to_string(k) + "]");
    v.indices.push_back(below);
  }
  v.indices.push_back(n);
  v.accepted = true;
  return v;
}

/// Bands I_r = {i_r, ..., i_{r+1} - 1} (0-based), r = 0, ..., m.
template <class T>
BandDecomposition bands_real(const RealSpectrumPair<T>& pair, const InterlacingVerdict& verdict) {
  if (!verdict.accepted || verdict.indices.size() != pair.m() + 2)
    fail(ErrorCode::InvalidArgument, "band decomposition requires an accepted interlacing verdict");
  BandDecomposition out;
  out.indices = verdict.indices;
  for (std::size_t r = 0; r + 1 < verdict.indices.size(); ++r) {
    std::vector<std::size_t> band;
    for (std::size_t j = verdict.indices[r]; j < verdict.indices[r + 1]; ++j) band.push_back(j);
    out.bands.push_back(std::move(band));
  }
  return out;
}

/// Chooses the base point phi_1 as the Z_m point of smallest principal
/// argument, represents every argument in (phi_1, phi_1 + 2 pi) and sorts.
/// Throws SHARED_POINT for a point in both sets and DEGENERATE_ANGLE for a
/// repeated point within one set.
CircleSpectrumPair normalize_circle(const std::vector<CirclePoint>& zetas, const std::vector<CirclePoint>& xis);

InterlacingVerdict check_interlace_circle(const CircleSpectrumPair& pair);

/// Bands I_r = {j : phi_r < theta_j < phi_{r+1}}, r = 1, ..., m. Throws
/// EMPTY_BAND when the pair does not interlace.
BandDecomposition bands_circle(const CircleSpectrumPair& pair);

}  // namespace twospec

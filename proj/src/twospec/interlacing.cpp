#include "twospec/interlacing.hpp"

#include <cmath>
#include <numeric>

namespace twospec {

namespace {

double principal_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

struct Arg {
  Complex z;
  double angle;  // principal, then shifted
};

}  // namespace

CirclePoint CirclePoint::from_angle(double radians) {
  const double a = principal_angle(radians);
  return CirclePoint{Complex(std::cos(a), std::sin(a)), a};
}

CirclePoint CirclePoint::from_complex(Complex z) {
  const double r = std::abs(z);
  if (!std::isfinite(r) || std::fabs(r - 1.0) > kUnitModulusTolerance)
    fail(ErrorCode::NotUnitModulus,
         "point (" + format_double(z.real()) + ", " + format_double(z.imag()) + ") is not on the unit circle");
  z /= r;
  return CirclePoint{z, principal_angle(std::arg(z))};
}

CircleSpectrumPair normalize_circle(const std::vector<CirclePoint>& zetas, const std::vector<CirclePoint>& xis) {
  if (xis.empty() || xis.size() >= zetas.size())
    fail(ErrorCode::InvalidDimensions, "need 1 <= m < n, got n=" + std::to_string(zetas.size()) +
                                           ", m=" + std::to_string(xis.size()));
  auto collide = [](const Complex& a, const Complex& b) { return std::abs(a - b) <= kCircleCollisionTolerance; };
  auto check_unit = [](const CirclePoint& p) {
    if (std::fabs(std::abs(p.z) - 1.0) > kUnitModulusTolerance)
      fail(ErrorCode::NotUnitModulus, "point is not on the unit circle");
  };
  for (const auto& p : zetas) check_unit(p);
  for (const auto& p : xis) check_unit(p);
  for (std::size_t a = 0; a < zetas.size(); ++a)
    for (std::size_t b = a + 1; b < zetas.size(); ++b)
      if (collide(zetas[a].z, zetas[b].z))
        fail(ErrorCode::DegenerateAngle, "repeated point in Z_n");
  for (std::size_t a = 0; a < xis.size(); ++a)
    for (std::size_t b = a + 1; b < xis.size(); ++b)
      if (collide(xis[a].z, xis[b].z)) fail(ErrorCode::DegenerateAngle, "repeated point in Z_m");
  for (const auto& x : xis)
    for (const auto& z : zetas)
      if (collide(x.z, z.z)) fail(ErrorCode::SharedPoint, "Z_n and Z_m share a point");

  std::vector<Arg> zs, xs;
  for (const auto& p : zetas) zs.push_back({p.z, principal_angle(p.angle)});
  for (const auto& p : xis) xs.push_back({p.z, principal_angle(p.angle)});
  const auto by_angle = [](const Arg& a, const Arg& b) { return a.angle < b.angle; };
  std::sort(xs.begin(), xs.end(), by_angle);
  const double base = xs.front().angle;
  for (auto& a : zs)
    if (a.angle < base) a.angle += kTwoPi;
  std::sort(zs.begin(), zs.end(), by_angle);

  CircleSpectrumPair out;
  for (const auto& a : zs) {
    out.zetas.push_back(a.z);
    out.thetas.push_back(a.angle);
  }
  for (const auto& a : xs) {
    out.xis.push_back(a.z);
    out.phis.push_back(a.angle);
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> circle_bands(const CircleSpectrumPair& pair) {
  const std::size_t m = pair.m();
  std::vector<std::vector<std::size_t>> bands(m);
  for (std::size_t j = 0; j < pair.n(); ++j) {
    const double t = pair.thetas[j];
    // phi_r < t < phi_{r+1} with phi_{m+1} = phi_1 + 2 pi; thetas already lie
    // in (phi_1, phi_1 + 2 pi).
    const auto it = std::upper_bound(pair.phis.begin(), pair.phis.end(), t);
    const std::size_t r = static_cast<std::size_t>(it - pair.phis.begin());
    bands[r == 0 ? 0 : r - 1].push_back(j);
  }
  return bands;
}

}  // namespace

InterlacingVerdict check_interlace_circle(const CircleSpectrumPair& pair) {
  InterlacingVerdict v;
  if (pair.m() < 1 || pair.m() >= pair.n()) {
    v.violation = Violation{ErrorCode::InvalidDimensions, 0, "need 1 <= m < n"};
    return v;
  }
  const auto bands = circle_bands(pair);
  for (std::size_t r = 0; r < bands.size(); ++r) {
    if (bands[r].empty()) {
      const std::size_t next = (r + 1) % pair.m();
      v.violation = Violation{ErrorCode::EmptyBand, r,
                              "band I_" + std::to_string(r + 1) + " is empty: no node of Z_n lies on the open arc from xi[" +
                                  std::to_string(r + 1) + "] to xi[" + std::to_string(next + 1) +
                                  "], so one arc between consecutive nodes holds two points of Z_m"};
      return v;
    }
  }
  v.accepted = true;
  return v;
}

BandDecomposition bands_circle(const CircleSpectrumPair& pair) {
  const InterlacingVerdict v = check_interlace_circle(pair);
  if (!v.accepted) fail(v.violation->code, v.violation->message);
  BandDecomposition out;
  out.bands = circle_bands(pair);
  return out;
}

}  // namespace twospec

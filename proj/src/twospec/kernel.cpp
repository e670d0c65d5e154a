#include "twospec/kernel.hpp"

#include <cmath>
#include <limits>

namespace twospec {

std::string_view to_string(WeightStrategy s) noexcept {
  switch (s) {
    case WeightStrategy::SumAll: return "sum_all";
    case WeightStrategy::Coefficients: return "coefficients";
    case WeightStrategy::Cover: return "cover";
  }
  return "sum_all";
}

SystemMatrix<Complex> assemble_system_circle(const CircleSpectrumPair& pair) {
  const std::size_t n = pair.n();
  const std::size_t m = pair.m();
  SystemMatrix<Complex> out{Setting::Circle, Matrix<Complex>(m - 1, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex z = pair.zetas[j];
    Complex pm(1.0, 0.0);
    for (const Complex& xi : pair.xis) pm *= z - xi;
    if (std::abs(pm) <= kCircleCollisionTolerance)
      fail(ErrorCode::SharedPoint, "P_m vanishes at zeta[" + std::to_string(j + 1) + "]");
    // |z| = 1, so z^-(m-1) = conj(z)^(m-1).
    Complex d = pm;
    for (std::size_t k = 0; k + 1 < m; ++k) d *= std::conj(z);
    Complex power(1.0, 0.0);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      out.entries(k, j) = power * d;
      power *= z;
    }
  }
  return out;
}

AdmissibleFamily::AdmissibleFamily(const BandDecomposition& bands) : bands_(bands.bands) {
  std::uint64_t size = 1;
  bool overflow = false;
  for (const auto& band : bands_) {
    if (band.empty()) fail(ErrorCode::EmptyBand, "admissible family needs nonempty bands");
    approx_size_ *= static_cast<double>(band.size());
    if (!overflow) {
      if (size > std::numeric_limits<std::uint64_t>::max() / band.size())
        overflow = true;
      else
        size *= band.size();
    }
  }
  if (!overflow) size_ = size;
}

std::vector<std::size_t> AdmissibleFamily::at(std::uint64_t k) const {
  if (size_ && k >= *size_) fail(ErrorCode::InvalidArgument, "admissible family index out of range");
  std::vector<std::size_t> out(bands_.size());
  for (std::size_t r = bands_.size(); r-- > 0;) {
    const std::uint64_t radix = bands_[r].size();
    out[r] = bands_[r][static_cast<std::size_t>(k % radix)];
    k /= radix;
  }
  return out;
}

std::uint64_t AdmissibleFamily::index_of(const std::vector<std::size_t>& support) const {
  if (support.size() != bands_.size()) fail(ErrorCode::InvalidArgument, "support does not pick one index per band");
  std::uint64_t k = 0;
  for (std::size_t r = 0; r < bands_.size(); ++r) {
    const auto& band = bands_[r];
    const auto it = std::find(band.begin(), band.end(), support[r]);
    if (it == band.end()) fail(ErrorCode::InvalidArgument, "support does not pick one index per band");
    k = k * band.size() + static_cast<std::uint64_t>(it - band.begin());
  }
  return k;
}

std::vector<std::vector<std::size_t>> admissible_family(const BandDecomposition& bands) {
  const AdmissibleFamily family(bands);
  if (!family.size() || *family.size() > kMaterializeLimit)
    fail(ErrorCode::DimensionTooLarge, "admissible family has about " + format_double(family.approximate_size()) +
                                           " members; enumerate it lazily instead");
  std::vector<std::vector<std::size_t>> out;
  out.reserve(static_cast<std::size_t>(*family.size()));
  family.for_each([&](const std::vector<std::size_t>& s) { out.push_back(s); });
  return out;
}

namespace {

constexpr double kSineFloor = 0.5 * kCircleCollisionTolerance;

// prod_k sin((theta_j - phi_k) / 2), with each factor checked for a collision.
double spectral_sines(const CircleSpectrumPair& pair, std::size_t j) {
  double product = 1.0;
  for (double phi : pair.phis) {
    const double s = std::sin(0.5 * (pair.thetas[j] - phi));
    if (std::fabs(s) <= kSineFloor)
      fail(ErrorCode::SharedPoint, "zeta[" + std::to_string(j + 1) + "] coincides with a point of Z_m");
    product *= s;
  }
  return product;
}

}  // namespace

CircuitVector<double> circuit_circle(const CircleSpectrumPair& pair, const std::vector<std::size_t>& support) {
  const std::size_t n = pair.n();
  detail::check_support(support, pair.m(), n);
  CircuitVector<double> c{support, std::vector<double>(n, 0.0)};
  for (std::size_t j : support) {
    const double spectral = spectral_sines(pair, j);
    double nodal = 1.0;
    for (std::size_t i : support) {
      if (i == j) continue;
      const double s = std::sin(0.5 * (pair.thetas[j] - pair.thetas[i]));
      if (std::fabs(s) <= kSineFloor) fail(ErrorCode::DegenerateAngle, "repeated node in circuit support");
      nodal *= s;
    }
    c.weights[j] = 1.0 / (spectral * nodal);
  }
  detail::normalize_sign(c);
  return c;
}

std::vector<double> sum_all_circle(const CircleSpectrumPair& pair, const BandDecomposition& bands) {
  std::vector<double> omega(pair.n(), 0.0);
  for (std::size_t r = 0; r < bands.bands.size(); ++r)
    for (std::size_t j : bands.bands[r]) {
      double value = 1.0 / std::fabs(spectral_sines(pair, j));
      for (std::size_t s = 0; s < bands.bands.size(); ++s) {
        if (s == r) continue;
        double band_sum = 0.0;
        for (std::size_t i : bands.bands[s]) band_sum += 1.0 / std::fabs(std::sin(0.5 * (pair.thetas[j] - pair.thetas[i])));
        value *= band_sum;
      }
      omega[j] = value;
    }
  return omega;
}

}  // namespace twospec

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twospec/error.hpp"
#include "twospec/interlacing.hpp"
#include "twospec/linalg.hpp"
#include "twospec/matrix.hpp"
#include "twospec/scalar.hpp"

namespace twospec {

enum class Setting { Real, Circle };

/// Coefficient matrix of the moment conditions sum_j w_j P_m(z_j) z_j^k = 0.
template <class T>
struct SystemMatrix {
  Setting setting = Setting::Real;
  Matrix<T> entries;
};

/// Sparse kernel generator: nonzero only on `support` (sorted, 0-based).
template <class T>
struct CircuitVector {
  std::vector<std::size_t> support;
  std::vector<T> weights;  // dense, length n
};

/// Real case: A(k, j) = x_j^k P_m(x_j), k = 0, ..., m-1.
template <class T>
SystemMatrix<T> assemble_system_real(const RealSpectrumPair<T>& pair) {
  const std::size_t n = pair.n();
  const std::size_t m = pair.m();
  SystemMatrix<T> out{Setting::Real, Matrix<T>(m, n)};
  for (std::size_t j = 0; j < n; ++j) {
    T pm(1);
    for (const T& y : pair.ys) pm *= pair.xs[j] - y;
    if (ScalarTraits<T>::is_zero(pm, 0.0))
      fail(ErrorCode::SharedPoint, "P_m vanishes at x[" + std::to_string(j + 1) + "]");
    T power(1);
    for (std::size_t k = 0; k < m; ++k) {
      out.entries(k, j) = power * pm;
      power *= pair.xs[j];
    }
  }
  return out;
}

/// Circle case: A(k, j) = zeta_j^k P_m(zeta_j) / zeta_j^(m-1), k = 0, ..., m-2.
/// For m = 1 the matrix has no rows.
SystemMatrix<Complex> assemble_system_circle(const CircleSpectrumPair& pair);

/// Lazily enumerated admissible family: every choice of exactly one index per
/// band, ordered lexicographically with the first band varying slowest.
class AdmissibleFamily {
 public:
  explicit AdmissibleFamily(const BandDecomposition& bands);

  const std::vector<std::vector<std::size_t>>& bands() const { return bands_; }
  /// prod_r |I_r|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const { return size_; }
  /// prod_r |I_r| in floating point, always available.
  double approximate_size() const { return approx_size_; }

  /// The k-th member (0-based) in enumeration order.
  std::vector<std::size_t> at(std::uint64_t k) const;
  /// Position of a member in enumeration order; throws if not admissible.
  std::uint64_t index_of(const std::vector<std::size_t>& support) const;

  template <class F>
  void for_each(F&& visit) const {
    std::vector<std::size_t> digit(bands_.size(), 0);
    std::vector<std::size_t> current(bands_.size());
    for (std::size_t r = 0; r < bands_.size(); ++r) current[r] = bands_[r][0];
    for (;;) {
      visit(static_cast<const std::vector<std::size_t>&>(current));
      std::size_t r = bands_.size();
      while (r > 0) {
        --r;
        if (++digit[r] < bands_[r].size()) {
          current[r] = bands_[r][digit[r]];
          break;
        }
        digit[r] = 0;
        current[r] = bands_[r][0];
        if (r == 0) return;
      }
      if (bands_.empty()) return;
    }
  }

 private:
  std::vector<std::vector<std::size_t>> bands_;
  std::optional<std::uint64_t> size_;
  double approx_size_ = 1.0;
};

inline constexpr std::uint64_t kMaterializeLimit = 1'000'000;

/// Materialized admissible family; throws DIMENSION_TOO_LARGE past
/// kMaterializeLimit members.
std::vector<std::vector<std::size_t>> admissible_family(const BandDecomposition& bands);

namespace detail {

inline void check_support(const std::vector<std::size_t>& support, std::size_t expected, std::size_t n) {
  if (support.size() != expected)
    fail(ErrorCode::InvalidArgument, "circuit support must have " + std::to_string(expected) + " indices, got " +
                                         std::to_string(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= n) fail(ErrorCode::InvalidArgument, "circuit index out of range");
    if (i > 0 && support[i] <= support[i - 1])
      fail(ErrorCode::InvalidArgument, "circuit support must be strictly increasing");
  }
}

/// Global sign choice: flip when the support entries are mostly negative.
template <class T>
void normalize_sign(CircuitVector<T>& c) {
  int total = 0;
  for (std::size_t j : c.support) total += ScalarTraits<T>::sign(c.weights[j]);
  if (total < 0)
    for (std::size_t j : c.support) c.weights[j] = -c.weights[j];
}

}  // namespace detail

/// omega_j = 1 / (P_m(x_j) Q_J'(x_j)) on the support J (|J| = m + 1), sign
/// normalized.
template <class T>
CircuitVector<T> circuit_real(const RealSpectrumPair<T>& pair, const std::vector<std::size_t>& support) {
  const std::size_t n = pair.n();
  detail::check_support(support, pair.m() + 1, n);
  CircuitVector<T> c{support, std::vector<T>(n, T(0))};
  for (std::size_t j : support) {
    T denom(1);
    for (const T& y : pair.ys) denom *= pair.xs[j] - y;
    if (ScalarTraits<T>::is_zero(denom, 0.0))
      fail(ErrorCode::SharedPoint, "P_m vanishes at x[" + std::to_string(j + 1) + "]");
    for (std::size_t i : support)
      if (i != j) denom *= pair.xs[j] - pair.xs[i];
    if (ScalarTraits<T>::is_zero(denom, 0.0)) fail(ErrorCode::DegenerateAngle, "repeated node in circuit support");
    c.weights[j] = T(1) / denom;
  }
  detail::normalize_sign(c);
  return c;
}

/// Half-angle-sine circuit on the circle (|J| = m), sign normalized; real
/// valued and annihilated by the complex system.
CircuitVector<double> circuit_circle(const CircleSpectrumPair& pair, const std::vector<std::size_t>& support);

enum class WeightStrategy { SumAll, Coefficients, Cover };

std::string_view to_string(WeightStrategy s) noexcept;

template <class T>
struct WeightRequest {
  WeightStrategy strategy = WeightStrategy::SumAll;
  /// COEFFICIENTS only: family position (0-based, >= 1) -> t >= 0. Position 0
  /// is the lexicographically first member and always carries coefficient 1.
  /// Positions not listed carry 0.
  std::map<std::uint64_t, T> coefficients;
};

template <class T>
struct WeightTerm {
  std::uint64_t position;
  T coefficient;
  CircuitVector<T> circuit;
};

template <class T>
struct WeightResult {
  std::vector<T> omega;
  std::uint64_t term_count = 0;
  /// Set instead of an exact count when the family size overflows 64 bits.
  std::optional<double> term_count_approx;
  /// The circuits combined into omega, up to `record_limit` of them.
  std::vector<WeightTerm<T>> terms;
  bool terms_truncated = false;
};

/// Strictly positive conical combination of admissible circuits. `circuit`
/// maps a support to its circuit vector. When `closed_sum` is given, SUM_ALL
/// takes omega from it and builds only the recorded circuits; otherwise every
/// member is enumerated.
template <class T, class CircuitFn>
WeightResult<T> positive_weight(const AdmissibleFamily& family, std::size_t n, const WeightRequest<T>& request,
                                CircuitFn&& circuit, std::size_t record_limit = 1000,
                                const std::function<std::vector<T>()>& closed_sum = {}) {
  using Tr = ScalarTraits<T>;
  WeightResult<T> out;
  out.omega.assign(n, T(0));
  auto add = [&](std::uint64_t position, const T& coefficient, const std::vector<std::size_t>& support) {
    CircuitVector<T> c = circuit(support);
    for (std::size_t j : c.support) out.omega[j] += coefficient * c.weights[j];
    ++out.term_count;
    if (out.terms.size() < record_limit)
      out.terms.push_back({position, coefficient, std::move(c)});
    else
      out.terms_truncated = true;
  };

  switch (request.strategy) {
    case WeightStrategy::SumAll: {
      if (closed_sum) {
        out.omega = closed_sum();
        const std::optional<std::uint64_t> size = family.size();
        if (size) out.term_count = *size;
        else out.term_count_approx = family.approximate_size();
        const std::uint64_t shown = size ? std::min<std::uint64_t>(*size, record_limit) : record_limit;
        for (std::uint64_t k = 0; k < shown; ++k) out.terms.push_back({k, T(1), circuit(family.at(k))});
        out.terms_truncated = !size || *size > shown;
        break;
      }
      std::uint64_t position = 0;
      family.for_each([&](const std::vector<std::size_t>& support) { add(position++, T(1), support); });
      break;
    }
    case WeightStrategy::Coefficients: {
      std::vector<bool> covered(n, false);
      std::map<std::uint64_t, T> effective;
      effective.emplace(0, T(1));
      for (const auto& [position, t] : request.coefficients) {
        if (position == 0)
          fail(ErrorCode::InvalidArgument, "the first admissible circuit carries the implicit coefficient 1");
        if (family.size() && position >= *family.size())
          fail(ErrorCode::InvalidArgument, "coefficient s" + std::to_string(position) + " refers past the " +
                                               std::to_string(*family.size()) + " admissible circuits");
        if (Tr::sign(t) < 0)
          fail(ErrorCode::NegativeCoefficient, "coefficient s" + std::to_string(position) + " is negative");
        if (Tr::sign(t) > 0) effective.emplace(position, t);
      }
      for (const auto& [position, t] : effective)
        for (std::size_t j : family.at(position)) covered[j] = true;
      for (std::size_t j = 0; j < n; ++j)
        if (!covered[j])
          fail(ErrorCode::NotCovered,
               "index " + std::to_string(j + 1) + " is not covered by any circuit with a positive coefficient");
      for (const auto& [position, t] : effective) add(position, t, family.at(position));
      break;
    }
    case WeightStrategy::Cover: {
      std::map<std::uint64_t, std::uint64_t> multiplicity;
      const auto& bands = family.bands();
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> support;
        for (const auto& band : bands) {
          const bool holds_j = std::find(band.begin(), band.end(), j) != band.end();
          support.push_back(holds_j ? j : band.front());
        }
        ++multiplicity[family.index_of(support)];
      }
      for (const auto& [position, count] : multiplicity) add(position, T(static_cast<unsigned long>(count)), family.at(position));
      break;
    }
  }

  for (std::size_t j = 0; j < n; ++j)
    if (!(Tr::sign(out.omega[j]) > 0))
      fail(ErrorCode::NotPositive, "weight " + std::to_string(j + 1) + " is not strictly positive");
  return out;
}

/// Sum of every admissible circuit without enumerating the family. Each
/// admissible circuit is nonnegative, and the sum over one index per other
/// band factorizes: omega_j = 1 / |P_m(x_j)| * prod_{r != band(j)} sum_{i in I_r} 1 / |x_j - x_i|.
template <class T>
std::vector<T> sum_all_real(const RealSpectrumPair<T>& pair, const BandDecomposition& bands) {
  using Tr = ScalarTraits<T>;
  auto abs = [](const T& v) { return Tr::sign(v) < 0 ? T(-v) : v; };
  std::vector<T> omega(pair.n(), T(0));
  for (std::size_t r = 0; r < bands.bands.size(); ++r)
    for (std::size_t j : bands.bands[r]) {
      T spectral(1);
      for (const T& y : pair.ys) spectral *= pair.xs[j] - y;
      if (Tr::is_zero(spectral, 0.0)) fail(ErrorCode::SharedPoint, "P_m vanishes at x[" + std::to_string(j + 1) + "]");
      T value = T(1) / abs(spectral);
      for (std::size_t s = 0; s < bands.bands.size(); ++s) {
        if (s == r) continue;
        T band_sum(0);
        for (std::size_t i : bands.bands[s]) band_sum += T(1) / abs(pair.xs[j] - pair.xs[i]);
        value *= band_sum;
      }
      omega[j] = value;
    }
  return omega;
}

/// Circle analogue with half-angle sines.
std::vector<double> sum_all_circle(const CircleSpectrumPair& pair, const BandDecomposition& bands);

/// Generic row-reduction nullspace of the system, checked against the
/// expected dimension n - rank.
template <class T>
std::vector<std::vector<T>> kernel_basis_oracle(const SystemMatrix<T>& a, double rel_tol = 1e-12) {
  const Echelon<T> e = row_reduce(a.entries, rel_tol);
  if (e.rank() < a.entries.rows())
    fail(ErrorCode::RankDeficient, "system has rank " + std::to_string(e.rank()) + " < " +
                                       std::to_string(a.entries.rows()) + " rows");
  return nullspace_basis(a.entries, rel_tol);
}

}  // namespace twospec

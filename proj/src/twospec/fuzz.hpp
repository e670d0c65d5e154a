#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twospec/interlacing.hpp"
#include "twospec/pipeline.hpp"

namespace twospec {

/// Instance i of a run with seed s is drawn from mt19937_64(s + i), so a
/// failing instance replays alone with seed s + i and count 1.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t i);

/// Number of Z_m points placed in each slot. Real slots: below x_1, the n - 1
/// gaps, above x_n. Circle slots: the arc after each of the n nodes.
using SlotCounts = std::vector<std::size_t>;

/// n + m sorted reals in [lo, hi] with consecutive gaps >= min_gap, laid out
/// by `slots` (size n + 1).
RealSpectrumPair<double> layout_real(std::mt19937_64& rng, std::size_t n, const SlotCounts& slots, double lo, double hi,
                                     double min_gap);

struct RawCirclePair {
  std::vector<CirclePoint> zetas;
  std::vector<CirclePoint> xis;
};

/// n + m circle points with angular gaps >= min_gap (wrap included), laid out
/// by `slots` (size n), each set shuffled.
RawCirclePair layout_circle(std::mt19937_64& rng, std::size_t n, const SlotCounts& slots, double min_gap);

/// Strictly interlacing instances.
RealSpectrumPair<double> random_real_pair(std::mt19937_64& rng, std::size_t n, std::size_t m, double lo = -10.0,
                                          double hi = 10.0, double min_gap = 0.1);
RawCirclePair random_circle_pair(std::mt19937_64& rng, std::size_t n, std::size_t m, double min_gap = 1e-2);

/// Non-interlacing instances whose first violation is `kind`: GAP_OVERFULL
/// (m >= 2) or OUT_OF_RANGE on the line, EMPTY_BAND (m >= 2) on the circle.
RealSpectrumPair<double> random_bad_real_pair(std::mt19937_64& rng, std::size_t n, std::size_t m, ErrorCode kind);
RawCirclePair random_bad_circle_pair(std::mt19937_64& rng, std::size_t n, std::size_t m);

struct FuzzOptions {
  Setting setting = Setting::Real;
  std::size_t n = 8;
  std::size_t m = 3;
  std::uint64_t count = 100;
  std::uint64_t seed = 7;
  Arithmetic arithmetic = Arithmetic::Float64;
  ToleranceProfile profile = ToleranceProfile::standard();
};

/// Reconstructs and verifies `count` random instances; exit 0 when all pass,
/// 4 otherwise.
Outcome cmd_fuzz(const FuzzOptions& opt);

}  // namespace twospec

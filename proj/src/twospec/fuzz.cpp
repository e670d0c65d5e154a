#include "twospec/fuzz.hpp"

#include <algorithm>
#include <numeric>

#include "twospec/serialize.hpp"

namespace twospec {

using nlohmann::json;

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t i) { return std::mt19937_64(seed + i); }

namespace {

// Sorted draws in [0, span] pushed apart so consecutive gaps are >= min_gap.
std::vector<double> spaced(std::mt19937_64& rng, std::size_t count, double span, double min_gap, bool wrap) {
  const double slack = span - min_gap * static_cast<double>(wrap ? count : count - 1);
  if (!(slack > 0.0)) fail(ErrorCode::InvalidArgument, "interval too short for the requested separation");
  std::uniform_real_distribution<double> u(0.0, slack);
  std::vector<double> v(count);
  for (auto& x : v) x = u(rng);
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < count; ++i) v[i] += min_gap * static_cast<double>(i);
  return v;
}

std::vector<std::size_t> choose(std::mt19937_64& rng, std::size_t from, std::size_t k) {
  std::vector<std::size_t> idx(from);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  return idx;
}

std::size_t total(const SlotCounts& s) { return std::accumulate(s.begin(), s.end(), std::size_t{0}); }

void check_dims(std::size_t n, std::size_t m) {
  if (m < 1 || m >= n) fail(ErrorCode::InvalidDimensions, "need 1 <= m < n");
}

}  // namespace

RealSpectrumPair<double> layout_real(std::mt19937_64& rng, std::size_t n, const SlotCounts& slots, double lo, double hi,
                                     double min_gap) {
  const std::vector<double> pts = spaced(rng, n + total(slots), hi - lo, min_gap, false);
  RealSpectrumPair<double> pair;
  std::size_t next = 0;
  for (std::size_t s = 0; s <= n; ++s) {
    for (std::size_t c = 0; c < slots[s]; ++c) pair.ys.push_back(lo + pts[next++]);
    if (s < n) pair.xs.push_back(lo + pts[next++]);
  }
  return pair;
}

RawCirclePair layout_circle(std::mt19937_64& rng, std::size_t n, const SlotCounts& slots, double min_gap) {
  const std::vector<double> pts = spaced(rng, n + total(slots), kTwoPi, min_gap, true);
  const double offset = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
  RawCirclePair out;
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    out.zetas.push_back(CirclePoint::from_angle(offset + pts[next++]));
    for (std::size_t c = 0; c < slots[s]; ++c) out.xis.push_back(CirclePoint::from_angle(offset + pts[next++]));
  }
  std::shuffle(out.zetas.begin(), out.zetas.end(), rng);
  std::shuffle(out.xis.begin(), out.xis.end(), rng);
  return out;
}

RealSpectrumPair<double> random_real_pair(std::mt19937_64& rng, std::size_t n, std::size_t m, double lo, double hi,
                                          double min_gap) {
  check_dims(n, m);
  SlotCounts slots(n + 1, 0);
  for (std::size_t g : choose(rng, n - 1, m)) slots[g + 1] = 1;
  return layout_real(rng, n, slots, lo, hi, min_gap);
}

RawCirclePair random_circle_pair(std::mt19937_64& rng, std::size_t n, std::size_t m, double min_gap) {
  check_dims(n, m);
  SlotCounts slots(n, 0);
  for (std::size_t a : choose(rng, n, m)) slots[a] = 1;
  return layout_circle(rng, n, slots, min_gap);
}

RealSpectrumPair<double> random_bad_real_pair(std::mt19937_64& rng, std::size_t n, std::size_t m, ErrorCode kind) {
  check_dims(n, m);
  SlotCounts slots(n + 1, 0);
  const std::vector<std::size_t> gaps = choose(rng, n - 1, m - 1);
  for (std::size_t g : gaps) slots[g + 1] = 1;
  if (kind == ErrorCode::GapOverfull) {
    if (gaps.empty()) fail(ErrorCode::InvalidArgument, "an overfull gap needs m >= 2");
    slots[gaps[std::uniform_int_distribution<std::size_t>(0, gaps.size() - 1)(rng)] + 1] = 2;
  } else if (kind == ErrorCode::OutOfRange) {
    slots[std::bernoulli_distribution(0.5)(rng) ? 0 : n] = 1;
  } else {
    fail(ErrorCode::InvalidArgument, "unsupported defect for the real line");
  }
  return layout_real(rng, n, slots, -10.0, 10.0, 0.1);
}

RawCirclePair random_bad_circle_pair(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  check_dims(n, m);
  if (m < 2) fail(ErrorCode::InvalidArgument, "an empty band needs m >= 2");
  SlotCounts slots(n, 0);
  const std::vector<std::size_t> arcs = choose(rng, n, m - 1);
  for (std::size_t a : arcs) slots[a] = 1;
  slots[arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)]] = 2;
  return layout_circle(rng, n, slots, 1e-2);
}

namespace {

json run_instance(const FuzzOptions& opt, std::mt19937_64& rng) {
  json r;
  if (opt.setting == Setting::Real) {
    const RealSpectrumPair<double> pair = random_real_pair(rng, opt.n, opt.m);
    if (opt.arithmetic == Arithmetic::Rational) {
      RealSpectrumPair<Rational> exact;
      for (double x : pair.xs) exact.xs.emplace_back(x);
      for (double y : pair.ys) exact.ys.emplace_back(y);
      const auto rec = reconstruct_real<Rational>(exact, {}, opt.profile);
      r["report"] = wire::report(rec.report);
      r["passed"] = rec.report.passed();
    } else {
      const auto rec = reconstruct_real<double>(pair, {}, opt.profile);
      r["report"] = wire::report(rec.report);
      r["passed"] = rec.report.passed();
    }
  } else {
    const RawCirclePair raw = random_circle_pair(rng, opt.n, opt.m);
    const auto rec = reconstruct_circle(normalize_circle(raw.zetas, raw.xis), {}, opt.profile);
    r["report"] = wire::report(rec.report);
    r["passed"] = rec.report.passed();
  }
  return r;
}

}  // namespace

Outcome cmd_fuzz(const FuzzOptions& opt) {
  Outcome o;
  json& d = o.document;
  d["schema"] = std::string(kSchemaVersion);
  d["command"] = "fuzz";
  d["setting"] = std::string(to_string(opt.setting));
  d["arithmetic"] = std::string(to_string(opt.arithmetic));
  d["n"] = opt.n;
  d["m"] = opt.m;
  d["count"] = opt.count;
  d["seed"] = opt.seed;
  d["profile"] = json{{"name", opt.profile.name}, {"tolerance", opt.profile.tolerance}};
  try {
    check_dims(opt.n, opt.m);
    if (opt.setting == Setting::Circle && opt.arithmetic == Arithmetic::Rational)
      fail(ErrorCode::Unsupported, "the circle setting runs in float64 only");
  } catch (const Error& e) {
    d["error"] = wire::error(e.code(), e.what());
    o.exit_code = e.code() == ErrorCode::InvalidDimensions ? kExitUsage : kExitReconstruction;
    return o;
  }

  std::uint64_t passed = 0;
  json failures = json::array();
  for (std::uint64_t i = 0; i < opt.count; ++i) {
    std::mt19937_64 rng = instance_rng(opt.seed, i);
    json entry{{"instance", i}, {"reproduce_seed", opt.seed + i}};
    try {
      json r = run_instance(opt, rng);
      if (r["passed"].get<bool>()) {
        ++passed;
        continue;
      }
      entry["report"] = std::move(r["report"]);
    } catch (const Error& e) {
      entry["error"] = wire::error(e.code(), e.what());
    }
    failures.push_back(std::move(entry));
  }
  d["passed"] = passed;
  d["failed"] = opt.count - passed;
  d["failures"] = std::move(failures);
  o.exit_code = passed == opt.count ? kExitVerified : kExitVerification;
  return o;
}

}  // namespace twospec

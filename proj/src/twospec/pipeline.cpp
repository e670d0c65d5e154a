#include "twospec/pipeline.hpp"

#include "twospec/serialize.hpp"

namespace twospec {

using nlohmann::json;

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
      return kExitUsage;
    case ErrorCode::NotSorted:
    case ErrorCode::SharedPoint:
    case ErrorCode::OutOfRange:
    case ErrorCode::GapOverfull:
    case ErrorCode::EmptyBand:
    case ErrorCode::NotUnitModulus:
    case ErrorCode::DegenerateAngle:
    case ErrorCode::InvalidDimensions:
      return kExitRejected;
    default:
      return kExitReconstruction;
  }
}

CircleReconstruction reconstruct_circle(const CircleSpectrumPair& pair, const WeightRequest<double>& request,
                                        const ToleranceProfile& profile) {
  CircleReconstruction out;
  out.pair = pair;
  out.verdict = check_interlace_circle(pair);
  if (!out.verdict.accepted) detail::reject(out.verdict);
  out.bands = bands_circle(pair);
  out.family.emplace(out.bands);
  out.weights = positive_weight<double>(
      *out.family, pair.n(), request, [&](const std::vector<std::size_t>& s) { return circuit_circle(pair, s); },
      kRecordLimit, [&] { return sum_all_circle(pair, out.bands); });
  PopucReconstruction& r = out.popuc;
  r.moments = trig_moments(pair.zetas, out.weights.omega);
  r.verblunsky = verblunsky_from_measure(pair.zetas, out.weights.omega);
  r.b_n = boundary_param(pair.zetas);
  r.b_m = boundary_param(pair.xis);
  r.c_n = cmv_matrix(r.verblunsky.alpha, r.b_n);
  r.c_m = cmv_matrix(std::span<const Complex>(r.verblunsky.alpha).first(pair.m() - 1), r.b_m);
  out.report = verify_popuc(pair, out.weights.omega, r, profile);
  return out;
}

namespace {

constexpr std::uint64_t kListLimit = 1000;

json header(const char* command, const Problem& p) {
  return json{{"schema", std::string(kSchemaVersion)},
              {"command", command},
              {"setting", std::string(to_string(p.setting))},
              {"arithmetic", std::string(to_string(p.resolved_arithmetic()))}};
}

json family_json(const AdmissibleFamily& f) {
  json out;
  if (f.size()) {
    out["count"] = *f.size();
  } else {
    out["count"] = nullptr;
    out["count_approx"] = f.approximate_size();
  }
  const bool listed = f.size() && *f.size() <= kListLimit;
  out["listed"] = listed;
  if (listed) {
    json members = json::array();
    f.for_each([&](const std::vector<std::size_t>& s) { members.push_back(wire::index_set(s)); });
    out["members"] = std::move(members);
  }
  return out;
}

template <class T>
json weights_json(const WeightResult<T>& w, WeightStrategy strategy) {
  json circuits = json::array();
  for (const auto& t : w.terms) {
    json c = wire::circuit(t.circuit);
    c["member"] = t.position + 1;
    c["coefficient"] = wire::value(t.coefficient);
    circuits.push_back(std::move(c));
  }
  return json{{"strategy", std::string(to_string(strategy))},
              {"omega", wire::values(w.omega)},
              {w.term_count_approx ? "circuit_count_approx" : "circuit_count",
               w.term_count_approx ? json(*w.term_count_approx) : json(w.term_count)},
              {"circuits", std::move(circuits)},
              {"circuits_truncated", w.terms_truncated}};
}

template <class T>
json real_input(const RealSpectrumPair<T>& pair) {
  return json{{"zn", wire::values(pair.xs)}, {"zm", wire::values(pair.ys)}};
}

json circle_input(const CircleSpectrumPair& pair) {
  return json{{"zn", wire::values(pair.zetas)},
              {"zm", wire::values(pair.xis)},
              {"thetas", pair.thetas},
              {"phis", pair.phis}};
}

template <class F>
Outcome guarded(const char* command, const Problem& p, F&& body) {
  try {
    validate(p);
    return body();
  } catch (const Error& e) {
    Outcome o{header(command, p), exit_code_for(e.code())};
    o.document["error"] = wire::error(e.code(), e.what());
    if (o.exit_code == kExitRejected)
      o.document["interlacing"] = json{{"accepted", false},
                                       {"violation", json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    return o;
  }
}

template <class T>
Outcome check_real(const Problem& p) {
  Outcome o{header("check", p), kExitVerified};
  const RealSpectrumPair<T> pair = real_pair<T>(p);
  const InterlacingVerdict v = check_interlace_real(pair);
  o.document["input"] = real_input(pair);
  o.document["interlacing"] = wire::verdict(v);
  if (!v.accepted) {
    o.exit_code = kExitRejected;
    return o;
  }
  const BandDecomposition b = bands_real(pair, v);
  o.document["bands"] = wire::bands(b);
  o.document["admissible_family"] = family_json(AdmissibleFamily(b));
  return o;
}

Outcome check_circle(const Problem& p) {
  Outcome o{header("check", p), kExitVerified};
  const CircleSpectrumPair pair = normalize_circle(p.circle_zn, p.circle_zm);
  const InterlacingVerdict v = check_interlace_circle(pair);
  o.document["input"] = circle_input(pair);
  o.document["interlacing"] = wire::verdict(v);
  if (!v.accepted) {
    o.exit_code = kExitRejected;
    return o;
  }
  const BandDecomposition b = bands_circle(pair);
  o.document["bands"] = wire::bands(b);
  o.document["admissible_family"] = family_json(AdmissibleFamily(b));
  return o;
}

template <class T>
Outcome reconstruct_real_cmd(const Problem& p) {
  Outcome o{header("reconstruct", p), kExitVerified};
  const RealSpectrumPair<T> pair = real_pair<T>(p);
  o.document["input"] = real_input(pair);
  const InterlacingVerdict v = check_interlace_real(pair);
  o.document["interlacing"] = wire::verdict(v);
  if (!v.accepted) {
    o.exit_code = kExitRejected;
    return o;
  }
  const RealReconstruction<T> r = reconstruct_real<T>(pair, weight_request<T>(p), p.profile);
  json& d = o.document;
  d["bands"] = wire::bands(r.bands);
  d["admissible_family"] = family_json(*r.family);
  d["weights"] = weights_json(r.weights, p.strategy);
  d["moments"] = wire::values(r.moments.mu);
  json polys = json::array();
  for (const auto& poly : r.jacobi.polys) polys.push_back(wire::polynomial(poly));
  d["recurrence"] = json{{"beta", wire::values(r.jacobi.beta)},
                         {"gamma", wire::values(r.jacobi.gamma)},
                         {"polynomials", std::move(polys)}};
  d["matrices"] = json{{"J_n", wire::matrix(r.j_n)}, {"J_m", wire::matrix(r.j_m)}};
  d["verification"] = wire::report(r.report);
  d["status"] = r.report.passed() ? "verified" : "verification_failed";
  o.exit_code = r.report.passed() ? kExitVerified : kExitVerification;
  return o;
}

Outcome reconstruct_circle_cmd(const Problem& p) {
  Outcome o{header("reconstruct", p), kExitVerified};
  const CircleSpectrumPair pair = normalize_circle(p.circle_zn, p.circle_zm);
  o.document["input"] = circle_input(pair);
  const InterlacingVerdict v = check_interlace_circle(pair);
  o.document["interlacing"] = wire::verdict(v);
  if (!v.accepted) {
    o.exit_code = kExitRejected;
    return o;
  }
  const CircleReconstruction r = reconstruct_circle(pair, weight_request<double>(p), p.profile);
  const auto& alpha = r.popuc.verblunsky.alpha;
  json& d = o.document;
  d["bands"] = wire::bands(r.bands);
  d["admissible_family"] = family_json(*r.family);
  d["weights"] = weights_json(r.weights, p.strategy);
  d["moments"] = wire::values(r.popuc.moments.nonnegative);
  d["verblunsky"] = json{{"alpha", wire::values(alpha)},
                         {"rho", wire::values(r.popuc.verblunsky.rho)},
                         {"b_n", wire::value(r.popuc.b_n)},
                         {"b_m", wire::value(r.popuc.b_m)}};
  d["polynomials"] = json{
      {"Psi_n", wire::polynomial(szego_popuc(alpha, r.popuc.b_n, pair.n()))},
      {"Psi_m", wire::polynomial(szego_popuc(std::span<const Complex>(alpha).first(pair.m() - 1), r.popuc.b_m, pair.m()))}};
  d["matrices"] = json{{"C_n", wire::matrix(r.popuc.c_n)}, {"C_m", wire::matrix(r.popuc.c_m)}};
  d["verification"] = wire::report(r.report);
  d["status"] = r.report.passed() ? "verified" : "verification_failed";
  o.exit_code = r.report.passed() ? kExitVerified : kExitVerification;
  return o;
}

template <class T, class CircuitFn>
json circuits_listing(const AdmissibleFamily& f, CircuitFn&& circuit) {
  json list = json::array();
  const std::uint64_t shown = f.size() ? std::min(*f.size(), kListLimit) : kListLimit;
  for (std::uint64_t k = 0; k < shown; ++k) {
    json c = wire::circuit(circuit(f.at(k)));
    c["member"] = k + 1;
    list.push_back(std::move(c));
  }
  return list;
}

template <class T>
Outcome circuits_real(const Problem& p) {
  Outcome o = check_real<T>(p);
  o.document["command"] = "circuits";
  if (o.exit_code != kExitVerified) return o;
  const RealSpectrumPair<T> pair = real_pair<T>(p);
  const AdmissibleFamily f(bands_real(pair, check_interlace_real(pair)));
  o.document["circuits"] = circuits_listing<T>(f, [&](const auto& s) { return circuit_real(pair, s); });
  o.document["circuits_truncated"] = !f.size() || *f.size() > kListLimit;
  return o;
}

Outcome circuits_circle(const Problem& p) {
  Outcome o = check_circle(p);
  o.document["command"] = "circuits";
  if (o.exit_code != kExitVerified) return o;
  const CircleSpectrumPair pair = normalize_circle(p.circle_zn, p.circle_zm);
  const AdmissibleFamily f(bands_circle(pair));
  o.document["circuits"] = circuits_listing<double>(f, [&](const auto& s) { return circuit_circle(pair, s); });
  o.document["circuits_truncated"] = !f.size() || *f.size() > kListLimit;
  return o;
}

// Commands that promise a solution report a rejected input as an error too.
Outcome with_rejection_error(Outcome o) {
  if (o.exit_code == kExitRejected && !o.document.contains("error")) {
    const json& violation = o.document["interlacing"]["violation"];
    o.document["error"] = json{{"code", violation["code"]}, {"message", violation["message"]}};
  }
  return o;
}

}  // namespace

Outcome cmd_check(const Problem& p) {
  return guarded("check", p, [&] {
    if (p.setting == Setting::Circle) return check_circle(p);
    return p.resolved_arithmetic() == Arithmetic::Rational ? check_real<Rational>(p) : check_real<double>(p);
  });
}

Outcome cmd_reconstruct(const Problem& p) {
  return with_rejection_error(guarded("reconstruct", p, [&] {
    if (p.setting == Setting::Circle) return reconstruct_circle_cmd(p);
    return p.resolved_arithmetic() == Arithmetic::Rational ? reconstruct_real_cmd<Rational>(p)
                                                           : reconstruct_real_cmd<double>(p);
  }));
}

Outcome cmd_circuits(const Problem& p) {
  return with_rejection_error(guarded("circuits", p, [&] {
    if (p.setting == Setting::Circle) return circuits_circle(p);
    return p.resolved_arithmetic() == Arithmetic::Rational ? circuits_real<Rational>(p) : circuits_real<double>(p);
  }));
}

}  // namespace twospec

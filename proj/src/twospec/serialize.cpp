#include "twospec/serialize.hpp"

namespace twospec::wire {

json index_set(const std::vector<std::size_t>& zero_based) {
  json out = json::array();
  for (std::size_t j : zero_based) out.push_back(j + 1);
  return out;
}

json bands(const BandDecomposition& b) {
  json out = json::array();
  for (const auto& band : b.bands) out.push_back(index_set(band));
  return out;
}

json verdict(const InterlacingVerdict& v) {
  json out{{"accepted", v.accepted}};
  if (v.accepted && !v.indices.empty()) out["indices"] = v.indices;
  if (v.violation)
    out["violation"] = json{{"code", std::string(to_string(v.violation->code))},
                            {"index", v.violation->index + 1},
                            {"message", v.violation->message}};
  return out;
}

json report(const VerificationReport& r) {
  json out{{"passed", r.passed()},
           {"exact", r.exact},
           {"profile", json{{"name", r.profile.name}, {"tolerance", r.profile.tolerance}}},
           {"kernel_residual", r.kernel_residual},
           {"kernel_residual_relative", r.kernel_residual_relative},
           {"poly_match_n", r.poly_match_n},
           {"poly_match_m", r.poly_match_m},
           {"spectrum_residual_n", r.spectrum_residual_n},
           {"spectrum_residual_m", r.spectrum_residual_m},
           {"failures", r.failures},
           {"warnings", r.warnings}};
  if (r.min_gamma) out["min_gamma"] = *r.min_gamma;
  if (r.unitarity_defect_n) out["unitarity_defect_n"] = *r.unitarity_defect_n;
  if (r.unitarity_defect_m) out["unitarity_defect_m"] = *r.unitarity_defect_m;
  if (r.max_alpha_modulus) out["max_alpha_modulus"] = *r.max_alpha_modulus;
  if (r.boundary_defect) out["boundary_defect"] = *r.boundary_defect;
  return out;
}

json error(ErrorCode code, const std::string& message) {
  return json{{"code", std::string(to_string(code))}, {"message", message}};
}

std::vector<Rational> rationals(const json& array) {
  std::vector<Rational> out;
  for (const auto& v : array) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

}  // namespace twospec::wire

#include "twospec/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>

#include "twospec/error.hpp"

namespace twospec {

using nlohmann::json;

namespace {

std::string lower_trimmed(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return s;
}

Rational integer_rational(const json& v) {
  if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
  return Rational(std::to_string(v.get<std::int64_t>()));
}

// Exact rational from a JSON scalar; `exact` is cleared for binary floats.
Rational json_rational(const json& v, bool& exact, const std::string& what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return integer_rational(v);
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(ErrorCode::ParseError, what + " is not finite");
    exact = false;
    return Rational(d);
  }
  fail(ErrorCode::ParseError, what + " must be a number or a numeric string");
}

double json_double(const json& v, const std::string& what) {
  bool exact = true;
  return json_rational(v, exact, what).get_d();
}

CirclePoint parse_circle_point(const json& v, const std::string& what) {
  if (v.is_object()) {
    if (!v.contains("re") || !v.contains("im")) fail(ErrorCode::ParseError, what + " needs both \"re\" and \"im\"");
    return CirclePoint::from_complex(Complex(json_double(v.at("re"), what + ".re"), json_double(v.at("im"), what + ".im")));
  }
  if (v.is_string()) {
    static const std::regex pi_form(R"(^([+-]?[0-9./e+-]*)\*?pi(/([0-9]+))?$)");
    const std::string s = lower_trimmed(v.get<std::string>());
    std::smatch mt;
    if (std::regex_match(s, mt, pi_form)) {
      const std::string coeff = mt[1].str();
      Rational r(1);
      if (coeff == "-")
        r = -1;
      else if (!coeff.empty() && coeff != "+")
        r = parse_rational(coeff);
      if (mt[3].matched) {
        const Rational q = parse_rational(mt[3].str());
        if (q == 0) fail(ErrorCode::ParseError, what + " divides by zero");
        r /= q;
      }
      return circle_point_from_pi_fraction(r);
    }
    return CirclePoint::from_angle(parse_rational(s).get_d());
  }
  if (v.is_number()) return CirclePoint::from_angle(v.get<double>());
  fail(ErrorCode::ParseError, what + " must be an angle or an {\"re\", \"im\"} object");
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::uint64_t parse_param_key(std::string_view key) {
  std::string k = lower_trimmed(key);
  if (k.starts_with("s[") && k.ends_with("]")) k = k.substr(2, k.size() - 3);
  else if (k.starts_with("s")) k = k.substr(1);
  if (k.empty() || !std::all_of(k.begin(), k.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(ErrorCode::ParseError, "parameter name must look like s1, s2, ...; got \"" + std::string(key) + "\"");
  try {
    return std::stoull(k);
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "parameter index out of range: " + std::string(key));
  }
}

std::string mathematica_number(const Rational& r, bool exact) {
  if (exact) return format_rational(r);
  std::string s = format_double(r.get_d());
  const auto e = s.find('e');
  if (e != std::string::npos) s.replace(e, 1, "*^");
  else if (s.find('.') == std::string::npos) s += ".";
  return s;
}

std::string mathematica_list(const std::vector<Rational>& v, bool exact) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += mathematica_number(v[i], exact);
  }
  return out + "}";
}

std::string mathematica_circle(const std::vector<CirclePoint>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    std::string a = format_double(pts[i].angle);
    const auto e = a.find('e');
    if (e != std::string::npos) a.replace(e, 1, "*^");
    out += "Exp[I " + a + "]";
  }
  return out + "}";
}

}  // namespace

std::string_view to_string(Arithmetic a) noexcept { return a == Arithmetic::Rational ? "rational" : "float64"; }
std::string_view to_string(Setting s) noexcept { return s == Setting::Real ? "real" : "circle"; }

Arithmetic parse_arithmetic(std::string_view text) {
  const std::string s = lower_trimmed(text);
  if (s == "rational" || s == "exact") return Arithmetic::Rational;
  if (s == "float64" || s == "float" || s == "double") return Arithmetic::Float64;
  fail(ErrorCode::ParseError, "arithmetic must be \"rational\" or \"float64\", got \"" + std::string(text) + "\"");
}

WeightStrategy parse_strategy(std::string_view text) {
  std::string s = lower_trimmed(text);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "sum_all" || s == "automatic") return WeightStrategy::SumAll;
  if (s == "coefficients") return WeightStrategy::Coefficients;
  if (s == "cover") return WeightStrategy::Cover;
  fail(ErrorCode::ParseError, "strategy must be sum_all, coefficients or cover, got \"" + std::string(text) + "\"");
}

ToleranceProfile parse_profile(std::string_view text) {
  const std::string s = lower_trimmed(text);
  if (s == "strict") return ToleranceProfile::strict();
  if (s == "standard") return ToleranceProfile::standard();
  double tol = 0.0;
  try {
    tol = parse_rational(s).get_d();
  } catch (const Error&) {
    fail(ErrorCode::ParseError, "profile must be strict, standard or a positive tolerance, got \"" + std::string(text) + "\"");
  }
  if (!(tol > 0.0)) fail(ErrorCode::ParseError, "tolerance must be positive");
  return ToleranceProfile{"custom", tol};
}

Setting parse_setting(std::string_view text) {
  const std::string s = lower_trimmed(text);
  if (s == "real") return Setting::Real;
  if (s == "circle") return Setting::Circle;
  fail(ErrorCode::ParseError, "setting must be \"real\" or \"circle\", got \"" + std::string(text) + "\"");
}

Arithmetic Problem::resolved_arithmetic() const {
  if (arithmetic) return *arithmetic;
  if (setting == Setting::Circle) return Arithmetic::Float64;
  return inputs_exact ? Arithmetic::Rational : Arithmetic::Float64;
}

CirclePoint circle_point_from_pi_fraction(const Rational& r) {
  // Reduce to [0, 2), split into a quarter turn and a remainder in [0, 1/2).
  mpz_class floor2;
  mpz_fdiv_q(floor2.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  const mpz_class even_floor = floor2 - (floor2 % 2 + 2) % 2;
  const Rational red = r - Rational(even_floor);
  mpz_class quarter;
  const Rational twice = red * 2;
  mpz_fdiv_q(quarter.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  const Rational rest = red - Rational(quarter) / 2;
  const double f = rest.get_d() * kPi;
  Complex z = rest == 0 ? Complex(1.0, 0.0) : Complex(std::cos(f), std::sin(f));
  for (long q = quarter.get_si(); q > 0; --q) z = Complex(-z.imag(), z.real());
  return CirclePoint{z, red.get_d() * kPi};
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) fail(ErrorCode::ParseError, "problem file must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != json(kSchemaVersion))
    fail(ErrorCode::ParseError, "unsupported schema " + doc.at("schema").dump() + ", expected \"v1\"");

  Problem p;
  const json& setting = require(doc, "setting");
  if (!setting.is_string()) fail(ErrorCode::ParseError, "\"setting\" must be a string");
  p.setting = parse_setting(setting.get<std::string>());

  const json& zn = require(doc, "zn");
  const json& zm = require(doc, "zm");
  if (!zn.is_array() || !zm.is_array()) fail(ErrorCode::ParseError, "\"zn\" and \"zm\" must be arrays");
  for (std::size_t i = 0; i < zn.size(); ++i) {
    const std::string what = "zn[" + std::to_string(i + 1) + "]";
    if (p.setting == Setting::Real)
      p.real_zn.push_back(json_rational(zn[i], p.inputs_exact, what));
    else
      p.circle_zn.push_back(parse_circle_point(zn[i], what));
  }
  for (std::size_t i = 0; i < zm.size(); ++i) {
    const std::string what = "zm[" + std::to_string(i + 1) + "]";
    if (p.setting == Setting::Real)
      p.real_zm.push_back(json_rational(zm[i], p.inputs_exact, what));
    else
      p.circle_zm.push_back(parse_circle_point(zm[i], what));
  }
  if (p.setting == Setting::Circle) p.inputs_exact = false;

  if (doc.contains("weights")) {
    const json& w = doc.at("weights");
    if (!w.is_object()) fail(ErrorCode::ParseError, "\"weights\" must be an object");
    if (w.contains("strategy")) p.strategy = parse_strategy(w.at("strategy").get<std::string>());
    if (w.contains("coefficients")) {
      const json& c = w.at("coefficients");
      if (!c.is_object()) fail(ErrorCode::ParseError, "\"weights.coefficients\" must be an object like {\"s1\": \"3\"}");
      for (const auto& [key, value] : c.items()) {
        bool exact = true;
        p.coefficients[parse_param_key(key)] = json_rational(value, exact, "coefficient " + key);
      }
    }
  }
  if (doc.contains("arithmetic")) p.arithmetic = parse_arithmetic(doc.at("arithmetic").get<std::string>());
  if (doc.contains("profile")) {
    const json& pr = doc.at("profile");
    p.profile = pr.is_number() ? parse_profile(format_double(pr.get<double>())) : parse_profile(pr.get<std::string>());
  }
  return p;
}

Problem parse_problem_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_problem(doc);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed problem file: ") + e.what());
  }
}

void set_param(Problem& p, std::string_view key, std::string_view value) {
  p.coefficients[parse_param_key(key)] = parse_rational(value);
}

void validate(const Problem& p) {
  if (p.setting == Setting::Circle && p.resolved_arithmetic() == Arithmetic::Rational)
    fail(ErrorCode::Unsupported, "the circle setting runs in float64 only; rational arithmetic is unsupported");
}

std::string emit_mathematica(const Problem& p) {
  if (p.setting == Setting::Circle) {
    return "(* unit-circle data; OPRLFamily covers the real line only *)\nZn = " +
           mathematica_circle(p.circle_zn) + ";\nZm = " + mathematica_circle(p.circle_zm) + ";\n";
  }
  std::string call = "OPRLFamily[" + mathematica_list(p.real_zn, p.inputs_exact) + ", " +
                     mathematica_list(p.real_zm, p.inputs_exact);
  std::string note;
  if (p.strategy == WeightStrategy::Coefficients) {
    call += ", {";
    bool first = true;
    for (const auto& [k, t] : p.coefficients) {
      if (!first) call += ", ";
      first = false;
      call += "s[" + std::to_string(k) + "] -> " + format_rational(t);
    }
    call += "}";
    note = "(* parameters not listed here are 0 in this tool *)\n";
  } else if (p.strategy == WeightStrategy::Cover) {
    note = "(* cover strategy has no counterpart there; the call below uses the automatic weights *)\n";
  }
  return note + call + "];\n";
}

}  // namespace twospec

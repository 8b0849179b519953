#include "fhdet/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fhdet/errors.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

const json& required(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

double as_real(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  return v.get<double>();
}

Complex as_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(where + ": expected a number or [re, im]");
}

Complex optional_complex(const json& obj, const std::string& key, const std::string& where) {
  return obj.contains(key) ? as_complex(obj.at(key), where + "." + key) : Complex{};
}

json complex_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

FourierSeries parse_series(const json& obj, bool even, const std::string& where) {
  FourierSeries v;
  if (!obj.contains("V")) return v;
  const json& list = obj.at("V");
  if (!list.is_array()) throw ConfigError(where + ".V: expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + ".V[" + std::to_string(i) + "]";
    require_keys(list[i], {"k", "value"}, at);
    const json& k = required(list[i], "k", at);
    if (!k.is_number_integer()) throw ConfigError(at + ".k: expected an integer");
    const int index = k.get<int>();
    const Complex value = as_complex(required(list[i], "value", at), at + ".value");
    if (even) {
      if (index < 0) throw ConfigError(at + ".k: weight series lists k >= 0 only");
      v.set(index, v[index] + value);
      if (index != 0) v.set(-index, v[-index] + value);
    } else {
      v.set(index, v[index] + value);
    }
  }
  return v;
}

json series_json(const FourierSeries& v, bool even) {
  json list = json::array();
  for (int k = even ? 0 : -v.order(); k <= v.order(); ++k) {
    if (v[k] == Complex{}) continue;
    list.push_back({{"k", k}, {"value", complex_json(v[k])}});
  }
  return list;
}

FHSymbol parse_symbol(const json& obj) {
  require_keys(obj, {"kind", "name", "V", "singularities"}, "symbol");
  FourierSeries v = parse_series(obj, false, "symbol");
  std::vector<Singularity> pts;
  if (obj.contains("singularities")) {
    const json& list = obj.at("singularities");
    if (!list.is_array()) throw ConfigError("symbol.singularities: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = "symbol.singularities[" + std::to_string(i) + "]";
      require_keys(list[i], {"theta", "theta_over_pi", "alpha", "beta"}, at);
      const bool has_theta = list[i].contains("theta");
      const bool has_ratio = list[i].contains("theta_over_pi");
      if (has_theta == has_ratio) {
        throw ConfigError(at + ": give exactly one of 'theta' and 'theta_over_pi'");
      }
      const double theta = has_theta ? as_real(list[i].at("theta"), at + ".theta")
                                     : constants::pi * as_real(list[i].at("theta_over_pi"),
                                                               at + ".theta_over_pi");
      pts.push_back({theta, optional_complex(list[i], "alpha", at),
                     optional_complex(list[i], "beta", at)});
    }
  }
  return FHSymbol(std::move(v), std::move(pts));
}

HankelWeight parse_weight(const json& obj) {
  require_keys(obj, {"kind", "name", "V", "alpha_plus", "alpha_minus", "interior"}, "weight");
  FourierSeries v = parse_series(obj, true, "weight");
  std::vector<InteriorPoint> interior;
  if (obj.contains("interior")) {
    const json& list = obj.at("interior");
    if (!list.is_array()) throw ConfigError("weight.interior: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = "weight.interior[" + std::to_string(i) + "]";
      require_keys(list[i], {"lambda", "alpha", "beta"}, at);
      interior.push_back({as_real(required(list[i], "lambda", at), at + ".lambda"),
                          optional_complex(list[i], "alpha", at),
                          optional_complex(list[i], "beta", at)});
    }
  }
  return HankelWeight(std::move(v), optional_complex(obj, "alpha_plus", "weight"),
                      optional_complex(obj, "alpha_minus", "weight"), std::move(interior));
}

}  // namespace

Problem parse_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("problem: expected a JSON object");
  const json& kind = required(doc, "kind", "problem");
  if (!kind.is_string()) throw ConfigError("problem.kind: expected a string");
  Problem p;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ConfigError("problem.name: expected a string");
    p.name = doc.at("name").get<std::string>();
  }
  try {
    if (kind == "symbol") {
      p.kind = Problem::Kind::symbol;
      p.symbol = parse_symbol(doc);
    } else if (kind == "weight") {
      p.kind = Problem::Kind::weight;
      p.weight = parse_weight(doc);
    } else {
      throw ConfigError("problem.kind: expected 'symbol' or 'weight'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open problem file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string dump_problem(const Problem& problem) {
  json doc;
  if (problem.kind == Problem::Kind::symbol) {
    doc["kind"] = "symbol";
    doc["V"] = series_json(problem.symbol.v(), false);
    json pts = json::array();
    for (const auto& s : problem.symbol.singularities()) {
      if (!s.is_singular()) continue;
      pts.push_back({{"theta", s.theta}, {"alpha", complex_json(s.alpha)},
                     {"beta", complex_json(s.beta)}});
    }
    doc["singularities"] = pts;
  } else {
    const HankelWeight& w = problem.weight;
    doc["kind"] = "weight";
    doc["V"] = series_json(w.v(), true);
    doc["alpha_plus"] = complex_json(w.alpha_plus());
    doc["alpha_minus"] = complex_json(w.alpha_minus());
    json pts = json::array();
    for (const auto& p : w.interior()) {
      pts.push_back({{"lambda", p.lambda}, {"alpha", complex_json(p.alpha)},
                     {"beta", complex_json(p.beta)}});
    }
    doc["interior"] = pts;
  }
  if (!problem.name.empty()) doc["name"] = problem.name;
  return doc.dump(2);
}

}  // namespace fhdet

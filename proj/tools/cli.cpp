#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fhdet/asymptotics.hpp"
#include "fhdet/config_io.hpp"
#include "fhdet/errors.hpp"
#include "fhdet/harness.hpp"
#include "fhdet/representation.hpp"

namespace fhdet::cli {

using nlohmann::json;

// ---------------------------------------------------------------- enum names

std::string_view to_string(Command c) {
  switch (c) {
    case Command::eval: return "eval";
    case Command::coeffs: return "coeffs";
    case Command::det: return "det";
    case Command::asym: return "asym";
    case Command::poly: return "poly";
    case Command::reps: return "reps";
    case Command::sweep: return "sweep";
    case Command::identities: return "identities";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::eval, Command::coeffs, Command::det, Command::asym, Command::poly,
                 Command::reps, Command::sweep, Command::identities}) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::det: return "det";
    case Quantity::chi_sq: return "chi_sq";
    case Quantity::phi0: return "phi0";
    case Quantity::hatphi0: return "hatphi0";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (auto q : {Quantity::det, Quantity::chi_sq, Quantity::phi0, Quantity::hatphi0}) {
    if (name == to_string(q)) return q;
  }
  throw ConfigError("unknown quantity '" + std::string(name) + "'");
}

namespace {

std::pair<int, int> parse_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("--grid expects a:b, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(text.substr(0, colon), &used_a);
    const int b = std::stoi(text.substr(colon + 1), &used_b);
    if (used_a != colon || used_b != text.size() - colon - 1) throw std::invalid_argument("trail");
    return {a, b};
  } catch (const std::logic_error&) {
    throw ConfigError("--grid expects integers a:b, got '" + text + "'");
  }
}

TphVariant variant_from(const std::string& name) {
  try {
    return parse_tph_variant(name);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

// ------------------------------------------------------------ config JSON

std::string dump_run_config(const RunConfig& c) {
  json doc;
  doc["command"] = std::string(to_string(c.command));
  doc["problem"] = c.problem_path;
  doc["n"] = c.n ? json(*c.n) : json(nullptr);
  doc["grid"] = c.grid ? json::array({c.grid->first, c.grid->second}) : json(nullptr);
  doc["variant"] = c.variant ? json(std::string(to_string(*c.variant))) : json(nullptr);
  doc["quantity"] = std::string(to_string(c.quantity));
  doc["tol"] = c.tol;
  doc["seed"] = c.seed;
  doc["out"] = c.out;
  doc["check"] = c.check;
  doc["theta"] = c.theta ? json(*c.theta) : json(nullptr);
  doc["x"] = c.x ? json(*c.x) : json(nullptr);
  return doc.dump(2);
}

RunConfig parse_run_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid run config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("run config: expected an object");
  static const std::set<std::string> keys{"command", "problem", "n",     "grid",  "variant", "quantity",
                                          "tol",     "seed",    "out",   "check", "theta",   "x"};
  for (const auto& [key, value] : doc.items()) {
    if (!keys.contains(key)) throw ConfigError("run config: unknown key '" + key + "'");
  }
  RunConfig c;
  try {
    if (!doc.contains("command")) throw ConfigError("run config: missing 'command'");
    c.command = parse_command(doc.at("command").get<std::string>());
    if (doc.contains("problem")) c.problem_path = doc.at("problem").get<std::string>();
    if (doc.contains("n") && !doc.at("n").is_null()) c.n = doc.at("n").get<int>();
    if (doc.contains("grid") && !doc.at("grid").is_null()) {
      const auto& g = doc.at("grid");
      if (!g.is_array() || g.size() != 2) throw ConfigError("run config: grid must be [a, b]");
      c.grid = std::pair{g[0].get<int>(), g[1].get<int>()};
    }
    if (doc.contains("variant") && !doc.at("variant").is_null()) {
      c.variant = variant_from(doc.at("variant").get<std::string>());
    }
    if (doc.contains("quantity")) c.quantity = parse_quantity(doc.at("quantity").get<std::string>());
    if (doc.contains("tol")) c.tol = doc.at("tol").get<double>();
    if (doc.contains("seed")) c.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("out")) c.out = doc.at("out").get<std::string>();
    if (doc.contains("check")) c.check = doc.at("check").get<bool>();
    if (doc.contains("theta") && !doc.at("theta").is_null()) c.theta = doc.at("theta").get<double>();
    if (doc.contains("x") && !doc.at("x").is_null()) c.x = doc.at("x").get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("run config: ") + e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  if (c.n && *c.n < 1) throw ConfigError("--n must be at least 1");
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw ConfigError("--tol must be positive");
  if (c.grid && (c.grid->first < 1 || c.grid->second < c.grid->first)) {
    throw ConfigError("--grid a:b needs 1 <= a <= b");
  }
  if (c.command == Command::identities) return;
  if (c.problem_path.empty()) {
    throw ConfigError("command '" + std::string(to_string(c.command)) + "' needs a problem file");
  }
  if (!std::filesystem::exists(c.problem_path)) {
    throw ConfigError("problem file not found: " + c.problem_path);
  }
  switch (c.command) {
    case Command::coeffs:
    case Command::det:
    case Command::asym:
    case Command::poly:
      if (!c.n) throw ConfigError("command '" + std::string(to_string(c.command)) + "' needs --n");
      break;
    case Command::sweep:
      if (!c.grid) throw ConfigError("command 'sweep' needs --grid a:b");
      break;
    default:
      break;
  }
  if (c.quantity != Quantity::det && (c.command != Command::sweep || c.variant)) {
    throw ConfigError("--quantity is only used by 'sweep' on a symbol without --variant");
  }
}

// ------------------------------------------------------------------- running

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json log_json(const LogComplex& v) {
  json j;
  j["zero"] = v.is_zero();
  j["log_mag"] = v.is_zero() ? json(nullptr) : json(v.log_mag());
  j["arg"] = v.arg();
  if (!v.is_zero() && std::abs(v.log_mag()) < 700.0) j["value"] = complex_json(v.value());
  return j;
}

constexpr double kCheckBudget = 1e-6;
constexpr int kCheckMaxN = 16;

/// Identity residual for the problem type at order n.
json run_check(const Problem& p, const RunConfig& c, int n) {
  const int m = std::min(n, kCheckMaxN);
  json j;
  double worst = 0.0;
  if (p.kind == Problem::Kind::weight) {
    const double r = check_hankel_toeplitz_relation(p.weight, std::min(m, 8), c.tol);
    j["hankel_toeplitz"] = r;
    worst = r;
  } else if (c.variant) {
    const double r = check_tph_reduction(p.symbol, m, *c.variant, c.tol);
    j["tph_reduction"] = r;
    worst = r;
  } else {
    for (int ell : {1, -1}) {
      const double r = check_shift_identity(p.symbol, m, ell, c.tol);
      j["shift_" + std::to_string(ell)] = r;
      worst = std::max(worst, r);
    }
  }
  j["n"] = m;
  j["passed"] = worst <= kCheckBudget;
  return j;
}

const FHSymbol& require_symbol(const Problem& p, std::string_view command) {
  if (p.kind != Problem::Kind::symbol) {
    throw ConfigError("command '" + std::string(command) + "' needs a symbol problem");
  }
  return p.symbol;
}

json representation_json(const Representation& rep) {
  json j;
  j["shifts"] = rep.shifts();
  json betas = json::array();
  for (Complex b : rep.effective_betas()) betas.push_back(complex_json(b));
  j["betas"] = betas;
  j["norm"] = shifted_beta_norm(rep);
  j["seminorm"] = beta_seminorm(rep);
  j["log_prefactor"] = complex_json(apply_representation(rep).log_prefactor);
  if (auto d = is_degenerate(rep)) {
    j["degenerate"] = true;
    j["degeneracy"] = {{"index", d->index}, {"value", complex_json(d->value)},
                       {"sign", d->plus ? "+" : "-"}};
  } else {
    j["degenerate"] = false;
  }
  return j;
}

std::vector<ComparisonRow> sweep_rows(const Problem& p, const RunConfig& c,
                                      std::span<const int> ns) {
  const SweepOptions opts{c.tol, 0};
  if (p.kind == Problem::Kind::weight) return sweep_hankel(p.weight, ns, opts);
  if (c.variant) return sweep_tph(p.symbol, *c.variant, ns, opts);
  switch (c.quantity) {
    case Quantity::det: return sweep_toeplitz(p.symbol, ns, opts);
    case Quantity::chi_sq: return sweep_poly(p.symbol, ns, opts).chi_sq;
    case Quantity::phi0: return sweep_poly(p.symbol, ns, opts).phi0;
    case Quantity::hatphi0: return sweep_poly(p.symbol, ns, opts).hatphi0;
  }
  return {};
}

void write_identity_csv(std::ostream& os, const IdentityReport& report) {
  os << "identity,case,n,parameter,randomized,residual,error\n" << std::setprecision(17);
  for (const auto& r : report.results) {
    std::string error = r.error;
    for (char& ch : error) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    os << r.identity << ',' << r.case_name << ',' << r.n << ',' << r.parameter << ','
       << (r.randomized ? 1 : 0) << ',' << r.residual << ',' << error << '\n';
  }
}

void emit(const json& doc, const RunConfig& c, std::ostream& out) {
  if (c.out.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file " + c.out);
  file << doc.dump(2) << '\n';
}

void fail_on_check(const json& doc) {
  if (doc.contains("check") && !doc["check"]["passed"].get<bool>()) {
    throw InvariantError("identity check failed: " + doc["check"].dump());
  }
}

}  // namespace

void run(const RunConfig& c, std::ostream& out) {
  validate(c);
  json doc;
  doc["command"] = std::string(to_string(c.command));

  if (c.command == Command::identities) {
    IdentityConfig ic;
    ic.seed = c.seed;
    ic.tol = c.tol;
    const IdentityReport report = identity_suite(ic);
    doc["cases"] = report.results.size();
    doc["failures"] = report.failures;
    doc["max_fixed"] = report.max_fixed;
    doc["max_random"] = report.max_random;
    json hist = json::object();
    for (std::size_t i = 0; i < report.histogram.size(); ++i) {
      hist[std::to_string(static_cast<int>(i) - 17)] = report.histogram[i];
    }
    doc["random_log10_histogram"] = hist;
    if (!c.out.empty()) {
      std::ofstream file(c.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file " + c.out);
      write_identity_csv(file, report);
      doc["csv"] = c.out;
    }
    out << doc.dump(2) << '\n';
    return;
  }

  const Problem p = load_problem(c.problem_path);
  doc["problem"] = p.kind == Problem::Kind::symbol ? "symbol" : "weight";
  if (!p.name.empty()) doc["name"] = p.name;
  const int n = c.n.value_or(4);

  switch (c.command) {
    case Command::eval: {
      Complex value;
      if (p.kind == Problem::Kind::symbol) {
        if (!c.theta) throw ConfigError("eval on a symbol needs --theta");
        value = eval_symbol(p.symbol, *c.theta);
        doc["theta"] = *c.theta;
      } else {
        if (!c.x) throw ConfigError("eval on a weight needs --x");
        value = p.weight.value(*c.x);
        doc["x"] = *c.x;
      }
      doc["value"] = complex_json(value);
      break;
    }
    case Command::coeffs: {
      const FHSymbol f =
          p.kind == Problem::Kind::symbol ? p.symbol : weight_to_even_symbol(p.weight);
      const auto coeffs = fourier_coefficients(f, -n, n, {c.tol});
      json list = json::array();
      for (Complex v : coeffs.values()) list.push_back(complex_json(v));
      doc["j_min"] = -n;
      doc["coefficients"] = list;
      break;
    }
    case Command::det: {
      DeterminantValue d;
      if (p.kind == Problem::Kind::weight) {
        doc["kind"] = "hankel";
        d = hankel_det(p.weight, n, {c.tol});
      } else if (c.variant) {
        doc["kind"] = "toeplitz_plus_hankel";
        doc["variant"] = std::string(to_string(*c.variant));
        d = tph_det(fourier_coefficients(p.symbol, -(2 * n + 2), 2 * n + 2, {c.tol}), n, *c.variant);
      } else {
        doc["kind"] = "toeplitz";
        d = toeplitz_det(fourier_coefficients(p.symbol, -(n - 1), n - 1, {c.tol}), n);
      }
      doc["n"] = n;
      doc["determinant"] = log_json(d.value);
      doc["quality"] = std::string(to_string(d.quality));
      break;
    }
    case Command::asym: {
      doc["n"] = n;
      if (p.kind == Problem::Kind::weight) {
        doc["kind"] = "hankel";
        doc["prediction"] = log_json(hankel_asymptotic(p.weight, n));
      } else if (c.variant) {
        doc["kind"] = "toeplitz_plus_hankel";
        doc["variant"] = std::string(to_string(*c.variant));
        doc["prediction"] = log_json(tph_asymptotic(p.symbol, n, *c.variant));
      } else {
        doc["kind"] = "toeplitz";
        const AsymptoticResult r = basor_tracy_sum(p.symbol, n);
        doc["prediction"] = log_json(r.value);
        doc["delta"] = r.delta;
        json terms = json::array();
        for (const auto& t : r.terms) {
          terms.push_back({{"shifts", t.rep.shifts()}, {"term", log_json(t.log_value)}});
        }
        doc["terms"] = terms;
      }
      break;
    }
    case Command::poly: {
      const FHSymbol& f = require_symbol(p, "poly");
      const auto coeffs = fourier_coefficients(f, -n, n, {c.tol});
      const OrthoData prev = orthogonal_polynomials(coeffs, n - 1);
      const OrthoData cur = orthogonal_polynomials(coeffs, n);
      doc["n"] = n;
      doc["exact"] = {{"chi_sq", complex_json(prev.chi_sq)},
                      {"phi0_over_chi", complex_json(cur.monic.front())},
                      {"hatphi0_over_chi", complex_json(cur.hat_monic.front())},
                      {"quality", std::string(to_string(cur.quality))}};
      const PolynomialAsymptotics a = polynomial_asymptotics(f, n);
      doc["predicted"] = {{"chi_sq", complex_json(a.chi_sq)},
                          {"phi0_over_chi", complex_json(a.phi0_over_chi)},
                          {"hatphi0_over_chi", complex_json(a.hatphi0_over_chi)},
                          {"delta", a.delta}};
      break;
    }
    case Command::reps: {
      const FHSymbol& f = require_symbol(p, "reps");
      json list = json::array();
      for (const auto& rep : find_minimal_representations(f)) list.push_back(representation_json(rep));
      doc["count"] = list.size();
      doc["representations"] = list;
      break;
    }
    case Command::sweep: {
      const auto ns = geometric_grid(c.grid->first, c.grid->second);
      const auto rows = sweep_rows(p, c, ns);
      if (c.check) doc["check"] = run_check(p, c, ns.back());
      if (c.out.empty()) {
        write_csv(out, rows);
        fail_on_check(doc);
        return;
      }
      write_csv(std::filesystem::path(c.out), rows);
      doc["csv"] = c.out;
      doc["rows"] = rows.size();
      try {
        const RateFit fit = fit_error_rate(rows);
        doc["fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept},
                      {"r_squared", fit.r_squared}, {"points", fit.points}};
      } catch (const InsufficientDataError& e) {
        doc["fit"] = nullptr;
        doc["fit_error"] = e.what();
      }
      out << doc.dump(2) << '\n';
      fail_on_check(doc);
      return;
    }
    case Command::identities:
      break;
  }
  if (c.check) doc["check"] = run_check(p, c, n);
  emit(doc, c, out);
  fail_on_check(doc);
}

// --------------------------------------------------------------- entry point

namespace {

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const DegenerateRepresentationError*>(&e)) return "DegenerateRepresentationError";
  if (dynamic_cast<const HypothesisError*>(&e)) return "HypothesisError";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
  if (dynamic_cast<const SingularSystemError*>(&e)) return "SingularSystemError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const InvariantError*>(&e)) return "InvariantError";
  if (dynamic_cast<const InsufficientDataError*>(&e)) return "InsufficientDataError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

int report(std::ostream& err, int status, const std::string& category, const std::string& type,
           const std::string& message) {
  json doc;
  doc["error"] = {{"category", category}, {"type", type}, {"message", message},
                  {"exit_status", status}};
  err << doc.dump() << '\n';
  return status;
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic Toeplitz, Hankel and Toeplitz+Hankel determinants"};
  app.name("fhdet");
  std::string command, problem, grid, variant, quantity = "det", config_path;
  std::optional<int> n;
  std::optional<double> theta, x;
  double tol = 1e-13;
  std::uint64_t seed = 1;
  std::string out_path;
  bool check = false, dump = false;

  app.add_option("command", command,
                 "eval | coeffs | det | asym | poly | reps | sweep | identities");
  app.add_option("problem", problem, "symbol or weight JSON file");
  app.add_option("--n", n, "matrix size / polynomial degree");
  app.add_option("--grid", grid, "geometric n grid a:b (a, 2a, 4a, ... <= b)");
  app.add_option("--variant", variant, "plus_k | minus_k2 | plus_k1 | minus_k1");
  app.add_option("--quantity", quantity, "sweep quantity: det | chi_sq | phi0 | hatphi0");
  app.add_option("--tol", tol, "quadrature tolerance");
  app.add_option("--seed", seed, "seed of the randomized identity corpus");
  app.add_option("--out", out_path, "output file");
  app.add_flag("--check", check, "also run the matching identity residual");
  app.add_flag("--dump-config", dump, "print the run configuration as JSON and exit");
  app.add_option("--theta", theta, "angle for eval on a symbol");
  app.add_option("--x", x, "point in [-1, 1] for eval on a weight");
  app.add_option("--config", config_path, "run configuration JSON (replaces other arguments)");

  std::vector<char*> argv;
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kExitConfig, "config", "ParseError", e.what());
  }

  try {
    RunConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) throw ConfigError("cannot open run config " + config_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      config = parse_run_config(buf.str());
    } else {
      if (command.empty()) throw ConfigError("missing command");
      config.command = parse_command(command);
      config.problem_path = problem;
      config.n = n;
      if (!grid.empty()) config.grid = parse_grid(grid);
      if (!variant.empty()) config.variant = variant_from(variant);
      config.quantity = parse_quantity(quantity);
      config.tol = tol;
      config.seed = seed;
      config.out = out_path;
      config.check = check;
      config.theta = theta;
      config.x = x;
    }
    if (dump) {
      out << dump_run_config(config) << '\n';
      return kExitOk;
    }
    run(config, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    return report(err, kExitConfig, "config", "ConfigError", e.what());
  } catch (const Error& e) {
    return report(err, kExitNumerical, "numerical", error_type(e), e.what());
  } catch (const std::exception& e) {
    return report(err, kExitNumerical, "numerical", error_type(e), e.what());
  }
}

}  // namespace fhdet::cli

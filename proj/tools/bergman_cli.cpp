// Command-line frontend: verification suite, pointwise evaluation, growth
// curves, the extremal search, and the projection operator. All file outputs
// are deterministic for identical inputs (no timestamps or runtimes inside).

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/extremal.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/norms.hpp"
#include "bergman/operators.hpp"
#include "bergman/verify.hpp"

using json = nlohmann::ordered_json;
using bergman::AnalyticFn;
using bergman::Complex;

namespace {

// Input/config problems exit with code 2; failed verifications with 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex json_to_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(path + ": expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      throw ConfigError(path + ": unknown key \"" + item.key() + "\"");
  }
}

AnalyticFn parse_fn(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  if (!j.contains("type") || !j["type"].is_string())
    throw ConfigError(path + ": missing string field \"type\"");
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "polynomial") {
      reject_unknown_keys(j, {"type", "coeffs"}, path);
      if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw ConfigError(path + ": polynomial needs an array \"coeffs\"");
      std::vector<Complex> coeffs;
      std::size_t idx = 0;
      for (const auto& c : j["coeffs"]) {
        coeffs.push_back(json_to_complex(
            c, path + ".coeffs[" + std::to_string(idx) + "]"));
        ++idx;
      }
      return AnalyticFn::polynomial(std::move(coeffs));
    }
    if (type == "mobius") {
      reject_unknown_keys(j, {"type", "lambda"}, path);
      if (!j.contains("lambda"))
        throw ConfigError(path + ": mobius needs \"lambda\"");
      return AnalyticFn::mobius(json_to_complex(j["lambda"], path + ".lambda"));
    }
    if (type == "log_extremal") {
      reject_unknown_keys(j, {"type"}, path);
      return AnalyticFn::log_extremal();
    }
    if (type == "gzn") {
      reject_unknown_keys(j, {"type", "n", "base"}, path);
      if (!j.contains("n") || !j["n"].is_number_integer())
        throw ConfigError(path + ": gzn needs an integer \"n\"");
      if (!j.contains("base"))
        throw ConfigError(path + ": gzn needs \"base\"");
      return AnalyticFn::gzn(j["n"].get<int>(),
                             json_to_complex(j["base"], path + ".base"));
    }
    if (type == "combo") {
      reject_unknown_keys(j, {"type", "terms"}, path);
      if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
        throw ConfigError(path + ": combo needs a non-empty array \"terms\"");
      std::vector<std::pair<Complex, AnalyticFn>> terms;
      std::size_t idx = 0;
      for (const auto& t : j["terms"]) {
        const std::string tpath = path + ".terms[" + std::to_string(idx) + "]";
        if (!t.is_object()) throw ConfigError(tpath + ": expected an object");
        reject_unknown_keys(t, {"weight", "fn"}, tpath);
        if (!t.contains("weight") || !t.contains("fn"))
          throw ConfigError(tpath + ": needs \"weight\" and \"fn\"");
        terms.emplace_back(json_to_complex(t["weight"], tpath + ".weight"),
                           parse_fn(t["fn"], tpath + ".fn"));
        ++idx;
      }
      return AnalyticFn::combo(std::move(terms));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ": unknown function type \"" + type + "\"");
}

AnalyticFn load_fn(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open function spec: " + file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("invalid JSON in " + file + ": " + e.what());
  }
  return parse_fn(j, "fn");
}

Complex parse_point(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw ConfigError("invalid point \"" + text + "\"");
  if (in >> sep) {
    if (sep != ',' || !(in >> im))
      throw ConfigError("invalid point \"" + text + "\"; use re,im");
  }
  std::string rest;
  if (in >> rest) throw ConfigError("invalid point \"" + text + "\"");
  return {re, im};
}

void write_text(const std::string& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file: " + file);
  out << text;
}

void emit(const std::string& out_file, const std::string& text) {
  if (out_file.empty())
    std::cout << text;
  else
    write_text(out_file, text);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_to_json(const bergman::CheckReport& rep) {
  json metrics = json::array();
  for (const auto& m : rep.metrics) {
    metrics.push_back({{"name", m.name},
                       {"computed", m.computed},
                       {"expected", m.expected},
                       {"tolerance", m.tolerance},
                       {"pass", m.pass}});
  }
  return {{"name", rep.name},
          {"anchor", rep.anchor},
          {"pass", rep.pass},
          {"informational", rep.informational},
          {"metrics", metrics}};
}

// ---------------------------------------------------------------- verify --

struct VerifyOptions {
  bergman::VerifyConfig cfg;
  std::vector<std::string> tol_overrides;
  std::string out_file;
  std::string format = "structured";
  std::string config_file;
};

void apply_config_file(VerifyOptions& opt) {
  if (opt.config_file.empty()) return;
  std::ifstream in(opt.config_file);
  if (!in) throw ConfigError("cannot open config: " + opt.config_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("invalid JSON in " + opt.config_file + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected an object");
  reject_unknown_keys(j, {"alpha", "seed", "only", "tol", "strict_family_bloch"},
                      "config");
  if (j.contains("alpha")) opt.cfg.alpha = j["alpha"].get<double>();
  if (j.contains("seed")) opt.cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("only")) {
    if (!j["only"].is_array()) throw ConfigError("config.only: expected an array");
    for (const auto& name : j["only"])
      opt.cfg.only.push_back(name.get<std::string>());
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_object()) throw ConfigError("config.tol: expected an object");
    for (const auto& item : j["tol"].items())
      opt.cfg.tol[item.key()] = item.value().get<double>();
  }
  if (j.contains("strict_family_bloch"))
    opt.cfg.strict_family_bloch = j["strict_family_bloch"].get<bool>();
}

void apply_tol_overrides(VerifyOptions& opt) {
  for (const auto& spec : opt.tol_overrides) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--tol expects name=value, got \"" + spec + "\"");
    const std::string name = spec.substr(0, eq);
    try {
      opt.cfg.tol[name] = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--tol value is not a number in \"" + spec + "\"");
    }
  }
}

int run_verify(VerifyOptions& opt) {
  apply_config_file(opt);
  apply_tol_overrides(opt);

  std::vector<bergman::CheckReport> reports;
  try {
    reports = bergman::run_all(opt.cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (const auto& rep : reports) {
    std::printf("[%s] %-18s %s(%zu metrics, %.2fs)\n", rep.pass ? "PASS" : "FAIL",
                rep.name.c_str(), rep.informational ? "informational " : "",
                rep.metrics.size(), rep.runtime_seconds);
    for (const auto& m : rep.metrics) {
      if (!m.pass)
        std::printf("       metric %s: computed=%.12g expected=%.12g tol=%.3g\n",
                    m.name.c_str(), m.computed, m.expected, m.tolerance);
    }
  }
  const bool ok = bergman::aggregate_pass(reports);
  std::printf("verdict: %s\n", ok ? "PASS" : "FAIL");

  if (opt.format != "structured" && opt.format != "csv")
    throw ConfigError("--format must be structured or csv");
  std::string payload;
  if (opt.format == "structured") {
    json out = {{"alpha", opt.cfg.alpha},
                {"seed", opt.cfg.seed},
                {"aggregate_pass", ok},
                {"checks", json::array()}};
    for (const auto& rep : reports) out["checks"].push_back(report_to_json(rep));
    payload = out.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "check,metric,computed,expected,tolerance,pass\n";
    for (const auto& rep : reports)
      for (const auto& m : rep.metrics)
        csv << rep.name << ',' << m.name << ',' << format_double(m.computed)
            << ',' << format_double(m.expected) << ','
            << format_double(m.tolerance) << ',' << (m.pass ? 1 : 0) << '\n';
    payload = csv.str();
  }
  if (!opt.out_file.empty()) write_text(opt.out_file, payload);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ eval --

int run_eval(const std::string& fn_file, const std::string& z_text, double beta,
             std::vector<std::string> queries, const std::string& out_file) {
  const AnalyticFn f = load_fn(fn_file);
  const Complex z = parse_point(z_text);
  if (queries.empty())
    queries = {"value",          "deriv",          "deriv2",
               "pderiv",         "adjoint_series", "bloch_seminorm",
               "bloch_norm",     "extremal_functional", "extremal_ratio"};
  json out = {{"z", complex_to_json(z)}, {"beta", beta}};
  for (const auto& q : queries) {
    try {
      if (q == "value")
        out["value"] = complex_to_json(f.eval(z));
      else if (q == "deriv")
        out["deriv"] = complex_to_json(f.deriv(z));
      else if (q == "deriv2")
        out["deriv2"] = complex_to_json(f.deriv2(z));
      else if (q == "pderiv")
        out["pderiv"] = complex_to_json(f.pderiv(z));
      else if (q == "adjoint_series")
        out["adjoint_series"] = complex_to_json(bergman::adjoint_series(f, beta, z));
      else if (q == "bloch_seminorm")
        out["bloch_seminorm"] = bergman::bloch_seminorm(f).value;
      else if (q == "bloch_norm")
        out["bloch_norm"] = bergman::bloch_norm(f);
      else if (q == "extremal_functional")
        out["extremal_functional"] = bergman::extremal_functional(f).value;
      else if (q == "extremal_ratio")
        out["extremal_ratio"] = bergman::extremal_ratio(f);
      else
        throw ConfigError("unknown query \"" + q + "\"");
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("query ") + q + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("query ") + q + ": " + e.what());
    }
  }
  emit(out_file, out.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- growth --

int run_growth(double alpha, long long n_min, long long n_max,
               const std::string& out_file) {
  std::vector<bergman::GrowthPoint> pts;
  double slope = 0.0;
  try {
    pts = bergman::growth_values(alpha, n_min, n_max);
    slope = bergman::growth_slope(pts);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ostringstream csv;
  csv << "n,value,slope\n";
  for (const auto& p : pts)
    csv << p.n << ',' << format_double(p.value) << ',' << format_double(slope)
        << '\n';
  emit(out_file, csv.str());

  const double target = 2.0 + alpha;
  const bool ok = std::abs(slope - target) <= 0.15;
  std::fprintf(stderr, "growth: slope=%.6f target=%.6f window=0.15 -> %s\n",
               slope, target, ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

// -------------------------------------------------------------- extremal --

int run_extremal(const bergman::SearchConfig& cfg, const std::string& out_file,
                 const std::string& history_file) {
  bergman::SearchResult res;
  try {
    res = bergman::search(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  json out = {
      {"family",
       cfg.family == bergman::SearchFamily::polynomial ? "polynomial" : "mobius"},
      {"degree", cfg.degree},
      {"atoms", cfg.atoms},
      {"restarts", cfg.restarts},
      {"iterations", cfg.iterations},
      {"seed", cfg.seed},
      {"best_value", res.best_value},
      {"best_start", res.best_start},
      {"starts_run", res.starts_run},
      {"witness_point", complex_to_json(res.witness_point)},
      {"best_params", json::array()}};
  for (const Complex c : res.best_params)
    out["best_params"].push_back(complex_to_json(c));
  emit(out_file, out.dump(2) + "\n");

  if (!history_file.empty()) {
    std::ostringstream csv;
    csv << "start,iteration,value\n";
    for (const auto& row : res.history)
      csv << row.start << ',' << row.iteration << ','
          << format_double(row.value) << '\n';
    write_text(history_file, csv.str());
  }
  std::fprintf(stderr, "extremal: best_value=%.9f (start %d of %d)\n",
               res.best_value, res.best_start, res.starts_run);
  return 0;
}

// --------------------------------------------------------------- project --

int run_project(int a, int b, double radius, const std::string& z_text,
                const std::string& out_file) {
  const Complex z = parse_point(z_text);
  Complex closed, quad;
  try {
    closed = bergman::project_monomial_closed(a, b, radius, z);
    quad = bergman::project({a, b, radius}, z);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  const json out = {{"a", a},
                    {"b", b},
                    {"radius", radius},
                    {"z", complex_to_json(z)},
                    {"closed", complex_to_json(closed)},
                    {"quadrature", complex_to_json(quad)},
                    {"abs_difference", std::abs(closed - quad)}};
  emit(out_file, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for the adjoint of the Bergman projection"};
  app.require_subcommand(1);

  // verify
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--alpha", vopt.cfg.alpha, "Weight exponent in [-2, -1]");
  verify->add_option("--seed", vopt.cfg.seed, "Seed for randomized suites");
  verify->add_option("--only", vopt.cfg.only, "Run only the named checks");
  verify->add_option("--tol", vopt.tol_overrides,
                     "Override a check's primary tolerance (name=value)");
  verify->add_flag("--strict-family-bloch", vopt.cfg.strict_family_bloch,
                   "Gate the family_bloch check instead of reporting it");
  verify->add_option("--out", vopt.out_file, "Write the report to this file");
  verify->add_option("--format", vopt.format, "Report format: structured or csv");
  verify->add_option("--config", vopt.config_file,
                     "JSON config file (flags override it)");

  // eval
  std::string eval_fn, eval_z = "0,0", eval_out;
  double eval_beta = 2.0;
  std::vector<std::string> eval_queries;
  auto* eval = app.add_subcommand("eval", "Evaluate a function and its norms");
  eval->add_option("--fn", eval_fn, "JSON function spec file")->required();
  eval->add_option("--z", eval_z, "Evaluation point re,im");
  eval->add_option("--beta", eval_beta, "Adjoint weight exponent in [1, 2]");
  eval->add_option("--query", eval_queries,
                   "Quantities to compute (default: all)");
  eval->add_option("--out", eval_out, "Write the JSON result to this file");

  // growth
  double g_alpha = -1.0;
  long long g_min = 64, g_max = 8192;
  std::string g_out;
  auto* growth = app.add_subcommand("growth", "Growth curve of the family");
  growth->add_option("--alpha", g_alpha, "Weight exponent in [-2, -1]");
  growth->add_option("--n-min", g_min, "Smallest n (doubling upward)");
  growth->add_option("--n-max", g_max, "Largest n (at most 100000)");
  growth->add_option("--out", g_out, "Write the CSV to this file");

  // extremal
  bergman::SearchConfig scfg;
  std::string s_family = "polynomial", s_out, s_history;
  bool s_full = false;
  auto* extremal = app.add_subcommand("extremal", "Search for large ratios");
  extremal->add_option("--family", s_family, "polynomial or mobius");
  extremal->add_option("--degree", scfg.degree, "Polynomial degree (1..30)");
  extremal->add_option("--atoms", scfg.atoms, "Mobius atom count (1..8)");
  extremal->add_option("--restarts", scfg.restarts, "Random restarts");
  extremal->add_option("--iterations", scfg.iterations, "Iteration cap per start");
  extremal->add_option("--seed", scfg.seed, "Random seed");
  extremal->add_option("--step-tol", scfg.step_tol, "Simplex collapse tolerance");
  extremal->add_flag("--full-objective", s_full,
                     "Use the full scan profile inside the loop (slow)");
  extremal->add_option("--out", s_out, "Write the JSON result to this file");
  extremal->add_option("--history", s_history, "Write iteration history CSV");

  // project
  int p_a = 0, p_b = 0;
  double p_radius = 0.5;
  std::string p_z = "0,0", p_out;
  auto* project = app.add_subcommand("project", "Project a truncated monomial");
  project->add_option("--a", p_a, "Conjugate power")->required();
  project->add_option("--b", p_b, "Holomorphic power")->required();
  project->add_option("--radius", p_radius, "Support radius in (0, 1)");
  project->add_option("--z", p_z, "Evaluation point re,im");
  project->add_option("--out", p_out, "Write the JSON result to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(vopt);
    if (*eval) return run_eval(eval_fn, eval_z, eval_beta, eval_queries, eval_out);
    if (*growth) return run_growth(g_alpha, g_min, g_max, g_out);
    if (*extremal) {
      if (s_family == "polynomial")
        scfg.family = bergman::SearchFamily::polynomial;
      else if (s_family == "mobius")
        scfg.family = bergman::SearchFamily::mobius_combo;
      else
        throw ConfigError("--family must be polynomial or mobius");
      scfg.light_objective = !s_full;
      return run_extremal(scfg, s_out, s_history);
    }
    if (*project) return run_project(p_a, p_b, p_radius, p_z, p_out);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "invariant violated: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

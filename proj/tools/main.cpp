/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line frontend. Everything numerical happens behind the C API of
// libfockwig; this file only moves bytes between files, flags and stdout.
//
// Exit codes: 0 success, 1 a checked bound was violated, 2 usage/data error.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockwig/fockwig.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitUsage);
}

void check(fw_status st) {
  if (st != FW_OK) die(fw_last_error());
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { fw_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0, hi = 0, step = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3 || step <= 0 ||
      hi < lo)
    die("grid spec must be lo:hi:step with step > 0 (got '" + spec + "')");
  std::vector<double> out;
  const std::size_t n = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  for (std::size_t i = 0; i < n; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

void write_json_report(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) die("cannot write report to '" + path + "'");
  out << j.dump(2) << "\n";
}

using WeightPtr = std::unique_ptr<fw_weight, decltype(&fw_weight_free)>;

WeightPtr load_weight(const std::string& spec) {
  fw_weight* w = nullptr;
  check(fw_weight_from_json(spec.c_str(), &w));
  return WeightPtr(w, &fw_weight_free);
}

// --tol-<name> <value> flags are collected before CLI11 sees the argv.
std::map<std::string, double> extract_tolerance_flags(std::vector<std::string>& args) {
  std::map<std::string, double> tols;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--tol-", 0) == 0) {
      std::string name = a.substr(6);
      std::string value;
      const auto eq = name.find('=');
      if (eq != std::string::npos) {
        value = name.substr(eq + 1);
        name = name.substr(0, eq);
      } else if (i + 1 < args.size()) {
        value = args[++i];
      } else {
        die("flag " + a + " needs a value");
      }
      try {
        tols[name] = std::stod(value);
      } catch (const std::exception&) {
        die("cannot parse tolerance value '" + value + "' for " + a);
      }
      continue;
    }
    kept.push_back(a);
  }
  args = kept;
  return tols;
}

int cmd_analyze(const std::string& samples_path, int n_max, int order,
                const std::string& weight_spec, const std::string& out_path,
                const std::string& json_path) {
  double *xs = nullptr, *re = nullptr, *im = nullptr;
  int count = 0;
  check(fw_samples_read_csv(samples_path.c_str(), &xs, &re, &im, &count));
  if (order <= 0) order = count;
  if (order != count)
    die("sample count (" + std::to_string(count) + ") must equal the rule order (" +
        std::to_string(order) + ")");

  fw_rule* rule = nullptr;
  check(fw_rule_create(order, &rule));
  std::vector<double> nodes(order);
  check(fw_rule_nodes(rule, nodes.data()));
  for (int i = 0; i < count; ++i)
    if (std::abs(xs[i] - nodes[i]) > 1e-9 * std::max(1.0, std::abs(nodes[i])))
      die("sample abscissa " + std::to_string(xs[i]) + " at row " + std::to_string(i + 1) +
          " is not the Gauss-Hermite node " + std::to_string(nodes[i]) +
          "; produce inputs with 'synthesize --at-nodes'");

  fw_coeffs* coeffs = nullptr;
  check(fw_analyze_at_nodes(rule, re, im, count, n_max, &coeffs));
  check(fw_coeffs_write_csv(coeffs, out_path.c_str()));

  json rep;
  rep["command"] = "analyze";
  rep["n_max"] = n_max;
  rep["order"] = order;
  rep["output"] = out_path;
  std::cout << "analyzed " << count << " samples into coefficients 0.." << n_max << " -> "
            << out_path << "\n";
  if (!weight_spec.empty()) {
    WeightPtr w = load_weight(weight_spec);
    double norm = 0.0;
    int div = 0;
    check(fw_sequence_norm(coeffs, w.get(), &norm, &div));
    rep["sequence_norm"] = norm;
    rep["sequence_norm_diverging"] = div != 0;
    std::cout << "weighted sequence norm: " << norm << (div ? " (diverging on grid)" : "")
              << "\n";
  }
  write_json_report(json_path, rep);

  fw_coeffs_free(coeffs);
  fw_rule_free(rule);
  fw_doubles_free(xs);
  fw_doubles_free(re);
  fw_doubles_free(im);
  return kExitOk;
}

int cmd_synthesize(const std::string& coeffs_path, const std::string& grid_spec, int at_nodes,
                   const std::string& out_path) {
  fw_coeffs* coeffs = nullptr;
  check(fw_coeffs_read_csv(coeffs_path.c_str(), &coeffs));

  std::vector<double> xs;
  if (at_nodes > 0) {
    fw_rule* rule = nullptr;
    check(fw_rule_create(at_nodes, &rule));
    xs.resize(at_nodes);
    check(fw_rule_nodes(rule, xs.data()));
    fw_rule_free(rule);
  } else if (!grid_spec.empty()) {
    xs = parse_grid(grid_spec);
  } else {
    die("synthesize needs --grid lo:hi:step or --at-nodes ORDER");
  }

  std::vector<double> re(xs.size()), im(xs.size());
  check(fw_synthesize(coeffs, xs.data(), static_cast<int>(xs.size()), re.data(), im.data()));
  check(fw_samples_write_csv(out_path.c_str(), xs.data(), re.data(), im.data(),
                             static_cast<int>(xs.size())));
  std::cout << "synthesized " << xs.size() << " samples -> " << out_path << "\n";
  fw_coeffs_free(coeffs);
  return kExitOk;
}

int cmd_wigner(const std::string& density_path, const std::string& grid_spec, bool tilde,
               const std::string& weight_spec, int threads, const std::string& out_path,
               const std::string& json_path) {
  fw_density* rho = nullptr;
  check(fw_density_read_csv(density_path.c_str(), &rho));
  const std::vector<double> axis = parse_grid(grid_spec);

  fw_grid* grid = nullptr;
  check(fw_wigner(rho, axis.data(), static_cast<int>(axis.size()), axis.data(),
                  static_cast<int>(axis.size()), threads, &grid));
  if (tilde) {
    fw_grid* t = nullptr;
    check(fw_tilde_rescale(grid, &t));
    fw_grid_free(grid);
    grid = t;
  }
  check(fw_grid_write_csv(grid, out_path.c_str()));

  json rep;
  rep["command"] = "wigner";
  rep["density"] = density_path;
  rep["n_max"] = fw_density_n_max(rho);
  rep["convention"] = fw_grid_convention(grid) ? "tilde" : "plain";
  rep["output"] = out_path;
  std::cout << "wigner grid " << fw_grid_nq(grid) << "x" << fw_grid_np(grid) << " ("
            << rep["convention"].get<std::string>() << ") -> " << out_path << "\n";
  if (!weight_spec.empty()) {
    WeightPtr w = load_weight(weight_spec);
    double norm = 0.0;
    int div = 0;
    check(fw_phase_space_norm(grid, w.get(), &norm, &div));
    rep["phase_space_norm"] = norm;
    rep["phase_space_norm_diverging"] = div != 0;
    std::cout << "weighted phase-space norm: " << norm << (div ? " (diverging on grid)" : "")
              << "\n";
  }
  write_json_report(json_path, rep);
  fw_grid_free(grid);
  fw_density_free(rho);
  return kExitOk;
}

int cmd_ambiguity(const std::string& coeffs_path, const std::string& grid_spec, int threads,
                  const std::string& out_path) {
  fw_coeffs* coeffs = nullptr;
  check(fw_coeffs_read_csv(coeffs_path.c_str(), &coeffs));
  const std::vector<double> axis = parse_grid(grid_spec);
  fw_grid* grid = nullptr;
  check(fw_ambiguity(coeffs, axis.data(), static_cast<int>(axis.size()), axis.data(),
                     static_cast<int>(axis.size()), threads, &grid));
  check(fw_grid_write_csv(grid, out_path.c_str()));
  std::cout << "ambiguity grid " << fw_grid_nq(grid) << "x" << fw_grid_np(grid) << " -> "
            << out_path << "\n";
  fw_grid_free(grid);
  fw_coeffs_free(coeffs);
  return kExitOk;
}

int cmd_marginals(const std::string& grid_path, const std::string& out_q,
                  const std::string& out_p, const std::string& json_path) {
  fw_grid* grid = nullptr;
  check(fw_grid_read_csv(grid_path.c_str(), &grid));
  const int nq = fw_grid_nq(grid), np = fw_grid_np(grid);
  std::vector<double> qm(nq), pm(np), qa(nq), pa(np), zeros_q(nq, 0.0), zeros_p(np, 0.0);
  int warn = 0;
  check(fw_marginals(grid, qm.data(), pm.data(), &warn));
  check(fw_grid_axes(grid, qa.data(), pa.data()));
  check(fw_samples_write_csv(out_q.c_str(), qa.data(), qm.data(), zeros_q.data(), nq));
  check(fw_samples_write_csv(out_p.c_str(), pa.data(), pm.data(), zeros_p.data(), np));
  std::cout << "marginals -> " << out_q << ", " << out_p
            << (warn ? " (warning: grid edges not decayed)" : "") << "\n";
  json rep;
  rep["command"] = "marginals";
  rep["boundary_warning"] = warn != 0;
  rep["outputs"] = {out_q, out_p};
  write_json_report(json_path, rep);
  fw_grid_free(grid);
  return kExitOk;
}

int cmd_envelope(const std::string& coeffs_path, const std::string& weight_spec,
                 const std::string& expect, double expect_tol, const std::string& json_path) {
  fw_coeffs* coeffs = nullptr;
  check(fw_coeffs_read_csv(coeffs_path.c_str(), &coeffs));
  fw_envelope env{};
  check(fw_fit_envelope(coeffs, &env));

  std::cout << "envelope: |a_n| <~ " << env.c_hat << " * exp(-" << env.lambda_hat << " n^("
            << env.beta_hat << "/2))\n"
            << "residual " << env.residual << " on " << env.support_count << " indices"
            << (env.degenerate ? " (degenerate: outside the family)" : "") << "\n";

  json rep;
  rep["command"] = "envelope";
  rep["lambda_hat"] = env.lambda_hat;
  rep["beta_hat"] = env.beta_hat;
  rep["c_hat"] = env.c_hat;
  rep["residual"] = env.residual;
  rep["support_count"] = env.support_count;
  rep["degenerate"] = env.degenerate != 0;

  if (!weight_spec.empty()) {
    WeightPtr w = load_weight(weight_spec);
    double norm = 0.0;
    int div = 0;
    check(fw_sequence_norm(coeffs, w.get(), &norm, &div));
    rep["sequence_norm"] = norm;
    rep["sequence_norm_diverging"] = div != 0;
    std::cout << "weighted sequence norm: " << norm << (div ? " (diverging on grid)" : "")
              << "\n";
  }
  fw_coeffs_free(coeffs);

  int exit_code = kExitOk;
  if (!expect.empty()) {
    double le = 0, be = 0;
    if (std::sscanf(expect.c_str(), "%lf,%lf", &le, &be) != 2)
      die("--expect must be lambda,beta");
    const double err = std::max(std::abs(env.lambda_hat - le), std::abs(env.beta_hat - be));
    rep["expected"] = {{"lambda", le}, {"beta", be}, {"tolerance", expect_tol}, {"error", err}};
    if (err > expect_tol || env.degenerate) {
      std::cout << "expectation violated: fitted (" << env.lambda_hat << ", " << env.beta_hat
                << ") vs expected (" << le << ", " << be << "), error " << err << " > "
                << expect_tol << "\n";
      exit_code = kExitViolation;
    } else {
      std::cout << "expectation satisfied within " << expect_tol << "\n";
    }
  }
  write_json_report(json_path, rep);
  return exit_code;
}

int cmd_verify(const std::string& suite, int n_max, int threads, unsigned seed,
               const std::map<std::string, double>& tols, const std::string& json_path) {
  json opts;
  if (n_max > 0) opts["n_max"] = n_max;
  if (threads > 0) opts["threads"] = threads;
  opts["seed"] = seed;
  if (!tols.empty()) {
    json t;
    for (const auto& [k, v] : tols) t[k] = v;
    opts["tolerances"] = t;
  }
  StringOut report;
  int failures = 0;
  check(fw_run_suite(suite.c_str(), opts.dump().c_str(), &report.s, &failures));

  const json j = json::parse(report.str());
  for (const auto& c : j["checks"])
    std::cout << "[" << (c["verdict"] == "pass" ? "PASS" : "FAIL") << "] "
              << c["name"].get<std::string>() << ": " << c["details"].get<std::string>()
              << "\n";
  std::cout << "suite '" << suite << "': " << (failures == 0 ? "all checks passed" : "") << "";
  if (failures != 0) std::cout << failures << " check(s) failed";
  std::cout << "\n";
  write_json_report(json_path, j);
  return failures == 0 ? kExitOk : kExitViolation;
}

int cmd_counterexample(int n_max, const std::string& window_spec,
                       const std::string& json_path, const std::string& out_density) {
  double lo = 4.0, hi = 8.0;
  if (!window_spec.empty()) {
    char extra = 0;
    if (std::sscanf(window_spec.c_str(), "%lf:%lf%c", &lo, &hi, &extra) != 2 || hi <= lo)
      die("--window must be lo:hi with hi > lo (got '" + window_spec + "')");
  }
  if (!out_density.empty()) {
    fw_density* rho = nullptr;
    check(fw_density_counterexample(n_max, &rho));
    check(fw_density_write_csv(rho, out_density.c_str()));
    std::cout << "density matrix -> " << out_density << "\n";
    fw_density_free(rho);
  }
  StringOut report;
  int ok = 0;
  check(fw_counterexample_experiment(n_max, lo, hi, &report.s, &ok));
  const json j = json::parse(report.str());
  std::cout << "diagonal decay: "
            << (j["diagonal"]["fit_degenerate"].get<bool>() ? "non-exponential (as expected)"
                                                            : "UNEXPECTEDLY exponential")
            << ", residual " << j["diagonal"]["residual"].get<double>() << "\n";
  std::cout << "wigner log-slope vs r^2 on [" << lo << "," << hi
            << "]: " << j["wigner"]["slope"].get<double>() << " (target -1)\n";
  std::cout << "series at M = " << n_max
            << ": max gap vs closed form " << j["series"]["max_gap_vs_closed_form"].get<double>()
            << " (truncation tail at origin "
            << j["series"]["truncation_tail_at_origin"].get<double>() << ")\n";
  write_json_report(json_path, j);
  if (!ok) {
    std::cout << "counterexample checks violated\n";
    return kExitViolation;
  }
  std::cout << "counterexample checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const std::map<std::string, double> tols = extract_tolerance_flags(args);

  CLI::App app{"fockwig: Hermite-basis and phase-space numerics"};
  app.require_subcommand(1);

  // analyze
  std::string a_samples, a_weight, a_out, a_json;
  int a_nmax = 64, a_order = 0;
  auto* analyze = app.add_subcommand("analyze", "expand node samples in the Hermite basis");
  analyze->add_option("--samples", a_samples, "input CSV (x,re,im) at quadrature nodes")
      ->required();
  analyze->add_option("--nmax", a_nmax, "highest coefficient index");
  analyze->add_option("--order", a_order, "rule order (default: sample count)");
  analyze->add_option("--weight", a_weight, "weight spec (inline JSON or path)");
  analyze->add_option("--out", a_out, "output coefficient CSV")->required();
  analyze->add_option("--json", a_json, "machine-readable report path");

  // synthesize
  std::string s_coeffs, s_grid, s_out;
  int s_at_nodes = 0;
  auto* synth = app.add_subcommand("synthesize", "evaluate a coefficient expansion");
  synth->add_option("--coeffs", s_coeffs, "input coefficient CSV")->required();
  synth->add_option("--grid", s_grid, "evaluation grid lo:hi:step");
  synth->add_option("--at-nodes", s_at_nodes, "evaluate at the nodes of this rule order");
  synth->add_option("--out", s_out, "output sample CSV")->required();

  // wigner
  std::string w_density, w_grid = "-8:8:0.03125", w_weight, w_out, w_json;
  bool w_tilde = false;
  int w_threads = 0;
  auto* wig = app.add_subcommand("wigner", "synthesize the Wigner grid of a density matrix");
  wig->add_option("--density", w_density, "density CSV (m,n,re,im)")->required();
  wig->add_option("--grid", w_grid, "axis spec lo:hi:step (both axes)");
  wig->add_flag("--tilde", w_tilde, "emit the tilde convention");
  wig->add_option("--weight", w_weight, "also report the weighted phase-space norm");
  wig->add_option("--threads", w_threads, "worker cap");
  wig->add_option("--out", w_out, "output grid CSV")->required();
  wig->add_option("--json", w_json, "machine-readable report path");

  // ambiguity
  std::string am_coeffs, am_grid = "-16:16:0.0625", am_out;
  int am_threads = 0;
  auto* amb = app.add_subcommand("ambiguity", "synthesize the ambiguity grid of a pure state");
  amb->add_option("--coeffs", am_coeffs, "coefficient CSV")->required();
  amb->add_option("--grid", am_grid, "axis spec lo:hi:step (both axes)");
  amb->add_option("--threads", am_threads, "worker cap");
  amb->add_option("--out", am_out, "output grid CSV")->required();

  // marginals
  std::string m_grid, m_out_q, m_out_p, m_json;
  auto* marg = app.add_subcommand("marginals", "integrate a phase-space grid along each axis");
  marg->add_option("--phase-space", m_grid, "input grid CSV")->required();
  marg->add_option("--out-q", m_out_q, "output CSV for the q marginal")->required();
  marg->add_option("--out-p", m_out_p, "output CSV for the p marginal")->required();
  marg->add_option("--json", m_json, "machine-readable report path");

  // envelope
  std::string e_coeffs, e_weight, e_expect, e_json;
  double e_expect_tol = 0.05;
  auto* env = app.add_subcommand("envelope", "fit a stretched-exponential decay envelope");
  env->add_option("--coeffs", e_coeffs, "coefficient CSV")->required();
  env->add_option("--weight", e_weight, "also report the weighted sequence norm");
  env->add_option("--expect", e_expect, "lambda,beta to verify against (exit 1 on mismatch)");
  env->add_option("--expect-tol", e_expect_tol, "tolerance for --expect");
  env->add_option("--json", e_json, "machine-readable report path");

  // verify
  std::string v_suite, v_json;
  int v_nmax = 0, v_threads = 0;
  unsigned v_seed = 1;
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("--suite", v_suite, "hermite|laguerre|wigner|tame|counterexample")
      ->required();
  ver->add_option("--nmax", v_nmax, "size override for the suite");
  ver->add_option("--threads", v_threads, "worker cap");
  ver->add_option("--seed", v_seed, "seed for randomized cases");
  ver->add_option("--json", v_json, "machine-readable report path");

  // counterexample
  std::string c_window, c_json, c_out;
  int c_nmax = 400;
  auto* cex = app.add_subcommand("counterexample",
                                 "decay study of the alternating-diagonal state");
  cex->add_option("--nmax", c_nmax, "diagonal truncation");
  cex->add_option("--window", c_window, "slope window lo:hi (default 4:8)");
  cex->add_option("--report", c_json, "machine-readable report path");
  cex->add_option("--json", c_json, "alias for --report");
  cex->add_option("--out", c_out, "also write the density matrix CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 pops from the back
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(a_samples, a_nmax, a_order, a_weight, a_out, a_json);
    if (synth->parsed()) return cmd_synthesize(s_coeffs, s_grid, s_at_nodes, s_out);
    if (wig->parsed())
      return cmd_wigner(w_density, w_grid, w_tilde, w_weight, w_threads, w_out, w_json);
    if (amb->parsed()) return cmd_ambiguity(am_coeffs, am_grid, am_threads, am_out);
    if (marg->parsed()) return cmd_marginals(m_grid, m_out_q, m_out_p, m_json);
    if (env->parsed())
      return cmd_envelope(e_coeffs, e_weight, e_expect, e_expect_tol, e_json);
    if (ver->parsed()) return cmd_verify(v_suite, v_nmax, v_threads, v_seed, tols, v_json);
    if (cex->parsed()) return cmd_counterexample(c_nmax, c_window, c_json, c_out);
  } catch (const std::exception& e) {
    die(e.what());
  }
  return kExitUsage;
}

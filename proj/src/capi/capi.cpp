/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "fockwig/fockwig.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "../core/decay.hpp"
#include "../core/errors.hpp"
#include "../core/hermite.hpp"
#include "../core/io.hpp"
#include "../core/numerics.hpp"
#include "../core/phase_space.hpp"
#include "../core/states.hpp"
#include "../core/verify.hpp"
#include "../core/weights.hpp"

using nlohmann::json;

namespace fw = fockwig;

struct fw_weight {
  fw::WeightFunction w;
};
struct fw_coeffs {
  fw::CoefficientSequence c;
};
struct fw_rule {
  fw::QuadratureRule r;
};
struct fw_density {
  fw::DensityMatrix rho;
};
struct fw_grid {
  fw::PhaseSpaceGrid g;
};

namespace {

thread_local std::string g_last_error;

fw_status set_error(fw_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename Fn>
fw_status guarded(Fn&& fn) {
  try {
    fn();
    return FW_OK;
  } catch (const fw::Error& e) {
    return set_error(static_cast<fw_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::exception& e) {
    return set_error(FW_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FW_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double* dup_doubles(const std::vector<double>& v) {
  double* out = new double[v.size()];
  std::memcpy(out, v.data(), v.size() * sizeof(double));
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw fw::ArgumentError(what);
}

json axiom_to_json(const fw::AxiomFinding& f) {
  json j;
  j["verdict"] = fw::to_string(f.verdict);
  j["observed"] = f.observed;
  if (f.witness_t) j["witness_t"] = *f.witness_t;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

json check_to_json(const fw::CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["verdict"] = c.passed ? "pass" : "fail";
  j["measured"] = c.measured;
  j["threshold"] = c.threshold;
  j["details"] = c.details;
  return j;
}

}  // namespace

extern "C" {

const char* fw_version(void) { return "0.1.0"; }

const char* fw_last_error(void) { return g_last_error.c_str(); }

void fw_string_free(char* s) { delete[] s; }

void fw_doubles_free(double* p) { delete[] p; }

/* ---- weights ---------------------------------------------------------- */

fw_status fw_weight_power(double lambda, double beta, fw_weight** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new fw_weight{fw::WeightFunction::power(lambda, beta)};
  });
}

fw_status fw_weight_tabulated(const double* ts, const double* ws, int count, fw_weight** out) {
  return guarded([&] {
    require(out && ts && ws && count > 0, "need ts, ws, positive count, out");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.emplace_back(ts[i], ws[i]);
    *out = new fw_weight{fw::WeightFunction::tabulated(std::move(pts))};
  });
}

fw_status fw_weight_from_json(const char* spec, fw_weight** out) {
  return guarded([&] {
    require(out && spec, "need spec and out");
    *out = new fw_weight{fw::weight_from_json(spec)};
  });
}

fw_status fw_weight_to_json(const fw_weight* w, char** json_out) {
  return guarded([&] {
    require(w && json_out, "need weight and out");
    *json_out = dup_string(fw::weight_to_json(w->w));
  });
}

fw_status fw_weight_scaled(const fw_weight* w, double c, fw_weight** out) {
  return guarded([&] {
    require(w && out, "need weight and out");
    *out = new fw_weight{w->w.scaled(c)};
  });
}

void fw_weight_free(fw_weight* w) { delete w; }

fw_status fw_weight_eval(const fw_weight* w, double t, double* out) {
  return guarded([&] {
    require(w && out, "need weight and out");
    *out = w->w(t);
  });
}

fw_status fw_omega_star(const fw_weight* w, double nu, double* value,
                        int* used_golden_section) {
  return guarded([&] {
    require(w && value, "need weight and value");
    const fw::OmegaStar os = fw::omega_star(w->w, nu);
    *value = os.value;
    if (used_golden_section)
      *used_golden_section = os.method == fw::OmegaStar::Method::golden_section ? 1 : 0;
  });
}

fw_status fw_check_weight_axioms(const fw_weight* w, const double* grid, int count,
                                 char** json_report, int* all_pass) {
  return guarded([&] {
    require(w, "need weight");
    std::vector<double> g;
    if (grid && count > 0)
      g.assign(grid, grid + count);
    else
      g = fw::default_axiom_grid();
    const fw::AxiomReport rep = fw::check_weight_axioms(w->w, g);
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    if (json_report) {
      json j;
      j["convexity"] = axiom_to_json(rep.convexity);
      j["log_negligible"] = axiom_to_json(rep.log_negligible);
      j["doubling"] = axiom_to_json(rep.doubling);
      j["quadratic_cap"] = axiom_to_json(rep.quadratic_cap);
      j["quadratic_cap_strict"] = axiom_to_json(rep.quadratic_cap_strict);
      *json_report = dup_string(j.dump(2));
    }
  });
}

/* ---- Hermite basis ---------------------------------------------------- */

fw_status fw_hermite_values(int n_max, double x, double* out) {
  return guarded([&] {
    require(out, "need out");
    fw::hermite_values_into(n_max, x, std::span<double>(out, n_max + 1));
  });
}

fw_status fw_rule_create(int order, fw_rule** out) {
  return guarded([&] {
    require(out, "need out");
    *out = new fw_rule{fw::gauss_hermite_rule(order)};
  });
}

void fw_rule_free(fw_rule* r) { delete r; }

int fw_rule_order(const fw_rule* r) { return r ? r->r.order() : 0; }

fw_status fw_rule_nodes(const fw_rule* r, double* out) {
  return guarded([&] {
    require(r && out, "need rule and out");
    std::memcpy(out, r->r.nodes.data(), r->r.nodes.size() * sizeof(double));
  });
}

fw_status fw_rule_weights(const fw_rule* r, double* out) {
  return guarded([&] {
    require(r && out, "need rule and out");
    std::memcpy(out, r->r.weights.data(), r->r.weights.size() * sizeof(double));
  });
}

fw_status fw_rule_lifted_weights(const fw_rule* r, double* out) {
  return guarded([&] {
    require(r && out, "need rule and out");
    std::memcpy(out, r->r.lifted_weights.data(), r->r.lifted_weights.size() * sizeof(double));
  });
}

fw_status fw_coeffs_create(const double* re, const double* im, int count, fw_coeffs** out) {
  return guarded([&] {
    require(out && re && count > 0, "need re, positive count, out");
    std::vector<fw::cplx> v(count);
    for (int i = 0; i < count; ++i) v[i] = fw::cplx(re[i], im ? im[i] : 0.0);
    *out = new fw_coeffs{fw::CoefficientSequence(std::move(v))};
  });
}

void fw_coeffs_free(fw_coeffs* c) { delete c; }

int fw_coeffs_count(const fw_coeffs* c) {
  return c ? static_cast<int>(c->c.values.size()) : 0;
}

fw_status fw_coeffs_get(const fw_coeffs* c, int n, double* re, double* im) {
  return guarded([&] {
    require(c && re && im, "need coeffs and outputs");
    require(n >= 0 && n < static_cast<int>(c->c.values.size()), "index out of range");
    *re = c->c.values[n].real();
    *im = c->c.values[n].imag();
  });
}

fw_status fw_coeffs_read_csv(const char* path, fw_coeffs** out) {
  return guarded([&] {
    require(path && out, "need path and out");
    *out = new fw_coeffs{fw::read_coefficients_csv(path)};
  });
}

fw_status fw_coeffs_write_csv(const fw_coeffs* c, const char* path) {
  return guarded([&] {
    require(c && path, "need coeffs and path");
    fw::write_coefficients_csv(path, c->c);
  });
}

fw_status fw_analyze_at_nodes(const fw_rule* r, const double* re, const double* im, int count,
                              int n_max, fw_coeffs** out) {
  return guarded([&] {
    require(r && re && out, "need rule, samples, out");
    require(count == r->r.order(), "sample count must equal the rule order");
    // recover <f, h_n> from node samples by the lifted-weight inner product
    std::vector<fw::cplx> alpha(static_cast<std::size_t>(n_max) + 1, fw::cplx(0, 0));
    std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
    require(n_max + 1 <= count, "rule order must be at least n_max + 1");
    for (int k = 0; k < count; ++k) {
      const fw::cplx fx(re[k], im ? im[k] : 0.0);
      if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag()))
        throw fw::DataError("analyze: non-finite sample");
      fw::hermite_values_into(n_max, r->r.nodes[k], h);
      const fw::cplx scaled = r->r.lifted_weights[k] * fx;
      for (int n = 0; n <= n_max; ++n) alpha[n] += scaled * h[n];
    }
    *out = new fw_coeffs{fw::CoefficientSequence(std::move(alpha))};
  });
}

fw_status fw_synthesize(const fw_coeffs* c, const double* xs, int count, double* out_re,
                        double* out_im) {
  return guarded([&] {
    require(c && xs && out_re && count > 0, "need coeffs, xs, out_re");
    const std::vector<fw::cplx> vals =
        fw::synthesize(c->c, std::span<const double>(xs, count));
    for (int i = 0; i < count; ++i) {
      out_re[i] = vals[i].real();
      if (out_im) out_im[i] = vals[i].imag();
    }
  });
}

fw_status fw_fourier_coefficients(const fw_coeffs* c, fw_coeffs** out) {
  return guarded([&] {
    require(c && out, "need coeffs and out");
    *out = new fw_coeffs{fw::fourier_in_coefficients(c->c)};
  });
}

fw_status fw_hermite_operator(const fw_coeffs* c, int power, fw_coeffs** out) {
  return guarded([&] {
    require(c && out, "need coeffs and out");
    *out = new fw_coeffs{fw::hermite_operator_in_coefficients(c->c, power)};
  });
}

/* ---- weighted norms ---------------------------------------------------- */

fw_status fw_sequence_norm(const fw_coeffs* c, const fw_weight* w, double* value,
                           int* diverging) {
  return guarded([&] {
    require(c && w && value, "need coeffs, weight, value");
    const fw::SupNorm r = fw::sequence_norm(c->c, w->w);
    *value = r.value;
    if (diverging) *diverging = r.diverging ? 1 : 0;
  });
}

fw_status fw_function_norm(const double* xs, const double* f_re, const double* f_im, int n,
                           const double* xis, const double* ff_re, const double* ff_im, int m,
                           const fw_weight* w, double* value, int* diverging) {
  return guarded([&] {
    require(xs && f_re && xis && ff_re && w && value && n > 0 && m > 0,
            "need samples of f and its transform, weight, value");
    std::vector<fw::cplx> f(n), ff(m);
    for (int i = 0; i < n; ++i) f[i] = fw::cplx(f_re[i], f_im ? f_im[i] : 0.0);
    for (int i = 0; i < m; ++i) ff[i] = fw::cplx(ff_re[i], ff_im ? ff_im[i] : 0.0);
    const fw::SupNorm r = fw::function_norm(std::span<const double>(xs, n), f,
                                            std::span<const double>(xis, m), ff, w->w);
    *value = r.value;
    if (diverging) *diverging = r.diverging ? 1 : 0;
  });
}

fw_status fw_matrix_norm(const fw_density* rho, const fw_weight* w, double* value,
                         int* diverging) {
  return guarded([&] {
    require(rho && w && value, "need density, weight, value");
    const fw::SupNorm r = fw::matrix_norm(rho->rho, w->w);
    *value = r.value;
    if (diverging) *diverging = r.diverging ? 1 : 0;
  });
}

fw_status fw_phase_space_norm(const fw_grid* g, const fw_weight* w, double* value,
                              int* diverging) {
  return guarded([&] {
    require(g && w && value, "need grid, weight, value");
    const fw::SupNorm r = fw::phase_space_norm(g->g, w->w);
    *value = r.value;
    if (diverging) *diverging = r.diverging ? 1 : 0;
  });
}

/* ---- decay envelopes ---------------------------------------------------- */

fw_status fw_fit_envelope(const fw_coeffs* c, fw_envelope* out) {
  return guarded([&] {
    require(c && out, "need coeffs and out");
    const fw::DecayEnvelope env = fw::fit_envelope(c->c);
    out->lambda_hat = env.lambda_hat;
    out->beta_hat = env.beta_hat;
    out->c_hat = env.c_hat;
    out->residual = env.residual;
    out->support_count = env.support_count;
    out->degenerate = env.degenerate ? 1 : 0;
  });
}

/* ---- density matrices --------------------------------------------------- */

fw_status fw_density_pure(const fw_coeffs* c, fw_density** out) {
  return guarded([&] {
    require(c && out, "need coeffs and out");
    *out = new fw_density{fw::DensityMatrix::pure(c->c)};
  });
}

fw_status fw_density_counterexample(int n_max, fw_density** out) {
  return guarded([&] {
    require(out, "need out");
    *out = new fw_density{fw::DensityMatrix::counterexample(n_max)};
  });
}

fw_status fw_density_read_csv(const char* path, fw_density** out) {
  return guarded([&] {
    require(path && out, "need path and out");
    *out = new fw_density{fw::read_density_csv(path)};
  });
}

fw_status fw_density_write_csv(const fw_density* rho, const char* path) {
  return guarded([&] {
    require(rho && path, "need density and path");
    fw::write_density_csv(path, rho->rho);
  });
}

void fw_density_free(fw_density* rho) { delete rho; }

int fw_density_n_max(const fw_density* rho) { return rho ? rho->rho.n_max() : -1; }

fw_status fw_density_get(const fw_density* rho, int m, int n, double* re, double* im) {
  return guarded([&] {
    require(rho && re && im, "need density and outputs");
    require(m >= 0 && n >= 0 && m <= rho->rho.n_max() && n <= rho->rho.n_max(),
            "index out of range");
    const fw::cplx z = rho->rho.at(m, n);
    *re = z.real();
    *im = z.imag();
  });
}

fw_status fw_density_validate(const fw_density* rho, char** json_report, int* physical) {
  return guarded([&] {
    require(rho, "need density");
    const fw::ValidationReport rep = fw::validate_density(rho->rho);
    if (physical) *physical = rep.physical() ? 1 : 0;
    if (json_report) {
      json j;
      j["hermitian"] = fw::to_string(rep.hermitian);
      j["hermitian_defect"] = rep.hermitian_defect;
      j["psd"] = fw::to_string(rep.psd);
      j["min_eigenvalue"] = rep.min_eigenvalue;
      j["trace"] = rep.trace;
      j["trace_verdict"] = rep.trace_verdict == fw::TraceVerdict::pass     ? "pass"
                           : rep.trace_verdict == fw::TraceVerdict::fail   ? "fail"
                                                                           : "truncated";
      if (!rep.witness.empty()) j["witness"] = rep.witness;
      *json_report = dup_string(j.dump(2));
    }
  });
}

fw_status fw_counterexample_closed_form(double q, double p, double* out) {
  return guarded([&] {
    require(out, "need out");
    *out = fw::counterexample_wigner_closed_form(q, p);
  });
}

fw_status fw_counterexample_experiment(int n_max, double window_lo, double window_hi,
                                       char** json_report, int* checks_pass) {
  return guarded([&] {
    require(window_hi > window_lo && window_lo > 0.0, "need 0 < window_lo < window_hi");
    const std::vector<double> window = fw::uniform_grid(window_lo, window_hi, 1.0 / 32.0);
    const fw::CounterexampleReport rep = fw::decay_vs_wigner_experiment(n_max, window);
    const bool ok = rep.diag_fit_degenerate && rep.closed_form_positive &&
                    rep.closed_form_bounded && std::abs(rep.wigner_slope + 1.0) <= 0.05;
    if (checks_pass) *checks_pass = ok ? 1 : 0;
    if (json_report) {
      json j;
      j["diagonal"] = {{"fit_degenerate", rep.diag_fit_degenerate},
                       {"residual", rep.diag_residual},
                       {"beta_hat", rep.diag_beta_hat}};
      j["wigner"] = {{"slope", rep.wigner_slope},
                     {"window", {rep.slope_window_lo, rep.slope_window_hi}},
                     {"positive", rep.closed_form_positive},
                     {"gaussian_bound", rep.closed_form_bounded}};
      j["series"] = {{"terms", rep.series_terms},
                     {"max_gap_vs_closed_form", rep.series_max_gap},
                     {"truncation_tail_at_origin", 1.0 / ((rep.series_terms + 2.0) * M_PI)}};
      *json_report = dup_string(j.dump(2));
    }
  });
}

/* ---- phase space --------------------------------------------------------- */

fw_status fw_special_hermite(int m, int n, double q, double p, double* re, double* im) {
  return guarded([&] {
    require(re && im, "need outputs");
    const fw::cplx z = fw::special_hermite(m, n, q, p);
    *re = z.real();
    *im = z.imag();
  });
}

fw_status fw_radial_modulus(int m, int n, double r, double* out) {
  return guarded([&] {
    require(out, "need out");
    *out = fw::radial_modulus(m, n, r);
  });
}

fw_status fw_wigner(const fw_density* rho, const double* q_axis, int nq, const double* p_axis,
                    int np, int threads, fw_grid** out) {
  return guarded([&] {
    require(rho && q_axis && p_axis && out && nq > 0 && np > 0,
            "need density, axes, out");
    *out = new fw_grid{fw::wigner_of_density(rho->rho, std::span<const double>(q_axis, nq),
                                             std::span<const double>(p_axis, np), threads)};
  });
}

fw_status fw_ambiguity(const fw_coeffs* c, const double* theta_axis, int nt,
                       const double* varpi_axis, int nv, int threads, fw_grid** out) {
  return guarded([&] {
    require(c && theta_axis && varpi_axis && out && nt > 0 && nv > 0,
            "need coeffs, axes, out");
    *out = new fw_grid{fw::ambiguity_of_coefficients(
        c->c, std::span<const double>(theta_axis, nt), std::span<const double>(varpi_axis, nv),
        threads)};
  });
}

void fw_grid_free(fw_grid* g) { delete g; }

int fw_grid_nq(const fw_grid* g) { return g ? static_cast<int>(g->g.q_axis.size()) : 0; }

int fw_grid_np(const fw_grid* g) { return g ? static_cast<int>(g->g.p_axis.size()) : 0; }

int fw_grid_convention(const fw_grid* g) {
  return (g && g->g.tag == fw::Convention::tilde) ? 1 : 0;
}

fw_status fw_grid_axes(const fw_grid* g, double* q_out, double* p_out) {
  return guarded([&] {
    require(g && q_out && p_out, "need grid and outputs");
    std::memcpy(q_out, g->g.q_axis.data(), g->g.q_axis.size() * sizeof(double));
    std::memcpy(p_out, g->g.p_axis.data(), g->g.p_axis.size() * sizeof(double));
  });
}

fw_status fw_grid_value(const fw_grid* g, int i, int j, double* re, double* im) {
  return guarded([&] {
    require(g && re && im, "need grid and outputs");
    require(i >= 0 && j >= 0 && i < fw_grid_nq(g) && j < fw_grid_np(g), "index out of range");
    const fw::cplx z = g->g.values.at(i, j);
    *re = z.real();
    *im = z.imag();
  });
}

fw_status fw_grid_read_csv(const char* path, fw_grid** out) {
  return guarded([&] {
    require(path && out, "need path and out");
    *out = new fw_grid{fw::read_phase_space_csv(path)};
  });
}

fw_status fw_grid_write_csv(const fw_grid* g, const char* path) {
  return guarded([&] {
    require(g && path, "need grid and path");
    fw::write_phase_space_csv(path, g->g);
  });
}

fw_status fw_tilde_rescale(const fw_grid* g, fw_grid** out) {
  return guarded([&] {
    require(g && out, "need grid and out");
    *out = new fw_grid{fw::tilde_rescale(g->g)};
  });
}

fw_status fw_marginals(const fw_grid* g, double* q_marg, double* p_marg,
                       int* boundary_warning) {
  return guarded([&] {
    require(g && q_marg && p_marg, "need grid and outputs");
    const fw::MarginalResult r = fw::marginals(g->g);
    std::memcpy(q_marg, r.q_marginal.data(), r.q_marginal.size() * sizeof(double));
    std::memcpy(p_marg, r.p_marginal.data(), r.p_marginal.size() * sizeof(double));
    if (boundary_warning) *boundary_warning = r.boundary_warning ? 1 : 0;
  });
}

/* ---- sampled-function files --------------------------------------------- */

fw_status fw_samples_read_csv(const char* path, double** xs, double** re, double** im,
                              int* count) {
  return guarded([&] {
    require(path && xs && re && im && count, "need path and outputs");
    const fw::SampledFunction s = fw::read_samples_csv(path);
    std::vector<double> vre(s.values.size()), vim(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      vre[i] = s.values[i].real();
      vim[i] = s.values[i].imag();
    }
    *xs = dup_doubles(s.xs);
    *re = dup_doubles(vre);
    *im = dup_doubles(vim);
    *count = static_cast<int>(s.xs.size());
  });
}

fw_status fw_samples_write_csv(const char* path, const double* xs, const double* re,
                               const double* im, int count) {
  return guarded([&] {
    require(path && xs && re && count > 0, "need path, xs, re");
    fw::SampledFunction s;
    s.xs.assign(xs, xs + count);
    s.values.resize(count);
    for (int i = 0; i < count; ++i) s.values[i] = fw::cplx(re[i], im ? im[i] : 0.0);
    fw::write_samples_csv(path, s);
  });
}

/* ---- verification -------------------------------------------------------- */

fw_status fw_run_suite(const char* name, const char* options_json, char** json_report,
                       int* failures) {
  return guarded([&] {
    require(name, "need suite name");
    fw::SuiteOptions opts;
    if (options_json && options_json[0] != '\0') {
      json j;
      try {
        j = json::parse(options_json);
      } catch (const std::exception& e) {
        throw fw::ArgumentError(std::string("options are not valid JSON: ") + e.what());
      }
      opts.n_max = j.value("n_max", 0);
      opts.threads = j.value("threads", 0);
      opts.seed = j.value("seed", 1u);
      if (j.contains("tolerances"))
        for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it)
          opts.tolerance_overrides[it.key()] = it.value().get<double>();
    }
    const fw::SuiteResult res = fw::run_suite(name, opts);
    int bad = 0;
    for (const auto& c : res.checks)
      if (!c.passed) ++bad;
    if (failures) *failures = bad;
    if (json_report) {
      json j;
      j["suite"] = res.suite;
      j["passed"] = res.all_passed();
      j["checks"] = json::array();
      for (const auto& c : res.checks) j["checks"].push_back(check_to_json(c));
      *json_report = dup_string(j.dump(2));
    }
  });
}

} /* extern "C" */

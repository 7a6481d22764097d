#include "nlheat.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "evolution.hpp"
#include "functionals.hpp"
#include "kernels.hpp"
#include "radial.hpp"
#include "random_fields.hpp"
#include "threshold.hpp"

struct nlh_grid {
  nlheat::GridPtr g;
};
struct nlh_field {
  nlheat::RadialField f;
};
struct nlh_kernel {
  nlheat::MatrixKernel k;
};
struct nlh_series {
  nlheat::EvolutionSeries s;
};

namespace {

thread_local std::string g_last_error;

nlh_status to_status(nlheat::errc c) {
  using nlheat::errc;
  switch (c) {
    case errc::ok: return NLH_OK;
    case errc::invalid_argument: return NLH_EINVAL;
    case errc::singular_point: return NLH_ESINGULAR;
    case errc::degenerate_input: return NLH_EDEGENERATE;
    case errc::resource_guard: return NLH_ERESOURCE;
    case errc::step_size: return NLH_ESTEP;
    case errc::out_of_range: return NLH_ERANGE;
    case errc::boundary_breach: return NLH_EBOUNDARY;
    case errc::positivity_loss: return NLH_EPOSITIVITY;
    case errc::blowup: return NLH_EBLOWUP;
    case errc::internal: return NLH_EINTERNAL;
  }
  return NLH_EINTERNAL;
}

template <class Fn>
nlh_status translate(Fn&& fn) {
  try {
    fn();
    return NLH_OK;
  } catch (const nlheat::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NLH_ERESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NLH_EINTERNAL;
  }
}

nlh_status require(bool ok, const char* msg) {
  if (ok) return NLH_OK;
  g_last_error = msg;
  return NLH_EINVAL;
}

nlh_status copy_out(const std::vector<double>& src, double* out, size_t len, const char* who) {
  if (!out || len != src.size()) {
    g_last_error = std::string(who) + ": output buffer size mismatch";
    return NLH_EINVAL;
  }
  std::memcpy(out, src.data(), src.size() * sizeof(double));
  return NLH_OK;
}

void fill_report(const nlheat::FunctionalReport& rep, nlh_functional_report* out) {
  out->p = rep.p;
  out->lhs = rep.lhs;
  out->rhs = rep.rhs;
  out->ratio = rep.ratio;
  std::snprintf(out->grid_meta, sizeof out->grid_meta, "%s", rep.grid_meta.c_str());
}

}  // namespace

extern "C" {

const char* nlh_version(void) { return "0.1.0"; }

const char* nlh_status_name(nlh_status s) {
  switch (s) {
    case NLH_OK: return "ok";
    case NLH_EINVAL: return "invalid-argument";
    case NLH_ESINGULAR: return "singular-point";
    case NLH_EDEGENERATE: return "degenerate-input";
    case NLH_ERESOURCE: return "resource-guard";
    case NLH_ESTEP: return "step-size";
    case NLH_ERANGE: return "out-of-range";
    case NLH_EBOUNDARY: return "boundary-breach";
    case NLH_EPOSITIVITY: return "positivity-loss";
    case NLH_EBLOWUP: return "blowup-detected";
    case NLH_EINTERNAL: return "internal";
  }
  return "unknown";
}

const char* nlh_last_error_message(void) { return g_last_error.c_str(); }

/* ---- grids ---- */

nlh_status nlh_grid_create(double r_max, int n, nlh_grid** out) {
  if (auto s = require(out != nullptr, "nlh_grid_create: null out")) return s;
  return translate([&] { *out = new nlh_grid{nlheat::make_grid(r_max, n)}; });
}

void nlh_grid_free(nlh_grid* g) { delete g; }

int nlh_grid_size(const nlh_grid* g) { return g ? g->g->size() : 0; }

double nlh_grid_r_max(const nlh_grid* g) { return g ? g->g->r_max() : 0.0; }

double nlh_grid_spacing(const nlh_grid* g) { return g ? g->g->spacing() : 0.0; }

nlh_status nlh_grid_nodes(const nlh_grid* g, double* out, size_t len) {
  if (auto s = require(g != nullptr, "nlh_grid_nodes: null grid")) return s;
  return copy_out(g->g->nodes(), out, len, "nlh_grid_nodes");
}

/* ---- fields ---- */

nlh_status nlh_field_from_values(const nlh_grid* g, const double* values, size_t len,
                                 nlh_field** out) {
  if (auto s = require(g && values && out, "nlh_field_from_values: null argument")) return s;
  return translate([&] {
    std::vector<double> v(values, values + len);
    nlheat::RadialField f = nlheat::make_field(g->g, std::move(v));
    nlheat::require_nonnegative(f, "nlh_field_from_values");
    *out = new nlh_field{std::move(f)};
  });
}

nlh_status nlh_field_gaussian(const nlh_grid* g, double amplitude, double sigma,
                              nlh_field** out) {
  if (auto s = require(g && out, "nlh_field_gaussian: null argument")) return s;
  return translate([&] { *out = new nlh_field{nlheat::initial_gaussian(g->g, amplitude, sigma)}; });
}

nlh_status nlh_field_smoothed_ball(const nlh_grid* g, double amplitude, double radius,
                                   double width, nlh_field** out) {
  if (auto s = require(g && out, "nlh_field_smoothed_ball: null argument")) return s;
  return translate(
      [&] { *out = new nlh_field{nlheat::initial_smoothed_ball(g->g, amplitude, radius, width)}; });
}

nlh_status nlh_field_power_tail(const nlh_grid* g, double amplitude, double s, nlh_field** out) {
  if (auto st = require(g && out, "nlh_field_power_tail: null argument")) return st;
  return translate([&] { *out = new nlh_field{nlheat::initial_power_tail(g->g, amplitude, s)}; });
}

nlh_status nlh_field_maxwellian(const nlh_grid* g, nlh_field** out) {
  if (auto s = require(g && out, "nlh_field_maxwellian: null argument")) return s;
  return translate([&] { *out = new nlh_field{nlheat::maxwellian_field(g->g)}; });
}

nlh_status nlh_field_suite_member(const nlh_grid* g, uint64_t seed, int index, nlh_field** out) {
  if (auto s = require(g && out, "nlh_field_suite_member: null argument")) return s;
  return translate([&] { *out = new nlh_field{nlheat::suite_field(g->g, seed, index)}; });
}

const char* nlh_suite_family_name(int index) {
  return index < 0 ? "" : nlheat::suite_family_name(index);
}

void nlh_field_free(nlh_field* f) { delete f; }

int nlh_field_size(const nlh_field* f) { return f ? static_cast<int>(f->f.values.size()) : 0; }

nlh_status nlh_field_values(const nlh_field* f, double* out, size_t len) {
  if (auto s = require(f != nullptr, "nlh_field_values: null field")) return s;
  return copy_out(f->f.values, out, len, "nlh_field_values");
}

double nlh_field_max(const nlh_field* f) { return f ? f->f.max() : 0.0; }

/* ---- radial operators ---- */

nlh_status nlh_integrate_radial(const nlh_field* f, double* out) {
  if (auto s = require(f && out, "nlh_integrate_radial: null argument")) return s;
  return translate([&] { *out = nlheat::integrate_radial(f->f); });
}

nlh_status nlh_lp_norm(const nlh_field* f, double p, double* out) {
  if (auto s = require(f && out, "nlh_lp_norm: null argument")) return s;
  return translate([&] { *out = nlheat::lp_norm(f->f, p); });
}

nlh_status nlh_radial_derivative(const nlh_field* f, double* out, size_t len) {
  if (auto s = require(f != nullptr, "nlh_radial_derivative: null field")) return s;
  nlh_status st = NLH_OK;
  nlh_status tr = translate([&] {
    st = copy_out(nlheat::radial_derivative(f->f).values, out, len, "nlh_radial_derivative");
  });
  return tr != NLH_OK ? tr : st;
}

nlh_status nlh_radial_laplacian(const nlh_field* f, double* out, size_t len) {
  if (auto s = require(f != nullptr, "nlh_radial_laplacian: null field")) return s;
  nlh_status st = NLH_OK;
  nlh_status tr = translate([&] {
    st = copy_out(nlheat::radial_laplacian(f->f).values, out, len, "nlh_radial_laplacian");
  });
  return tr != NLH_OK ? tr : st;
}

nlh_status nlh_newton_potential(const nlh_field* f, nlh_field** out) {
  if (auto s = require(f && out, "nlh_newton_potential: null argument")) return s;
  return translate([&] { *out = new nlh_field{nlheat::newton_potential(f->f)}; });
}

/* ---- kernels ---- */

nlh_status nlh_kernel_coulomb(nlh_kernel** out) {
  if (auto s = require(out != nullptr, "nlh_kernel_coulomb: null out")) return s;
  return translate([&] { *out = new nlh_kernel{nlheat::MatrixKernel::coulomb()}; });
}

nlh_status nlh_kernel_landau(double L, nlh_kernel** out) {
  if (auto s = require(out != nullptr, "nlh_kernel_landau: null out")) return s;
  return translate([&] { *out = new nlh_kernel{nlheat::MatrixKernel::landau(L)}; });
}

void nlh_kernel_free(nlh_kernel* k) { delete k; }

nlh_status nlh_kernel_evaluate(const nlh_kernel* k, const double v[3], double out[9]) {
  if (auto s = require(k && v && out, "nlh_kernel_evaluate: null argument")) return s;
  return translate([&] {
    const nlheat::Mat3 b = k->k.evaluate({v[0], v[1], v[2]});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i * 3 + j] = b.m[i][j];
  });
}

double nlh_kernel_homogeneity_degree(const nlh_kernel* k) {
  return k ? k->k.homogeneity_degree() : 0.0;
}

nlh_status nlh_kernel_check_evenness_psd(const nlh_kernel* k, int n_samples, uint64_t seed,
                                         double* max_evenness_violation,
                                         double* min_quadratic_form) {
  if (auto s = require(k && max_evenness_violation && min_quadratic_form,
                       "nlh_kernel_check_evenness_psd: null argument"))
    return s;
  return translate([&] {
    const nlheat::EvennessPsdReport rep = nlheat::check_evenness_psd(k->k, n_samples, seed);
    *max_evenness_violation = rep.max_evenness_violation;
    *min_quadratic_form = rep.min_quadratic_form;
  });
}

nlh_status nlh_kernel_check_delta_identity(const nlh_kernel* k, const double x[3],
                                           const double phi_center[3], double box_half_width,
                                           int n_per_axis, double* out) {
  if (auto s = require(k && x && phi_center && out,
                       "nlh_kernel_check_delta_identity: null argument"))
    return s;
  return translate([&] {
    nlheat::GaussianBump phi{{phi_center[0], phi_center[1], phi_center[2]}};
    *out = nlheat::check_delta_identity(k->k, phi, {x[0], x[1], x[2]}, box_half_width, n_per_axis);
  });
}

/* ---- functionals ---- */

nlh_status nlh_lhs_power_integral(const nlh_field* g, double p, double* out) {
  if (auto s = require(g && out, "nlh_lhs_power_integral: null argument")) return s;
  return translate([&] { *out = nlheat::lhs_power_integral(g->f, p); });
}

nlh_status nlh_rhs_coulomb(const nlh_field* g, double p, double* out) {
  if (auto s = require(g && out, "nlh_rhs_coulomb: null argument")) return s;
  return translate([&] { *out = nlheat::rhs_coulomb(g->f, p); });
}

nlh_status nlh_rhs_matrix_kernel_3d(const nlh_field* g, double p, const nlh_kernel* k,
                                    double box_half_width, int n_per_axis, double* out) {
  if (auto s = require(g && k && out, "nlh_rhs_matrix_kernel_3d: null argument")) return s;
  return translate(
      [&] { *out = nlheat::rhs_matrix_kernel_3d(g->f, p, k->k, {box_half_width, n_per_axis}); });
}

nlh_status nlh_inequality_ratio(const nlh_field* g, double p, nlh_functional_report* out) {
  if (auto s = require(g && out, "nlh_inequality_ratio: null argument")) return s;
  return translate([&] { fill_report(nlheat::inequality_ratio(g->f, p), out); });
}

nlh_status nlh_inequality_ratio_3d(const nlh_field* g, double p, const nlh_kernel* k,
                                   double box_half_width, int n_per_axis,
                                   nlh_functional_report* out) {
  if (auto s = require(g && k && out, "nlh_inequality_ratio_3d: null argument")) return s;
  return translate([&] {
    fill_report(nlheat::inequality_ratio_3d(g->f, p, k->k, {box_half_width, n_per_axis}), out);
  });
}

nlh_status nlh_maxwellian_sharpness(double p, double box_half_width, int n_per_axis,
                                    double* out) {
  if (auto s = require(out != nullptr, "nlh_maxwellian_sharpness: null out")) return s;
  return translate([&] { *out = nlheat::maxwellian_sharpness(p, box_half_width, n_per_axis); });
}

nlh_status nlh_lp_production_rate(const nlh_field* u, double p, double alpha, double* out) {
  if (auto s = require(u && out, "nlh_lp_production_rate: null argument")) return s;
  return translate([&] { *out = nlheat::lp_production_rate(u->f, p, alpha); });
}

/* ---- threshold ---- */

nlh_status nlh_threshold_h(double p, double* out) {
  if (auto s = require(out != nullptr, "nlh_threshold_h: null out")) return s;
  return translate([&] { *out = nlheat::threshold_h(p); });
}

nlh_status nlh_monotonicity_coefficient(double p, double alpha, double* out) {
  if (auto s = require(out != nullptr, "nlh_monotonicity_coefficient: null out")) return s;
  return translate([&] { *out = nlheat::monotonicity_coefficient(p, alpha); });
}

nlh_status nlh_admissible_gamma(double alpha, nlh_threshold_result* out) {
  if (auto s = require(out != nullptr, "nlh_admissible_gamma: null out")) return s;
  return translate([&] {
    const nlheat::ThresholdResult r = nlheat::admissible_gamma(alpha);
    out->alpha = r.alpha;
    out->p_star = r.p_star;
    out->gamma = r.gamma;
    out->q_max = r.q_max;
  });
}

void nlh_decay_q_range(double* q_min_exclusive, double* q_max_inclusive) {
  const nlheat::DecayRange r = nlheat::decay_q_range();
  if (q_min_exclusive) *q_min_exclusive = r.q_min_exclusive;
  if (q_max_inclusive) *q_max_inclusive = r.q_max_inclusive;
}

/* ---- evolution ---- */

nlh_status nlh_rhs_model(const nlh_field* u, double alpha, double* out, size_t len) {
  if (auto s = require(u != nullptr, "nlh_rhs_model: null field")) return s;
  nlh_status st = NLH_OK;
  nlh_status tr = translate(
      [&] { st = copy_out(nlheat::rhs_model(u->f, alpha).values, out, len, "nlh_rhs_model"); });
  return tr != NLH_OK ? tr : st;
}

nlh_status nlh_step(const nlh_field* u, double alpha, double dt, nlh_field** out, long* clamped) {
  if (auto s = require(u && out, "nlh_step: null argument")) return s;
  return translate([&] {
    nlheat::StepResult sr = nlheat::step(u->f, alpha, dt);
    if (clamped) *clamped = sr.clamped;
    *out = new nlh_field{std::move(sr.u)};
  });
}

nlh_status nlh_evolve(const nlh_field* u0, const nlh_evolve_config* cfg, nlh_series** out) {
  if (auto s = require(u0 && cfg && out, "nlh_evolve: null argument")) return s;
  if (auto s = require(cfg->n_diag_ps == 0 || cfg->diag_ps != nullptr,
                       "nlh_evolve: diag_ps is null but n_diag_ps > 0"))
    return s;
  nlh_status blow = NLH_OK;
  nlh_status tr = translate([&] {
    nlheat::EvolutionConfig c;
    c.alpha = cfg->alpha;
    c.t_end = cfg->t_end;
    c.cfl = cfg->cfl;
    c.record_interval = cfg->record_interval;
    c.diag_ps.assign(cfg->diag_ps, cfg->diag_ps + cfg->n_diag_ps);
    if (cfg->max_steps > 0) c.max_steps = cfg->max_steps;
    nlheat::EvolutionSeries s = nlheat::evolve(u0->f, c);
    if (s.blowup) {
      g_last_error = "blowup detected during evolve";
      blow = NLH_EBLOWUP;
    }
    *out = new nlh_series{std::move(s)};
  });
  return tr != NLH_OK ? tr : blow;
}

void nlh_series_free(nlh_series* s) { delete s; }

long nlh_series_count(const nlh_series* s) {
  return s ? static_cast<long>(s->s.times.size()) : 0;
}

size_t nlh_series_tracked_count(const nlh_series* s) { return s ? s->s.tracked_ps.size() : 0; }

nlh_status nlh_series_tracked_ps(const nlh_series* s, double* out, size_t len) {
  if (auto st = require(s != nullptr, "nlh_series_tracked_ps: null series")) return st;
  return copy_out(s->s.tracked_ps, out, len, "nlh_series_tracked_ps");
}

nlh_status nlh_series_column(const nlh_series* s, const char* name, double* out, size_t len) {
  if (auto st = require(s && name, "nlh_series_column: null argument")) return st;
  const std::vector<double>* col = nullptr;
  if (std::strcmp(name, "t") == 0) col = &s->s.times;
  else if (std::strcmp(name, "mass") == 0) col = &s->s.mass;
  else if (std::strcmp(name, "l2sq") == 0) col = &s->s.l2sq;
  else if (std::strcmp(name, "accumulated_l2") == 0) col = &s->s.accumulated_l2;
  else if (std::strcmp(name, "max_u") == 0) col = &s->s.max_u;
  if (!col) {
    g_last_error = std::string("nlh_series_column: unknown column ") + name;
    return NLH_EINVAL;
  }
  return copy_out(*col, out, len, "nlh_series_column");
}

nlh_status nlh_series_lp_column(const nlh_series* s, size_t p_index, double* out, size_t len) {
  if (auto st = require(s != nullptr, "nlh_series_lp_column: null series")) return st;
  if (p_index >= s->s.lp.size()) {
    g_last_error = "nlh_series_lp_column: index out of range";
    return NLH_EINVAL;
  }
  return copy_out(s->s.lp[p_index], out, len, "nlh_series_lp_column");
}

int nlh_series_blowup(const nlh_series* s, double* time_out) {
  if (!s || !s->s.blowup) return 0;
  if (time_out) *time_out = s->s.blowup_time;
  return 1;
}

long nlh_series_clamp_count(const nlh_series* s) { return s ? s->s.clamp_count : 0; }

long nlh_series_node_steps(const nlh_series* s) { return s ? s->s.node_steps : 0; }

long nlh_series_steps(const nlh_series* s) { return s ? s->s.steps : 0; }

double nlh_series_radial_uptick(const nlh_series* s) { return s ? s->s.radial_uptick : 0.0; }

nlh_status nlh_series_conservation_residual(const nlh_series* s, double alpha, double* out) {
  if (auto st = require(s && out, "nlh_series_conservation_residual: null argument")) return st;
  return translate([&] { *out = nlheat::conservation_residual(s->s, alpha); });
}

nlh_status nlh_series_monotonicity_report(const nlh_series* s, double p, double* out) {
  if (auto st = require(s && out, "nlh_series_monotonicity_report: null argument")) return st;
  return translate([&] { *out = nlheat::monotonicity_report(s->s, p); });
}

nlh_status nlh_series_csv(const nlh_series* s, char** out) {
  if (auto st = require(s && out, "nlh_series_csv: null argument")) return st;
  return translate([&] {
    const std::string text = nlheat::series_to_csv(s->s);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void nlh_string_free(char* s) { std::free(s); }

}  // extern "C"

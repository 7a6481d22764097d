// Batch front end over the shared-library C API: verification suites,
// evolution runs, and machine-readable reports.  One command per process;
// outputs are written atomically and are byte-identical for identical
// config + seed.
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlheat.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBlowup = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(nlh_status st, const char* what) {
  if (st != NLH_OK)
    die(kExitConfig, std::string(what) + ": " + nlh_status_name(st) + ": " +
                         nlh_last_error_message());
}

// Effective configuration: JSON file first, then flag overrides (flags win).
struct Config {
  json doc = json::object();

  bool has(const char* key) const { return doc.contains(key); }
  double num(const char* key, double fallback) const {
    return doc.value(key, fallback);
  }
  int integer(const char* key, int fallback) const { return doc.value(key, fallback); }
  std::string str(const char* key, const std::string& fallback) const {
    return doc.value(key, fallback);
  }
  std::vector<double> list(const char* key, std::vector<double> fallback) const {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_array()) die(kExitConfig, std::string(key) + " must be an array");
    std::vector<double> out;
    for (const auto& v : doc[key]) {
      if (!v.is_number()) die(kExitConfig, std::string(key) + " must hold numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) die(kExitConfig, "cannot open config file " + path);
  try {
    in >> cfg.doc;
  } catch (const json::exception& e) {
    die(kExitConfig, "config parse error: " + std::string(e.what()));
  }
  if (!cfg.doc.is_object()) die(kExitConfig, "config root must be a JSON object");
  return cfg;
}

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      die(kExitConfig, "bad exponent in --p list: '" + item + "'");
    }
  }
  if (out.empty()) die(kExitConfig, "--p list is empty");
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die(kExitConfig, "cannot open output file " + tmp);
    out << content;
    if (!out.flush()) die(kExitConfig, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    die(kExitConfig, "cannot rename " + tmp + " to " + path);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Key suffix for per-exponent JSON entries: %g keeps 1.5 as "1.5".
std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct KernelHandle {
  nlh_kernel* k = nullptr;
  ~KernelHandle() { nlh_kernel_free(k); }
};

void make_kernel(const std::string& name, double landau_L, KernelHandle& out) {
  if (name == "coulomb")
    check(nlh_kernel_coulomb(&out.k), "kernel");
  else if (name == "landau")
    check(nlh_kernel_landau(landau_L, &out.k), "kernel");
  else
    die(kExitConfig, "unknown kernel '" + name + "' (expected coulomb or landau)");
}

// The echo records the experiment, not the destination: dropping the output
// path keeps reruns byte-identical wherever they are written.
json config_echo(const Config& cfg) {
  json echo = cfg.doc;
  echo.erase("out");
  echo["version"] = nlh_version();
  return echo;
}

std::string csv_preamble(const Config& cfg) {
  json echo = cfg.doc;
  echo.erase("out");
  std::string s = "# nlheat ";
  s += nlh_version();
  s += "\n# config ";
  s += echo.dump();
  s += "\n";
  return s;
}

/* ---- verify-inequality ---- */

int cmd_verify(Config& cfg) {
  const std::string kernel = cfg.str("kernel", "coulomb");
  const int n = cfg.integer("grid_n", 2048);
  const double rmax = cfg.num("rmax", 40.0);
  const uint64_t seed = static_cast<uint64_t>(cfg.num("seed", 0));
  const double tol = cfg.num("tolerance", 1e-3);
  const int count = cfg.integer("count", kernel == "coulomb" ? 25 : 6);
  const std::vector<double> ps =
      cfg.list("p", kernel == "coulomb" ? std::vector<double>{0.5, 1.0, 1.5, 2.0, 3.0}
                                        : std::vector<double>{1.0, 2.0});
  const std::string out_path = cfg.str("out", "verify.csv");

  nlh_grid* grid = nullptr;
  check(nlh_grid_create(rmax, n, &grid), "grid");

  KernelHandle kh;
  make_kernel(kernel, cfg.num("landau_L", 1.0), kh);
  const double box_w = cfg.num("box_w", 6.0);
  const int box_n = cfg.integer("box_n", 20);

  std::string csv = csv_preamble(cfg);
  csv += "family,index,p,lhs,rhs,ratio\n";
  double worst = 0.0;
  long violations = 0;
  for (int idx = 0; idx < count; ++idx) {
    nlh_field* g = nullptr;
    check(nlh_field_suite_member(grid, seed, idx, &g), "suite member");
    for (double p : ps) {
      nlh_functional_report rep;
      if (kernel == "coulomb") {
        check(nlh_inequality_ratio(g, p, &rep), "inequality ratio");
      } else {
        check(nlh_inequality_ratio_3d(g, p, kh.k, box_w, box_n, &rep), "inequality ratio 3d");
      }
      if (rep.ratio > 1.0 + tol) ++violations;
      if (rep.ratio > worst) worst = rep.ratio;
      csv += nlh_suite_family_name(idx);
      csv += "," + std::to_string(idx) + "," + format_double(p) + "," +
             format_double(rep.lhs) + "," + format_double(rep.rhs) + "," +
             format_double(rep.ratio) + "\n";
    }
    nlh_field_free(g);
  }
  nlh_grid_free(grid);

  write_atomic(out_path, csv);
  std::printf("wrote %s: %d functions x %zu exponents, max ratio %.6f, violations %ld\n",
              out_path.c_str(), count, ps.size(), worst, violations);
  return violations == 0 ? kExitOk : kExitViolation;
}

/* ---- evolve ---- */

nlh_field* make_initial(const Config& cfg, nlh_grid* grid) {
  json init = cfg.doc.value("initial", json::object());
  if (!init.is_object()) die(kExitConfig, "initial must be an object");
  const std::string kind = init.value("kind", "gaussian");
  const double amplitude = init.value("amplitude", 1.0);
  nlh_field* f = nullptr;
  if (kind == "gaussian") {
    check(nlh_field_gaussian(grid, amplitude, init.value("sigma", 1.0), &f), "initial data");
  } else if (kind == "smoothed_ball") {
    check(nlh_field_smoothed_ball(grid, amplitude, init.value("radius", 1.0),
                                  init.value("width", 0.1), &f),
          "initial data");
  } else if (kind == "power_tail") {
    check(nlh_field_power_tail(grid, amplitude, init.value("s", 2.0), &f), "initial data");
  } else if (kind == "zero") {
    std::vector<double> zeros(nlh_grid_size(grid), 0.0);
    check(nlh_field_from_values(grid, zeros.data(), zeros.size(), &f), "initial data");
  } else {
    die(kExitConfig, "unknown initial kind '" + kind + "'");
  }
  return f;
}

int cmd_evolve(Config& cfg) {
  const int n = cfg.integer("grid_n", 1024);
  const double rmax = cfg.num("rmax", 8.0);
  const double alpha = cfg.num("alpha", 1.0);
  const double tend = cfg.num("tend", 0.5);
  const std::vector<double> ps = cfg.list("p", {1.5});
  const std::string out_path = cfg.str("out", "series.csv");

  nlh_grid* grid = nullptr;
  check(nlh_grid_create(rmax, n, &grid), "grid");
  nlh_field* u0 = make_initial(cfg, grid);

  nlh_evolve_config ec{};
  ec.alpha = alpha;
  ec.t_end = tend;
  ec.cfl = cfg.num("cfl", 0.25);
  ec.record_interval = cfg.num("record_interval", 0.0);
  ec.diag_ps = ps.data();
  ec.n_diag_ps = ps.size();
  ec.max_steps = static_cast<long>(cfg.num("max_steps", 0));

  nlh_series* s = nullptr;
  const nlh_status st = nlh_evolve(u0, &ec, &s);
  if (st != NLH_OK && st != NLH_EBLOWUP) {
    nlh_field_free(u0);
    nlh_grid_free(grid);
    die(kExitConfig, std::string("evolve: ") + nlh_status_name(st) + ": " +
                         nlh_last_error_message());
  }

  char* csv_body = nullptr;
  check(nlh_series_csv(s, &csv_body), "series csv");
  std::string csv = csv_preamble(cfg);
  csv += csv_body;
  nlh_string_free(csv_body);
  write_atomic(out_path, csv);

  double blow_t = 0.0;
  const bool blew = nlh_series_blowup(s, &blow_t) != 0;

  json summary;
  summary["config"] = config_echo(cfg);
  summary["records"] = nlh_series_count(s);
  summary["steps"] = nlh_series_steps(s);
  summary["clamp_count"] = nlh_series_clamp_count(s);
  summary["node_steps"] = nlh_series_node_steps(s);
  summary["radial_uptick"] = nlh_series_radial_uptick(s);
  summary["blowup"] = blew;
  if (blew) summary["blowup_time"] = blow_t;
  double res = 0.0;
  check(nlh_series_conservation_residual(s, alpha, &res), "conservation residual");
  summary["conservation_residual"] = res;
  json mono = json::object();
  for (double p : ps) {
    double up = 0.0;
    check(nlh_series_monotonicity_report(s, p, &up), "monotonicity report");
    mono["lp_" + short_double(p)] = up;
  }
  summary["monotonicity_uptick"] = mono;

  const std::string sum_path = out_path + ".summary.json";
  write_atomic(sum_path, summary.dump(2) + "\n");

  std::printf("wrote %s and %s: %ld records, %s\n", out_path.c_str(), sum_path.c_str(),
              nlh_series_count(s),
              blew ? "BLOWUP detected" : "completed");

  nlh_series_free(s);
  nlh_field_free(u0);
  nlh_grid_free(grid);
  return blew ? kExitBlowup : kExitOk;
}

/* ---- report ---- */

json kernel_admissibility(nlh_kernel* k, uint64_t seed, int delta_n) {
  json doc;
  double even = 0.0, psd = 0.0;
  check(nlh_kernel_check_evenness_psd(k, 2000, seed, &even, &psd), "evenness/psd");
  doc["max_evenness_violation"] = even;
  doc["min_quadratic_form"] = psd;
  const double origin[3] = {0.0, 0.0, 0.0};
  double delta = 0.0;
  check(nlh_kernel_check_delta_identity(k, origin, origin, 7.0, delta_n, &delta),
        "delta identity");
  doc["delta_identity_at_origin"] = delta;
  doc["delta_n_per_axis"] = delta_n;
  return doc;
}

int cmd_report(Config& cfg) {
  const uint64_t seed = static_cast<uint64_t>(cfg.num("seed", 0));
  const std::vector<double> ps = cfg.list("p", {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 8.0});
  const std::vector<double> alphas = cfg.list("alphas", {0.9, 0.98, 0.99});
  const std::vector<double> sharp_ns = cfg.list("sharpness_n", {16.0, 24.0});
  const double sharp_w = cfg.num("sharpness_w", 6.0);
  const int delta_n = cfg.integer("delta_n", 24);
  const std::string out_path = cfg.str("out", "report.json");

  json doc;
  doc["config"] = config_echo(cfg);

  json h = json::object();
  for (double p : ps) {
    double v = 0.0;
    check(nlh_threshold_h(p, &v), "threshold h");
    h["h_of_" + short_double(p)] = v;
  }
  doc["threshold"] = h;

  double qmin = 0.0, qmax = 0.0;
  nlh_decay_q_range(&qmin, &qmax);
  doc["decay_q_range"] = {{"min_exclusive", qmin}, {"max_inclusive", qmax}};

  json gam = json::object();
  for (double a : alphas) {
    nlh_threshold_result t;
    const nlh_status st = nlh_admissible_gamma(a, &t);
    json entry;
    if (st == NLH_OK) {
      entry["p_star"] = t.p_star;
      entry["gamma"] = t.gamma;
      entry["q_max"] = t.q_max;
    } else {
      entry["error"] = nlh_status_name(st);
      entry["message"] = nlh_last_error_message();
    }
    gam["alpha_" + short_double(a)] = entry;
  }
  doc["admissible_gamma"] = gam;

  json sharp = json::array();
  for (double dn : sharp_ns) {
    const int nn = static_cast<int>(dn);
    double ratio = 0.0;
    check(nlh_maxwellian_sharpness(1.0, sharp_w, nn, &ratio), "maxwellian sharpness");
    sharp.push_back({{"n_per_axis", nn}, {"ratio", ratio}});
  }
  doc["maxwellian_sharpness"] = sharp;

  json kernels = json::object();
  {
    KernelHandle c;
    make_kernel("coulomb", 1.0, c);
    kernels["coulomb"] = kernel_admissibility(c.k, seed, delta_n);
  }
  {
    KernelHandle l;
    make_kernel("landau", cfg.num("landau_L", 1.0), l);
    kernels["landau"] = kernel_admissibility(l.k, seed, delta_n);
  }
  doc["kernel_admissibility"] = kernels;

  write_atomic(out_path, doc.dump(2) + "\n");
  std::printf("wrote %s\n", out_path.c_str());
  return kExitOk;
}

/* ---- kernel-check ---- */

int cmd_kernel_check(Config& cfg) {
  const std::string kernel = cfg.str("kernel", "coulomb");
  const uint64_t seed = static_cast<uint64_t>(cfg.num("seed", 0));
  const int delta_n = cfg.integer("delta_n", 32);
  const std::string out_path = cfg.str("out", "kernel.json");

  KernelHandle kh;
  make_kernel(kernel, cfg.num("landau_L", 1.0), kh);

  json doc;
  doc["config"] = config_echo(cfg);
  doc["kernel"] = kernel;
  doc["homogeneity_degree"] = nlh_kernel_homogeneity_degree(kh.k);
  doc["checks"] = kernel_admissibility(kh.k, seed, delta_n);

  const double even = doc["checks"]["max_evenness_violation"].get<double>();
  const double psd = doc["checks"]["min_quadratic_form"].get<double>();
  const double delta = doc["checks"]["delta_identity_at_origin"].get<double>();
  const bool admissible = even <= 1e-12 && psd >= -1e-12 && std::abs(delta - 1.0) <= 0.1;
  doc["admissible"] = admissible;

  write_atomic(out_path, doc.dump(2) + "\n");
  std::printf("wrote %s: kernel %s is %s\n", out_path.c_str(), kernel.c_str(),
              admissible ? "admissible" : "NOT admissible");
  return admissible ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("nlheat ") + nlh_version() +
               ": radial non-local heat model and inequality verification"};
  app.require_subcommand(1);

  std::string config_path, out_path, kernel_name, p_list;
  bool has_seed = false, has_grid_n = false, has_rmax = false;
  bool has_alpha = false, has_tend = false;
  int64_t seed = 0;
  int grid_n = 0;
  double rmax = 0.0, alpha = 0.0, tend = 0.0;

  const auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--out", out_path, "output file path");
    cmd->add_option("--seed", seed, "RNG seed (default 0)");
    cmd->add_option("--grid-n", grid_n, "radial grid size");
    cmd->add_option("--rmax", rmax, "domain radius");
    cmd->add_option("--alpha", alpha, "reaction strength");
    cmd->add_option("--tend", tend, "evolution end time");
    cmd->add_option("--kernel", kernel_name, "kernel: coulomb or landau");
    cmd->add_option("--p", p_list, "comma-separated exponent list");
  };

  CLI::App* verify = app.add_subcommand("verify-inequality",
                                        "run the randomized power-integral inequality suite");
  CLI::App* evolve = app.add_subcommand("evolve", "evolve radial initial data");
  CLI::App* rep = app.add_subcommand("report", "emit threshold/sharpness/kernel JSON report");
  CLI::App* kcheck = app.add_subcommand("kernel-check", "kernel admissibility checks");
  for (CLI::App* c : {verify, evolve, rep, kcheck}) add_shared(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  has_seed = app.get_subcommands().front()->count("--seed") > 0;
  has_grid_n = app.get_subcommands().front()->count("--grid-n") > 0;
  has_rmax = app.get_subcommands().front()->count("--rmax") > 0;
  has_alpha = app.get_subcommands().front()->count("--alpha") > 0;
  has_tend = app.get_subcommands().front()->count("--tend") > 0;

  try {
    Config cfg = load_config(config_path);
    // Flags win over the config file.
    if (!out_path.empty()) cfg.doc["out"] = out_path;
    if (has_seed) cfg.doc["seed"] = seed;
    if (has_grid_n) cfg.doc["grid_n"] = grid_n;
    if (has_rmax) cfg.doc["rmax"] = rmax;
    if (has_alpha) cfg.doc["alpha"] = alpha;
    if (has_tend) cfg.doc["tend"] = tend;
    if (!kernel_name.empty()) cfg.doc["kernel"] = kernel_name;
    if (!p_list.empty()) cfg.doc["p"] = parse_p_list(p_list);

    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(evolve)) return cmd_evolve(cfg);
    if (app.got_subcommand(rep)) return cmd_report(cfg);
    if (app.got_subcommand(kcheck)) return cmd_kernel_check(cfg);
    return kExitConfig;
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}

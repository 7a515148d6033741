#include "cuweno/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuweno/errors.hpp"
#include "cuweno/harness.hpp"
#include "cuweno/kernels.hpp"
#include "cuweno/problems.hpp"
#include "cuweno/report.hpp"

namespace cuweno::cli {

namespace fs = std::filesystem;

namespace {

// Bad input detected after parsing; reported like a parse error.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SchemeFlags {
  std::string schemes = "weno4-za";
  std::optional<double> epsilon;
  std::optional<double> p;
  double q = 2.0;
};

struct RunFlags {
  std::string problem;
  std::optional<int> n, nx, ny;
  std::optional<double> cfl, t_final;
  std::optional<std::string> dt_rule;
  std::string output;
  bool reference = false;
  bool componentwise = false;
  long max_steps = -1;
};

struct StudyFlags {
  std::string problem = "advect-sine";
  std::vector<int> resolutions{10, 20, 40, 80, 160};
  std::optional<double> cfl;
  std::string output;
  bool componentwise = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

fs::path output_path(const std::string& requested, const std::string& fallback) {
  fs::path p = requested.empty() ? fs::path(fallback) : fs::path(requested);
  if (p.is_relative())
    if (const char* dir = std::getenv("CUWENO_OUTPUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  return p;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

SchemeConfig make_scheme(Scheme s, const ProblemSpec& spec, const SchemeFlags& f) {
  SchemeConfig cfg = scheme_for(spec, s);
  if (f.epsilon) cfg.epsilon = *f.epsilon;
  if (f.p) cfg.p = *f.p;
  cfg.q = f.q;
  cfg.validate();
  return cfg;
}

std::vector<Scheme> parse_schemes(const SchemeFlags& f) {
  std::vector<Scheme> out;
  for (const auto& name : split(f.schemes, ',')) out.push_back(parse_scheme(name));
  if (out.empty()) throw UsageError("--scheme: no scheme given");
  return out;
}

void add_scheme_flags(CLI::App* cmd, SchemeFlags& f, bool allow_list) {
  cmd->add_option("--scheme", f.schemes,
                  allow_list ? "scheme name, or a comma-separated list" : "scheme name")
      ->capture_default_str();
  cmd->add_option("--epsilon", f.epsilon, "weight regulariser (default per scheme)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--p", f.p, "ZA global-indicator scale (default per problem)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--q", f.q, "ZA exponent")->check(CLI::Range(1.0, 16.0))->capture_default_str();
}

// ---------------------------------------------------------------------------

int do_list(std::ostream& out) {
  out << "problems:\n";
  for (const auto& id : problem_ids()) {
    const ProblemSpec p = make_problem(id);
    out << "  " << std::left << std::setw(18) << id << p.description << '\n';
  }
  out << "schemes:\n";
  for (Scheme s : all_schemes())
    out << "  " << std::left << std::setw(18) << scheme_name(s)
        << "epsilon=" << sci(SchemeConfig::defaults(s).epsilon, 0) << '\n';
  return kOk;
}

ProblemSpec configure(const RunFlags& f) {
  ProblemSpec spec = make_problem(f.problem);
  if (f.ny && spec.grid.dim != 2) throw UsageError("--ny only applies to 2D problems");
  if (f.n || f.nx) spec = spec.with_resolution(f.n ? *f.n : *f.nx, f.ny.value_or(0));
  else if (f.ny) spec = spec.with_resolution(spec.grid.nx, *f.ny);
  if (f.cfl) spec.time.cfl = *f.cfl;
  if (f.t_final) spec.time.t_final = *f.t_final;
  if (f.dt_rule) spec.time.dt_rule = parse_dt_rule(*f.dt_rule);
  if (f.reference && (spec.grid.dim != 1 || spec.reference == ReferenceKind::none))
    throw UsageError("--reference: problem '" + spec.id + "' has no reference solution");
  spec.validate();
  return spec;
}

int do_run(const RunFlags& f, const SchemeFlags& sf, std::ostream& out) {
  ProblemSpec spec;
  std::vector<SchemeConfig> configs;
  try {
    spec = configure(f);
    for (Scheme s : parse_schemes(sf)) configs.push_back(make_scheme(s, spec, sf));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (configs.size() > 1 && !f.output.empty())
    throw UsageError("--output names a single file; omit it when running several schemes");

  RunOptions opt;
  opt.assembly.characteristic = !f.componentwise;
  opt.max_steps = f.max_steps;
  const bool compare = f.reference || (configs.size() > 1 && spec.grid.dim == 1 &&
                                       spec.reference != ReferenceKind::none);
  std::vector<double> ref;
  if (compare) ref = reference_solution(spec);

  SchemeErrors errors;
  for (const SchemeConfig& cfg : configs) {
    const RunResult r = run_problem(spec, cfg, opt);
    std::ostringstream csv;
    write_snapshot_csv(r.snapshot, csv);
    const fs::path path = output_path(
        f.output, spec.id + "-" + std::string(scheme_name(cfg.scheme)) + ".csv");
    write_file(path, csv.str());
    out << spec.id << " " << scheme_name(cfg.scheme) << ": " << r.steps << " steps to t="
        << r.snapshot.time << ", wrote " << path.string() << '\n';
    if (compare)
      errors.emplace_back(std::string(scheme_name(cfg.scheme)),
                          error_norms(r.snapshot.component(0), ref));
  }
  if (compare) {
    out << '\n';
    write_comparison_table(errors, out);
  }
  return kOk;
}

int do_study(const StudyFlags& f, const SchemeFlags& sf, std::ostream& out) {
  ProblemSpec spec;
  std::vector<SchemeConfig> configs;
  try {
    spec = make_problem(f.problem);
    if (spec.grid.dim != 1 || spec.reference == ReferenceKind::none)
      throw UsageError("study: problem '" + spec.id + "' has no 1D reference solution");
    if (f.cfl) spec.time.cfl = *f.cfl;
    for (int n : f.resolutions) spec.with_resolution(n).validate();
    for (Scheme s : parse_schemes(sf)) configs.push_back(make_scheme(s, spec, sf));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (configs.size() > 1 && !f.output.empty())
    throw UsageError("--output names a single file; omit it when studying several schemes");

  RunOptions opt;
  opt.assembly.characteristic = !f.componentwise;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    const ErrorReport rep = convergence_study(spec, configs[k], f.resolutions, opt);
    if (k) out << '\n';
    write_error_table(rep, out);
    std::ostringstream csv;
    write_error_csv(rep, csv);
    const fs::path path =
        output_path(f.output, "study-" + spec.id + "-" + rep.scheme + ".csv");
    write_file(path, csv.str());
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

template <std::size_t K>
void put_omega(std::ostream& out, const WeightVector<K>& w) {
  for (std::size_t k = 0; k < K; ++k)
    out << "omega" << k << std::string(k < 10 ? 3 : 2, ' ') << sci(w[k], 16) << '\n';
}

void put(std::ostream& out, const char* name, double v) {
  out << std::left << std::setw(9) << name << sci(v, 16) << '\n';
}

int do_inspect(const std::vector<double>& window, const SchemeFlags& sf, std::ostream& out) {
  SchemeConfig cfg;
  try {
    const auto schemes = parse_schemes(sf);
    if (schemes.size() != 1) throw UsageError("inspect takes exactly one scheme");
    cfg = SchemeConfig::defaults(schemes.front());
    if (sf.epsilon) cfg.epsilon = *sf.epsilon;
    if (sf.p) cfg.p = *sf.p;
    cfg.q = sf.q;
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::size_t need = cfg.window_size();
  if (window.size() != need)
    throw UsageError("--window: " + std::string(scheme_name(cfg.scheme)) + " needs " +
                     std::to_string(need) + " values, got " + std::to_string(window.size()));
  for (double v : window)
    if (!std::isfinite(v)) throw UsageError("--window: values must be finite");

  out << std::left << std::setw(9) << "scheme" << scheme_name(cfg.scheme) << '\n';
  switch (cfg.scheme) {
    case Scheme::weno3_js:
    case Scheme::weno3_z: {
      const double b0 = (window[0] - window[1]) * (window[0] - window[1]);
      const double b1 = (window[1] - window[2]) * (window[1] - window[2]);
      put(out, "beta0", b0);
      put(out, "beta1", b1);
      put(out, "tau3", tau3(b0, b1));
      put_omega(out, cfg.scheme == Scheme::weno3_js ? weights_js3(b0, b1, cfg.epsilon)
                                                    : weights_z3(b0, b1, tau3(b0, b1),
                                                                 cfg.epsilon));
      break;
    }
    case Scheme::weno4_js:
    case Scheme::weno4_za:
    case Scheme::fd4: {
      const StencilWindow w{window[0], window[1], window[2], window[3]};
      const SmoothnessSet s = smoothness_set(w, cfg.p);
      put(out, "beta0", s.beta0);
      put(out, "beta1", s.beta1);
      put(out, "beta_d", s.beta_d);
      put(out, "beta2", s.beta2);
      put(out, "beta4", s.beta4);
      put(out, "tau4", s.tau4);
      put_omega(out, weights4(w, cfg));
      break;
    }
    case Scheme::weno5_js: {
      const std::span<const double, 5> f(window.data(), 5);
      const Weno5Indicators ind = beta_weno5(f);
      put(out, "beta0", ind.beta[0]);
      put(out, "beta1", ind.beta[1]);
      put(out, "beta2", ind.beta[2]);
      put_omega(out, weights_js5(ind, cfg.epsilon));
      break;
    }
  }
  put(out, "flux", reconstruct_interface(window, cfg));
  return kOk;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Finite-difference WENO solver for advection and Euler benchmarks", "cuweno"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list problems and schemes");

  RunFlags rf;
  SchemeFlags run_sf;
  auto* run = app.add_subcommand("run", "run one problem and write a snapshot CSV");
  run->add_option("--problem", rf.problem, "problem id (see `list`)")->required();
  add_scheme_flags(run, run_sf, true);
  auto* n_opt = run->add_option("--n", rf.n, "cells in x (2D keeps the aspect ratio)");
  run->add_option("--nx", rf.nx, "cells in x")->excludes(n_opt);
  run->add_option("--ny", rf.ny, "cells in y (2D only)");
  run->add_option("--cfl", rf.cfl, "CFL number")->check(CLI::Range(0.0, 1.0));
  run->add_option("--t-final", rf.t_final, "final time")->check(CLI::PositiveNumber);
  run->add_option("--dt-rule", rf.dt_rule, "time-step rule")
      ->check(CLI::IsMember({"cfl", "dx43"}));
  run->add_option("--output", rf.output, "snapshot CSV path");
  run->add_flag("--reference", rf.reference, "report errors against the reference solution");
  run->add_flag("--componentwise", rf.componentwise,
                "reconstruct conserved components instead of characteristic fields");
  run->add_option("--max-steps", rf.max_steps, "stop after this many steps");

  StudyFlags stf;
  SchemeFlags study_sf;
  auto* study = app.add_subcommand("study", "convergence study over a resolution ladder");
  study->add_option("--problem", stf.problem, "1D problem id")->capture_default_str();
  add_scheme_flags(study, study_sf, true);
  study->add_option("--resolutions", stf.resolutions, "comma-separated cell counts")
      ->delimiter(',')
      ->capture_default_str();
  study->add_option("--cfl", stf.cfl, "CFL number")->check(CLI::Range(0.0, 1.0));
  study->add_option("--output", stf.output, "error CSV path");
  study->add_flag("--componentwise", stf.componentwise,
                  "reconstruct conserved components instead of characteristic fields");

  std::vector<double> window;
  SchemeFlags insp_sf;
  auto* inspect = app.add_subcommand("inspect", "print indicators and weights for one window");
  inspect->add_option("--window", window, "comma-separated samples f_{i-1},f_i,...")
      ->delimiter(',')
      ->required();
  add_scheme_flags(inspect, insp_sf, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  }

  try {
    if (list->parsed()) return do_list(out);
    if (run->parsed()) return do_run(rf, run_sf, out);
    if (study->parsed()) return do_study(stf, study_sf, out);
    if (inspect->parsed()) return do_inspect(window, insp_sf, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kUsage;
}

}  // namespace cuweno::cli

// mpkit command-line tool: Marchenko-Pastur queries, GK/CPV limit curves,
// seeded Monte Carlo sweeps, dataset analysis, and figure data bundles.
// All output is machine-readable CSV/JSON; exit codes: 0 success, 2 usage,
// 1 computation or data error (never 0 on partial failure).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mpkit/dataset.hpp"
#include "mpkit/mp_law.hpp"
#include "mpkit/sweep.hpp"

namespace {

constexpr uint64_t kFallbackSeed = 0x5EEDBA5Eu;

uint64_t default_seed() {
  const char* env = std::getenv("MPKIT_SEED");
  if (!env || !*env) return kFallbackSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  if (end == nullptr || *end != '\0')
    throw CLI::ValidationError("MPKIT_SEED", std::string("not an integer: '") + env + "'");
  return static_cast<uint64_t>(v);
}

struct Grid {
  double lo = 0, hi = 0;
  int steps = 0;
  std::vector<double> points() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(steps));
    if (steps == 1) {
      out.push_back(lo);
      return out;
    }
    for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * i / (steps - 1));
    return out;
  }
};

Grid parse_grid(const std::string& text) {
  Grid g;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.steps, &tail) != 3 ||
      g.steps < 1 || (g.steps > 1 && !(g.hi > g.lo)))
    throw CLI::ValidationError("grid", "expected lo:hi:steps with steps >= 1, got '" + text + "'");
  return g;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Writes to the path, or to stdout when the path is empty.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  writer(out);
}

// ---- mp ----

int cmd_mp(double c, double sigma2, std::optional<double> eval_x, std::optional<double> quantile_u,
           const std::string& grid_text) {
  const mpkit::MPLaw law(c, sigma2);
  if (eval_x) {
    std::cout << "x,pdf,cdf,mass_share\n"
              << fmt(*eval_x) << ',' << fmt(mp_pdf(law, *eval_x)) << ','
              << fmt(mp_cdf(law, *eval_x)) << ',' << fmt(mp_mass_share(law, *eval_x)) << '\n';
  } else if (quantile_u) {
    std::cout << "u,quantile\n" << fmt(*quantile_u) << ',' << fmt(mp_quantile(law, *quantile_u))
              << '\n';
  } else {
    const Grid grid = parse_grid(grid_text);
    std::cout << "x,pdf,cdf,mass_share\n";
    for (double x : grid.points())
      std::cout << fmt(x) << ',' << fmt(mp_pdf(law, x)) << ',' << fmt(mp_cdf(law, x)) << ','
                << fmt(mp_mass_share(law, x)) << '\n';
  }
  return 0;
}

// ---- limits ----

int cmd_limits(const std::string& c_grid_text, const std::vector<double>& rho_list,
               std::optional<double> t, const std::string& out_path) {
  const Grid c_grid = parse_grid(c_grid_text);
  with_output(out_path, [&](std::ostream& out) {
    out << (t ? "c,rho,gk_limit,cpv_limit\n" : "c,rho,gk_limit\n");
    for (double c : c_grid.points()) {
      for (double rho : rho_list) {
        out << fmt(c) << ',' << fmt(rho) << ',' << fmt(mpkit::gk_limit(c, rho));
        if (t) out << ',' << fmt(mpkit::cpv_limit(c, rho, *t));
        out << '\n';
      }
    }
  });
  return 0;
}

// ---- simulate ----

int cmd_simulate(const mpkit::SweepSpec& spec, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto gk_rows = mpkit::run_gk_sweep(spec);
  bool any_error = false;
  {
    std::ofstream out(std::filesystem::path(out_dir) / "gk_sweep.csv");
    if (!out) throw std::runtime_error("cannot write gk_sweep.csv in '" + out_dir + "'");
    mpkit::write_gk_sweep_csv(gk_rows, out);
  }
  for (const auto& r : gk_rows) any_error |= !r.error.empty();
  if (spec.t) {
    const auto cpv_rows = mpkit::run_cpv_sweep(spec);
    std::ofstream out(std::filesystem::path(out_dir) / "cpv_sweep.csv");
    if (!out) throw std::runtime_error("cannot write cpv_sweep.csv in '" + out_dir + "'");
    mpkit::write_cpv_sweep_csv(cpv_rows, out);
    for (const auto& r : cpv_rows) any_error |= !r.error.empty();
  }
  if (any_error) {
    std::cerr << "simulate: one or more cells failed; see the status column\n";
    return 1;
  }
  return 0;
}

// ---- analyze ----

int cmd_analyze(const std::string& input, double t, const std::string& format,
                const std::string& out_path) {
  const mpkit::Dataset ds = mpkit::read_csv(input);
  const mpkit::RetentionReport report = mpkit::analyze(ds, t);
  const auto fmt_kind = format == "json" ? mpkit::ReportFormat::kJson : mpkit::ReportFormat::kCsv;
  with_output(out_path, [&](std::ostream& out) { mpkit::write_reports({report}, fmt_kind, out); });
  return 0;
}

// ---- figure ----

// Desk-scale defaults; the manifest records the grids actually used so the
// reduction from the full-scale setting is explicit in every bundle.
const std::vector<double> kFigureRhos{0.0, 0.3, 0.5, 0.8};
const std::vector<int> kFigurePGrid{25,  50,  100, 150, 200,  300,  400,  500,
                                    650, 800, 1000, 1250, 1500, 1750, 2000};
constexpr int kFigureN = 500;
constexpr double kFigureT = 0.7;

struct FigureOverrides {
  std::optional<int> n;
  std::vector<int> p_values;
  std::optional<int> replications;
};

nlohmann::json manifest_base(int which, const std::string& note) {
  nlohmann::json m;
  m["figure"] = which;
  m["note"] = note;
  m["files"] = nlohmann::json::array();
  return m;
}

int cmd_figure(int which, const std::string& out_dir, uint64_t seed,
               const FigureOverrides& overrides) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  nlohmann::json manifest;
  bool any_error = false;

  auto curve_path = [&](const std::string& stem, double rho) {
    return "fig" + std::to_string(which) + "_" + stem + "rho" + fmt_label(rho) + ".csv";
  };

  if (which == 2 || which == 5) {
    const Grid c_grid{0.04, 20.0, 500};
    manifest = manifest_base(which, which == 2 ? "GK limit curves over c"
                                               : "GK vs CPV limit curves over c");
    manifest["c_grid"] = {{"lo", c_grid.lo}, {"hi", c_grid.hi}, {"steps", c_grid.steps}};
    manifest["rho_values"] = kFigureRhos;
    if (which == 5) manifest["t"] = kFigureT;
    for (double rho : kFigureRhos) {
      const std::string gk_name = curve_path(which == 5 ? "gk_" : "", rho);
      std::ofstream out(fs::path(out_dir) / gk_name);
      out << "c,gk_limit\n";
      for (double c : c_grid.points()) out << fmt(c) << ',' << fmt(mpkit::gk_limit(c, rho)) << '\n';
      manifest["files"].push_back(gk_name);
      if (which == 5) {
        const std::string cpv_name = curve_path("cpv_", rho);
        std::ofstream cpv_out(fs::path(out_dir) / cpv_name);
        cpv_out << "c,cpv_limit\n";
        for (double c : c_grid.points())
          cpv_out << fmt(c) << ',' << fmt(mpkit::cpv_limit(c, rho, kFigureT)) << '\n';
        manifest["files"].push_back(cpv_name);
      }
    }
  } else if (which == 3 || which == 4) {
    mpkit::SweepSpec spec;
    spec.n = overrides.n.value_or(kFigureN);
    spec.p_values = overrides.p_values.empty() ? kFigurePGrid : overrides.p_values;
    spec.replications = overrides.replications.value_or(1);
    spec.seed = seed;
    manifest = manifest_base(which, which == 3
                                        ? "normalized GK retention of sample correlation spectra"
                                        : "CPV fraction of centered covariance spectra");
    manifest["n"] = spec.n;
    manifest["p_values"] = spec.p_values;
    manifest["rho_values"] = kFigureRhos;
    manifest["replications"] = spec.replications;
    manifest["seed"] = seed;
    for (double rho : kFigureRhos) {
      spec.rho_values = {rho};
      const std::string name = curve_path("", rho);
      std::ofstream out(fs::path(out_dir) / name);
      if (which == 3) {
        const auto rows = mpkit::run_gk_sweep(spec);
        mpkit::write_gk_sweep_csv(rows, out);
        for (const auto& r : rows) any_error |= !r.error.empty();
      } else {
        spec.t = kFigureT;
        manifest["t"] = kFigureT;
        const auto rows = mpkit::run_cpv_sweep(spec);
        mpkit::write_cpv_sweep_csv(rows, out);
        for (const auto& r : rows) any_error |= !r.error.empty();
      }
      manifest["files"].push_back(name);
    }
  }

  std::ofstream mout(fs::path(out_dir) / "manifest.json");
  if (!mout) throw std::runtime_error("cannot write manifest.json in '" + out_dir + "'");
  mout << manifest.dump(2) << '\n';
  if (any_error) {
    std::cerr << "figure: one or more cells failed; see the status columns\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marchenko-Pastur laws, spectral stopping rules, and their limits"};
  app.require_subcommand(1);

  // mp
  double mp_c = 1.0, mp_sigma2 = 1.0;
  std::optional<double> mp_eval, mp_quant;
  std::string mp_grid;
  auto* mp = app.add_subcommand("mp", "evaluate the Marchenko-Pastur law");
  mp->add_option("--c", mp_c, "index c > 0")->required();
  mp->add_option("--sigma2", mp_sigma2, "scale sigma^2 > 0")->capture_default_str();
  auto* query = mp->add_option_group("query", "exactly one query");
  query->add_option("--eval", mp_eval, "print pdf, cdf, mass share at x");
  query->add_option("--quantile", mp_quant, "print the generalized inverse at u in [0,1]");
  query->add_option("--grid", mp_grid, "emit rows (x,pdf,cdf,mass_share) over lo:hi:steps");
  query->require_option(1);

  // limits
  std::string limits_c_grid, limits_out;
  std::vector<double> limits_rhos;
  std::optional<double> limits_t;
  auto* limits = app.add_subcommand("limits", "GK (and CPV) limit curves over a c grid");
  limits->add_option("--c-grid", limits_c_grid, "c grid as lo:hi:steps")->required();
  limits->add_option("--rho-list", limits_rhos, "comma-separated rho values in [0,1)")
      ->required()->delimiter(',');
  limits->add_option("--t", limits_t, "CPV threshold in (0,1); adds a cpv_limit column");
  limits->add_option("--out", limits_out, "output file (default: stdout)");

  // simulate
  mpkit::SweepSpec spec;
  std::optional<double> sim_t;
  std::optional<uint64_t> sim_seed;
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo GK/CPV sweep over (p, rho) cells");
  simulate->add_option("--n", spec.n, "sample size")->required();
  simulate->add_option("--p-list", spec.p_values, "comma-separated dimensions")
      ->required()->delimiter(',');
  simulate->add_option("--rho-list", spec.rho_values, "comma-separated rho values")
      ->required()->delimiter(',');
  simulate->add_option("--t", sim_t, "CPV threshold; enables the CPV sweep");
  simulate->add_option("--reps", spec.replications, "replications per cell")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "RNG seed (default: MPKIT_SEED or builtin)");
  simulate->add_option("--out", sim_out, "output directory")->required();

  // analyze
  std::string an_input, an_format = "csv", an_out;
  double an_t = 0.7;
  auto* analyze = app.add_subcommand("analyze", "retention report for a CSV dataset");
  analyze->add_option("--input", an_input, "CSV file, rows = observations")->required();
  analyze->add_option("--t", an_t, "CPV threshold")->capture_default_str();
  analyze->add_option("--format", an_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  analyze->add_option("--out", an_out, "output file (default: stdout)");

  // figure
  int fig_which = 0;
  std::string fig_out;
  std::optional<uint64_t> fig_seed;
  FigureOverrides fig_overrides;
  auto* figure = app.add_subcommand("figure", "plot-ready data bundle for a figure");
  figure->add_option("--which", fig_which, "figure number")->required()
      ->check(CLI::IsMember({2, 3, 4, 5}));
  figure->add_option("--out", fig_out, "output directory")->required();
  figure->add_option("--seed", fig_seed, "RNG seed (default: MPKIT_SEED or builtin)");
  figure->add_option("--n", fig_overrides.n, "override the desk-scale sample size (figures 3, 4)");
  figure->add_option("--p-list", fig_overrides.p_values, "override the desk-scale p grid")
      ->delimiter(',');
  figure->add_option("--reps", fig_overrides.replications, "override replications per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mp) return cmd_mp(mp_c, mp_sigma2, mp_eval, mp_quant, mp_grid);
    if (*limits) return cmd_limits(limits_c_grid, limits_rhos, limits_t, limits_out);
    if (*simulate) {
      spec.t = sim_t;
      spec.seed = sim_seed ? *sim_seed : default_seed();
      return cmd_simulate(spec, sim_out);
    }
    if (*analyze) return cmd_analyze(an_input, an_t, an_format, an_out);
    if (*figure)
      return cmd_figure(fig_which, fig_out, fig_seed ? *fig_seed : default_seed(), fig_overrides);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

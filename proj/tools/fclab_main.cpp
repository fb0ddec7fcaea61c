// fclab: tabulate, verify and simulate the Fuss-Catalan density family.
//
// Subcommands: moments, density, verify, simulate, stransform. Seeded
// subcommands are bit-reproducible across runs and thread counts; worker
// count is capped by FC_LAB_THREADS.

#include "fclab/combinatorics.hpp"
#include "fclab/density.hpp"
#include "fclab/free_probability.hpp"
#include "fclab/io.hpp"
#include "fclab/rmt.hpp"
#include "fclab/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

std::string timestamp_dir_name(const std::string& subcommand) {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc;
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm_utc);
  return "out/" + std::string(buf) + "-" + subcommand;
}

std::filesystem::path resolve_out_dir(const std::string& out_flag, const std::string& subcommand) {
  const std::filesystem::path dir =
      out_flag.empty() ? std::filesystem::path(timestamp_dir_name(subcommand))
                       : std::filesystem::path(out_flag);
  std::filesystem::create_directories(dir);
  return dir;
}

struct ManifestWriter {
  std::string subcommand;
  json parameters;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string id() const {
    return fclab::run_id(subcommand + "|" + parameters.dump());
  }

  void write(const std::filesystem::path& dir) const {
    json m;
    m["schema"] = fclab::kSchemaId;
    m["kind"] = "manifest";
    m["tool"] = {{"name", "fclab"}, {"version", kToolVersion}};
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["seed"] = seed;
    m["run_id"] = id();
    m["outputs"] = outputs;
    const auto elapsed = std::chrono::steady_clock::now() - start;
    m["wall_clock_seconds"] = std::chrono::duration<double>(elapsed).count();
    fclab::write_text_file((dir / "manifest.json").string(), m.dump(2) + "\n");
  }
};

// ---------------------------------------------------------------------------
// moments

int cmd_moments(int s, const std::string& t_text, int k_max, const std::string& format) {
  const fclab::Rational t = fclab::rational_from_string(t_text);
  const fclab::MomentSequence seq = fclab::moment_sequence({s, t}, k_max);
  if (format == "json") {
    json j;
    j["schema"] = fclab::kSchemaId;
    j["kind"] = "moments";
    j["params"] = {{"s", s}, {"t", fclab::to_fraction_string(t)}, {"kmax", k_max}};
    std::vector<std::string> values;
    for (const auto& m : seq.values) values.push_back(fclab::to_fraction_string(m));
    j["moments"] = values;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k,moment\n";
    for (size_t k = 0; k < seq.values.size(); ++k)
      std::cout << k << ',' << fclab::to_fraction_string(seq.values[k]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// density

int cmd_density(int s, const std::string& method_name, double x_min, double x_max, int points,
                const std::string& spacing, int nodes, std::int64_t samples, std::uint64_t seed,
                double floor_fraction, const std::string& out_flag) {
  fclab::GridConfig config;
  config.seed = seed;
  config.floor_fraction = floor_fraction;
  std::string method = method_name;
  if (method == "auto") method = (s == 1) ? "closed" : (s <= 5 ? "quadrature" : "mc");
  if (method == "closed")
    config.method = fclab::DensityMethod::kClosedForm;
  else if (method == "quadrature") {
    config.method = fclab::DensityMethod::kQuadrature;
    config.resolution = nodes;
  } else if (method == "mc") {
    config.method = fclab::DensityMethod::kMonteCarlo;
    config.resolution = samples;
  } else {
    throw CLI::ValidationError("--method", "expected closed|quadrature|mc|auto");
  }

  const double edge = fclab::to_double(fclab::support_edge(s));
  if (x_max <= 0) x_max = edge;
  if (x_min <= 0) x_min = floor_fraction * edge;
  if (!(x_min < x_max)) throw CLI::ValidationError("--xmin", "requires xmin < xmax");

  Eigen::ArrayXd grid(points);
  if (spacing == "clustered") {
    const double w_lo = fclab::grid_unwarp(x_min / edge);
    const double w_hi = fclab::grid_unwarp(std::min(x_max / edge, 1.0));
    for (int i = 0; i < points; ++i) {
      const double w = w_lo + (w_hi - w_lo) * i / (points - 1.0);
      grid[i] = edge * fclab::grid_warp(w);
    }
  } else {
    for (int i = 0; i < points; ++i)
      grid[i] = x_min + (x_max - x_min) * i / (points - 1.0);
  }

  ManifestWriter manifest;
  manifest.subcommand = "density";
  manifest.seed = seed;
  manifest.parameters = {{"s", s},           {"method", method},   {"xmin", x_min},
                         {"xmax", x_max},    {"points", points},   {"spacing", spacing},
                         {"nodes", nodes},   {"samples", samples}, {"seed", seed},
                         {"floor", floor_fraction}};

  const fclab::DensityEstimate est = fclab::density_grid(s, grid, config);

  const auto dir = resolve_out_dir(out_flag, "density");
  const std::string id = manifest.id();
  fclab::write_text_file((dir / "density.csv").string(),
                         fclab::density_to_csv(est, "manifest.json", id));
  fclab::write_text_file((dir / "density.json").string(),
                         fclab::density_to_json(est, "manifest.json", id).dump(2) + "\n");
  manifest.outputs = {"density.csv", "density.json"};
  manifest.write(dir);
  std::cerr << "density: wrote " << (dir / "density.csv").string() << " (" << points
            << " points, method " << method << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  bool passed = false;
  double margin = 0.0;  // consumed fraction of the tolerance; < 1 passes
  std::string detail;
};

void run_moment_suite(int s, std::uint64_t seed, std::vector<CheckResult>& results) {
  const bool use_mc = s >= 4;
  fclab::GridConfig config;
  if (use_mc) {
    config.method = fclab::DensityMethod::kMonteCarlo;
    config.resolution = 1000000;
    config.seed = seed;
    config.floor_fraction = 1e-16;
  } else if (s == 1) {
    config.method = fclab::DensityMethod::kClosedForm;
    config.floor_fraction = 1e-16;
  } else {
    config.method = fclab::DensityMethod::kQuadrature;
    config.resolution = 64;
    config.floor_fraction = 1e-9;
  }
  const Eigen::ArrayXd grid = fclab::clustered_grid(s, use_mc ? 120 : 240, use_mc || s == 1 ? 0.003 : 0.05);
  const fclab::DensityEstimate est = fclab::density_grid(s, grid, config);
  for (int k = 0; k <= 5; ++k) {
    const auto rec = fclab::recover_moment(est, k);
    const double reference = fclab::fuss_catalan(s, k).convert_to<double>();
    CheckResult r;
    r.name = "moments/s=" + std::to_string(s) + "/k=" + std::to_string(k);
    if (use_mc) {
      const double band = 3.0 * rec.std_error + 0.005 * reference;
      r.margin = std::abs(rec.value - reference) / band;
      r.detail = "recovered " + std::to_string(rec.value) + " vs " + std::to_string(reference) +
                 " (3-sigma band)";
    } else {
      r.margin = std::abs(rec.value - reference) / (0.02 * reference);
      r.detail = "recovered " + std::to_string(rec.value) + " vs " + std::to_string(reference) +
                 " (2% band)";
    }
    r.passed = r.margin < 1.0;
    results.push_back(r);
  }
}

void run_sigma_pi_suite(int s, std::uint64_t seed, std::vector<CheckResult>& results) {
  if (s < 2 || s > 3) throw std::invalid_argument("verify sigma-pi: s must be 2 or 3");
  const double edge = fclab::to_double(fclab::support_edge(s));
  for (int i = 0; i < 10; ++i) {
    const double x = edge * (0.08 + 0.84 * i / 9.0);
    const auto quad = fclab::pi_s_quadrature(s, x, 48);
    const std::int64_t n_mc = 1000000;
    const double sigma = fclab::sigma_s(s, std::sqrt(x), fclab::DensityMethod::kMonteCarlo, n_mc,
                                        fclab::SplitMix64::derive_seed(seed, i));
    const auto mc = fclab::pi_s_monte_carlo(s, x, n_mc,
                                            fclab::SplitMix64::derive_seed(seed, i));
    const double band = 3.0 * mc.std_error + quad.error_estimate + 1e-12;
    CheckResult r;
    r.name = "sigma-pi/s=" + std::to_string(s) + "/x=" + std::to_string(x);
    r.margin = std::abs(sigma / std::sqrt(x) - quad.value) / band;
    r.passed = r.margin < 1.0;
    r.detail = "sigma(sqrt x)/sqrt x = " + std::to_string(sigma / std::sqrt(x)) + ", pi = " +
               std::to_string(quad.value);
    results.push_back(r);
  }
}

void run_stransform_suite(int s, std::vector<CheckResult>& results) {
  const int order = 8;
  const auto catalan = fclab::moment_sequence({1, 1}, order + 1);
  const auto base = fclab::s_transform(catalan, order);
  const auto moments = fclab::moment_sequence({s, 1}, order + 1);
  const auto lhs = fclab::s_transform(moments, order);
  const auto rhs = base.pow(s);
  CheckResult r;
  r.name = "stransform/s=" + std::to_string(s);
  r.passed = lhs == rhs;
  r.margin = r.passed ? 0.0 : 2.0;
  r.detail = "exact coefficient match to order " + std::to_string(order);
  results.push_back(r);
}

void run_rtransform_suite(std::vector<CheckResult>& results) {
  const int order = 8;
  const auto base = fclab::r_transform(fclab::moment_sequence({1, 1}, order), order);
  for (const auto& t : {fclab::Rational(1, 2), fclab::Rational(1), fclab::Rational(2)}) {
    auto scaled = base;
    scaled *= t;
    const auto lhs = fclab::r_transform(fclab::moment_sequence({1, t}, order), order);
    CheckResult r;
    r.name = "rtransform/t=" + fclab::to_fraction_string(t);
    r.passed = lhs == scaled;
    r.margin = r.passed ? 0.0 : 2.0;
    r.detail = "free cumulants scale linearly in t, exact to order " + std::to_string(order);
    results.push_back(r);
  }
}

void run_cf_identity_suite(int s, std::vector<CheckResult>& results) {
  for (double xi : {0.3, 1.0, 2.0}) {
    const double lhs = fclab::characteristic_series(s, xi);
    const double rhs = fclab::hypergeometric_pfq(fclab::characteristic_pfq_spec(s, xi), 400).value;
    CheckResult r;
    r.name = "cf-identity/s=" + std::to_string(s) + "/xi=" + std::to_string(xi);
    r.margin = std::abs(lhs - rhs) / 1e-10;
    r.passed = r.margin < 1.0;
    r.detail = "series " + std::to_string(lhs) + " vs pFq " + std::to_string(rhs);
    results.push_back(r);
  }
}

void run_euler_suite(int s, std::vector<CheckResult>& results) {
  if (s < 2 || s > 3) throw std::invalid_argument("verify euler-integral: s must be 2 or 3");
  for (double xi : {0.3, 1.0}) {
    const double lhs = fclab::euler_integral_value(s, xi, 32);
    const double rhs = fclab::hypergeometric_pfq(fclab::characteristic_pfq_spec(s, xi), 400).value;
    CheckResult r;
    r.name = "euler-integral/s=" + std::to_string(s) + "/xi=" + std::to_string(xi);
    r.margin = std::abs(lhs - rhs) / 1e-6;
    r.passed = r.margin < 1.0;
    r.detail = "quadrature " + std::to_string(lhs) + " vs pFq " + std::to_string(rhs);
    results.push_back(r);
  }
}

int cmd_verify(const std::string& suite, int s, std::uint64_t seed, const std::string& out_flag) {
  std::vector<CheckResult> results;
  const bool all = suite == "all";
  if (all || suite == "moments") run_moment_suite(s, seed, results);
  if (all || suite == "sigma-pi") {
    if (all && (s < 2 || s > 3))
      run_sigma_pi_suite(2, seed, results);
    else
      run_sigma_pi_suite(s, seed, results);
  }
  if (all || suite == "stransform") run_stransform_suite(s, results);
  if (all || suite == "rtransform") run_rtransform_suite(results);
  if (all || suite == "cf-identity") run_cf_identity_suite(s, results);
  if (all || suite == "euler-integral") {
    if (all && (s < 2 || s > 3))
      run_euler_suite(2, results);
    else
      run_euler_suite(s, results);
  }
  if (results.empty())
    throw CLI::ValidationError("--suite",
                               "expected moments|sigma-pi|stransform|rtransform|cf-identity|"
                               "euler-integral|all");

  bool all_passed = true;
  json checks = json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"margin", r.margin},
                      {"detail", r.detail}});
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << " (margin " << r.margin << ")\n";
  }
  ManifestWriter manifest;
  manifest.subcommand = "verify";
  manifest.seed = seed;
  manifest.parameters = {{"suite", suite}, {"s", s}, {"seed", seed}};

  json report;
  report["schema"] = fclab::kSchemaId;
  report["kind"] = "verify_report";
  report["suite"] = suite;
  report["s"] = s;
  report["seed"] = seed;
  report["passed"] = all_passed;
  report["checks"] = checks;
  report["manifest_ref"] = "manifest.json";
  report["run_id"] = manifest.id();
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out_flag.empty()) {
    const auto dir = resolve_out_dir(out_flag, "verify");
    fclab::write_text_file((dir / "verify_report.json").string(), text);
    manifest.outputs = {"verify_report.json"};
    manifest.write(dir);
  }
  return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(int s, int n_dim, int trials, int k_max, const std::string& variant,
                 std::uint64_t seed, int bins, bool histogram, const std::string& out_flag) {
  fclab::RmtExperimentConfig config;
  config.s = s;
  config.n_dim = n_dim;
  config.trials = trials;
  config.k_max = k_max;
  config.seed = seed;
  config.variant = (variant == "power") ? fclab::RmtVariant::kPower
                                        : fclab::RmtVariant::kDistinctFactors;

  ManifestWriter manifest;
  manifest.subcommand = "simulate";
  manifest.seed = seed;
  manifest.parameters = {{"s", s},       {"n", n_dim},         {"trials", trials},
                         {"kmax", k_max}, {"variant", variant}, {"seed", seed},
                         {"bins", bins},  {"histogram", histogram}};
  const std::string id = manifest.id();

  const fclab::RmtReport report = fclab::product_moments(config);
  const auto dir = resolve_out_dir(out_flag, "simulate");
  fclab::write_text_file((dir / "report.json").string(),
                         fclab::rmt_report_to_json(report, "manifest.json", id).dump(2) + "\n");
  manifest.outputs = {"report.json"};

  if (histogram && n_dim <= 512) {
    const auto table = fclab::histogram_vs_density(config, bins);
    fclab::write_text_file((dir / "histogram.csv").string(),
                           fclab::histogram_to_csv(table, "manifest.json", id));
    manifest.outputs.push_back("histogram.csv");
  }
  manifest.write(dir);

  for (const auto& row : report.moments)
    std::cerr << "k=" << row.k << " mean=" << row.mean << " +- " << row.std_error
              << " reference=" << row.reference << " rel_dev=" << row.relative_deviation << "\n";
  std::cerr << "simulate: wrote " << (dir / "report.json").string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// stransform

int cmd_stransform(int s, const std::string& t_text, int order) {
  const fclab::Rational t = fclab::rational_from_string(t_text);
  const auto moments = fclab::moment_sequence({s, t}, order + 1);
  const auto s_series = fclab::s_transform(moments, order);
  const auto r_series = fclab::r_transform(moments, order);
  std::cout << "# S-transform coefficients S_0..S_" << order << "\n";
  for (int k = 0; k <= order; ++k)
    std::cout << "S," << k << ',' << fclab::to_fraction_string(s_series[k]) << "\n";
  std::cout << "# free cumulants kappa_1..kappa_" << order << "\n";
  for (int k = 1; k <= order; ++k)
    std::cout << "R," << k << ',' << fclab::to_fraction_string(r_series[k]) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fclab: Fuss-Catalan densities, moments and random-matrix checks.\n"
      "CSV columns: density = x,value,error,method; histogram = bin_center,frequency,density;\n"
      "moments/stransform print exact fractions. FC_LAB_THREADS caps worker threads."};
  app.require_subcommand(1);

  // moments
  int m_s = 1, m_kmax = 16;
  std::string m_t = "1", m_format = "csv";
  auto* moments = app.add_subcommand("moments", "exact moment table m_0..m_kmax");
  moments->add_option("--s", m_s, "number of factors (>= 1)")->required()->check(CLI::Range(1, 1000));
  moments->add_option("--t", m_t, "second parameter, exact rational like 1/2 (default 1)");
  moments->add_option("--kmax", m_kmax, "highest moment")->check(CLI::NonNegativeNumber);
  moments->add_option("--format", m_format)->check(CLI::IsMember({"csv", "json"}));

  // density
  int d_s = 2, d_points = 200, d_nodes = 0;
  double d_xmin = 0, d_xmax = 0, d_floor = 1e-3;
  std::int64_t d_samples = 1000000;
  std::uint64_t d_seed = 0;
  std::string d_method = "auto", d_spacing = "linear", d_out;
  auto* density = app.add_subcommand("density", "tabulate the density on a grid");
  density->add_option("--s", d_s)->required()->check(CLI::Range(1, 1000));
  density->add_option("--method", d_method)->check(CLI::IsMember({"auto", "closed", "quadrature", "mc"}));
  density->add_option("--xmin", d_xmin, "grid start (default floor * K)");
  density->add_option("--xmax", d_xmax, "grid end (default K)");
  density->add_option("--points", d_points)->check(CLI::Range(2, 100000));
  density->add_option("--spacing", d_spacing)->check(CLI::IsMember({"linear", "clustered"}));
  density->add_option("--nodes", d_nodes, "quadrature nodes per dimension (default 64, 32 for s >= 4)");
  density->add_option("--samples", d_samples, "Monte Carlo samples per point");
  density->add_option("--seed", d_seed);
  density->add_option("--floor", d_floor, "evaluation floor as a fraction of K");
  density->add_option("--out", d_out, "output directory (default ./out/<timestamp>-density)");

  // verify
  std::string v_suite, v_out;
  int v_s = 2;
  std::uint64_t v_seed = 0;
  auto* verify = app.add_subcommand("verify", "run an identity/invariant suite; exit 0 iff all pass");
  verify->add_option("--suite", v_suite,
                     "moments|sigma-pi|stransform|rtransform|cf-identity|euler-integral|all")
      ->required();
  verify->add_option("--s", v_s)->check(CLI::Range(1, 1000));
  verify->add_option("--seed", v_seed);
  verify->add_option("--out", v_out, "also write verify_report.json here");

  // simulate
  int r_s = 1, r_n = 200, r_trials = 50, r_kmax = 3, r_bins = 40;
  std::uint64_t r_seed = 0;
  std::string r_variant = "distinct", r_out;
  bool r_hist = true;
  auto* simulate = app.add_subcommand("simulate", "Ginibre-product moment experiment");
  simulate->add_option("--s", r_s)->required()->check(CLI::Range(1, 1000));
  simulate->add_option("--n", r_n, "matrix dimension")->check(CLI::Range(2, 4096));
  simulate->add_option("--trials", r_trials)->check(CLI::Range(1, 1000000));
  simulate->add_option("--kmax", r_kmax)->check(CLI::Range(1, 1000000));
  simulate->add_option("--variant", r_variant)->check(CLI::IsMember({"distinct", "power"}));
  simulate->add_option("--seed", r_seed);
  simulate->add_option("--bins", r_bins)->check(CLI::Range(1, 1000000));
  simulate->add_flag("--histogram,!--no-histogram", r_hist, "emit histogram.csv (needs N <= 512)");
  simulate->add_option("--out", r_out);

  // stransform
  int t_s = 1, t_order = 8;
  std::string t_t = "1";
  auto* stransform = app.add_subcommand("stransform", "exact S-transform / free-cumulant tables");
  stransform->add_option("--s", t_s)->required()->check(CLI::Range(1, 1000));
  stransform->add_option("--t", t_t, "second parameter, exact rational");
  stransform->add_option("--order", t_order)->check(CLI::Range(1, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*moments) return cmd_moments(m_s, m_t, m_kmax, m_format);
    if (*density) {
      if (d_nodes == 0) d_nodes = d_s >= 4 ? 32 : 64;
      return cmd_density(d_s, d_method, d_xmin, d_xmax, d_points, d_spacing, d_nodes, d_samples,
                         d_seed, d_floor, d_out);
    }
    if (*verify) return cmd_verify(v_suite, v_s, v_seed, v_out);
    if (*simulate)
      return cmd_simulate(r_s, r_n, r_trials, r_kmax, r_variant, r_seed, r_bins, r_hist, r_out);
    if (*stransform) return cmd_stransform(t_s, t_t, t_order);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "fclab: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

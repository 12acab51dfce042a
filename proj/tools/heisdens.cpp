// heisdens: command-line front end for the Heisenberg density computations.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <sstream>

#include "heisdens/constants.hpp"
#include "heisdens/density.hpp"
#include "heisdens/io.hpp"
#include "heisdens/metric.hpp"
#include "heisdens/numerics/quadrature.hpp"
#include "heisdens/slice.hpp"

using namespace heisdens;
using nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  std::string metric = "sr";
  double kappa = 1.0;
  double box_c = 1.0;
  double b = 0.0;
  double tol = kDefaultQuadratureTol;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string json_path;
  std::string csv_path;
  std::string obj_path;
  std::size_t grid = 64;
  double rmin = 0.02;
  double rmax = 0.2;
  std::size_t steps = 6;
  std::string which;

  MetricSpec spec() const {
    MetricSpec m{parse_metric_kind(metric), kappa, box_c};
    m.validate();
    return m;
  }

  ConstantsOptions constants_options() const {
    ConstantsOptions o;
    o.quadrature_tol = tol;
    o.seed = seed;
    o.samples = samples;
    return o;
  }
};

// Config as recorded in every output: only what the subcommand reads, so
// reruns with irrelevant flags still produce identical files.
ordered_json config_json(const RunConfig& c, const std::string& command) {
  ordered_json j{{"command", command},
                 {"metric", c.metric},
                 {"kappa", c.kappa},
                 {"box_c", c.box_c},
                 {"tol", c.tol},
                 {"samples", c.samples},
                 {"seed", c.seed}};
  if (command == "slice") {
    j["b"] = c.b;
    j["grid"] = c.grid;
  }
  if (command == "mesh") {
    j["grid"] = c.grid;
  }
  if (command == "covers" || (command == "verify" && c.which == "theorem2")) {
    j["rmin"] = c.rmin;
    j["rmax"] = c.rmax;
    j["steps"] = c.steps;
  }
  if (command == "verify") {
    j["which"] = c.which;
  }
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << text;
}

void emit_json(const RunConfig& c, const ordered_json& config, const ordered_json& result,
               const ordered_json& checks = nullptr) {
  ordered_json out = wrap_output(config, result);
  if (!checks.is_null()) {
    out["checks"] = checks;
  }
  const std::string text = out.dump(2) + "\n";
  if (c.json_path.empty()) {
    std::cout << text;
  } else {
    write_file(c.json_path, text);
  }
}

void emit_csv(const RunConfig& c, const ordered_json& config, const std::string& body) {
  if (!c.csv_path.empty()) {
    write_file(c.csv_path, provenance_line(config) + body);
  }
}

// Invariants every DensityConstants must satisfy for the exit code to be 0.
ordered_json constants_checks(const DensityConstants& k) {
  ordered_json checks;
  checks["beta_ge_beta0"] = k.beta >= k.beta0 && k.beta0 > 0.0;
  checks["gamma_in_unit_interval"] = k.gamma > 0.0 && k.gamma <= 1.0;
  if (has_convex_unit_ball(k.metric)) {
    checks["convex_equality"] = std::abs(k.beta - k.beta0) <= 10.0 * (k.beta_error + k.beta0_error);
  } else {
    checks["strictly_below_one"] = 1.0 - k.gamma > 10.0 * k.abs_error;
  }
  return checks;
}

bool all_true(const ordered_json& checks) {
  for (const auto& [key, value] : checks.items()) {
    if (value.is_boolean() && !value.get<bool>()) {
      return false;
    }
  }
  return true;
}

int cmd_constants(const RunConfig& c) {
  const auto k = compute_gamma(c.spec(), c.constants_options());
  // The result object carries exactly the DensityConstants fields.
  ordered_json checks = constants_checks(k);
  if (c.samples > 0) {
    const auto mc = mc_slice_area(k.metric, 0.0, std::max(c.samples, kMinSliceSamples), c.seed,
                                  c.threads);
    checks["beta0_matches_monte_carlo"] = std::abs(mc.mean - k.beta0) <= 3.0 * mc.std_error;
    checks["beta0_monte_carlo"] = to_json(mc);
  }
  emit_json(c, config_json(c, "constants"), to_json(k), checks);
  return all_true(checks) ? kOk : kVerifyFailed;
}

int cmd_slice(const RunConfig& c) {
  const auto m = c.spec();
  const auto s = slice_area(m, c.b, c.tol, std::max<std::size_t>(c.grid, kDefaultCurvePoints));
  ordered_json result = to_json(s);
  if (c.samples > 0) {
    result["monte_carlo"] =
        to_json(mc_slice_area(m, c.b, std::max(c.samples, kMinSliceSamples), c.seed, c.threads));
  }
  const auto config = config_json(c, "slice");
  emit_json(c, config, result);
  emit_csv(c, config, curve_to_csv(s));
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  const auto config = config_json(c, "verify");
  if (c.which == "maple") {
    const auto rep = verify_maple_inequality(std::min(c.tol, 1e-12),
                                             c.samples > 0 ? c.samples : 1000000, c.seed, c.threads);
    emit_json(c, config, to_json(rep));
    return rep.passed ? kOk : kVerifyFailed;
  }
  if (c.which == "convex") {
    const auto rep = verify_convex_equality(c.spec(), c.constants_options());
    emit_json(c, config, to_json(rep));
    return rep.passed ? kOk : kVerifyFailed;
  }
  const auto k = compute_gamma(c.spec(), c.constants_options());
  if (c.which == "theorem1") {
    const auto upper = upper_density_at(k, 0.0, 0.0);
    const auto federer = federer_density_at(k, 0.0, 0.0, 1.0);
    const auto on_sigma = federer_density_at(k, 0.0, 0.0, 1.0, true);
    ordered_json checks = constants_checks(k);
    checks["upper_density_constant"] = upper.variation <= 1e-9;
    checks["upper_density_is_gamma"] = std::abs(upper.values.front() - k.gamma) <= 1e-9;
    checks["federer_density_one"] = std::abs(federer.value - 1.0) <= 1e-6;
    checks["federer_on_sigma_is_gamma"] = std::abs(on_sigma.value - k.gamma) <= 1e-6;
    ordered_json result{{"constants", to_json(k)},
                        {"upper_density", to_json(upper)},
                        {"federer_density", to_json(federer)},
                        {"federer_density_centers_on_sigma", to_json(on_sigma)},
                        {"checks", checks}};
    emit_json(c, config, result);
    return all_true(checks) ? kOk : kVerifyFailed;
  }
  if (c.which == "theorem2") {
    CompareOptions opts;
    opts.seed = c.seed;
    opts.threads = c.threads;
    opts.expect_equality = has_convex_unit_ball(k.metric);
    const auto rep =
        compare_spherical_centered(k, radius_schedule(c.rmin, c.rmax, c.steps), opts);
    emit_json(c, config, {{"constants", to_json(k)}, {"comparison", to_json(rep)}});
    emit_csv(c, config, compare_to_csv(rep));
    return rep.passed ? kOk : kVerifyFailed;
  }
  throw CLI::ValidationError("verify", "unknown check '" + c.which + "'");
}

int cmd_mesh(const RunConfig& c) {
  const auto m = c.spec();
  const auto mesh = export_ball_mesh(m, c.grid, c.grid);
  double worst = 0.0;
  for (const auto& v : mesh.vertices) {
    worst = std::max(worst, std::abs(metric_norm(m, v) - 1.0));
  }
  const bool ok = worst <= 1e-8;
  const auto config = config_json(c, "mesh");
  emit_json(c, config,
            {{"metric", to_json(m)},
             {"vertices", mesh.vertices.size()},
             {"triangles", mesh.triangles.size()},
             {"max_norm_deviation", worst},
             {"passed", ok}});
  emit_csv(c, config, mesh_to_csv(mesh));
  if (!c.obj_path.empty()) {
    write_file(c.obj_path, provenance_line(config) + mesh_to_obj(mesh));
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_covers(const RunConfig& c) {
  const auto k = compute_gamma(c.spec(), c.constants_options());
  ordered_json covers = ordered_json::array();
  const auto sph_tile = inscribed_rectangle(k.metric, k.b_star);
  const auto cen_tile = inscribed_rectangle(k.metric, 0.0);
  bool valid = true;
  std::string csv = "kind,r,tile_count,estimate,target\n";
  for (const double r : radius_schedule(c.rmin, c.rmax, c.steps)) {
    for (const auto kind : {CoverKind::Spherical, CoverKind::Centered}) {
      const auto cover =
          build_cover(k, kind, r, kind == CoverKind::Spherical ? sph_tile : cen_tile);
      const auto check = verify_cover(k, cover, kCoverCheckPoints, c.seed, c.threads);
      valid = valid && check.passed;
      auto j = to_json(cover);
      j["uncovered"] = check.uncovered;
      covers.push_back(j);
      const double target = kind == CoverKind::Spherical ? 1.0 : k.beta / k.beta0;
      std::ostringstream row;
      row.precision(17);
      row << cover_kind_name(kind) << ',' << r << ',' << cover.tile_count << ','
          << cover.estimate << ',' << target << '\n';
      csv += row.str();
    }
  }
  const auto config = config_json(c, "covers");
  emit_json(c, config,
            {{"constants", to_json(k)},
             {"spherical_tile", to_json(sph_tile)},
             {"centered_tile", to_json(cen_tile)},
             {"covers", covers},
             {"all_valid", valid}});
  emit_csv(c, config, csv);
  return valid ? kOk : kVerifyFailed;
}

int cmd_density(const RunConfig& c) {
  const auto k = compute_gamma(c.spec(), c.constants_options());
  const auto upper = upper_density_at(k, 0.0, 0.0);
  const auto federer = federer_density_at(k, 0.0, 0.0, 1.0);
  const auto on_sigma = federer_density_at(k, 0.0, 0.0, 1.0, true);
  const auto config = config_json(c, "density");
  emit_json(c, config,
            {{"constants", to_json(k)},
             {"upper_density", to_json(upper)},
             {"federer_density", to_json(federer)},
             {"federer_density_centers_on_sigma", to_json(on_sigma)}});
  std::ostringstream csv;
  csv.precision(17);
  csv << "r,upper_density\n";
  for (std::size_t i = 0; i < upper.radii.size(); ++i) {
    csv << upper.radii[i] << ',' << upper.values[i] << '\n';
  }
  emit_csv(c, config, csv.str());
  return upper.variation <= 1e-9 ? kOk : kVerifyFailed;
}

template <typename T>
std::optional<T> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  try {
    return static_cast<T>(std::stoull(raw));
  } catch (const std::exception&) {
    throw CLI::ValidationError(name, "expected a nonnegative integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Density constants of the sub-Riemannian Heisenberg unit ball"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric, "Distance: sr, koranyi or box")
        ->check(CLI::IsMember({"sr", "koranyi", "box"}, CLI::ignore_case));
    sub->add_option("--kappa", cfg.kappa, "Korányi weight on t^2")->check(CLI::PositiveNumber);
    sub->add_option("--box-c", cfg.box_c, "Box gauge constant")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "Quadrature absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples (0 skips the oracle)");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--json", cfg.json_path, "Write the JSON report here instead of stdout");
    sub->add_option("--csv", cfg.csv_path, "Write curve data as CSV");
  };

  auto* constants = app.add_subcommand("constants", "beta0, beta, b*, gamma");
  common(constants);

  auto* slice = app.add_subcommand("slice", "Area and boundary of the slice y = b");
  common(slice);
  slice->add_option("--b", cfg.b, "Plane offset")->required();
  slice->add_option("--grid", cfg.grid, "Boundary curve points (at least 256)");

  auto* verify = app.add_subcommand("verify", "Run a verification pipeline");
  common(verify);
  verify->add_option("which", cfg.which, "theorem1, theorem2, maple or convex")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "maple", "convex"}));
  verify->add_option("--rmin", cfg.rmin, "Smallest cover radius")->check(CLI::PositiveNumber);
  verify->add_option("--rmax", cfg.rmax, "Largest cover radius")->check(CLI::PositiveNumber);
  verify->add_option("--steps", cfg.steps, "Radii in the schedule")->check(CLI::PositiveNumber);

  auto* mesh = app.add_subcommand("mesh", "Unit sphere mesh");
  common(mesh);
  mesh->add_option("--grid", cfg.grid, "Grid size per direction")->check(CLI::Range(2, 4096));
  mesh->add_option("--obj", cfg.obj_path, "Write the mesh as OBJ");

  auto* covers = app.add_subcommand("covers", "Covering estimates of the unit patch");
  common(covers);
  covers->add_option("--rmin", cfg.rmin, "Smallest radius")->check(CLI::PositiveNumber);
  covers->add_option("--rmax", cfg.rmax, "Largest radius")->check(CLI::PositiveNumber);
  covers->add_option("--steps", cfg.steps, "Radii in the schedule")->check(CLI::PositiveNumber);

  auto* density = app.add_subcommand("density", "Upper and Federer densities on the plane");
  common(density);

  try {
    if (auto t = env_number<unsigned>("HEISDENS_THREADS")) {
      cfg.threads = std::max(*t, 1u);
    }
    if (auto s = env_number<std::uint64_t>("HEISDENS_SEED")) {
      cfg.seed = *s;
    }
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*constants) return cmd_constants(cfg);
    if (*slice) return cmd_slice(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*mesh) return cmd_mesh(cfg);
    if (*covers) return cmd_covers(cfg);
    if (*density) return cmd_density(cfg);
  } catch (const QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << " (best " << e.best().value << " +- "
              << e.best().abs_error_estimate << ")\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

// Command-line driver: reproducible experiments over the library with file
// outputs (CSV fields/paths, JSON reports, SVG torus plots).
//
// Subcommands: horo, solve, integrate, limits, end, curve, check.
// Exit codes: 0 success, 1 validation failure, 2 numerical non-convergence.
// Errors are reported as one JSON object on stderr.

#include "adsmax/acceptance.hpp"
#include "adsmax/crown.hpp"
#include "adsmax/frame.hpp"
#include "adsmax/horospherical.hpp"
#include "adsmax/io.hpp"
#include "adsmax/osculating.hpp"
#include "adsmax/parallel.hpp"
#include "adsmax/pole_background.hpp"
#include "adsmax/polygonal_end.hpp"
#include "adsmax/svg.hpp"
#include "adsmax/vortex.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace adsmax;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path ensure_out_dir(const std::string& out) {
  std::filesystem::path dir(out.empty() ? "." : out);
  std::filesystem::create_directories(dir);
  return dir;
}

Json load_config(const std::string& path) {
  if (path.empty()) throw ValidationError("missing --config");
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const std::exception& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  return j;
}

double require_positive(const Json& j, const char* key, double fallback) {
  const double v = j.value(key, fallback);
  if (!(v > 0.0)) throw ValidationError(std::string(key) + " must be positive");
  return v;
}

// ----------------------------------------------------------------- horo
int run_horo(double tmax, double theta, double y, double step, const std::string& out) {
  if (!(tmax > 0.0) || !(step > 0.0)) throw ValidationError("tmax and step must be positive");
  const auto dir = ensure_out_dir(out);
  std::ostringstream csv;
  csv << "t,sigma0,sigma1,sigma2,sigma3\n";
  const int n = static_cast<int>(tmax / step);
  SplitVector4 s;
  for (int i = 0; i <= n; ++i) {
    const double t = i * step;
    s = horospherical_embedding(Cplx(t * std::cos(theta), t * std::sin(theta) + y));
    csv << format_double(t);
    for (int c = 0; c < 4; ++c) csv << ',' << format_double(s[c]);
    csv << '\n';
  }
  const SplitVector4 dir_lim = s.normalized();
  csv << "limit";
  for (int c = 0; c < 4; ++c) csv << ',' << format_double(dir_lim[c]);
  csv << '\n';
  write_text_file((dir / "horo.csv").string(), csv.str());

  const HoroRayLimit lim = horospherical_ray_limit(theta, 1e-9);
  Json report{{"theta", theta},
              {"y", y},
              {"tmax", tmax},
              {"on_diagonal", lim.on_diagonal}};
  if (!lim.on_diagonal)
    report["expected_direction"] = {lim.direction[0], lim.direction[1], lim.direction[2],
                                    lim.direction[3]};
  write_text_file((dir / "horo.json").string(), report.dump(2) + "\n");
  std::cout << "wrote " << (dir / "horo.csv").string() << '\n';
  return 0;
}

// ----------------------------------------------------------------- solve
int run_solve(const Json& cfg, const std::string& out) {
  const auto dir = ensure_out_dir(out);
  const std::string preset = cfg.value("preset", "flat");
  SolveOptions opts;
  opts.tol = require_positive(cfg, "tol", 1e-8);

  SolveResult result;
  std::optional<BracketResult> bracket;
  if (preset == "flat") {
    const Json& d = cfg.at("domain");
    GridDomain g = GridDomain::with_spacing(d.at("x0"), d.at("x1"), d.at("y0"), d.at("y1"),
                                            require_positive(d, "h", 0.05));
    const double edge_value = cfg.value("edge_value", 0.0);
    const double edge_halfwidth = cfg.value("edge_halfwidth", 1e18);
    const double x_left = g.x0;
    g.dirichlet = [=](double x, double y) {
      return (std::abs(x - x_left) <= 1e-12 && std::abs(y) <= edge_halfwidth) ? edge_value
                                                                              : 0.0;
    };
    result = solve(VortexProblem::flat(g, cfg.value("weight", 1.0),
                                       cfg.value("curvature", 0.0)),
                   opts);
  } else if (preset == "pole") {
    PoleBackground bg;
    bg.model = pole_model_from_json(cfg.at("pole"));
    bg.r_flat = cfg.value("r_flat", 0.35);
    bg.r_hyp = cfg.value("r_hyp", 0.8);
    bg.disc_radius = cfg.value("disc_radius", 3.0);
    const double half_width = require_positive(cfg, "half_width", 1.2);
    const double h = require_positive(cfg, "h", 0.02);
    const PoleProblem pp = pole_problem(bg, half_width, h);
    bracket = auto_bracket(pp, cfg.value("alpha0", 0.05), cfg.value("beta0", 1.0),
                           cfg.value("cap", 10.0));
    result = solve(pp.problem, opts);
  } else {
    throw ValidationError("unknown preset: " + preset);
  }

  if (bracket) {
    result.field.sub = bracket->sub;
    result.field.super = bracket->super;
  }
  Json report = to_json(result);
  if (bracket) {
    int violations = 0;
    for (size_t i = 0; i < result.field.v.a.size(); ++i)
      if (!(bracket->sub.a[i] - 1e-10 <= result.field.v.a[i] &&
            result.field.v.a[i] <= bracket->super.a[i] + 1e-10))
        ++violations;
    report["bracket"] = {{"alpha", bracket->alpha},
                         {"beta", bracket->beta},
                         {"cap", bracket->cap},
                         {"certified", bracket->certified},
                         {"violations", violations}};
  }
  write_text_file((dir / "field.csv").string(), field_csv(result.field));
  write_text_file((dir / "solve.json").string(), report.dump(2) + "\n");
  std::cout << "wrote " << (dir / "solve.json").string() << '\n';
  if (!result.converged) throw ConvergenceError("solver did not reach tolerance");
  return 0;
}

// ----------------------------------------------------------------- integrate
std::unique_ptr<ConnectionSource> make_source(const Json& cfg) {
  const std::string type = cfg.value("type", "zero");
  if (type == "zero") return std::make_unique<ConstantSource>(Cplx(1.0, 0.0));
  if (type == "synthetic")
    return std::make_unique<SyntheticDecaySource>(cfg.value("amplitude", 5e-4));
  throw ValidationError("unknown phi source type: " + type);
}

int run_integrate(const Json& cfg, const std::string& out) {
  const auto dir = ensure_out_dir(out);
  std::vector<Cplx> path;
  for (const Json& p : cfg.at("path")) path.emplace_back(p.at(0), p.at(1));
  if (path.size() < 2) throw ValidationError("path needs at least two points");
  const auto src = make_source(cfg.value("phi", Json{{"type", "zero"}}));
  IntegrateOptions opts;
  opts.step = require_positive(cfg, "step", 1e-3);
  opts.drift_budget = cfg.value("drift_budget", 1e-6);
  const FrameField field =
      integrate_frame(path, *src, horospherical_ref().frame(path.front()), opts);
  const EmbeddingPath emb = extract_embedding(field, *src);
  write_text_file((dir / "path.csv").string(), embedding_csv(field, emb));
  Json report = frame_report(field);
  report["max_quadric_defect"] = emb.max_quadric_defect;
  report["max_metric_defect"] = emb.max_metric_defect;
  report["max_q_defect"] = emb.max_q_defect;
  write_text_file((dir / "integrate.json").string(), report.dump(2) + "\n");
  std::cout << "wrote " << (dir / "integrate.json").string() << '\n';
  return 0;
}

// ----------------------------------------------------------------- limits
int run_limits(const Json& cfg, const std::string& out) {
  const auto dir = ensure_out_dir(out);
  const SyntheticDecaySource src(cfg.value("amplitude", 5e-4));
  RayLimitOptions opts;
  opts.cauchy_tol = cfg.value("cauchy_tol", 1e-6);
  opts.t_max = cfg.value("t_max", 400.0);
  opts.ode_step = cfg.value("ode_step", 2e-3);
  const double y = cfg.value("y", 0.6);
  std::vector<double> angles = cfg.at("angles").get<std::vector<double>>();

  std::vector<Json> entries(angles.size());
  bool all_converged = true;
  parallel_for(static_cast<int>(angles.size()), [&](int i) {
    const OsculatingLimit lim = ray_limit(angles[i], y, src, opts);
    Json l = Json::array();
    for (int r = 0; r < 4; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 4; ++c) row.push_back(lim.L(r, c));
      l.push_back(row);
    }
    entries[i] = Json{{"theta", angles[i]},
                      {"interval", to_string(lim.interval)},
                      {"converged", lim.converged},
                      {"cauchy_gap", lim.cauchy_gap},
                      {"t_final", lim.t_final},
                      {"L", l}};
  });
  for (const Json& e : entries) all_converged = all_converged && e.at("converged").get<bool>();
  Json report{{"y", y}, {"limits", entries}};
  write_text_file((dir / "limits.json").string(), report.dump(2) + "\n");
  std::cout << "wrote " << (dir / "limits.json").string() << '\n';
  if (!all_converged) throw ConvergenceError("a ray limit did not reach the Cauchy tolerance");
  return 0;
}

// ----------------------------------------------------------------- end
int run_end(int n, bool synthetic, const std::string& config, std::uint64_t seed,
            const std::string& out) {
  const auto dir = ensure_out_dir(out);
  IsometryPair holonomy;
  std::vector<Eigen::Matrix4d> limits;
  if (synthetic) {
    const SyntheticEnd syn = synthetic_end(n, seed);
    holonomy = syn.holonomy;
    for (const IsometryPair& g : syn.chart_isometries) limits.push_back(g.rep4);
  } else {
    const Json cfg = load_config(config);
    const CrownEndData data = crown_data_from_json(cfg);
    n = data.k() + 2;
    holonomy = isometry_from_pair(data.left, data.right);
    for (const IsometryPair& g : chart_limits_from_crown(data)) limits.push_back(g.rep4);
  }
  const PolygonalEnd end = assemble_end(n, holonomy, limits);
  write_text_file((dir / "end.json").string(), to_json(end).dump(2) + "\n");
  write_text_file((dir / "end.svg").string(), end_svg(end));
  std::cout << "wrote " << (dir / "end.json").string() << '\n';
  return 0;
}

// ----------------------------------------------------------------- curve
int run_curve(const std::string& config, const std::string& out) {
  const auto dir = ensure_out_dir(out);
  const Json cfg = load_config(config);
  const CrownEndData data = crown_data_from_json(cfg);
  const CompletionFunction f = build_completion(data);
  const PolygonalCurve curve = curve_from_completion(f, cfg.value("window", 2));
  Json vertices = Json::array();
  for (const BoundaryPoint& v : curve.vertices)
    vertices.push_back(Json::array({v.theta, v.theta_prime}));
  Json report{{"k", data.k()},
              {"fundamental_count", curve.fundamental_count},
              {"window", curve.window},
              {"vertices", vertices},
              {"crown", to_json(data)}};
  write_text_file((dir / "curve.json").string(), report.dump(2) + "\n");
  write_text_file((dir / "curve.svg").string(), curve_svg(curve));
  std::cout << "wrote " << (dir / "curve.json").string() << '\n';
  return 0;
}

// ----------------------------------------------------------------- check
int run_check(const std::string& suite) {
  using namespace adsmax::acceptance;
  if (suite != "trivial" && suite != "full")
    throw ValidationError("--suite must be 'trivial' or 'full'");
  const auto results = run(suite == "trivial" ? Suite::trivial : Suite::full);
  return report(results, std::cout, &std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal surfaces in anti-de Sitter 3-space: solver and boundary toolkit"};
  app.require_subcommand(1);

  std::string out_dir = "out";
  std::string config_path;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--tol", tol, "tolerance override")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();

  auto* horo = app.add_subcommand("horo", "horospherical embedding along a ray");
  double tmax = 10.0, theta = 0.0, y = 0.0, step = 0.01;
  horo->add_option("--tmax", tmax)->capture_default_str();
  horo->add_option("--theta", theta)->capture_default_str();
  horo->add_option("--y", y)->capture_default_str();
  horo->add_option("--step", step)->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "vortex equation on a chart grid");
  auto* integrate = app.add_subcommand("integrate", "frame field along a path");
  auto* limits = app.add_subcommand("limits", "osculating ray limits");
  auto* end_cmd = app.add_subcommand("end", "assemble a light-like polygonal end");
  int end_n = 4;
  bool end_synthetic = false;
  end_cmd->add_option("--n", end_n, "pole order")->capture_default_str();
  end_cmd->add_flag("--synthetic", end_synthetic, "generate synthetic chart limits");
  auto* curve_cmd = app.add_subcommand("curve", "boundary curve from crown data");
  auto* check = app.add_subcommand("check", "run the acceptance suite");
  std::string suite = "full";
  check->add_option("--suite", suite, "trivial or full")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (horo->parsed()) return run_horo(tmax, theta, y, step, out_dir);
    if (solve_cmd->parsed()) return run_solve(load_config(config_path), out_dir);
    if (integrate->parsed()) return run_integrate(load_config(config_path), out_dir);
    if (limits->parsed()) return run_limits(load_config(config_path), out_dir);
    if (end_cmd->parsed())
      return run_end(end_n, end_synthetic, config_path, seed, out_dir);
    if (curve_cmd->parsed()) return run_curve(config_path, out_dir);
    if (check->parsed()) return run_check(suite);
  } catch (const ValidationError& e) {
    std::cerr << Json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << Json{{"error", "non-convergence"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json{{"error", "validation"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "runtime"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 1;
}

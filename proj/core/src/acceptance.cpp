#include "adsmax/acceptance.hpp"

#include "adsmax/bessel.hpp"
#include "adsmax/crown.hpp"
#include "adsmax/frame.hpp"
#include "adsmax/geometry.hpp"
#include "adsmax/horospherical.hpp"
#include "adsmax/isometry.hpp"
#include "adsmax/osculating.hpp"
#include "adsmax/pole_background.hpp"
#include "adsmax/polygonal_end.hpp"
#include "adsmax/quad_diff.hpp"
#include "adsmax/vortex.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

namespace adsmax::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

CriterionResult make(const std::string& name, bool pass, const std::string& detail) {
  return CriterionResult{name, pass, detail, 0.0};
}

// ---------------------------------------------------------------- 1
CriterionResult horospherical_oracle() {
  const HorosphericalRef& ref = horospherical_ref();
  const ConstantSource src;
  const std::vector<Cplx> path{Cplx(0.0, 0.0), Cplx(1.1, 0.4), Cplx(0.2, 1.1),
                               Cplx(-0.8, 0.3), Cplx(0.1, -0.6)};
  IntegrateOptions opts;
  opts.step = 1e-3;
  opts.drift_budget = 1e-7;
  const FrameField field = integrate_frame(path, src, ref.frame(path.front()), opts);
  const double frame_err =
      (field.endpoint() - ref.frame(path.back())).cwiseAbs().maxCoeff();
  const EmbeddingPath emb = extract_embedding(field, src, 1e-7);
  double sigma_err = 0.0;
  for (size_t k = 0; k < emb.t.size(); ++k)
    sigma_err = std::max(
        sigma_err, (emb.sigma[k] - horospherical_embedding(emb.w[k])).cwiseAbs().maxCoeff());
  const bool pass =
      frame_err <= 1e-8 && sigma_err <= 1e-8 && emb.max_quadric_defect <= 1e-7;
  return make("1 horospherical frame oracle",
              pass,
              "endpoint " + fmt(frame_err) + ", sigma " + fmt(sigma_err) + ", quadric " +
                  fmt(emb.max_quadric_defect));
}

// ---------------------------------------------------------------- 2
CriterionResult ray_limit_table() {
  const double t = 12.0, y = 0.35;
  double worst_angle = 0.0;
  bool pass = true;
  for (double center : {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0})
    for (double off : {-kPi / 8.0, 0.0, kPi / 8.0}) {
      const double theta = center + off;
      const SplitVector4 sigma =
          horospherical_embedding(Cplx(t * std::cos(theta), t * std::sin(theta) + y));
      const HoroRayLimit lim = horospherical_ray_limit(theta);
      const double cosang = sigma.normalized().dot(lim.direction.normalized());
      worst_angle = std::max(worst_angle, std::acos(std::min(1.0, std::abs(cosang))));
    }
  pass = worst_angle <= 1e-4;

  // Diagonal rays land on the light-like segments, e.g. [1,s,1,s] with s > 0.
  double worst_seg = 0.0;
  bool s_positive = true;
  for (double yoff : {-0.5, 0.25, 1.0}) {
    for (int quad = 0; quad < 4; ++quad) {
      const double theta = kPi / 4.0 + quad * kPi / 2.0;
      SplitVector4 v =
          horospherical_embedding(Cplx(t * std::cos(theta), t * std::sin(theta) + yoff));
      v.normalize();
      // Components pair up along the diagonals: |x0| = x2, |x1| = x3.
      worst_seg = std::max({worst_seg, std::abs(std::abs(v[0]) - v[2]),
                            std::abs(std::abs(v[1]) - v[3])});
      if (quad == 0) {
        if (!(v[0] > 0.0 && v[1] > 0.0)) s_positive = false;  // [1,s,1,s], s > 0
      }
    }
  }
  pass = pass && worst_seg <= 1e-6 && s_positive;
  return make("2 horospherical ray-limit table", pass,
              "angular " + fmt(worst_angle) + ", segment " + fmt(worst_seg));
}

// ---------------------------------------------------------------- 3
CriterionResult vortex_solver() {
  std::ostringstream detail;
  bool pass = true;

  // (a) weight 1, zero data: v = 0 exactly.
  {
    const GridDomain g = GridDomain::with_spacing(0, 1, 0, 1, 1.0 / 40);
    const SolveResult r = solve(VortexProblem::flat(g, 1.0, 0.0));
    const double m = r.field.v.max_abs();
    pass = pass && r.converged && m == 0.0;
    detail << "(a) " << fmt(m);
  }

  // (b) pole-model bracket with auto-tuned (alpha, beta, cap).
  {
    PoleBackground bg;
    bg.model = PoleModel::normal_form(4, Complex(0.1, 0.0), 2.0);
    const PoleProblem pp = pole_problem(bg, 1.2, 0.015);
    const BracketResult br = auto_bracket(pp);
    const SolveResult r = solve(pp.problem);
    int violations = 0;
    for (size_t i = 0; i < r.field.v.a.size(); ++i)
      if (!(br.sub.a[i] - 1e-10 <= r.field.v.a[i] && r.field.v.a[i] <= br.super.a[i] + 1e-10))
        ++violations;
    pass = pass && br.certified && r.converged && violations == 0;
    detail << ", (b) alpha " << fmt(br.alpha) << " beta " << fmt(br.beta) << " violations "
           << violations;
  }

  // (c) decay slope of log(v sqrt|w|) within 5% of -2 sqrt(2).
  {
    GridDomain g = GridDomain::with_spacing(0, 8, -4, 4, 0.04);
    g.dirichlet = [](double x, double y) {
      return (x <= 1e-12 && std::abs(y) <= 0.5) ? 0.5 : 0.0;
    };
    const SolveResult r = solve(VortexProblem::flat(g, 1.0, 0.0));
    const DecayFit fit = decay_slope(r.field, 0.0, 0.0, 0.0, 2.0, 6.0, 101);
    const double target = -2.0 * std::sqrt(2.0);
    const double rel = std::abs(fit.slope - target) / std::abs(target);
    pass = pass && r.converged && fit.ok && rel <= 0.05;
    detail << ", (c) slope " << fmt(fit.slope) << " rel " << fmt(rel);
  }

  // (d) refinement order against a manufactured solution.
  {
    auto exact = [](double x, double y) {
      return 0.2 * std::sin(kPi * x) * std::sin(kPi * y);
    };
    auto forcing = [&](double x, double y) {
      const double v = exact(x, y);
      const double lap = -2.0 * kPi * kPi * v;
      return lap - 2.0 * std::exp(2.0 * v) + 2.0 * std::exp(-2.0 * v);
    };
    std::vector<double> errs;
    for (int n : {16, 32, 64}) {
      const GridDomain g = GridDomain::with_spacing(0, 1, 0, 1, 1.0 / n);
      VortexProblem p = VortexProblem::from_functions(
          g, [](double, double) { return 1.0; }, forcing,
          [](double, double) { return 1.0; });
      const SolveResult r = solve(p);
      double e = 0.0;
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
          e = std::max(e, std::abs(r.field.v.at(i, j) - exact(g.x(i), g.y(j))));
      errs.push_back(e);
    }
    const double order = std::log2(errs[errs.size() - 2] / errs.back());
    pass = pass && order >= 1.8 && order <= 2.2;
    detail << ", (d) order " << fmt(order);
  }
  return make("3 vortex solver", pass, detail.str());
}

// ---------------------------------------------------------------- 4
CriterionResult osculating_limits() {
  const SyntheticDecaySource src(5e-4);
  RayLimitOptions opts;
  opts.cauchy_tol = 1e-6;
  opts.t0 = 2.0;
  opts.t_max = 400.0;
  opts.ode_step = 2e-3;
  const double y = 0.6;

  const OsculatingLimit lp1 = ray_limit(kPi / 12.0, y, src, opts);
  const OsculatingLimit lp2 = ray_limit(kPi / 6.0, y, src, opts);
  const OsculatingLimit l01 = ray_limit(7.0 * kPi / 16.0, y, src, opts);
  const OsculatingLimit l02 = ray_limit(kPi / 2.0, y, src, opts);
  const OsculatingLimit lm = ray_limit(11.0 * kPi / 12.0, y, src, opts);

  const double agree_p = (lp1.L - lp2.L).cwiseAbs().maxCoeff();
  const double agree_0 = (l01.L - l02.L).cwiseAbs().maxCoeff();

  auto eig_gap = [](const Eigen::Matrix4d& x) {
    Eigen::EigenSolver<Eigen::Matrix4d> es(x);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(es.eigenvalues()[i] - Cplx(1.0, 0.0)));
    return worst;
  };
  const UnipotentFactor up = unipotent_factor(lp1.L, l02.L, TransitionSide::plus);
  const UnipotentFactor um = unipotent_factor(l02.L, lm.L, TransitionSide::minus);
  const double eig_p = eig_gap(up.X), eig_m = eig_gap(um.X);

  const bool pass = lp1.converged && lp2.converged && l01.converged && l02.converged &&
                    lm.converged && agree_p <= 1e-4 && agree_0 <= 1e-4 && eig_p <= 1e-4 &&
                    eig_m <= 1e-4 && up.residual <= 1e-3 && um.residual <= 1e-3;
  return make("4 osculating limits",
              pass,
              "agree J+ " + fmt(agree_p) + ", J0 " + fmt(agree_0) + ", eig " + fmt(eig_p) +
                  "/" + fmt(eig_m) + ", offpattern " + fmt(up.residual) + "/" +
                  fmt(um.residual) + ", mu " + fmt(up.mu) + "/" + fmt(um.mu));
}

// ---------------------------------------------------------------- 5
CriterionResult end_combinatorics() {
  std::ostringstream detail;
  bool pass = true;
  for (int n : {3, 4, 5, 7}) {
    const SyntheticEnd syn = synthetic_end(n, 1000 + n);
    std::vector<Eigen::Matrix4d> limits;
    for (const IsometryPair& g : syn.chart_isometries) limits.push_back(g.rep4);
    AssembleOptions opts;
    opts.join_tol = 1e-6;
    opts.window = 2;
    opts.check_achronal = false;  // the scan below uses the stated pair count
    const PolygonalEnd end = assemble_end(n, syn.holonomy, limits, opts);

    bool ok = static_cast<int>(end.fundamental_vertices.size()) == 2 * (n - 2);
    for (size_t i = 0; i < end.foliation.size(); ++i)
      ok = ok && end.foliation[i] == (i % 2 == 0 ? 'L' : 'R');

    // achronality over >= 1e4 sampled pairs
    const int per_seg =
        std::max(2, 160 / (2 * (n - 2) * (2 * opts.window + 1)));
    const auto pts = end.sample_segments(per_seg);
    const AchronalScan scan = achronal_scan(pts);
    ok = ok && scan.pairs() >= 10000 && scan.timelike == 0;

    // equivariance of the windowed chain
    double equi = 0.0;
    const int stride = 2 * (n - 2);
    for (size_t i = 0; i + stride < end.windowed_vertices.size(); ++i)
      equi = std::max(equi, boundary_dist(end.windowed_vertices[i + stride],
                                          syn.holonomy.apply(end.windowed_vertices[i])));
    ok = ok && equi <= 1e-6;

    // accumulation at the fixed-point pair after 30 holonomy iterations
    const LimitFixedPair fixed = limit_fixed_pair(syn.holonomy);
    SplitVector4 fwd = end.fundamental_vertices[0].null_rep;
    SplitVector4 bwd = fwd;
    const Eigen::Matrix4d hol_inv = syn.holonomy.inverse().rep4;
    for (int it = 0; it < 30; ++it) {
      fwd = (syn.holonomy.rep4 * fwd).normalized();
      bwd = (hol_inv * bwd).normalized();
    }
    const double acc = std::max(boundary_dist(null_to_torus(fwd), fixed.pp),
                                boundary_dist(null_to_torus(bwd), fixed.mm));
    ok = ok && acc <= 1e-6;

    pass = pass && ok;
    detail << "n=" << n << (ok ? " ok" : " FAIL") << " (pairs " << scan.pairs()
           << ", equiv " << fmt(equi) << ", accum " << fmt(acc) << "); ";
  }
  return make("5 polygonal-end combinatorics", pass, detail.str());
}

// ---------------------------------------------------------------- 6
CriterionResult relabelling() {
  const SyntheticEnd syn = synthetic_end(5, 42);  // k = 3 cusps
  const CompletionFunction f = build_completion(syn.data);
  const PolygonalCurve curve = curve_from_completion(f, 2);

  const CrownEndData diag = relabel(syn.data, 1);
  const PolygonalCurve curve_diag = curve_from_completion(build_completion(diag), 2);
  const double d_same = curve_hausdorff(curve, curve_diag);

  const CrownEndData off = shift_theta_only(syn.data, 1);
  const PolygonalCurve curve_off = curve_from_completion(build_completion(off), 2);
  const double d_diff = curve_hausdorff(curve, curve_off);

  // cross-module agreement with the end assembled from the chart limits
  std::vector<Eigen::Matrix4d> limits;
  for (const IsometryPair& g : syn.chart_isometries) limits.push_back(g.rep4);
  AssembleOptions opts;
  opts.check_achronal = false;
  const PolygonalEnd end = assemble_end(5, syn.holonomy, limits, opts);
  const int k = syn.data.k();
  const int base = 2 * 2 * k;  // index of W_0 in the window (window = 2)
  double cross = 0.0;
  for (int c = 0; c < k; ++c) {
    cross = std::max(cross, boundary_dist(end.fundamental_vertices[2 * c],
                                          curve.vertices[base + 2 * c - 1]));
    cross = std::max(cross, boundary_dist(end.fundamental_vertices[2 * c + 1],
                                          curve.vertices[base + 2 * c]));
  }

  const bool pass = d_same <= 1e-9 && d_diff > 1e-4 && cross <= 1e-6;
  return make("6 relabelling parameterisation", pass,
              "diagonal " + fmt(d_same) + ", off-diagonal " + fmt(d_diff) + ", cross " +
                  fmt(cross));
}

// ---------------------------------------------------------------- 7
CriterionResult dimension_formulas() {
  struct QdCase {
    int chi;
    std::vector<int> orders;
    int total, real_p, circ;
  };
  const std::vector<QdCase> qd{
      {-2, {}, 6, 6, 0},          {-2, {3}, 12, 11, 1},     {-2, {3, 4}, 20, 18, 2},
      {-1, {3}, 9, 8, 1},         {-2, {4}, 14, 13, 1},     {-4, {5, 5}, 32, 30, 2},
      {-2, {3, 3, 3}, 24, 21, 3}, {-6, {7}, 32, 31, 1},     {-1, {4}, 11, 10, 1},
      {-3, {3, 4, 5}, 33, 30, 3},
  };
  struct TeichCase {
    int genus;
    std::vector<int> cusps;
    int dim;
  };
  const std::vector<TeichCase> teich{
      {1, {1}, 4},  {1, {2}, 5},        {2, {1, 1}, 14}, {1, {1, 1}, 8},
      {2, {3}, 12}, {3, {1}, 16},       {1, {5}, 8},     {2, {2, 2}, 16},
      {4, {1, 1, 1}, 30}, {1, {3, 4}, 13},
  };
  int failures = 0;
  for (const auto& c : qd) {
    const QdSpaceDims d = qd_space_dims(c.chi, c.orders);
    if (d.total != c.total || d.real_params != c.real_p || d.circle_params != c.circ)
      ++failures;
  }
  for (const auto& c : teich)
    if (crowned_teich_dim(c.genus, c.cusps) != c.dim) ++failures;
  return make("7 dimension formulas", failures == 0,
              "20 cases, " + std::to_string(failures) + " failures");
}

// ---------------------------------------------------------------- 8
CriterionResult property_suites() {
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // causal classification vs the ambient pairing and conformal path signs
  int mismatches = 0, n_pairs = 0;
  while (n_pairs < 1000) {
    const BoundaryPoint p = boundary_point(ang(rng), ang(rng));
    const BoundaryPoint q = boundary_point(ang(rng), ang(rng));
    const double d = std::abs(wrap_pm_pi(p.theta - q.theta));
    const double dp = std::abs(wrap_pm_pi(p.theta_prime - q.theta_prime));
    if (std::abs(d - dp) < 1e-6 || (d < 1e-6 && dp < 1e-6)) continue;  // grazing
    ++n_pairs;
    const CausalClass c = causal_class(p, q);
    const double pairing = bilinear_form(p.null_rep, q.null_rep);
    const CausalClass oracle1 =
        pairing > 0.0 ? CausalClass::timelike : CausalClass::spacelike;
    // conformal sign along the sampled straight path on the torus
    const double ds2 = d * d - dp * dp;
    const CausalClass oracle2 = ds2 > 0.0 ? CausalClass::spacelike : CausalClass::timelike;
    if (c != oracle1 || c != oracle2) ++mismatches;
  }

  // isometry factor-action oracle
  double action_err = 0.0;
  for (int s = 0; s < 200; ++s) {
    const Mobius a = Mobius::rotation(kPi * unit(rng)) *
                     Mobius::diagonal(std::exp(unit(rng) - 0.5)) *
                     Mobius::rotation(kPi * unit(rng));
    const Mobius b = Mobius::rotation(kPi * unit(rng)) *
                     Mobius::diagonal(std::exp(unit(rng) - 0.5)) *
                     Mobius::rotation(kPi * unit(rng));
    const IsometryPair g = isometry_from_pair(a, b);
    const BoundaryPoint p = boundary_point(ang(rng), ang(rng));
    const BoundaryPoint gp = g.apply(p);
    action_err = std::max(action_err,
                          proj_angle_dist(gp.left_angle(), a(p.left_angle())));
    action_err = std::max(action_err,
                          proj_angle_dist(gp.right_angle(), b(p.right_angle())));
  }

  // discrete comparison principle on ordered problem pairs
  int cp_failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const GridDomain base = GridDomain::with_spacing(0, 1, 0, 1, 1.0 / 29);
    const double w_lo = 0.5 + unit(rng), w_bump = 0.5 * unit(rng);
    const double d_lo = 0.2 * unit(rng), d_bump = 0.2 * unit(rng);
    const double cx = unit(rng), cy = unit(rng);
    auto bump = [&](double x, double y) {
      return std::exp(-8.0 * ((x - cx) * (x - cx) + (y - cy) * (y - cy)));
    };
    GridDomain g1 = base, g2 = base;
    g1.dirichlet = [&](double, double) { return d_lo; };
    g2.dirichlet = [&](double x, double y) { return d_lo + d_bump * bump(x, y); };
    VortexProblem p1 = VortexProblem::from_functions(
        g1, [&](double, double) { return w_lo; }, [](double, double) { return 0.0; },
        [](double, double) { return 1.0; });
    VortexProblem p2 = VortexProblem::from_functions(
        g2, [&](double x, double y) { return w_lo + w_bump * bump(x, y); },
        [](double, double) { return 0.0; }, [](double, double) { return 1.0; });
    const SolveResult r1 = solve(p1), r2 = solve(p2);
    if (!r1.converged || !r2.converged) {
      ++cp_failures;
      continue;
    }
    for (size_t i = 0; i < r1.field.v.a.size(); ++i)
      if (r1.field.v.a[i] > r2.field.v.a[i] + 1e-10) {
        ++cp_failures;
        break;
      }
  }

  const bool pass = mismatches == 0 && action_err <= 1e-10 && cp_failures == 0;
  return make("8 property suites", pass,
              "causal mismatches " + std::to_string(mismatches) + "/1000, action " +
                  fmt(action_err) + ", comparison failures " +
                  std::to_string(cp_failures) + "/20");
}

// --------------------------------------------------------- trivial suite
CriterionResult trivial_identities() {
  bool pass = true;
  std::ostringstream detail;

  pass = pass && bilinear_form(SplitVector4(1, 0, 0, 0), SplitVector4(1, 0, 0, 0)) == 1.0;
  pass = pass && bilinear_form(SplitVector4(0, 0, 1, 0), SplitVector4(0, 0, 1, 0)) == -1.0;
  pass = pass && bilinear_form(SplitVector4(1, 0, 1, 0), SplitVector4(1, 0, 1, 0)) == 0.0;

  const BoundaryPoint rt = null_to_torus(torus_to_null(1.3, 2.1));
  pass = pass && std::abs(rt.theta - 1.3) < 1e-12 && std::abs(rt.theta_prime - 2.1) < 1e-12;

  pass = pass && causal_class(boundary_point(0, 0), boundary_point(kPi / 4, kPi / 4)) ==
                     CausalClass::lightlike;
  pass = pass && causal_class(boundary_point(0, 0), boundary_point(kPi / 2, 0)) ==
                     CausalClass::spacelike;
  pass = pass && causal_class(boundary_point(0, 0), boundary_point(0, kPi / 2)) ==
                     CausalClass::timelike;

  const HorosphericalRef& ref = horospherical_ref();
  pass = pass && (ref.U0 * ref.V0 - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0;
  const SplitVector4 s0 = horospherical_embedding(Cplx(0, 0));
  pass = pass && std::abs(bilinear_form(s0, s0) + 1.0) < 1e-15;
  pass = pass && std::abs(s0[2] - 1.0 / std::sqrt(2.0)) < 1e-15 && s0[0] == 0.0;

  const PoleModel m4 = PoleModel::normal_form(4);
  pass = pass && std::abs(eval_q(m4, Cplx(1.0, 0.0)) - Cplx(1.0, 0.0)) < 1e-15;
  PoleModel m3 = PoleModel::normal_form(3);
  pass = pass && std::abs(eval_q(m3, Cplx(0.1, 0.0)) - Cplx(1000.0, 0.0)) < 1e-9;

  pass = pass && bessel_supersolution(5.0, 5.0) == 1.0;
  pass = pass && std::abs(bessel_supersolution(5.0, 0.0) -
                          1.0 / bessel_i0(10.0 * std::sqrt(2.0))) < 1e-18;

  // principal curvature boundary case: u = 0, weight = 1 flags lambda = 1
  const Field u0(5, 5, 0.0), w1(5, 5, 1.0);
  const PrincipalCurvature pc = principal_curvature(u0, w1);
  pass = pass && pc.flagged.size() == 25;

  detail << "core identities";
  return make("T1 trivial identities", pass, detail.str());
}

CriterionResult trivial_end_counts() {
  bool pass = true;
  for (int n : {3, 5}) {
    const SyntheticEnd syn = synthetic_end(n, 7 * n + 1);
    std::vector<Eigen::Matrix4d> limits;
    for (const IsometryPair& g : syn.chart_isometries) limits.push_back(g.rep4);
    AssembleOptions opts;
    opts.achronal_samples = 24;
    const PolygonalEnd end = assemble_end(n, syn.holonomy, limits, opts);
    pass = pass && static_cast<int>(end.fundamental_vertices.size()) == 2 * (n - 2);
  }
  return make("T2 end vertex counts", pass, "n in {3,5}");
}

}  // namespace

std::vector<CriterionResult> run(Suite suite) {
  std::vector<CriterionResult> out;
  auto timed = [&](CriterionResult (*fn)()) {
    const auto start = Clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(r));
  };
  if (suite == Suite::trivial) {
    timed(trivial_identities);
    timed(dimension_formulas);
    timed(ray_limit_table);
    timed(trivial_end_counts);
    return out;
  }
  timed(horospherical_oracle);
  timed(ray_limit_table);
  timed(vortex_solver);
  timed(osculating_limits);
  timed(end_combinatorics);
  timed(relabelling);
  timed(dimension_formulas);
  timed(property_suites);
  return out;
}

int report(const std::vector<CriterionResult>& results, std::ostream& out,
           std::ostream* timing) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.name << ": " << r.detail
        << '\n';
    if (timing) *timing << r.name << ": " << r.seconds << " s\n";
    all = all && r.pass;
  }
  out << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace adsmax::acceptance

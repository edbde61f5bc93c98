// Command-line front end: minimal-surface construction and curve-to-curve
// interpolation driven by JSON curve/config files. Emits OBJ meshes and CSV
// reports; exit codes are 0 (ok), 2 (convergence failure), 3 (validation
// failure), 4 (parse error).

#include <iostream>

#include "CLI11.hpp"
#include "minterp/io.hpp"

using namespace minterp;

namespace {

struct CommonArgs {
  std::string curve_path;
  std::string nearby_path;
  std::string config_path;
  std::string out_path;
  std::string report_path;
  double epsilon0_flag = 0.0;
  bool has_epsilon0 = false;
  bool verbose = false;
};

RunConfig load_config(const CommonArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = parse_config(args.config_path);
  if (args.has_epsilon0) cfg.epsilon0 = args.epsilon0_flag;
  return cfg;
}

void add_report_constants(Report& rep, const NormalFieldPack& nf) {
  rep.add("perm", std::to_string(nf.perm.i) + ";" + std::to_string(nf.perm.j) + ";" +
                      std::to_string(nf.perm.k),
          "(i;j;k)");
  rep.add("tau", nf.tau, "tau");
  rep.add("M1", nf.M1, "M_1");
  rep.add("M2", nf.M2, "M_2");
  rep.add("Mc", nf.Mc, "M_c");
  rep.add("Ms", nf.Ms, "M_s");
}

void add_surface_rows(Report& rep, const SurfaceGrid& grid, bool verbose) {
  const SurfaceReport sr = surface_checks(grid);
  rep.add("surface.harmonicity", sr.harmonicity);
  rep.add("surface.conformality_diag", sr.conformality_diag);
  rep.add("surface.conformality_cross", sr.conformality_cross);
  if (verbose) rep.add("surface.mean_curvature_max", mean_curvature_max(grid), "H");
}

int cmd_bjorling(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const ParsedCurve pc = parse_curve(args.curve_path, cfg);
  const double u0 = cfg.anchor_u0.value_or(pc.domain->anchor_default());

  const NormalFieldPack nf = construct(pc.curve, cfg.perm, u0);
  const BaseDatum base = build_base(pc.curve, nf, u0);
  const SurfaceGrid grid =
      make_default_grid(base.a0.f, cfg.grid_nu, cfg.grid_nv, cfg.v_span);

  if (!args.out_path.empty()) write_mesh(grid, args.out_path);
  if (!args.report_path.empty()) {
    Report rep(cfg);
    add_report_constants(rep, base.nf);
    rep.add("isotropy_residual", isotropy_residual(base.a0));
    add_surface_rows(rep, grid, args.verbose);
    rep.write(args.report_path);
  }
  if (args.verbose) {
    std::cout << "bjorling: isotropy residual " << isotropy_residual(base.a0) << "\n";
  }
  return 0;
}

int cmd_interpolate(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const ParsedCurve a = parse_curve(args.curve_path, cfg);
  const ParsedCurve l = parse_curve(args.nearby_path, cfg);
  require_same_domain(a.domain, l.domain);

  const InterpolationResult res = interpolate(a.curve, l.curve, cfg.pipeline());
  const SurfaceGrid grid =
      make_default_grid(res.surface.f, cfg.grid_nu, cfg.grid_nv, cfg.v_span);

  if (!args.out_path.empty()) write_mesh(grid, args.out_path);
  if (!args.report_path.empty()) {
    Report rep(cfg);
    rep.add("iterations", double(res.iterations));
    rep.add("v0_1", res.v0[0], "v_0");
    rep.add("v0_2", res.v0[1], "v_0");
    rep.add("v0_3", res.v0[2], "v_0");
    rep.add("residual_on_I", res.residual_on_I);
    rep.add("interp_residual", res.interp_residual);
    rep.add("isotropy_residual", isotropy_residual(res.surface));
    add_surface_rows(rep, grid, args.verbose);
    rep.write(args.report_path);
  }
  std::cout << "interpolate: converged in " << res.iterations << " iterations, v0 = ("
            << res.v0[0] << ", " << res.v0[1] << ", " << res.v0[2] << ")\n";
  return 0;
}

int cmd_bounds(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const ParsedCurve pc = parse_curve(args.curve_path, cfg);
  const double u0 = cfg.anchor_u0.value_or(pc.domain->anchor_default());

  const NormalFieldPack nf = construct(pc.curve, cfg.perm, u0);
  const BaseDatum base = build_base(pc.curve, nf, u0);

  double eps0;
  bool probed = false;
  if (cfg.epsilon0) {
    eps0 = *cfg.epsilon0;
  } else {
    eps0 = probe_epsilon0(base, cfg.probe());
    probed = true;
    if (eps0 == 0.0) {
      std::cerr << "warning: probe failed at the smallest magnitude; epsilon0 = 0\n";
    }
  }
  const BoundsReport br = compute_eta(base.nf, pc.curve, eps0, cfg.safety);

  Report rep(cfg);
  add_report_constants(rep, base.nf);
  rep.add("epsilon0", br.epsilon0, "epsilon_0");
  rep.add("epsilon0_source", probed ? "probed" : "supplied");
  rep.add("M", br.M, "M");
  rep.add("r", br.r, "r");
  rep.add("epsilon", br.epsilon, "epsilon");
  rep.add("delta", br.delta, "delta");
  rep.add("epsilon1", br.epsilon1, "epsilon_1");
  rep.add("eta", br.eta, "eta");
  const double t2 = br.tau * br.tau;
  rep.add("check.eta_eq_min",
          br.eta == std::min(0.5 * br.epsilon0, br.epsilon1 * br.epsilon1) ? "satisfied"
                                                                           : "violated");
  rep.add("check.delta_lt_min",
          br.delta < std::min(br.epsilon * t2 * br.tau / (4 * br.M2), 0.5 * t2)
              ? "satisfied"
              : "violated");
  rep.add("check.eps1_poly",
          br.epsilon1 * br.epsilon1 * br.P(br.epsilon1) < br.delta ? "satisfied"
                                                                   : "violated");
  rep.add("check.eps1_sq_lt_min",
          br.epsilon1 * br.epsilon1 <
                  std::min(t2 * br.epsilon / (4 * br.Mc * br.M1), br.epsilon)
              ? "satisfied"
              : "violated");
  rep.add("check.eps_lt_min",
          br.epsilon < std::min(1.0, br.epsilon0 / (4 * (br.M + 2) * br.r)) ? "satisfied"
                                                                            : "violated");
  if (!args.report_path.empty()) rep.write(args.report_path);
  else std::cout << rep.csv();
  return 0;
}

int cmd_mesh(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const ParsedCurve pc = parse_curve(args.curve_path, cfg);
  const double u0 = cfg.anchor_u0.value_or(pc.domain->anchor_default());
  const NormalFieldPack nf = construct(pc.curve, cfg.perm, u0);
  const BaseDatum base = build_base(pc.curve, nf, u0);
  const SurfaceGrid grid =
      make_default_grid(base.a0.f, cfg.grid_nu, cfg.grid_nv, cfg.v_span);
  write_mesh(grid, args.out_path);
  return 0;
}

int cmd_verify(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const ParsedCurve a = parse_curve(args.curve_path, cfg);
  const ParsedCurve l = parse_curve(args.nearby_path, cfg);
  require_same_domain(a.domain, l.domain);

  const InterpolationResult res = interpolate(a.curve, l.curve, cfg.pipeline());
  const auto [r1, r2] = interpolation_residuals(res, a.curve, l.curve);
  const double iso = isotropy_residual(res.surface);

  bool ok = r1 < 1e-8 && r2 < 1e-8 && iso < 1e-8;
  if (!args.out_path.empty()) {
    const SurfaceGrid grid =
        make_default_grid(res.surface.f, cfg.grid_nu, cfg.grid_nv, cfg.v_span);
    const std::string expect = mesh_to_obj(grid);
    if (read_file(args.out_path) != expect) {
      std::cerr << "verify: OBJ mismatch for " << args.out_path << "\n";
      ok = false;
    }
  }
  std::cout << "verify: residual_on_I=" << r1 << " interp_residual=" << r2
            << " isotropy=" << iso << (ok ? " [ok]" : " [mismatch]") << "\n";
  if (!ok) raise(Errc::imaginary_derivative_residual, "verification checks failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal surfaces through nearby analytic curves"};
  app.require_subcommand(1);

  CommonArgs args;

  auto add_common = [&](CLI::App* sub, bool needs_nearby, bool needs_out) {
    sub->add_option("--curve", args.curve_path, "curve JSON file")->required();
    if (needs_nearby) {
      sub->add_option("--nearby", args.nearby_path, "nearby curve JSON file")->required();
    }
    sub->add_option("--config", args.config_path, "run configuration JSON file");
    auto* out = sub->add_option("--out", args.out_path, "OBJ mesh output path");
    if (needs_out) out->required();
    sub->add_option("--report", args.report_path, "CSV report output path");
    sub->add_flag("--verbose", args.verbose, "extra diagnostics");
  };

  auto* bj = app.add_subcommand("bjorling", "base minimal surface through the curve");
  add_common(bj, false, false);
  auto* ip = app.add_subcommand("interpolate", "minimal surface through both curves");
  add_common(ip, true, false);
  auto* bo = app.add_subcommand("bounds", "closeness-radius constants");
  add_common(bo, false, false);
  bo->add_option("--epsilon0", args.epsilon0_flag, "contraction radius estimate")
      ->each([&](const std::string&) { args.has_epsilon0 = true; });
  auto* ve = app.add_subcommand("verify", "re-check an emitted result");
  add_common(ve, true, false);
  auto* me = app.add_subcommand("mesh", "OBJ mesh of the base surface");
  add_common(me, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 4;
  }

  try {
    if (bj->parsed()) return cmd_bjorling(args);
    if (ip->parsed()) return cmd_interpolate(args);
    if (bo->parsed()) return cmd_bounds(args);
    if (ve->parsed()) return cmd_verify(args);
    if (me->parsed()) return cmd_mesh(args);
  } catch (const Error& e) {
    std::cerr << "error";
    if (!e.stage().empty()) std::cerr << " [" << e.stage() << "]";
    std::cerr << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

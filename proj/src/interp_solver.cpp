#include "minterp/interp_solver.hpp"

#include <cmath>

namespace minterp {

PerturbPack build_V(const AnalyticCurve3& l, const NormalFieldPack& nf, double anchor_u0,
                    bool printed_v3_sign) {
  const auto& dom = l.domain();
  const AnalyticCurve3 lp = derivative(l);
  const AnalyticScalar& li = lp[nf.perm.ci()];
  const AnalyticScalar& lj = lp[nf.perm.cj()];
  const AnalyticScalar& lk = lp[nf.perm.ck()];

  const AnalyticScalar tangent = li * nf.cos_theta + lj * nf.sin_theta;

  PerturbPack pp;
  pp.l = l;
  pp.B0 = lk * lk + tangent * tangent;
  const double scale = std::max(1.0, sup_norm(pp.B0));
  if (inf_modulus(pp.B0) <= dom->zero_tol * scale) {
    raise(Errc::b0_vanishes, "B0 vanishes on Omega-bar; l' is too far from a'");
  }
  // Same cut and anchor sign as q0, so l = a reproduces q0 and n0 exactly.
  pp.B = sqrt_branch(pp.B0, anchor_u0, nf.q0_branch).root;

  const AnalyticScalar A1 = lk * nf.cos_theta;
  const AnalyticScalar A2 = lk * nf.sin_theta;
  const AnalyticScalar A3 = printed_v3_sign ? tangent : -tangent;

  std::array<AnalyticScalar, 3> slots;
  slots[nf.perm.ci()] = divide(A1, pp.B);
  slots[nf.perm.cj()] = divide(A2, pp.B);
  slots[nf.perm.ck()] = divide(A3, pp.B);
  pp.V = AnalyticCurve3{std::move(slots)};
  return pp;
}

IsotropicCurve build_CV(const AnalyticCurve3& l, const PerturbPack& pp, double u0) {
  const AnalyticCurve3 lp = derivative(l);
  const AnalyticCurve3 cv = l - Cplx(0.0, 1.0) * antiderivative(cross(pp.V, lp), u0);
  return make_isotropic(cv, u0);
}

AnalyticCurve3 apply_DF(const BaseDatum& base, const AnalyticScalar& V,
                        const AnalyticCurve3& d) {
  require_same_domain(base.a.domain(), V.domain());
  require_same_domain(base.a.domain(), d.domain());
  const Cplx I(0.0, 1.0);
  std::array<AnalyticScalar, 3> out;
  for (int m = 0; m < 3; ++m) {
    out[m] = V * base.a_prime[m] - I * (V * base.d0_prime[m]) - I * d[m];
  }
  return AnalyticCurve3{std::move(out)};
}

std::pair<AnalyticScalar, AnalyticCurve3> apply_DF_inverse(const BaseDatum& base,
                                                           const AnalyticCurve3& rhs) {
  require_same_domain(base.a.domain(), rhs.domain());
  const auto& dom = base.a.domain();
  const int ci = base.nf.perm.ci(), cj = base.nf.perm.cj();

  // All factors are real on I; taking real parts keeps the reconstructed
  // update exactly inside T_Omega for the active permutation.
  int hint = std::max(rhs[ci].degree(), rhs[cj].degree()) + base.denom.degree();
  const AnalyticScalar V = AnalyticScalar::fit(
      dom,
      [&](double x) {
        const double re_i = std::real(rhs[ci].eval_unchecked(x));
        const double re_j = std::real(rhs[cj].eval_unchecked(x));
        const double di0p = std::real(base.d0_prime[ci].eval_unchecked(x));
        const double dj0p = std::real(base.d0_prime[cj].eval_unchecked(x));
        const double aip = std::real(base.a_prime[ci].eval_unchecked(x));
        const double ajp = std::real(base.a_prime[cj].eval_unchecked(x));
        const double den = std::real(base.denom.eval_unchecked(x));
        const double v1 = (re_j * di0p - re_i * dj0p) / den;
        const double v2 = (ajp * re_i - aip * re_j) / den;
        return Cplx(v1, v2);
      },
      hint);

  const Cplx I(0.0, 1.0);
  std::array<AnalyticScalar, 3> d;
  for (int m = 0; m < 3; ++m) {
    d[m] = I * (rhs[m] - (base.a_prime[m] - I * base.d0_prime[m]) * V);
  }
  return {V, AnalyticCurve3{std::move(d)}};
}

namespace {

bool gamma_in_range(const AnalyticScalar& gamma) {
  const auto& dom = gamma.domain();
  const Eigen::VectorXd phis = dom->boundary_angles();
  for (int s = 0; s < phis.size(); ++s) {
    if (!dom->contains(gamma.eval_unchecked(dom->boundary_point(phis[s])))) return false;
  }
  return true;
}

AnalyticCurve3 solve_residual(const BaseDatum& base, const AnalyticScalar& gamma,
                              const AnalyticCurve3& d, const AnalyticCurve3& target) {
  const AnalyticCurve3 F = compose(base.a - Cplx(0.0, 1.0) * d, gamma);
  return F - target;
}

double residual_norm_estimate(const AnalyticCurve3& r, double noise_floor) {
  double m = 0.0;
  for (int k = 0; k < 3; ++k) m = std::max(m, sup_norm(r[k].truncated(noise_floor)));
  return m;
}

}  // namespace

NewtonState chord_newton(const BaseDatum& base, const IsotropicCurve& target,
                         const SolverConfig& cfg) {
  require_same_domain(base.a.domain(), target.f.domain());
  const double min_step = std::pow(0.5, cfg.min_step_exp);

  NewtonState st;
  st.gamma = AnalyticScalar::identity(base.a.domain());
  st.d = base.d0;
  st.residual = solve_residual(base, st.gamma, st.d, target.f);
  st.residual_norm = residual_norm_estimate(st.residual, cfg.noise_floor);
  st.iter = 0;

  while (st.residual_norm >= cfg.tol) {
    if (st.iter >= cfg.max_iter) {
      raise(Errc::non_convergence,
            "chord iteration did not converge in " + std::to_string(cfg.max_iter) +
                " steps; perturbation likely outside the contraction neighborhood");
    }
    const auto [V, du] = apply_DF_inverse(base, st.residual);

    double step = 1.0;
    AnalyticScalar gamma_next = st.gamma - V;
    while (!gamma_in_range(gamma_next)) {
      step *= 0.5;
      if (step < min_step) {
        raise(Errc::range_escape, "gamma left Omega-bar even at the damping floor");
      }
      gamma_next = st.gamma - Cplx(step) * V;
    }
    st.gamma = std::move(gamma_next);
    st.d = st.d - Cplx(step) * du;
    st.residual = solve_residual(base, st.gamma, st.d, target.f);
    st.residual_norm = residual_norm_estimate(st.residual, cfg.noise_floor);
    ++st.iter;
  }
  return st;
}

InterpolationResult realign_translation(const BaseDatum& base, const NewtonState& state,
                                        const IsotropicCurve& target, double u0) {
  const auto& dom = base.a.domain();
  const int ck = base.nf.perm.ck();

  const AnalyticScalar dk_prime = derivative(state.d[ck]);
  const double imag_res = imag_residual_on_interval(dk_prime);
  if (imag_res > 1e-7 * (1.0 + sup_norm(dk_prime))) {
    raise(Errc::imaginary_derivative_residual,
          "d_k' has nonreal values on I; solve drifted off the isotropic manifold");
  }

  const Cplx z0 = -state.d[ck].eval_unchecked(Cplx(u0, 0.0));

  InterpolationResult res;
  res.gamma = state.gamma;
  res.D = state.d;
  res.D[ck] += AnalyticScalar::constant(dom, z0);
  res.v0 = Eigen::Vector3d::Zero();
  res.v0[ck] = std::imag(z0);
  res.surface = make_isotropic(base.a - Cplx(0.0, 1.0) * res.D, u0);
  res.iterations = state.iter;

  const Eigen::VectorXd x = dom->nodes(128);
  double r1 = 0.0, r2 = 0.0;
  for (int jn = 0; jn < x.size(); ++jn) {
    const Cplx u(x[jn], 0.0);
    const Cplx g = res.gamma.eval_unchecked(u);
    for (int m = 0; m < 3; ++m) {
      const double surf_u = std::real(res.surface.f[m].eval_unchecked(u));
      const double a_u = std::real(base.a[m].eval_unchecked(u));
      r1 = std::max(r1, std::abs(surf_u - a_u));
      const double surf_g = std::real(res.surface.f[m].eval_unchecked(g));
      const double l_u = std::real(target.f[m].eval_unchecked(u));
      r2 = std::max(r2, std::abs(surf_g - (l_u + res.v0[m])));
    }
  }
  res.residual_on_I = r1;
  res.interp_residual = r2;
  return res;
}

namespace {

template <typename F>
auto staged(const char* stage, F&& fn) {
  try {
    return fn();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

}  // namespace

InterpolationResult interpolate(const AnalyticCurve3& a, const AnalyticCurve3& l,
                                const PipelineConfig& cfg) {
  require_same_domain(a.domain(), l.domain());
  const double u0 = cfg.anchor_u0.value_or(a.domain()->anchor_default());

  const NormalFieldPack nf =
      staged("normal_field", [&] { return construct(a, cfg.perm, u0); });
  const BaseDatum base = staged("build_base", [&] { return build_base(a, nf, u0); });
  const PerturbPack pp =
      staged("build_V", [&] { return build_V(l, base.nf, u0, cfg.printed_v3_sign); });
  const IsotropicCurve cv = staged("build_CV", [&] { return build_CV(l, pp, u0); });
  const NewtonState st =
      staged("chord_newton", [&] { return chord_newton(base, cv, cfg.solver); });
  return staged("realign_translation",
                [&] { return realign_translation(base, st, cv, u0); });
}

}  // namespace minterp

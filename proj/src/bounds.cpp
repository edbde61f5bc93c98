#include "minterp/bounds.hpp"

#include <cmath>

namespace minterp {

BoundsReport compute_eta(const NormalFieldPack& nf, const AnalyticCurve3& a,
                         double epsilon0, double safety) {
  if (!(epsilon0 > 0.0)) raise(Errc::degenerate_constants, "epsilon0 must be positive");
  if (!(safety > 0.0 && safety < 1.0)) {
    raise(Errc::degenerate_constants, "safety factor must lie in (0,1)");
  }

  BoundsReport rep;
  rep.M = curve_norm(derivative(a));
  rep.r = a.domain()->diameter;
  rep.tau = nf.tau;
  rep.M1 = nf.M1;
  rep.M2 = nf.M2;
  rep.Mc = nf.Mc;
  rep.Ms = nf.Ms;
  rep.epsilon0 = epsilon0;
  rep.safety = safety;

  if (!(rep.tau > 0.0) || rep.M2 == 0.0 || rep.Mc * rep.M1 == 0.0) {
    raise(Errc::degenerate_constants,
          "tau, M2 or Mc*M1 vanish; the radius recipe is vacuous for this base");
  }

  rep.epsilon = safety * std::min(1.0, epsilon0 / (4.0 * (rep.M + 2.0) * rep.r));
  const double tau2 = rep.tau * rep.tau;
  rep.delta = safety * std::min(rep.epsilon * tau2 * rep.tau / (4.0 * rep.M2), 0.5 * tau2);

  // Largest t with t^2 P(t) < delta; t^2 P(t) is strictly increasing.
  double hi = 1.0;
  while (hi * hi * rep.P(hi) < rep.delta && hi < 1e8) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid * mid * rep.P(mid) < rep.delta) lo = mid;
    else hi = mid;
  }
  const double cap2 = std::min(tau2 * rep.epsilon / (4.0 * rep.Mc * rep.M1), rep.epsilon);
  rep.epsilon1 = std::min(lo, std::sqrt(cap2)) * (1.0 - 1e-9);
  rep.eta = std::min(0.5 * epsilon0, rep.epsilon1 * rep.epsilon1);
  return rep;
}

double probe_epsilon0(const BaseDatum& base, const ProbeConfig& cfg) {
  const auto& dom = base.a.domain();
  const Eigen::Vector3cd dir = cfg.direction.cast<Cplx>();

  auto passes = [&](double s) {
    const AnalyticCurve3 shift = AnalyticCurve3::constant(dom, Cplx(s) * dir);
    IsotropicCurve target = base.a0;
    target.f = target.f + shift;  // constant shift preserves isotropy
    try {
      chord_newton(base, target, cfg.solver);
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::non_convergence || e.code() == Errc::range_escape) return false;
      throw;
    }
  };

  if (!passes(cfg.s_min)) return 0.0;
  double lo = cfg.s_min;
  double hi = lo;
  while (hi < cfg.s_max) {
    hi *= 2.0;
    if (!passes(hi)) break;
    lo = hi;
  }
  if (lo == hi || hi >= cfg.s_max) return lo;
  while (hi - lo > cfg.bisect_tol * lo) {
    const double mid = std::sqrt(lo * hi);
    if (passes(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace minterp

#include "minterp/bjorling.hpp"

namespace minterp {

IsotropicCurve make_isotropic(AnalyticCurve3 f, double anchor_u0) {
  IsotropicCurve c;
  c.isotropy_defect = isotropy_defect(f);
  c.f = std::move(f);
  c.anchor_u0 = anchor_u0;
  return c;
}

IsotropicCurve schwartz_solve(const AnalyticCurve3& a, const AnalyticCurve3& n, double u0) {
  require_same_domain(a.domain(), n.domain());
  const AnalyticCurve3 ap = derivative(a);

  const double unit_res = sup_norm(dot(n, n) - AnalyticScalar::constant(a.domain(), 1.0));
  if (unit_res > 1e-7) {
    raise(Errc::not_unit_normal, "normal field is not unit length on Omega-bar");
  }
  const double orth_res = sup_norm(dot(n, ap));
  if (orth_res > 1e-7 * std::max(1.0, curve_norm(ap))) {
    raise(Errc::not_orthogonal, "normal field is not orthogonal to the tangent");
  }

  const AnalyticCurve3 f = a - Cplx(0.0, 1.0) * antiderivative(cross(n, ap), u0);
  return make_isotropic(f, u0);
}

BaseDatum build_base(const AnalyticCurve3& a, NormalFieldPack nf, double u0) {
  BaseDatum base;
  base.a = a;
  base.a_prime = derivative(a);
  base.d0 = antiderivative(cross(nf.n0, base.a_prime), u0);
  base.d0_prime = derivative(base.d0);
  base.a0 = make_isotropic(a - Cplx(0.0, 1.0) * base.d0, u0);

  const int ci = nf.perm.ci(), cj = nf.perm.cj();
  base.denom = base.a_prime[cj] * base.d0_prime[ci] - base.a_prime[ci] * base.d0_prime[cj];
  const double scale = std::max(1.0, sup_norm(base.denom));
  if (inf_modulus(base.denom) <= 1e-8 * scale) {
    raise(Errc::denominator_vanishes, "inverse-system denominator vanishes on Omega-bar");
  }
  base.nf = std::move(nf);
  return base;
}

}  // namespace minterp

#include "minterp/curve.hpp"

namespace minterp {

AnalyticCurve3 AnalyticCurve3::make(AnalyticScalar x, AnalyticScalar y, AnalyticScalar z) {
  require_same_domain(x.domain(), y.domain());
  require_same_domain(x.domain(), z.domain());
  return AnalyticCurve3{{std::move(x), std::move(y), std::move(z)}};
}

AnalyticCurve3 AnalyticCurve3::constant(const DomainPtr& dom, const Eigen::Vector3cd& v) {
  return make(AnalyticScalar::constant(dom, v[0]), AnalyticScalar::constant(dom, v[1]),
              AnalyticScalar::constant(dom, v[2]));
}

AnalyticCurve3 AnalyticCurve3::fit(const DomainPtr& dom,
                                   const std::function<Eigen::Vector3cd(double)>& f) {
  return make(AnalyticScalar::fit(dom, [&](double x) { return f(x)[0]; }),
              AnalyticScalar::fit(dom, [&](double x) { return f(x)[1]; }),
              AnalyticScalar::fit(dom, [&](double x) { return f(x)[2]; }));
}

AnalyticCurve3 operator+(AnalyticCurve3 a, const AnalyticCurve3& b) {
  for (int m = 0; m < 3; ++m) a.comp[m] += b.comp[m];
  return a;
}

AnalyticCurve3 operator-(AnalyticCurve3 a, const AnalyticCurve3& b) {
  for (int m = 0; m < 3; ++m) a.comp[m] -= b.comp[m];
  return a;
}

AnalyticCurve3 operator*(Cplx s, AnalyticCurve3 a) {
  for (int m = 0; m < 3; ++m) a.comp[m] *= s;
  return a;
}

AnalyticScalar dot(const AnalyticCurve3& u, const AnalyticCurve3& v) {
  require_same_domain(u.domain(), v.domain());
  int hint = 0;
  double scale = 0.0;
  for (int m = 0; m < 3; ++m) {
    hint = std::max(hint, u[m].degree() + v[m].degree());
    scale += one_norm(u[m]) * one_norm(v[m]);
  }
  return AnalyticScalar::fit(
      u.domain(),
      [&](double x) {
        Cplx acc = 0.0;
        for (int m = 0; m < 3; ++m) acc += u[m].eval_unchecked(x) * v[m].eval_unchecked(x);
        return acc;
      },
      hint, 1e-14 * (1.0 + scale));
}

AnalyticCurve3 cross(const AnalyticCurve3& u, const AnalyticCurve3& v) {
  require_same_domain(u.domain(), v.domain());
  auto comp = [&](int p, int q) {
    const double scale = one_norm(u[p]) * one_norm(v[q]) + one_norm(u[q]) * one_norm(v[p]);
    return AnalyticScalar::fit(
        u.domain(),
        [&, p, q](double x) {
          return u[p].eval_unchecked(x) * v[q].eval_unchecked(x) -
                 u[q].eval_unchecked(x) * v[p].eval_unchecked(x);
        },
        std::max(u[p].degree() + v[q].degree(), u[q].degree() + v[p].degree()),
        1e-14 * (1.0 + scale));
  };
  return AnalyticCurve3::make(comp(1, 2), comp(2, 0), comp(0, 1));
}

AnalyticCurve3 derivative(const AnalyticCurve3& f) {
  return AnalyticCurve3::make(derivative(f[0]), derivative(f[1]), derivative(f[2]));
}

AnalyticCurve3 antiderivative(const AnalyticCurve3& f, double u0) {
  return AnalyticCurve3::make(antiderivative(f[0], u0), antiderivative(f[1], u0),
                              antiderivative(f[2], u0));
}

AnalyticCurve3 compose(const AnalyticCurve3& f, const AnalyticScalar& gamma) {
  return AnalyticCurve3::make(compose(f[0], gamma), compose(f[1], gamma),
                              compose(f[2], gamma));
}

double curve_norm(const AnalyticCurve3& f) {
  double m = 0.0;
  for (int k = 0; k < 3; ++k) m = std::max(m, sup_norm(f[k]));
  return m;
}

double imag_residual_on_interval(const AnalyticCurve3& f, int n_nodes) {
  double m = 0.0;
  for (int k = 0; k < 3; ++k) m = std::max(m, imag_residual_on_interval(f[k], n_nodes));
  return m;
}

double isotropy_defect(const AnalyticCurve3& f) {
  const AnalyticScalar q = dot(derivative(f), derivative(f));
  return sup_norm(q);
}

}  // namespace minterp

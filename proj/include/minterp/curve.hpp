#pragma once

#include <array>

#include "minterp/analytic.hpp"

namespace minterp {

// Triple of analytic scalars on one shared domain; the C^w(Omega-bar, C^3)
// values of the pipeline (curves a, l, d, isotropic curves, normals).
struct AnalyticCurve3 {
  std::array<AnalyticScalar, 3> comp;

  const DomainPtr& domain() const { return comp[0].domain(); }
  AnalyticScalar& operator[](int m) { return comp[m]; }
  const AnalyticScalar& operator[](int m) const { return comp[m]; }

  Eigen::Vector3cd eval(Cplx w) const {
    return {comp[0].eval(w), comp[1].eval(w), comp[2].eval(w)};
  }
  Eigen::Vector3cd eval_unchecked(Cplx w) const {
    return {comp[0].eval_unchecked(w), comp[1].eval_unchecked(w),
            comp[2].eval_unchecked(w)};
  }

  static AnalyticCurve3 make(AnalyticScalar x, AnalyticScalar y, AnalyticScalar z);
  static AnalyticCurve3 constant(const DomainPtr& dom, const Eigen::Vector3cd& v);
  static AnalyticCurve3 fit(const DomainPtr& dom,
                            const std::function<Eigen::Vector3cd(double)>& f);
};

AnalyticCurve3 operator+(AnalyticCurve3 a, const AnalyticCurve3& b);
AnalyticCurve3 operator-(AnalyticCurve3 a, const AnalyticCurve3& b);
AnalyticCurve3 operator*(Cplx s, AnalyticCurve3 a);

// Complex-bilinear dot product (no conjugation) and cross product.
AnalyticScalar dot(const AnalyticCurve3& u, const AnalyticCurve3& v);
AnalyticCurve3 cross(const AnalyticCurve3& u, const AnalyticCurve3& v);

AnalyticCurve3 derivative(const AnalyticCurve3& f);
AnalyticCurve3 antiderivative(const AnalyticCurve3& f, double u0);
AnalyticCurve3 compose(const AnalyticCurve3& f, const AnalyticScalar& gamma);

// max_j sup_{Omega-bar} |f_j|, the norm of Notation-type sup estimates.
double curve_norm(const AnalyticCurve3& f);

// Largest |Im f_j| over I-nodes across components.
double imag_residual_on_interval(const AnalyticCurve3& f, int n_nodes = 128);

// Largest |dot(f', f')| over I-nodes and boundary samples.
double isotropy_defect(const AnalyticCurve3& f);

}  // namespace minterp

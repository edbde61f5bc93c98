#pragma once

#include "minterp/interp_solver.hpp"

namespace minterp {

// Explicit constants behind the closeness radius eta:
//   eps  < min{1, eps0 / (4 (M+2) r)}
//   delta < min{eps tau^3 / (4 M2), tau^2 / 2}
//   eps1^2 P(eps1) < delta,  eps1^2 < min{tau^2 eps / (4 Mc M1), eps}
//   eta  = min{eps0 / 2, eps1^2}
// with P(t) = (2M + t^2)(1 + (Mc + Ms)^2), M = ||a'||, r = diameter of
// Omega-bar.
struct BoundsReport {
  double M = 0.0;
  double r = 0.0;
  double tau = 0.0, M1 = 0.0, M2 = 0.0, Mc = 0.0, Ms = 0.0;
  double epsilon0 = 0.0;
  double epsilon = 0.0;
  double epsilon1 = 0.0;
  double delta = 0.0;
  double eta = 0.0;
  double safety = 0.0;

  double P(double t) const { return (2.0 * M + t * t) * (1.0 + (Mc + Ms) * (Mc + Ms)); }
};

// Evaluates the chain above with a safety factor in (0,1) turning the strict
// inequalities into concrete choices; eps1 found by bisection (1e-12
// relative). Throws DegenerateConstants when tau <= 0 or M2 = 0.
BoundsReport compute_eta(const NormalFieldPack& nf, const AnalyticCurve3& a,
                         double epsilon0, double safety = 0.9);

struct ProbeConfig {
  Eigen::Vector3d direction = Eigen::Vector3d(1.0, 0.0, 0.0);
  double s_min = 1e-8;
  double s_max = 1e3;
  double bisect_tol = 0.05;  // relative bracket width
  SolverConfig solver;
};

// Empirical estimate of the contraction radius eps0: largest perturbation
// magnitude s such that chord_newton still converges for the target
// a0 + s * direction (a constant shift keeps the target isotropic). Returns 0
// when even s_min fails. An estimate, not a certificate.
double probe_epsilon0(const BaseDatum& base, const ProbeConfig& cfg = {});

}  // namespace minterp

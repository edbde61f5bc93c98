#pragma once

#include "minterp/bjorling.hpp"

namespace minterp {

// Isotropic extension data for the nearby curve l: the rooted B (B^2 = B0,
// same branch cut and anchor sign as q0) and the perturbed unit normal V.
struct PerturbPack {
  AnalyticCurve3 l;
  AnalyticScalar B0;
  AnalyticScalar B;
  AnalyticCurve3 V;
};

struct SolverConfig {
  int max_iter = 50;
  double tol = 1e-11;           // on the max-component sup norm
  int min_step_exp = 10;        // damping floor 2^-min_step_exp
  double noise_floor = 1e-14;   // residual coefficients below this are dropped
                                // before the sup-norm estimate
};

struct NewtonState {
  AnalyticScalar gamma;
  AnalyticCurve3 d;
  AnalyticCurve3 residual;      // (a - i d) o gamma - target
  double residual_norm = 0.0;
  int iter = 0;
};

struct InterpolationResult {
  AnalyticScalar gamma;
  AnalyticCurve3 D;             // translation-fixed d
  Eigen::Vector3d v0 = Eigen::Vector3d::Zero();
  IsotropicCurve surface;       // a - i D
  double residual_on_I = 0.0;   // sup_I |Re surface(u) - a(u)|
  double interp_residual = 0.0; // sup_I |Re surface(gamma(u)) - (l(u) + v0)|
  int iterations = 0;
};

// B0 = l_k'^2 + (l_i' cos(theta) + l_j' sin(theta))^2 and the unit normal V
// assembled at the pack's coordinate slots as
//   (l_k' cos(theta)/B, l_k' sin(theta)/B, -(l_i' cos(theta)+l_j' sin(theta))/B).
// The third component carries a minus sign so that <V, l'> = 0 and <V, V> = 1
// hold identically. printed_v3_sign = true drops the minus (for comparison
// only; it breaks both identities). Throws B0Vanishes.
PerturbPack build_V(const AnalyticCurve3& l, const NormalFieldPack& nf,
                    double anchor_u0, bool printed_v3_sign = false);

// C_V(w) = l(w) - i int_{u0}^w (V x l'); isotropic with Re C_V = l on I.
IsotropicCurve build_CV(const AnalyticCurve3& l, const PerturbPack& pp, double u0);

// Frozen derivative at (gamma0, d0): DF(V, d) = a' V - i V d0' - i d.
AnalyticCurve3 apply_DF(const BaseDatum& base, const AnalyticScalar& V,
                        const AnalyticCurve3& d);

// Closed-form inverse of the frozen derivative. On I, with (i,j,k) the pack's
// permutation:
//   V1 = (Re rhs_j d0_i' - Re rhs_i d0_j') / denom,
//   V2 = (a_j' Re rhs_i - a_i' Re rhs_j) / denom,
// V = V1 + i V2 extended analytically, then d_m = i (rhs_m - (a_m' - i d0_m') V).
// Satisfies apply_DF(base, V, d) = rhs and Im d_i = Im d_j = 0 on I.
std::pair<AnalyticScalar, AnalyticCurve3> apply_DF_inverse(const BaseDatum& base,
                                                           const AnalyticCurve3& rhs);

// Chord-Newton iteration for (a - i d) o gamma = target from (identity, d0),
// with step halving whenever the candidate gamma leaves Omega-bar (plus
// margin). Throws NonConvergence / RangeEscape.
NewtonState chord_newton(const BaseDatum& base, const IsotropicCurve& target,
                         const SolverConfig& cfg = {});

// Translation fix: verifies Im d_k' = 0 on I, recenters slot k so that
// D_k(u0) = 0, and reports v0 = Im(z0) e_k together with both interpolation
// residuals. Throws ImaginaryDerivativeResidual.
InterpolationResult realign_translation(const BaseDatum& base, const NewtonState& state,
                                        const IsotropicCurve& target, double u0);

struct PipelineConfig {
  SolverConfig solver;
  std::optional<IndexPermutation> perm;
  std::optional<double> anchor_u0;
  bool printed_v3_sign = false;
};

// Full pipeline: normal field -> base -> V -> C_V -> chord Newton ->
// translation fix. Errors are tagged with the stage that raised them.
InterpolationResult interpolate(const AnalyticCurve3& a, const AnalyticCurve3& l,
                                const PipelineConfig& cfg = {});

}  // namespace minterp

#pragma once

#include "minterp/normal_field.hpp"

namespace minterp {

// Holomorphic curve with <f', f'> = 0; Re f is a minimal surface.
struct IsotropicCurve {
  AnalyticCurve3 f;
  double anchor_u0 = 0.0;
  double isotropy_defect = 0.0;  // sup |<f',f'>| over samples, recorded at build
};

IsotropicCurve make_isotropic(AnalyticCurve3 f, double anchor_u0);

// The linearization point of the interpolation solve: a, its normal pack, the
// base displacement d0, the base isotropic curve a0 = a - i d0 and the
// inverse-system denominator a_j' d0_i' - a_i' d0_j' for the pack's
// permutation (certified nonvanishing).
struct BaseDatum {
  AnalyticCurve3 a;
  NormalFieldPack nf;
  AnalyticCurve3 d0;
  IsotropicCurve a0;
  AnalyticScalar denom;

  // cached derivatives, used on every solver iteration
  AnalyticCurve3 a_prime;
  AnalyticCurve3 d0_prime;
};

// Solution of the Bjorling problem for data (a, n): the isotropic curve
// f = a - i * int_{u0} (n x a'). Preconditions |n| = 1 and <n, a'> = 0 are
// checked at 1e-7; throws NotUnitNormal / NotOrthogonal.
IsotropicCurve schwartz_solve(const AnalyticCurve3& a, const AnalyticCurve3& n, double u0);

// d0 = int_{u0} (n0 x a'), a0 = a - i d0, plus the certified denominator.
// Throws DenominatorVanishes.
BaseDatum build_base(const AnalyticCurve3& a, NormalFieldPack nf, double u0);

}  // namespace minterp

#pragma once

#include <optional>

#include "minterp/curve.hpp"

namespace minterp {

// Which coordinates play the (i, j, k) roles in the normal-field construction.
struct IndexPermutation {
  int i = 1, j = 2, k = 3;  // 1-based, a permutation of {1,2,3}

  int ci() const { return i - 1; }
  int cj() const { return j - 1; }
  int ck() const { return k - 1; }
  bool valid() const;
};

// All six permutations in lexicographic order.
const std::array<IndexPermutation, 6>& all_permutations();

// Admissibility diagnostics for one permutation: the two nonvanishing
// conditions and the unit-disk bound on a_j'/sqrt(a_i'^2 + a_j'^2).
struct ConditionReport {
  IndexPermutation perm;
  bool tangent_pair_nonzero = false;  // inf |a_i'^2 + a_j'^2| > 0
  double tangent_pair_inf = 0.0;
  bool speed_nonzero = false;         // inf |a_i'^2 + a_j'^2 + a_k'^2| > 0
  double speed_inf = 0.0;
  bool ratio_bounded = false;         // sup |a_j'/sqrt(a_i'^2+a_j'^2)| < 1
  double ratio_sup = 0.0;

  bool admissible() const { return tangent_pair_nonzero && speed_nonzero && ratio_bounded; }
};

// theta, the rooted q0 and the analytic unit normal n0, with the constants
// used downstream: tau = inf|q0|, M1 = sup|q0|, M2 = sup|p01|,
// Mc = sup|cos theta|, Ms = sup|sin theta|.
struct NormalFieldPack {
  IndexPermutation perm;
  AnalyticScalar theta;
  AnalyticScalar sin_theta;  // = a_j'/sqrt(a_i'^2 + a_j'^2)
  AnalyticScalar cos_theta;  // = sqrt(1 - sin^2 theta), anchor-positive branch
  AnalyticScalar Q0;
  AnalyticScalar q0;
  BranchSpec q0_branch;
  AnalyticCurve3 n0;
  double anchor_u0 = 0.0;
  double tau = 0.0;
  double Mc = 0.0, Ms = 0.0, M1 = 0.0, M2 = 0.0;
};

ConditionReport validate_conditions(const AnalyticCurve3& a, const IndexPermutation& perm);

// Builds the pack for the given permutation, or for the first admissible
// permutation in lexicographic order when none is given. Throws
// NoAdmissiblePermutation, or propagates UnitDiskViolation / ZeroOnDomain
// when an explicitly requested permutation fails.
NormalFieldPack construct(const AnalyticCurve3& a,
                          std::optional<IndexPermutation> perm = std::nullopt,
                          std::optional<double> anchor_u0 = std::nullopt);

}  // namespace minterp

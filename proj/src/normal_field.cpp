#include "minterp/normal_field.hpp"

#include <cmath>

namespace minterp {

bool IndexPermutation::valid() const {
  return ((1 << i) | (1 << j) | (1 << k)) == 0b1110;
}

const std::array<IndexPermutation, 6>& all_permutations() {
  static const std::array<IndexPermutation, 6> perms = {{
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
  }};
  return perms;
}

ConditionReport validate_conditions(const AnalyticCurve3& a, const IndexPermutation& perm) {
  ConditionReport rep;
  rep.perm = perm;
  const auto& dom = a.domain();
  const AnalyticCurve3 ap = derivative(a);
  const AnalyticScalar& ai = ap[perm.ci()];
  const AnalyticScalar& aj = ap[perm.cj()];
  const AnalyticScalar& ak = ap[perm.ck()];

  const AnalyticScalar pair = ai * ai + aj * aj;
  const AnalyticScalar speed = pair + ak * ak;
  const double scale = std::max(1.0, sup_norm(speed));

  rep.tangent_pair_inf = inf_modulus(pair);
  rep.tangent_pair_nonzero = rep.tangent_pair_inf > dom->zero_tol * scale;
  rep.speed_inf = inf_modulus(speed);
  rep.speed_nonzero = rep.speed_inf > dom->zero_tol * scale;

  if (!rep.tangent_pair_nonzero) {
    rep.ratio_sup = std::numeric_limits<double>::infinity();
    return rep;
  }
  try {
    const BranchedRoot root = sqrt_branch(pair, dom->anchor_default());
    const AnalyticScalar ratio = divide(aj, root.root);
    rep.ratio_sup = sup_norm(ratio);
    rep.ratio_bounded = rep.ratio_sup < 1.0 - dom->arcsin_margin;
  } catch (const Error&) {
    rep.ratio_sup = std::numeric_limits<double>::infinity();
    rep.ratio_bounded = false;
  }
  return rep;
}

NormalFieldPack construct(const AnalyticCurve3& a, std::optional<IndexPermutation> perm,
                          std::optional<double> anchor_u0) {
  const auto& dom = a.domain();
  const double u0 = anchor_u0.value_or(dom->anchor_default());

  IndexPermutation chosen;
  if (perm) {
    if (!perm->valid()) raise(Errc::schema_error, "not a permutation of {1,2,3}");
    chosen = *perm;
  } else {
    bool found = false;
    for (const auto& p : all_permutations()) {
      if (validate_conditions(a, p).admissible()) {
        chosen = p;
        found = true;
        break;
      }
    }
    if (!found) {
      raise(Errc::no_admissible_permutation,
            "no coordinate permutation satisfies the normal-field conditions");
    }
  }

  const AnalyticCurve3 ap = derivative(a);
  const AnalyticScalar& ai = ap[chosen.ci()];
  const AnalyticScalar& aj = ap[chosen.cj()];
  const AnalyticScalar& ak = ap[chosen.ck()];

  const AnalyticScalar pair = ai * ai + aj * aj;
  const BranchedRoot pair_root = sqrt_branch(pair, u0);

  NormalFieldPack nf;
  nf.perm = chosen;
  nf.anchor_u0 = u0;
  nf.sin_theta = divide(aj, pair_root.root);
  nf.theta = arcsin_series(nf.sin_theta);

  const AnalyticScalar one_minus_s2 =
      AnalyticScalar::constant(dom, 1.0) - nf.sin_theta * nf.sin_theta;
  nf.cos_theta = sqrt_branch(one_minus_s2, u0).root;

  const AnalyticScalar tangent = ai * nf.cos_theta + aj * nf.sin_theta;
  nf.Q0 = ak * ak + tangent * tangent;
  BranchedRoot q0r = sqrt_branch(nf.Q0, u0);
  nf.q0 = std::move(q0r.root);
  nf.q0_branch = q0r.branch;

  const AnalyticScalar p01 = ak * nf.cos_theta;
  const AnalyticScalar p02 = ak * nf.sin_theta;
  const AnalyticScalar p03 = -tangent;

  // Slot assembly: the p0-components live at coordinate positions i, j, k.
  std::array<AnalyticScalar, 3> slots;
  slots[chosen.ci()] = divide(p01, nf.q0);
  slots[chosen.cj()] = divide(p02, nf.q0);
  slots[chosen.ck()] = divide(p03, nf.q0);
  nf.n0 = AnalyticCurve3{std::move(slots)};

  nf.tau = inf_modulus(nf.q0);
  nf.M1 = sup_norm(nf.q0);
  nf.M2 = sup_norm(p01);
  nf.Mc = sup_norm(nf.cos_theta);
  nf.Ms = sup_norm(nf.sin_theta);
  return nf;
}

}  // namespace minterp

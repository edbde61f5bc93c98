#pragma once

#include <Eigen/Dense>
#include <functional>

#include "minterp/domain.hpp"

namespace minterp {

// One function holomorphic on Omega-bar, stored as a truncated Chebyshev
// series (complex coefficients) in the basis T_k mapped affinely onto I.
// Values are immutable after construction; every operation below is pure.
class AnalyticScalar {
public:
  AnalyticScalar() = default;

  // Trusted coefficients (e.g. parsed from a file). Rejects empty lists.
  static AnalyticScalar from_coeffs(DomainPtr dom, Eigen::VectorXcd coeffs);

  static AnalyticScalar constant(DomainPtr dom, Cplx value);
  static AnalyticScalar identity(DomainPtr dom);  // w |-> w

  // Interpolant through values at the n+1 Lobatto nodes dom->nodes(n).
  static AnalyticScalar from_nodes(DomainPtr dom, const Eigen::VectorXcd& values);

  // Adaptive fit: doubles the degree until the trailing coefficients plateau
  // below dom->fit_tol relative to the largest coefficient, or below the
  // absolute floor (used by node-space operations whose results cancel to
  // roundoff, e.g. dot products of orthogonal fields). Throws NonResolvable
  // when the degree cap is reached without decay.
  static AnalyticScalar fit(DomainPtr dom, const std::function<Cplx(double)>& f,
                            int degree_hint = 0, double abs_floor = 0.0);

  const DomainPtr& domain() const { return dom_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  int degree() const { return int(coeffs_.size()) - 1; }

  // Largest trailing-coefficient magnitude relative to the series scale at the
  // moment the adaptive fit converged; certifies resolution on Omega-bar.
  double fit_defect() const { return fit_defect_; }

  // Chebyshev-Clenshaw evaluation; checked against the ellipse inequality
  // (with the domain's tolerance margin). Throws OutOfDomain.
  Cplx eval(Cplx w) const;
  Cplx eval_unchecked(Cplx w) const;

  // Drops trailing coefficients below an absolute threshold (keeps >= 1).
  AnalyticScalar truncated(double abs_tol) const;

  AnalyticScalar& operator+=(const AnalyticScalar& o);
  AnalyticScalar& operator-=(const AnalyticScalar& o);
  AnalyticScalar& operator*=(Cplx s);

private:
  DomainPtr dom_;
  Eigen::VectorXcd coeffs_;
  double fit_defect_ = 0.0;
};

AnalyticScalar operator+(AnalyticScalar a, const AnalyticScalar& b);
AnalyticScalar operator-(AnalyticScalar a, const AnalyticScalar& b);
AnalyticScalar operator-(AnalyticScalar a);
AnalyticScalar operator*(AnalyticScalar a, Cplx s);
AnalyticScalar operator*(Cplx s, AnalyticScalar a);
AnalyticScalar operator+(AnalyticScalar a, Cplx s);
AnalyticScalar operator-(AnalyticScalar a, Cplx s);

// Node-space product / quotient with adaptive refit. The quotient requires a
// nonvanishing divisor on Omega-bar (caller-certified).
AnalyticScalar operator*(const AnalyticScalar& a, const AnalyticScalar& b);
AnalyticScalar divide(const AnalyticScalar& a, const AnalyticScalar& b);

// Pointwise map x |-> fn(f(x)) at I-nodes, refit adaptively.
AnalyticScalar map_values(const AnalyticScalar& f, const std::function<Cplx(Cplx)>& fn);

// Coefficient-recurrence calculus. The antiderivative F satisfies F(u0) = 0;
// path independence on Omega-bar is automatic (simply connected domain).
AnalyticScalar derivative(const AnalyticScalar& f);
AnalyticScalar antiderivative(const AnalyticScalar& f, double u0);

// w |-> f(g(w)); requires g(Omega-bar) inside Omega up to the domain's
// tolerance margin (checked on boundary samples). Throws RangeEscape.
AnalyticScalar compose(const AnalyticScalar& f, const AnalyticScalar& g);

// Sum of coefficient magnitudes; cheap upper bound for |f| on I, used to size
// roundoff floors of node-space operations.
double one_norm(const AnalyticScalar& f);

// Norm machinery of the sup type: boundary samples plus I-nodes for sup
// (maximum-modulus principle), boundary + interior grid + nodes for inf.
// Both are sampling estimates, not certified bounds.
double sup_norm(const AnalyticScalar& f);
double inf_modulus(const AnalyticScalar& f);

// Largest |Im f| over the I-nodes; diagnoses reality on the interval.
double imag_residual_on_interval(const AnalyticScalar& f, int n_nodes = 128);

// Analytic square-root branch. alpha0 is the argument cut; sign_at_anchor
// flips the branch so it is positive at the anchor whenever the function being
// rooted is real-positive there.
struct BranchSpec {
  double alpha0 = 0.0;
  int sign_at_anchor = 1;
};

struct BranchedRoot {
  AnalyticScalar root;
  BranchSpec branch;
};

// q with q^2 = Q and a single-valued branch on Omega-bar. alpha0 is chosen as
// the midpoint of the largest angular gap of the sampled argument set of Q
// unless a preset branch is supplied (then both the cut and the anchor sign
// are reused verbatim). Throws ZeroOnDomain / NoBranchGap.
BranchedRoot sqrt_branch(const AnalyticScalar& Q, double anchor_u0);
BranchedRoot sqrt_branch(const AnalyticScalar& Q, double anchor_u0,
                         const BranchSpec& preset);

// theta = arcsin(z) via the branch series sum_n (2n)!/(2^{2n} (n!)^2) *
// z^{2n+1}/(2n+1), summed pointwise until the term drops below 1e-16.
// Requires sup |z| < 1 - dom->arcsin_margin over Omega-bar samples; throws
// UnitDiskViolation otherwise.
AnalyticScalar arcsin_series(const AnalyticScalar& z);

}  // namespace minterp

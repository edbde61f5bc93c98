#include "minterp/domain.hpp"

#include <cmath>

namespace minterp {

double DomainSpec::ellipse_param(Cplx w) const {
  const Cplx t = to_unit(w);
  // Inverse Joukowski: z = t + sqrt(t-1)*sqrt(t+1), taking the root with
  // |z| >= 1. The product of the two candidate roots is 1.
  const Cplx s = std::sqrt(t - 1.0) * std::sqrt(t + 1.0);
  const double m1 = std::abs(t + s);
  const double m2 = std::abs(t - s);
  return std::max(m1, m2);
}

Cplx DomainSpec::boundary_point(double phi) const {
  const Cplx z = rho * Cplx(std::cos(phi), std::sin(phi));
  return from_unit(0.5 * (z + 1.0 / z));
}

Eigen::VectorXd DomainSpec::nodes(int n) const {
  Eigen::VectorXd x(n + 1);
  for (int j = 0; j <= n; ++j) {
    x[j] = mid() + half() * std::cos(j * M_PI / n);
  }
  return x;
}

Eigen::VectorXd DomainSpec::boundary_angles() const {
  Eigen::VectorXd phi(boundary_samples);
  for (int s = 0; s < boundary_samples; ++s) {
    phi[s] = 2.0 * M_PI * s / boundary_samples;
  }
  return phi;
}

DomainPtr make_domain(DomainSpec spec) {
  if (!(spec.lo < spec.hi)) raise(Errc::schema_error, "interval must satisfy lo < hi");
  if (!(spec.rho > 1.0)) raise(Errc::schema_error, "rho must exceed 1");
  if (spec.boundary_samples < 64) raise(Errc::schema_error, "boundary_samples must be >= 64");
  if (!(spec.fit_tol > 0.0 && spec.fit_tol < 1.0)) raise(Errc::schema_error, "fit_tol out of (0,1)");
  if (spec.degree_cap < 8) raise(Errc::schema_error, "degree_cap too small");
  spec.diameter = (spec.hi - spec.lo) * 0.5 * (spec.rho + 1.0 / spec.rho);
  return std::make_shared<const DomainSpec>(spec);
}

DomainPtr make_domain(double lo, double hi, double rho) {
  DomainSpec s;
  s.lo = lo;
  s.hi = hi;
  s.rho = rho;
  return make_domain(s);
}

void require_same_domain(const DomainPtr& a, const DomainPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_geometry(*b)) {
    raise(Errc::domain_mismatch, "operands live on different domains");
  }
}

}  // namespace minterp

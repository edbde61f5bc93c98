#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

#include "minterp/errors.hpp"

namespace minterp {

using Cplx = std::complex<double>;

// Closed Bernstein ellipse Omega-bar over a reference interval I = [lo, hi]:
// the image of {|z| <= rho} under the Joukowski map, affinely scaled onto I.
// It is convex, simply connected, bounded, symmetric about the real axis and
// contains I. All analytic values in this library live on one DomainSpec.
//
// The numeric knobs (fit tolerance, degree cap, sampling densities, the
// tolerance margin for Omega membership) ride along with the geometry so that
// every operation sees one consistent configuration.
struct DomainSpec {
  double lo = -1.0;
  double hi = 1.0;
  double rho = 1.2;
  int boundary_samples = 256;

  double fit_tol = 1e-13;       // relative trailing-coefficient tolerance
  int degree_cap = 4096;
  double range_margin = 0.02;   // relative ellipse-parameter slack for membership
  double zero_tol = 1e-8;       // relative no-zero margin for root/denominator checks
  double arcsin_margin = 1e-6;  // |z| must stay below 1 - margin
  int inf_grid_angular = 64;    // interior grid for inf-modulus estimates
  int inf_grid_radial = 33;

  double diameter = 0.0;  // major-axis length of Omega-bar, cached

  double half() const { return 0.5 * (hi - lo); }
  double mid() const { return 0.5 * (hi + lo); }
  double anchor_default() const { return mid(); }

  Cplx to_unit(Cplx w) const { return (w - mid()) / half(); }
  Cplx from_unit(Cplx t) const { return mid() + half() * t; }

  // Elliptical coordinate of w: the parameter s >= 1 such that w lies on the
  // Bernstein ellipse E_s. Points of I map to 1, the boundary of Omega to rho.
  double ellipse_param(Cplx w) const;

  bool contains(Cplx w, double margin_rel) const {
    return ellipse_param(w) <= rho * (1.0 + margin_rel);
  }
  bool contains(Cplx w) const { return contains(w, range_margin); }

  // Point of the Omega boundary at angle phi (Joukowski image of rho*e^{i phi}).
  Cplx boundary_point(double phi) const;

  // n+1 Chebyshev-Lobatto points on I, in the cos(j*pi/n) order (hi -> lo).
  Eigen::VectorXd nodes(int n) const;

  // Uniform boundary angles for sup/inf sampling.
  Eigen::VectorXd boundary_angles() const;

  bool same_geometry(const DomainSpec& o) const {
    return lo == o.lo && hi == o.hi && rho == o.rho;
  }
};

using DomainPtr = std::shared_ptr<const DomainSpec>;

// Validates invariants (lo < hi, rho > 1, boundary_samples >= 64) and caches
// the diameter.
DomainPtr make_domain(DomainSpec spec);

DomainPtr make_domain(double lo, double hi, double rho);

void require_same_domain(const DomainPtr& a, const DomainPtr& b);

}  // namespace minterp

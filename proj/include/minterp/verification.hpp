#pragma once

#include "minterp/interp_solver.hpp"

namespace minterp {

// Real surface samples X(u, v) = Re f(u + i v) on a parameter rectangle
// contained in Omega. Row-major over u rows, v columns.
struct SurfaceGrid {
  double u_lo = 0.0, u_hi = 0.0;
  double v_lo = 0.0, v_hi = 0.0;
  int nu = 0, nv = 0;
  Eigen::MatrixXd points;  // (nu*nv) x 3

  double hu() const { return (u_hi - u_lo) / (nu - 1); }
  double hv() const { return (v_hi - v_lo) / (nv - 1); }
  Eigen::Vector3d at(int iu, int iv) const { return points.row(iu * nv + iv); }
};

// Samples Re f on the rectangle; corners must satisfy the ellipse inequality.
// nu, nv >= 2 (surface_checks additionally needs >= 8 for interior stencils).
SurfaceGrid make_grid(const AnalyticCurve3& f, double u_lo, double u_hi, double v_lo,
                     double v_hi, int nu, int nv);

// Rectangle defaults: u spans I shrunk by 5%, |v| <= v_span_factor times the
// ellipse minor semi-axis.
SurfaceGrid make_default_grid(const AnalyticCurve3& f, int nu, int nv,
                              double v_span_factor = 0.6);

double isotropy_residual(const IsotropicCurve& f);

// Independent minimality certificate: conformal + harmonic => minimal.
// Max over interior grid points of the 5-point Laplacian and the two
// first-fundamental-form defects (central differences).
struct SurfaceReport {
  double harmonicity = 0.0;
  double conformality_diag = 0.0;   // | |X_u|^2 - |X_v|^2 |
  double conformality_cross = 0.0;  // | <X_u, X_v> |
};

SurfaceReport surface_checks(const SurfaceGrid& g);

// Max |H| over interior points (noisier than the conformal-harmonic checks;
// reported in verbose mode only).
double mean_curvature_max(const SurfaceGrid& g);

// (sup_I |Re surface(u) - a(u)|, sup_I |Re surface(gamma(u)) - (l(u) + v0)|).
std::pair<double, double> interpolation_residuals(const InterpolationResult& res,
                                                  const AnalyticCurve3& a,
                                                  const AnalyticCurve3& l);

enum class ReferenceSurface { plane, catenoid, helicoid };

ReferenceSurface reference_by_name(const std::string& name);

// sup over the grid of |X - X_ref| for the classical solutions.
double compare_closed_form(const SurfaceGrid& g, ReferenceSurface ref);

}  // namespace minterp

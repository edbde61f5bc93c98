#include "minterp/verification.hpp"

#include <cmath>

namespace minterp {

SurfaceGrid make_grid(const AnalyticCurve3& f, double u_lo, double u_hi, double v_lo,
                     double v_hi, int nu, int nv) {
  const auto& dom = f.domain();
  if (nu < 2 || nv < 2) raise(Errc::schema_error, "grid sizes must be >= 2");
  for (double u : {u_lo, u_hi}) {
    for (double v : {v_lo, v_hi}) {
      if (dom->ellipse_param(Cplx(u, v)) >= dom->rho) {
        raise(Errc::out_of_domain, "grid rectangle corner outside Omega");
      }
    }
  }
  SurfaceGrid g;
  g.u_lo = u_lo;
  g.u_hi = u_hi;
  g.v_lo = v_lo;
  g.v_hi = v_hi;
  g.nu = nu;
  g.nv = nv;
  g.points.resize(nu * nv, 3);
  for (int iu = 0; iu < nu; ++iu) {
    const double u = u_lo + (u_hi - u_lo) * iu / (nu - 1);
    for (int iv = 0; iv < nv; ++iv) {
      const double v = v_lo + (v_hi - v_lo) * iv / (nv - 1);
      const Eigen::Vector3cd val = f.eval_unchecked(Cplx(u, v));
      g.points.row(iu * nv + iv) = val.real().transpose();
    }
  }
  return g;
}

SurfaceGrid make_default_grid(const AnalyticCurve3& f, int nu, int nv,
                              double v_span_factor) {
  const auto& dom = f.domain();
  const double semi_minor = dom->half() * 0.5 * (dom->rho - 1.0 / dom->rho);
  const double vmax = v_span_factor * semi_minor;
  const double shrink = 0.05 * (dom->hi - dom->lo);
  return make_grid(f, dom->lo + shrink, dom->hi - shrink, -vmax, vmax, nu, nv);
}

double isotropy_residual(const IsotropicCurve& f) { return isotropy_defect(f.f); }

SurfaceReport surface_checks(const SurfaceGrid& g) {
  if (g.nu < 8 || g.nv < 8) raise(Errc::schema_error, "surface checks need nu, nv >= 8");
  SurfaceReport rep;
  const double hu = g.hu(), hv = g.hv();
  for (int iu = 1; iu + 1 < g.nu; ++iu) {
    for (int iv = 1; iv + 1 < g.nv; ++iv) {
      const Eigen::Vector3d c = g.at(iu, iv);
      const Eigen::Vector3d xm = g.at(iu - 1, iv), xp = g.at(iu + 1, iv);
      const Eigen::Vector3d ym = g.at(iu, iv - 1), yp = g.at(iu, iv + 1);
      const Eigen::Vector3d lap =
          (xp - 2.0 * c + xm) / (hu * hu) + (yp - 2.0 * c + ym) / (hv * hv);
      rep.harmonicity = std::max(rep.harmonicity, lap.cwiseAbs().maxCoeff());

      const Eigen::Vector3d xu = (xp - xm) / (2.0 * hu);
      const Eigen::Vector3d xv = (yp - ym) / (2.0 * hv);
      rep.conformality_diag =
          std::max(rep.conformality_diag, std::abs(xu.squaredNorm() - xv.squaredNorm()));
      rep.conformality_cross = std::max(rep.conformality_cross, std::abs(xu.dot(xv)));
    }
  }
  return rep;
}

double mean_curvature_max(const SurfaceGrid& g) {
  if (g.nu < 8 || g.nv < 8) raise(Errc::schema_error, "curvature needs nu, nv >= 8");
  double hmax = 0.0;
  const double hu = g.hu(), hv = g.hv();
  for (int iu = 1; iu + 1 < g.nu; ++iu) {
    for (int iv = 1; iv + 1 < g.nv; ++iv) {
      const Eigen::Vector3d c = g.at(iu, iv);
      const Eigen::Vector3d xu = (g.at(iu + 1, iv) - g.at(iu - 1, iv)) / (2 * hu);
      const Eigen::Vector3d xv = (g.at(iu, iv + 1) - g.at(iu, iv - 1)) / (2 * hv);
      const Eigen::Vector3d xuu = (g.at(iu + 1, iv) - 2 * c + g.at(iu - 1, iv)) / (hu * hu);
      const Eigen::Vector3d xvv = (g.at(iu, iv + 1) - 2 * c + g.at(iu, iv - 1)) / (hv * hv);
      const Eigen::Vector3d xuv = (g.at(iu + 1, iv + 1) - g.at(iu + 1, iv - 1) -
                                   g.at(iu - 1, iv + 1) + g.at(iu - 1, iv - 1)) /
                                  (4 * hu * hv);
      Eigen::Vector3d n = xu.cross(xv);
      const double nn = n.norm();
      if (nn == 0.0) continue;
      n /= nn;
      const double E = xu.squaredNorm(), F = xu.dot(xv), G = xv.squaredNorm();
      const double L = xuu.dot(n), M = xuv.dot(n), N = xvv.dot(n);
      const double den = 2.0 * (E * G - F * F);
      if (den == 0.0) continue;
      hmax = std::max(hmax, std::abs((E * N - 2 * F * M + G * L) / den));
    }
  }
  return hmax;
}

std::pair<double, double> interpolation_residuals(const InterpolationResult& res,
                                                  const AnalyticCurve3& a,
                                                  const AnalyticCurve3& l) {
  const auto& dom = a.domain();
  const Eigen::VectorXd x = dom->nodes(128);
  double r1 = 0.0, r2 = 0.0;
  for (int jn = 0; jn < x.size(); ++jn) {
    const Cplx u(x[jn], 0.0);
    const Cplx g = res.gamma.eval_unchecked(u);
    for (int m = 0; m < 3; ++m) {
      r1 = std::max(r1, std::abs(std::real(res.surface.f[m].eval_unchecked(u)) -
                                 std::real(a[m].eval_unchecked(u))));
      r2 = std::max(r2, std::abs(std::real(res.surface.f[m].eval_unchecked(g)) -
                                 (std::real(l[m].eval_unchecked(u)) + res.v0[m])));
    }
  }
  return {r1, r2};
}

ReferenceSurface reference_by_name(const std::string& name) {
  if (name == "plane") return ReferenceSurface::plane;
  if (name == "catenoid") return ReferenceSurface::catenoid;
  if (name == "helicoid") return ReferenceSurface::helicoid;
  raise(Errc::unknown_reference, "unknown reference surface '" + name + "'");
}

double compare_closed_form(const SurfaceGrid& g, ReferenceSurface ref) {
  auto x_ref = [&](double u, double v) -> Eigen::Vector3d {
    switch (ref) {
      case ReferenceSurface::plane:
        return {u, v, 0.0};
      case ReferenceSurface::catenoid:
        return {std::cos(u) * std::cosh(v), std::sin(u) * std::cosh(v), -v};
      case ReferenceSurface::helicoid:
        return {std::sinh(v) * std::sin(u), -std::sinh(v) * std::cos(u), u};
    }
    return Eigen::Vector3d::Zero();
  };
  double m = 0.0;
  for (int iu = 0; iu < g.nu; ++iu) {
    const double u = g.u_lo + (g.u_hi - g.u_lo) * iu / (g.nu - 1);
    for (int iv = 0; iv < g.nv; ++iv) {
      const double v = g.v_lo + (g.v_hi - g.v_lo) * iv / (g.nv - 1);
      m = std::max(m, (g.at(iu, iv) - x_ref(u, v)).cwiseAbs().maxCoeff());
    }
  }
  return m;
}

}  // namespace minterp

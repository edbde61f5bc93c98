#include "corpus.hpp"
#include "doctest.h"
#include "minterp/verification.hpp"

using namespace minterp;

TEST_SUITE("verification") {

TEST_CASE("isotropy_residual: plane, catenoid, and a negative control") {
  auto dom = corpus::line_domain();
  auto id = AnalyticScalar::identity(dom);
  auto plane = make_isotropic(
      AnalyticCurve3::make(id, Cplx(0, -1) * id, AnalyticScalar::constant(dom, 0.0)), 0.0);
  CHECK(isotropy_residual(plane) < 1e-14);

  auto cdom = corpus::circle_domain();
  auto cat = make_isotropic(
      AnalyticCurve3::make(
          AnalyticScalar::fit(cdom, [](double x) { return Cplx(std::cos(x)); }),
          AnalyticScalar::fit(cdom, [](double x) { return Cplx(std::sin(x)); }),
          Cplx(0, 1) * AnalyticScalar::identity(cdom)),
      0.0);
  CHECK(isotropy_residual(cat) < 1e-10);

  auto bad = make_isotropic(
      AnalyticCurve3::make(id, AnalyticScalar::constant(dom, 0.0),
                           AnalyticScalar::constant(dom, 0.0)),
      0.0);
  CHECK(isotropy_residual(bad) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("surface_checks: plane grid is exact, perturbed grid is not") {
  auto dom = corpus::line_domain();
  auto id = AnalyticScalar::identity(dom);
  auto plane = AnalyticCurve3::make(id, Cplx(0, -1) * id,
                                    AnalyticScalar::constant(dom, 0.0));
  auto g = make_grid(plane, -0.6, 0.6, -0.1, 0.1, 16, 16);
  auto rep = surface_checks(g);
  CHECK(rep.harmonicity < 1e-12);
  CHECK(rep.conformality_diag < 1e-12);
  CHECK(rep.conformality_cross < 1e-12);

  // deterministic pseudo-random bumps wreck harmonicity
  SurfaceGrid bad = g;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  for (int r = 0; r < bad.points.rows(); ++r) {
    for (int c = 0; c < 3; ++c) bad.points(r, c) += noise(rng);
  }
  CHECK(surface_checks(bad).harmonicity > 1.0);
}

TEST_CASE("surface_checks: catenoid residuals shrink at second order") {
  auto dom = corpus::circle_domain();
  auto cat = AnalyticCurve3::make(
      AnalyticScalar::fit(dom, [](double x) { return Cplx(std::cos(x)); }),
      AnalyticScalar::fit(dom, [](double x) { return Cplx(std::sin(x)); }),
      Cplx(0, 1) * AnalyticScalar::identity(dom));
  auto coarse = surface_checks(make_grid(cat, -0.6, 0.6, -0.08, 0.08, 17, 17));
  auto fine = surface_checks(make_grid(cat, -0.6, 0.6, -0.08, 0.08, 33, 33));
  const double order_h = std::log2(coarse.harmonicity / fine.harmonicity);
  CHECK(order_h > 1.8);
  CHECK(order_h < 2.6);
  const double order_d = std::log2(coarse.conformality_diag / fine.conformality_diag);
  CHECK(order_d > 1.8);
}

TEST_CASE("compare_closed_form: plane, catenoid, helicoid via schwartz_solve") {
  // plane
  {
    auto dom = corpus::line_domain();
    auto a = corpus::line_curve(dom);
    auto n = AnalyticCurve3::constant(dom, Eigen::Vector3cd(0, 0, 1));
    auto f = schwartz_solve(a, n, 0.0);
    auto g = make_grid(f.f, -0.8, 0.8, -0.08, 0.08, 64, 32);
    CHECK(compare_closed_form(g, ReferenceSurface::plane) < 1e-12);
  }
  // catenoid
  {
    auto dom = corpus::circle_domain();
    auto a = corpus::circle_curve(dom);
    auto n = AnalyticCurve3::make(
        AnalyticScalar::fit(dom, [](double x) { return Cplx(-std::cos(x)); }),
        AnalyticScalar::fit(dom, [](double x) { return Cplx(-std::sin(x)); }),
        AnalyticScalar::constant(dom, 0.0));
    auto f = schwartz_solve(a, n, 0.0);
    auto g = make_default_grid(f.f, 64, 32);
    CHECK(compare_closed_form(g, ReferenceSurface::catenoid) < 1e-8);
  }
  // helicoid: a = (0, 0, u), n = (cos u, sin u, 0)
  {
    auto dom = corpus::circle_domain();
    auto a = AnalyticCurve3::make(AnalyticScalar::constant(dom, 0.0),
                                  AnalyticScalar::constant(dom, 0.0),
                                  AnalyticScalar::identity(dom));
    auto n = AnalyticCurve3::make(
        AnalyticScalar::fit(dom, [](double x) { return Cplx(std::cos(x)); }),
        AnalyticScalar::fit(dom, [](double x) { return Cplx(std::sin(x)); }),
        AnalyticScalar::constant(dom, 0.0));
    auto f = schwartz_solve(a, n, 0.0);
    auto g = make_default_grid(f.f, 64, 32);
    CHECK(compare_closed_form(g, ReferenceSurface::helicoid) < 1e-8);
  }
}

TEST_CASE("compare_closed_form rejects unknown references") {
  try {
    reference_by_name("torus");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_reference);
  }
}

TEST_CASE("interpolation_residuals: fixed point, pipeline, and a wrong shift") {
  auto base = corpus::circle_base();
  PipelineConfig cfg;
  cfg.perm = IndexPermutation{2, 3, 1};
  cfg.anchor_u0 = 0.0;

  auto res_fp = interpolate(base.a, base.a, cfg);
  auto [f1, f2] = interpolation_residuals(res_fp, base.a, base.a);
  CHECK(f1 < 1e-11);
  CHECK(f2 < 1e-11);

  auto dir = corpus::perturbation_direction(base.a.domain(), 19);
  auto l = base.a + Cplx(1e-3) * dir;
  auto res = interpolate(base.a, l, cfg);
  auto [r1, r2] = interpolation_residuals(res, base.a, l);
  CHECK(r1 < 1e-8);
  CHECK(r2 < 1e-8);

  // deliberately wrong v0 in slot k shifts the second residual by ~0.1
  InterpolationResult wrong = res;
  wrong.v0[base.nf.perm.ck()] += 0.1;
  auto [w1, w2] = interpolation_residuals(wrong, base.a, l);
  CHECK(w1 == doctest::Approx(r1).epsilon(1e-12));
  CHECK(w2 == doctest::Approx(0.1).epsilon(1e-4));
}

TEST_CASE("grid construction guards") {
  auto dom = corpus::line_domain();
  auto id = AnalyticScalar::identity(dom);
  auto plane = AnalyticCurve3::make(id, Cplx(0, -1) * id,
                                    AnalyticScalar::constant(dom, 0.0));
  CHECK_THROWS_AS(make_grid(plane, -0.6, 0.6, -0.5, 0.5, 16, 16), Error);  // v outside
  CHECK_THROWS_AS(make_grid(plane, -0.6, 0.6, -0.1, 0.1, 1, 16), Error);   // nu < 2
  auto tiny = make_grid(plane, -0.6, 0.6, -0.1, 0.1, 4, 4);
  CHECK_THROWS_AS(surface_checks(tiny), Error);  // checks need >= 8
}

}  // TEST_SUITE

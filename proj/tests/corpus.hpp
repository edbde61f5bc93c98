#pragma once

// Shared test fixtures: the circle/line/helix bases and deterministic
// polynomial perturbation directions.

#include <random>

#include "minterp/bjorling.hpp"

namespace corpus {

using namespace minterp;

inline DomainPtr circle_domain() { return make_domain(-0.8, 0.8, 1.2); }
inline DomainPtr line_domain() { return make_domain(-1.0, 1.0, 1.2); }

inline AnalyticCurve3 circle_curve(const DomainPtr& dom) {
  return AnalyticCurve3::make(
      AnalyticScalar::fit(dom, [](double x) { return Cplx(std::cos(x)); }),
      AnalyticScalar::fit(dom, [](double x) { return Cplx(std::sin(x)); }),
      AnalyticScalar::constant(dom, 0.0));
}

inline AnalyticCurve3 line_curve(const DomainPtr& dom) {
  return AnalyticCurve3::make(AnalyticScalar::identity(dom),
                              AnalyticScalar::constant(dom, 0.0),
                              AnalyticScalar::constant(dom, 0.0));
}

inline AnalyticCurve3 helix_curve(const DomainPtr& dom, double pitch = 0.25) {
  return AnalyticCurve3::make(
      AnalyticScalar::fit(dom, [](double x) { return Cplx(std::cos(x)); }),
      AnalyticScalar::fit(dom, [](double x) { return Cplx(std::sin(x)); }),
      AnalyticScalar::fit(dom, [=](double x) { return Cplx(pitch * x); }));
}

inline BaseDatum circle_base() {
  auto dom = circle_domain();
  auto a = circle_curve(dom);
  auto nf = construct(a, IndexPermutation{2, 3, 1}, 0.0);
  return build_base(a, std::move(nf), 0.0);
}

inline BaseDatum line_base() {
  auto dom = line_domain();
  auto a = line_curve(dom);
  auto nf = construct(a, IndexPermutation{1, 2, 3}, 0.0);
  return build_base(a, std::move(nf), 0.0);
}

inline BaseDatum helix_base() {
  auto dom = circle_domain();
  auto a = helix_curve(dom);
  auto nf = construct(a, std::nullopt, 0.0);
  return build_base(a, std::move(nf), 0.0);
}

// Random low-degree polynomial direction with decaying real coefficients;
// real on I, entire, deterministic in the seed.
inline AnalyticCurve3 perturbation_direction(const DomainPtr& dom, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  std::array<AnalyticScalar, 3> comp;
  for (int m = 0; m < 3; ++m) {
    Eigen::VectorXcd c(5);
    for (int k = 0; k < 5; ++k) c[k] = Cplx(uc(rng) / std::pow(2.0, k), 0.0);
    comp[m] = AnalyticScalar::from_coeffs(dom, c);
  }
  AnalyticCurve3 p{std::move(comp)};
  // normalize so max(||p||, ||p'||) = 1
  const double scale = std::max(curve_norm(p), curve_norm(derivative(p)));
  return Cplx(1.0 / scale) * p;
}

inline AnalyticScalar random_scalar(const DomainPtr& dom, std::mt19937& rng, int deg = 5) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  Eigen::VectorXcd c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = Cplx(uc(rng), uc(rng)) / std::pow(2.0, k);
  return AnalyticScalar::from_coeffs(dom, c);
}

// Random curve in T_Omega for the base's permutation: slots i, j real on I.
inline AnalyticCurve3 random_admissible_d(const BaseDatum& base, std::mt19937& rng) {
  const auto& dom = base.a.domain();
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  std::array<AnalyticScalar, 3> comp;
  for (int m = 0; m < 3; ++m) {
    const bool free_slot = (m == base.nf.perm.ck());
    Eigen::VectorXcd c(6);
    for (int k = 0; k < 6; ++k) {
      c[k] = Cplx(uc(rng), free_slot ? uc(rng) : 0.0) / std::pow(2.0, k);
    }
    comp[m] = AnalyticScalar::from_coeffs(dom, c);
  }
  return AnalyticCurve3{std::move(comp)};
}

}  // namespace corpus

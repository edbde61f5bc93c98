#include "corpus.hpp"
#include "doctest.h"
#include "minterp/bounds.hpp"

using namespace minterp;

TEST_SUITE("bounds") {

TEST_CASE("compute_eta: the full chain for the circle base, oracle re-derivation") {
  auto base = corpus::circle_base();
  const double eps0 = 0.1, safety = 0.9;
  auto rep = compute_eta(base.nf, base.a, eps0, safety);

  // hand evaluation of the same chain from the pack constants
  const double M = curve_norm(derivative(base.a));
  const double r = base.a.domain()->diameter;
  const double eps = safety * std::min(1.0, eps0 / (4.0 * (M + 2.0) * r));
  const double tau = base.nf.tau;
  const double delta =
      safety * std::min(eps * tau * tau * tau / (4.0 * base.nf.M2), 0.5 * tau * tau);

  CHECK(rep.M == doctest::Approx(M).epsilon(1e-14));
  CHECK(rep.r == doctest::Approx(r).epsilon(1e-14));
  CHECK(rep.epsilon == doctest::Approx(eps).epsilon(1e-14));
  CHECK(rep.delta == doctest::Approx(delta).epsilon(1e-14));
  CHECK(rep.tau == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(rep.M1 == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(rep.Ms == doctest::Approx(0.0).epsilon(1e-9));

  // every reported inequality holds as stated
  CHECK(rep.eta == std::min(0.5 * eps0, rep.epsilon1 * rep.epsilon1));
  CHECK(rep.delta <
        std::min(rep.epsilon * tau * tau * tau / (4.0 * rep.M2), 0.5 * tau * tau));
  CHECK(rep.epsilon1 * rep.epsilon1 * rep.P(rep.epsilon1) < rep.delta);
  CHECK(rep.epsilon1 * rep.epsilon1 <
        std::min(tau * tau * rep.epsilon / (4.0 * rep.Mc * rep.M1), rep.epsilon));
  CHECK(rep.epsilon < std::min(1.0, eps0 / (4.0 * (rep.M + 2.0) * rep.r)));
  CHECK(rep.eta > 0.0);
}

TEST_CASE("compute_eta: doubling epsilon0 never decreases eta") {
  auto base = corpus::circle_base();
  auto r1 = compute_eta(base.nf, base.a, 0.05, 0.9);
  auto r2 = compute_eta(base.nf, base.a, 0.10, 0.9);
  CHECK(r2.eta >= r1.eta);
}

TEST_CASE("compute_eta: safety to zero forces eta to zero") {
  auto base = corpus::circle_base();
  double prev = std::numeric_limits<double>::infinity();
  for (double s : {0.9, 0.1, 0.01, 0.001}) {
    auto rep = compute_eta(base.nf, base.a, 0.1, s);
    CHECK(rep.eta < prev);
    prev = rep.eta;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("compute_eta: line base constants are degenerate (M2 = 0)") {
  auto base = corpus::line_base();
  try {
    compute_eta(base.nf, base.a, 0.1, 0.9);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_constants);
  }
}

TEST_CASE("probe_epsilon0: line base, direction (1,0,0), positive result") {
  auto base = corpus::line_base();
  ProbeConfig cfg;
  auto s = probe_epsilon0(base, cfg);
  CHECK(s > 0.0);
}

TEST_CASE("probe_epsilon0 is monotone in solver tolerance loosening") {
  auto base = corpus::line_base();
  ProbeConfig tight;
  tight.solver.tol = 1e-11;
  ProbeConfig loose;
  loose.solver.tol = 1e-7;
  CHECK(probe_epsilon0(base, loose) >= probe_epsilon0(base, tight));
}

TEST_CASE("probe_epsilon0 on the circle feeds a usable eta") {
  auto base = corpus::circle_base();
  ProbeConfig cfg;
  const double eps0 = probe_epsilon0(base, cfg);
  CHECK(eps0 > 0.0);
  auto rep = compute_eta(base.nf, base.a, eps0, 0.9);
  CHECK(rep.eta > 0.0);

  // Thm-level consistency: an eta-sized perturbation passes build_V with
  // ||V - n0|| <= epsilon and the solver converges.
  auto dir = corpus::perturbation_direction(base.a.domain(), 41);
  auto l = base.a + Cplx(0.9 * rep.eta) * dir;
  auto pp = build_V(l, base.nf, 0.0);
  CHECK(curve_norm(pp.V - base.nf.n0) <= rep.epsilon);
  auto cv = build_CV(l, pp, 0.0);
  auto st = chord_newton(base, cv);
  CHECK(st.residual_norm < 1e-11);
}

}  // TEST_SUITE

#include "minterp/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace minterp {

namespace {

// Coefficients of the degree-n interpolant through Lobatto-node values:
// c_k = (2/n) * sum'' v_j cos(k j pi / n), first/last terms halved, and the
// k = 0 and k = n results halved once more. Direct O(n^2) cosine sums; the
// degrees in this pipeline stay small enough that an FFT is not worth the
// bookkeeping.
Eigen::VectorXcd lobatto_analysis(const Eigen::VectorXcd& vals) {
  const int n = int(vals.size()) - 1;
  Eigen::VectorXcd c(n + 1);
  if (n == 0) {
    c[0] = vals[0];
    return c;
  }
  for (int k = 0; k <= n; ++k) {
    Cplx acc = 0.5 * vals[0];
    for (int j = 1; j < n; ++j) {
      acc += vals[j] * std::cos(k * j * M_PI / n);
    }
    acc += 0.5 * vals[n] * ((k % 2 == 0) ? 1.0 : -1.0);
    c[k] = acc * (2.0 / n);
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return c;
}

Cplx clenshaw(const Eigen::VectorXcd& c, Cplx t) {
  const int n = int(c.size()) - 1;
  if (n < 0) return 0.0;
  if (n == 0) return c[0];
  Cplx b1 = 0.0, b2 = 0.0;
  for (int k = n; k >= 1; --k) {
    const Cplx b = c[k] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b;
  }
  return c[0] + t * b1 - b2;
}

double coeff_scale(const Eigen::VectorXcd& c) {
  double m = 0.0;
  for (int k = 0; k < c.size(); ++k) m = std::max(m, std::abs(c[k]));
  return m;
}

int next_pow2(int n) {
  int m = 8;
  while (m < n) m *= 2;
  return m;
}

}  // namespace

AnalyticScalar AnalyticScalar::from_coeffs(DomainPtr dom, Eigen::VectorXcd coeffs) {
  if (!dom) raise(Errc::domain_mismatch, "null domain");
  if (coeffs.size() == 0) raise(Errc::schema_error, "empty coefficient list");
  AnalyticScalar f;
  f.dom_ = std::move(dom);
  f.coeffs_ = std::move(coeffs);
  return f;
}

AnalyticScalar AnalyticScalar::constant(DomainPtr dom, Cplx value) {
  Eigen::VectorXcd c(1);
  c[0] = value;
  return from_coeffs(std::move(dom), std::move(c));
}

AnalyticScalar AnalyticScalar::identity(DomainPtr dom) {
  Eigen::VectorXcd c(2);
  c[0] = dom->mid();
  c[1] = dom->half();
  return from_coeffs(std::move(dom), std::move(c));
}

AnalyticScalar AnalyticScalar::from_nodes(DomainPtr dom, const Eigen::VectorXcd& values) {
  if (values.size() == 0) raise(Errc::schema_error, "empty node-value list");
  return from_coeffs(std::move(dom), lobatto_analysis(values));
}

AnalyticScalar AnalyticScalar::fit(DomainPtr dom, const std::function<Cplx(double)>& f,
                                   int degree_hint, double abs_floor) {
  if (!dom) raise(Errc::domain_mismatch, "null domain");
  int n = std::max(16, next_pow2(degree_hint + 1));
  n = std::min(n, dom->degree_cap);
  for (;;) {
    Eigen::VectorXcd vals(n + 1);
    const Eigen::VectorXd x = dom->nodes(n);
    for (int j = 0; j <= n; ++j) vals[j] = f(x[j]);
    Eigen::VectorXcd c = lobatto_analysis(vals);
    const double scale = coeff_scale(c);

    const int tail = std::max(3, n / 16);
    double tail_max = 0.0;
    for (int k = n + 1 - tail; k <= n; ++k) tail_max = std::max(tail_max, std::abs(c[k]));

    if (scale == 0.0) {
      return constant(dom, 0.0);
    }
    const double thresh = std::max(dom->fit_tol * scale, abs_floor);
    if (tail_max <= thresh) {
      AnalyticScalar out;
      out.dom_ = dom;
      out.fit_defect_ = tail_max / scale;
      // Truncate the resolved tail; keep everything from the last coefficient
      // above tolerance.
      int last = 0;
      for (int k = 0; k <= n; ++k) {
        if (std::abs(c[k]) >= thresh) last = k;
      }
      out.coeffs_ = c.head(last + 1);
      return out;
    }
    if (n >= dom->degree_cap) {
      raise(Errc::non_resolvable,
            "no coefficient decay at degree cap; function is not analytic on "
            "Omega-bar at this rho");
    }
    n = std::min(2 * n, dom->degree_cap);
  }
}

Cplx AnalyticScalar::eval(Cplx w) const {
  if (!dom_->contains(w)) {
    raise(Errc::out_of_domain, "evaluation point outside Omega-bar");
  }
  return eval_unchecked(w);
}

Cplx AnalyticScalar::eval_unchecked(Cplx w) const {
  return clenshaw(coeffs_, dom_->to_unit(w));
}

AnalyticScalar AnalyticScalar::truncated(double abs_tol) const {
  int last = 0;
  for (int k = 0; k < coeffs_.size(); ++k) {
    if (std::abs(coeffs_[k]) >= abs_tol) last = k;
  }
  AnalyticScalar out;
  out.dom_ = dom_;
  out.coeffs_ = coeffs_.head(last + 1);
  out.fit_defect_ = fit_defect_;
  return out;
}

AnalyticScalar& AnalyticScalar::operator+=(const AnalyticScalar& o) {
  require_same_domain(dom_, o.dom_);
  if (o.coeffs_.size() > coeffs_.size()) {
    Eigen::VectorXcd c = o.coeffs_;
    c.head(coeffs_.size()) += coeffs_;
    coeffs_ = std::move(c);
  } else {
    coeffs_.head(o.coeffs_.size()) += o.coeffs_;
  }
  fit_defect_ = std::max(fit_defect_, o.fit_defect_);
  return *this;
}

AnalyticScalar& AnalyticScalar::operator-=(const AnalyticScalar& o) {
  require_same_domain(dom_, o.dom_);
  if (o.coeffs_.size() > coeffs_.size()) {
    Eigen::VectorXcd c = -o.coeffs_;
    c.head(coeffs_.size()) += coeffs_;
    coeffs_ = std::move(c);
  } else {
    coeffs_.head(o.coeffs_.size()) -= o.coeffs_;
  }
  fit_defect_ = std::max(fit_defect_, o.fit_defect_);
  return *this;
}

AnalyticScalar& AnalyticScalar::operator*=(Cplx s) {
  coeffs_ *= s;
  return *this;
}

AnalyticScalar operator+(AnalyticScalar a, const AnalyticScalar& b) { return a += b; }
AnalyticScalar operator-(AnalyticScalar a, const AnalyticScalar& b) { return a -= b; }
AnalyticScalar operator-(AnalyticScalar a) { return a *= -1.0; }
AnalyticScalar operator*(AnalyticScalar a, Cplx s) { return a *= s; }
AnalyticScalar operator*(Cplx s, AnalyticScalar a) { return a *= s; }

AnalyticScalar operator+(AnalyticScalar a, Cplx s) {
  return a += AnalyticScalar::constant(a.domain(), s);
}
AnalyticScalar operator-(AnalyticScalar a, Cplx s) {
  return a -= AnalyticScalar::constant(a.domain(), s);
}

double one_norm(const AnalyticScalar& f) {
  double s = 0.0;
  for (int k = 0; k < f.coeffs().size(); ++k) s += std::abs(f.coeffs()[k]);
  return s;
}

namespace {

// Roundoff floor for a node-space operation whose inputs have the given
// magnitude: cancellation noise in the computed values sits near machine
// epsilon times this scale.
double noise_floor(double operand_scale) { return 1e-14 * (1.0 + operand_scale); }

}  // namespace

AnalyticScalar operator*(const AnalyticScalar& a, const AnalyticScalar& b) {
  require_same_domain(a.domain(), b.domain());
  return AnalyticScalar::fit(
      a.domain(), [&](double x) { return a.eval_unchecked(x) * b.eval_unchecked(x); },
      a.degree() + b.degree(), noise_floor(one_norm(a) * one_norm(b)));
}

AnalyticScalar divide(const AnalyticScalar& a, const AnalyticScalar& b) {
  require_same_domain(a.domain(), b.domain());
  return AnalyticScalar::fit(
      a.domain(), [&](double x) { return a.eval_unchecked(x) / b.eval_unchecked(x); },
      a.degree() + b.degree(), noise_floor(one_norm(a)));
}

AnalyticScalar map_values(const AnalyticScalar& f, const std::function<Cplx(Cplx)>& fn) {
  return AnalyticScalar::fit(
      f.domain(), [&](double x) { return fn(f.eval_unchecked(x)); }, f.degree());
}

AnalyticScalar derivative(const AnalyticScalar& f) {
  const auto& c = f.coeffs();
  const int n = int(c.size()) - 1;
  if (n <= 0) return AnalyticScalar::constant(f.domain(), 0.0);
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
  // d_{k-1} = d_{k+1} + 2 k c_k, then halve d_0; chain rule maps T'(t) to x.
  for (int k = n - 1; k >= 0; --k) {
    d[k] = 2.0 * (k + 1) * c[k + 1];
    if (k + 2 < n) d[k] += d[k + 2];
  }
  d[0] *= 0.5;
  d /= f.domain()->half();
  return AnalyticScalar::from_coeffs(f.domain(), std::move(d));
}

AnalyticScalar antiderivative(const AnalyticScalar& f, double u0) {
  const auto& dom = f.domain();
  if (!(u0 >= dom->lo && u0 <= dom->hi)) {
    raise(Errc::out_of_domain, "antiderivative anchor outside I");
  }
  const auto& c = f.coeffs();
  const int n = int(c.size()) - 1;
  Eigen::VectorXcd A = Eigen::VectorXcd::Zero(n + 2);
  auto cat = [&](int k) -> Cplx { return (k >= 0 && k <= n) ? c[k] : Cplx(0.0); };
  A[1] = cat(0) - 0.5 * cat(2);
  for (int m = 2; m <= n + 1; ++m) {
    A[m] = (cat(m - 1) - cat(m + 1)) / (2.0 * m);
  }
  A *= dom->half();
  AnalyticScalar F = AnalyticScalar::from_coeffs(dom, std::move(A));
  const Cplx at_anchor = F.eval_unchecked(u0);
  Eigen::VectorXcd B = F.coeffs();
  B[0] -= at_anchor;
  return AnalyticScalar::from_coeffs(dom, std::move(B));
}

AnalyticScalar compose(const AnalyticScalar& f, const AnalyticScalar& g) {
  require_same_domain(f.domain(), g.domain());
  const auto& dom = g.domain();
  const Eigen::VectorXd phis = dom->boundary_angles();
  for (int s = 0; s < phis.size(); ++s) {
    const Cplx z = g.eval_unchecked(dom->boundary_point(phis[s]));
    if (!dom->contains(z)) {
      raise(Errc::range_escape, "inner map leaves Omega-bar (plus margin)");
    }
  }
  return AnalyticScalar::fit(
      dom, [&](double x) { return f.eval_unchecked(g.eval_unchecked(x)); },
      f.degree() + g.degree(), noise_floor(one_norm(f)));
}

namespace {

// Shared sampling set: boundary points plus Lobatto nodes on I.
std::vector<Cplx> sup_sample_points(const AnalyticScalar& f) {
  const auto& dom = f.domain();
  std::vector<Cplx> pts;
  const Eigen::VectorXd phis = dom->boundary_angles();
  pts.reserve(phis.size() + f.degree() + 33);
  for (int s = 0; s < phis.size(); ++s) pts.push_back(dom->boundary_point(phis[s]));
  const Eigen::VectorXd x = dom->nodes(std::max(f.degree(), 32));
  for (int j = 0; j < x.size(); ++j) pts.push_back(x[j]);
  return pts;
}

}  // namespace

double sup_norm(const AnalyticScalar& f) {
  double m = 0.0;
  for (const Cplx& w : sup_sample_points(f)) m = std::max(m, std::abs(f.eval_unchecked(w)));
  return m;
}

double inf_modulus(const AnalyticScalar& f) {
  const auto& dom = f.domain();
  double m = std::numeric_limits<double>::infinity();
  for (const Cplx& w : sup_sample_points(f)) m = std::min(m, std::abs(f.eval_unchecked(w)));
  // Minima of |f| are interior in general; add a filled elliptical grid.
  const int na = dom->inf_grid_angular;
  const int nr = dom->inf_grid_radial;
  for (int ir = 0; ir < nr; ++ir) {
    const double s = 1.0 + (dom->rho - 1.0) * ir / std::max(1, nr - 1);
    for (int ia = 0; ia < na; ++ia) {
      const double phi = 2.0 * M_PI * ia / na;
      const Cplx z = s * Cplx(std::cos(phi), std::sin(phi));
      const Cplx w = dom->from_unit(0.5 * (z + 1.0 / z));
      m = std::min(m, std::abs(f.eval_unchecked(w)));
    }
  }
  return m;
}

double imag_residual_on_interval(const AnalyticScalar& f, int n_nodes) {
  const Eigen::VectorXd x = f.domain()->nodes(std::max(n_nodes, f.degree()));
  double m = 0.0;
  for (int j = 0; j < x.size(); ++j) {
    m = std::max(m, std::abs(std::imag(f.eval_unchecked(x[j]))));
  }
  return m;
}

namespace {

double arg_in_window(Cplx v, double alpha0) {
  double phi = std::fmod(std::arg(v) - alpha0, 2.0 * M_PI);
  if (phi < 0.0) phi += 2.0 * M_PI;
  return alpha0 + phi;  // in [alpha0, alpha0 + 2 pi)
}

Cplx branch_value(Cplx v, double alpha0) {
  return std::sqrt(std::abs(v)) * std::exp(Cplx(0.0, 0.5 * arg_in_window(v, alpha0)));
}

}  // namespace

namespace {

BranchedRoot sqrt_branch_impl(const AnalyticScalar& Q, double anchor_u0,
                              const BranchSpec* preset) {
  const auto& dom = Q.domain();
  const std::vector<Cplx> pts = sup_sample_points(Q);
  std::vector<Cplx> vals;
  vals.reserve(pts.size());
  double sup = 0.0, inf = std::numeric_limits<double>::infinity();
  for (const Cplx& w : pts) {
    const Cplx v = Q.eval_unchecked(w);
    vals.push_back(v);
    sup = std::max(sup, std::abs(v));
    inf = std::min(inf, std::abs(v));
  }
  if (inf <= dom->zero_tol * std::max(1.0, sup)) {
    raise(Errc::zero_on_domain, "function to be rooted vanishes on Omega-bar");
  }

  BranchSpec spec;
  if (preset) {
    spec = *preset;
  } else {
    // Largest circular gap of the sampled arguments; its midpoint becomes the
    // cut alpha0. No usable gap means the image winds around the origin.
    std::vector<double> args;
    args.reserve(vals.size());
    for (const Cplx& v : vals) {
      double a = std::arg(v);
      if (a < 0.0) a += 2.0 * M_PI;
      args.push_back(a);
    }
    std::sort(args.begin(), args.end());
    double best_gap = 2.0 * M_PI - args.back() + args.front();
    double best_mid = args.back() + 0.5 * best_gap;
    for (size_t k = 1; k < args.size(); ++k) {
      const double gap = args[k] - args[k - 1];
      if (gap > best_gap) {
        best_gap = gap;
        best_mid = args[k - 1] + 0.5 * gap;
      }
    }
    if (best_gap < 0.1) {
      raise(Errc::no_branch_gap,
            "sampled arguments cover the circle; no single-valued branch");
    }
    spec.alpha0 = std::fmod(best_mid, 2.0 * M_PI);
    spec.sign_at_anchor = 1;

    const Cplx qa = Q.eval_unchecked(Cplx(anchor_u0, 0.0));
    const bool real_positive =
        std::abs(std::imag(qa)) <= 1e-12 * std::abs(qa) && std::real(qa) > 0.0;
    if (real_positive) {
      const Cplx root_a = branch_value(qa, spec.alpha0);
      if (std::real(root_a) < 0.0) spec.sign_at_anchor = -1;
    }
  }

  const double sgn = double(spec.sign_at_anchor);
  AnalyticScalar q = AnalyticScalar::fit(
      dom,
      [&](double x) { return sgn * branch_value(Q.eval_unchecked(x), spec.alpha0); },
      Q.degree());
  return BranchedRoot{std::move(q), spec};
}

}  // namespace

BranchedRoot sqrt_branch(const AnalyticScalar& Q, double anchor_u0) {
  return sqrt_branch_impl(Q, anchor_u0, nullptr);
}

BranchedRoot sqrt_branch(const AnalyticScalar& Q, double anchor_u0,
                         const BranchSpec& preset) {
  return sqrt_branch_impl(Q, anchor_u0, &preset);
}

namespace {

Cplx arcsin_sum(Cplx z) {
  // sum over n of (2n)!/(2^{2n} (n!)^2) z^{2n+1}/(2n+1); term recurrence
  // t_{n+1} = t_n * z^2 * (2n+1)^2 / ((2n+2)(2n+3)).
  const Cplx z2 = z * z;
  Cplx term = z;
  Cplx sum = z;
  for (long n = 0; n < 5000000; ++n) {
    term *= z2 * ((2.0 * n + 1.0) * (2.0 * n + 1.0)) / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    sum += term;
    if (std::abs(term) < 1e-16 * (1.0 + std::abs(sum))) return sum;
  }
  raise(Errc::non_resolvable, "arcsin series did not converge");
}

}  // namespace

AnalyticScalar arcsin_series(const AnalyticScalar& z) {
  const auto& dom = z.domain();
  double sup = 0.0;
  for (const Cplx& w : sup_sample_points(z)) sup = std::max(sup, std::abs(z.eval_unchecked(w)));
  if (sup >= 1.0 - dom->arcsin_margin) {
    raise(Errc::unit_disk_violation, "|z| reaches the unit circle on Omega-bar");
  }
  return AnalyticScalar::fit(
      dom, [&](double x) { return arcsin_sum(z.eval_unchecked(x)); }, z.degree());
}

}  // namespace minterp

#include "covosc/cli/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "covosc/covariant_oscillator.hpp"
#include "covosc/density_matrix.hpp"
#include "covosc/kinematics.hpp"
#include "covosc/numerics.hpp"
#include "covosc/squeezed_states.hpp"
#include "covosc/wigner.hpp"

namespace covosc::cli {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

class Suite {
 public:
  explicit Suite(bool strict) : strict_(strict) {}

  /// Passes when measured < tolerance (the strict tolerance under --tolerance-profile strict).
  void bound(const std::string& module, const std::string& name, double measured, double tol,
             double strict_tol) {
    const double t = strict_ ? strict_tol : tol;
    results_.push_back({module, name, measured, t, std::isfinite(measured) && measured < t});
  }

  /// Boolean property; `measured` is reported for context only.
  void holds(const std::string& module, const std::string& name, bool ok, double measured) {
    results_.push_back({module, name, measured, 0.0, ok});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  bool strict_;
  std::vector<CheckResult> results_;
};

// Portable uniform doubles from a fixed-seed engine.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

// Difference relative to the largest coordinate magnitude seen along the way.
double scaled_diff(SpaceTimePoint a, SpaceTimePoint b, double scale = 1.0) {
  scale = std::max({scale, std::abs(a.z), std::abs(a.t)});
  return std::max(std::abs(a.z - b.z), std::abs(a.t - b.t)) / scale;
}

// Trapezoid in (z, t) that resolves the e^{-eta} short axis of a boosted Gaussian.
QuadratureRule plane_rule(double eta) {
  const double half = 8.0 * std::sqrt(std::cosh(2.0 * eta));
  const double step = 0.5 * std::exp(-std::abs(eta));
  auto points = static_cast<std::size_t>(std::ceil(2.0 * half / step)) + 1;
  if (points % 2 == 0) ++points;
  return trapezoid_rule(-half, half, points);
}

void numerics_checks(Suite& s, const VerifyOptions& o) {
  const QuadratureRule gh8 = gauss_quadrature(8);
  double wsum = 0.0;
  for (double w : gh8.weights) wsum += w;
  s.bound("numerics", "gauss-hermite weights sum to sqrt(pi)", std::abs(wsum - kSqrtPi) / kSqrtPi,
          1e-12, 1e-13);

  const QuadratureRule gh32 = gauss_quadrature(32);
  const double m4 = integrate_1d([](double x) { return x * x * x * x; }, gh32);
  s.bound("numerics", "gauss-hermite fourth moment", std::abs(m4 - 0.75 * kSqrtPi), 1e-13, 1e-14);

  const double h35 = integrate_1d([](double x) { return hermite(3, x) * hermite(5, x); }, gh8);
  s.bound("numerics", "H3 H5 orthogonality", std::abs(h35), 1e-12, 1e-12);

  const QuadratureRule folded = fold_weight(gauss_quadrature(std::max(o.quad_order, 68)));
  double ortho = 0.0;
  for (int m = 0; m <= 30; ++m) {
    for (int n = m; n <= 30; ++n) {
      const double v = integrate_1d([&](double x) { return chi(m, x) * chi(n, x); }, folded);
      ortho = std::max(ortho, std::abs(v - (m == n ? 1.0 : 0.0)));
    }
  }
  s.bound("numerics", "chi orthonormality m,n <= 30", ortho, 1e-9, 1e-12);

  double recur = 0.0;
  for (int n = 0; n <= 20; ++n) {
    const double norm = std::sqrt(kSqrtPi * std::pow(2.0, n) * std::tgamma(n + 1.0));
    for (int i = 0; i <= 60; ++i) {
      const double x = -3.0 + 0.1 * i;
      const double h = hermite(n, x);
      const double via_chi = chi(n, x) * norm * std::exp(0.5 * x * x);
      recur = std::max(recur, std::abs(h - via_chi) / std::max(1.0, std::abs(h)));
    }
  }
  s.bound("numerics", "hermite vs normalized chi recurrence", recur, 1e-9, 1e-11);

  double eig = 0.0;
  const FiniteDifferenceScheme fd{o.fd_step, 2};
  for (int n = 0; n <= 10; ++n) {
    const auto f = [n](double x) { return chi(n, x); };
    for (int i = 0; i <= 80; ++i) {
      const double x = -4.0 + 0.1 * i;
      const double lhs = -second_derivative(f, x, fd) + x * x * f(x);
      eig = std::max(eig, std::abs(lhs - (2.0 * n + 1.0) * f(x)));
    }
  }
  s.bound("numerics", "oscillator eigenvalue (-d2 + x2) chi_n", eig, 1e-4, 5e-5);

  const double gauss =
      integrate_1d([](double x) { return std::exp(-x * x); }, trapezoid_rule(-8.0, 8.0, 2001));
  s.bound("numerics", "trapezoid Gaussian integral", std::abs(gauss - kSqrtPi), 1e-10, 1e-13);
}

void kinematics_checks(Suite& s) {
  Sampler rng(20240611);
  double group = 0.0, interval = 0.0, conj = 0.0, uv = 0.0, beta = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SpaceTimePoint p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const Rapidity e1(rng.uniform(-5.0, 5.0));
    const Rapidity e2(rng.uniform(-5.0, 5.0));
    const SpaceTimePoint once = boost(p, e1);
    const SpaceTimePoint twice = boost(once, e2);
    group = std::max(group, scaled_diff(twice, boost(p, e1 + e2),
                                        std::max({1.0, std::abs(once.z), std::abs(once.t)})));

    const SpaceTimePoint b = boost(p, e1);
    interval = std::max(interval,
                        std::abs(b.interval() - p.interval()) / std::max(1.0, b.z * b.z + b.t * b.t));

    const SpaceTimePoint via_lc = from_light_cone(squeeze_light_cone(to_light_cone(p), e1));
    conj = std::max(conj, scaled_diff(via_lc, b));

    const LightConePoint lc = to_light_cone(p);
    const LightConePoint sq = squeeze_light_cone(lc, e1);
    uv = std::max(uv, std::abs(sq.u * sq.v - lc.u * lc.v));

    const Rapidity r = rapidity_from_beta(Velocity(std::tanh(e1.value() / 2.0)));
    beta = std::max(beta, std::abs(beta_from_rapidity(r) - std::tanh(e1.value() / 2.0)));
  }
  s.bound("kinematics", "boost group law", group, 1e-12, 1e-12);
  s.bound("kinematics", "interval z^2 - t^2 invariance", interval, 1e-12, 1e-13);
  s.bound("kinematics", "light-cone conjugacy", conj, 1e-13, 1e-13);
  s.bound("kinematics", "light-cone product uv invariance", uv, 1e-12, 1e-14);
  s.bound("kinematics", "rapidity/velocity round trip", beta, 1e-14, 1e-15);
}

void oscillator_checks(Suite& s, const VerifyOptions& o) {
  Sampler rng(77);
  double cov = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.uniform(0.0, 6.0));
    const Rapidity eta(rng.uniform(-3.0, 3.0));
    const double z = rng.uniform(-3.0, 3.0);
    const double t = rng.uniform(-3.0, 3.0);
    const SpaceTimePoint back = boost({z, t}, -eta);
    cov = std::max(cov, std::abs(psi_boosted({n, eta}, z, t) - psi_rest(n, back.z, back.t)));
  }
  s.bound("covariant_oscillator", "boost covariance psi_eta = psi_0 o boost(-eta)", cov, 1e-12,
          1e-13);

  double norm = 0.0;
  for (double eta : {0.5, 1.0, 2.0}) {
    const OscillatorState st(0, Rapidity(eta));
    const double v = integrate_2d(
        [&](double z, double t) {
          const double p = psi_boosted(st, z, t);
          return p * p;
        },
        plane_rule(eta));
    norm = std::max(norm, std::abs(v - 1.0));
  }
  s.bound("covariant_oscillator", "boosted norm preservation", norm, 1e-8, 1e-10);

  double resid = 0.0;
  const FiniteDifferenceScheme fd4{o.fd_step, 4};
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const double half = 6.0 * std::sqrt(std::cosh(2.0 * eta));
    const auto grid = square_grid(-half, half, 41);
    for (int n = 0; n <= 5; ++n) {
      resid = std::max(resid,
                       residual_reduced_equation({n, Rapidity(eta)}, grid, fd4).max_relative_residual);
    }
  }
  s.bound("covariant_oscillator", "reduced equation residual n <= 5", resid, 1e-4, 1e-6);

  const Rapidity eta1(1.0);
  const QuadratureRule rule = plane_rule(1.0);
  double ortho = 0.0;
  for (int m = 0; m <= 5; ++m) {
    for (int n = m; n <= 5; ++n) {
      const double v = integrate_2d(
          [&](double z, double t) {
            return psi_boosted({m, eta1}, z, t) * psi_boosted({n, eta1}, z, t);
          },
          rule);
      ortho = std::max(ortho, std::abs(v - (m == n ? 1.0 : 0.0)));
    }
  }
  s.bound("covariant_oscillator", "orthonormality at equal eta", ortho, 1e-8, 1e-10);

  const SeparationReport sep =
      verify_separation({0.0, 1}, 1, {0.4, 1.3}, Grid4{-4.0, 4.0, 41}, {o.fd_step, 2});
  s.bound("covariant_oscillator", "two-quark equation constant shift", sep.product.max_relative_residual,
          1e-3, 1e-4);
  s.bound("covariant_oscillator", "plane wave Klein-Gordon factor", sep.plane_wave_error, 1e-6, 1e-6);
}

void squeezed_checks(Suite& s) {
  double norm = 0.0;
  for (double eta : {0.5, 1.0, 2.0, 3.0}) {
    const Rapidity r(eta);
    const double v = integrate_2d(
        [&](double a, double b) {
          const double p = squeezed_vacuum(r, a, b);
          return p * p;
        },
        plane_rule(eta));
    norm = std::max(norm, std::abs(v - 1.0));
  }
  s.bound("squeezed_states", "squeezed vacuum norm", norm, 1e-9, 1e-11);

  const SchmidtExpansion e60 = expansion(Rapidity(1.0), 60);
  double sup = 0.0;
  for (int i = 0; i <= 60; ++i) {
    for (int j = 0; j <= 60; ++j) {
      const double a = -3.0 + 0.1 * i;
      const double b = -3.0 + 0.1 * j;
      sup = std::max(sup, std::abs(reconstruct(e60, a, b) - squeezed_vacuum(Rapidity(1.0), a, b)));
    }
  }
  s.bound("squeezed_states", "series converges pointwise (eta=1, K=60)", sup, 1e-6, 1e-6);

  double parseval = 0.0;
  for (double eta : {0.5, 1.0, 2.0}) {
    const QuadratureRule rule = plane_rule(eta);
    for (int k : {10, 30, 60}) {
      const SchmidtExpansion e = expansion(Rapidity(eta), k);
      const double d2 = integrate_2d(
          [&](double a, double b) {
            const double d = reconstruct(e, a, b) - squeezed_vacuum(e.eta, a, b);
            return d * d;
          },
          rule);
      parseval = std::max(parseval, std::abs(d2 - e.tail_bound));
    }
  }
  s.bound("squeezed_states", "Parseval: L2 distance^2 = tanh^{2(K+1)}", parseval, 1e-8, 1e-10);

  Sampler rng(5);
  double sym = 0.0, flip = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Rapidity r(rng.uniform(-2.0, 2.0));
    const double a = rng.uniform(-3.0, 3.0);
    const double b = rng.uniform(-3.0, 3.0);
    sym = std::max(sym, std::abs(squeezed_vacuum(r, a, b) - squeezed_vacuum(r, b, a)));
    flip = std::max(flip, std::abs(reconstruct(expansion(-r, 40), a, b) -
                                   reconstruct(expansion(r, 40), a, -b)));
  }
  s.holds("squeezed_states", "exchange symmetry x1 <-> x2", sym == 0.0, sym);
  s.bound("squeezed_states", "sign flip eta -> -eta equals x2 -> -x2", flip, 1e-14, 1e-14);
}

void density_checks(Suite& s) {
  double oracle = 0.0;
  for (double eta : {0.0, 0.5, std::numbers::ln2, 1.0, 2.0}) {
    const Rapidity r(eta);
    const QuadratureRule t_rule = boosted_trapezoid(eta);
    const double half = 4.0 * std::sqrt(r.cosh2());
    for (int i = 0; i < 21; ++i) {
      for (int j = 0; j < 21; ++j) {
        const double z = -half + 0.1 * half * i;
        const double zp = -half + 0.1 * half * j;
        oracle = std::max(oracle, std::abs(reduced_closed({r}, z, zp) -
                                           reduced_numeric(r, z, zp, t_rule)));
      }
    }
  }
  s.bound("density_matrix", "reduced kernel closed form vs t-trace", oracle, 1e-8, 1e-10);

  double trace = 0.0;
  for (double eta : {0.0, 1.0, 2.0, 3.0}) {
    const Rapidity r(eta);
    trace = std::max(trace, std::abs(integrate_1d([&](double z) { return quark_distribution({r}, z); },
                                                  boosted_trapezoid(eta)) -
                                     1.0));
  }
  s.bound("density_matrix", "unit trace of reduced kernel", trace, 1e-10, 1e-12);

  double ent = 0.0;
  for (double eta : {0.25, 0.5, std::numbers::ln2, 1.0, 2.0, 3.0}) {
    const Rapidity r(eta);
    const SeriesEntropy se = entropy_series(r, default_truncation(r, 1e-13, 100000), 1e-10);
    ent = std::max(ent, se.converged ? std::abs(se.value - entropy_closed(r)) : 1.0);
  }
  s.bound("density_matrix", "entropy closed form vs -sum p ln p", ent, 1e-9, 1e-10);

  double min_step = 1.0;
  for (int i = 0; i < 50; ++i) {
    min_step = std::min(min_step,
                        entropy_closed(Rapidity(0.1 * (i + 1))) - entropy_closed(Rapidity(0.1 * i)));
  }
  s.holds("density_matrix", "entropy strictly increasing on [0, 5]", min_step > 0.0, min_step);

  double pur = 0.0;
  double prev_closed = 2.0;
  bool decreasing = true;
  for (double eta : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const PurityResult p = purity(Rapidity(eta), plane_rule(eta));
    pur = std::max(pur, std::abs(p.numeric - p.closed));
    decreasing = decreasing && p.closed < prev_closed;
    prev_closed = p.closed;
  }
  s.bound("density_matrix", "purity quadrature vs 1/cosh 2eta", pur, 1e-7, 1e-9);
  s.holds("density_matrix", "purity strictly decreasing in eta", decreasing, prev_closed);

  double idem = 0.0;
  for (double eta : {0.0, 1.0}) {
    const OscillatorState st(0, Rapidity(eta));
    const QuadratureRule rule = plane_rule(eta);
    Sampler rng(11);
    for (int i = 0; i < 5; ++i) {
      const double z = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
      const double zp = rng.uniform(-2, 2), tp = rng.uniform(-2, 2);
      const double composed = integrate_2d(
          [&](double a, double b) {
            return pure_density(st, z, t, a, b) * pure_density(st, a, b, zp, tp);
          },
          rule);
      idem = std::max(idem, std::abs(composed - pure_density(st, z, t, zp, tp)));
    }
  }
  s.bound("density_matrix", "pure kernel idempotency", idem, 1e-6, 1e-9);

  double worst_gap = 0.0;
  for (double eta : {0.5, 1.0, 1.5}) {
    const Rapidity r(eta);
    const std::vector<double> ev = kernel_spectrum(r, trapezoid_rule(-12.0, 12.0, 161), true);
    const std::vector<double> p = schmidt_probabilities(r, 9);
    for (int k = 0; k < 10; ++k) worst_gap = std::max(worst_gap, std::abs(ev[k] - p[k]));
  }
  s.bound("density_matrix", "kernel eigenvalues equal Schmidt probabilities", worst_gap, 1e-6, 1e-9);
}

void wigner_checks(Suite& s) {
  double oracle = 0.0, imag = 0.0;
  for (double eta : {0.0, 1.0, 2.0}) {
    const Rapidity r(eta);
    const double half = 3.0 * phase_space_radius(r);
    for (int i = 0; i < 15; ++i) {
      for (int j = 0; j < 15; ++j) {
        const PhaseSpacePoint pt{-half + half * i / 7.0, -half + half * j / 7.0};
        const WignerValue w = wigner_numeric(r, pt);
        oracle = std::max(oracle, std::abs(w.real - wigner_closed(r, pt)));
        imag = std::max(imag, std::abs(w.imag));
      }
    }
  }
  s.bound("wigner", "numeric transform vs closed form", oracle, 1e-7, 1e-10);
  s.bound("wigner", "imaginary part vanishes", imag, 1e-10, 1e-12);

  double mass = 0.0, bridge = 0.0;
  for (double eta : {0.0, 1.0, 2.0}) {
    const Rapidity r(eta);
    const QuadratureRule rule = boosted_trapezoid(eta);
    const double total = integrate_2d([&](double z, double p) { return wigner_closed(r, {z, p}); },
                                      rule);
    mass = std::max(mass, std::abs(total - std::numbers::pi));
    for (double z : {-2.0, 0.0, 1.0, 3.0}) {
      const double ratio = wigner_marginal_position(r, z, rule) / quark_distribution({r}, z);
      bridge = std::max(bridge, std::abs(ratio - total));
    }
  }
  s.bound("wigner", "total mass equals pi", mass, 1e-8, 1e-10);
  s.bound("wigner", "position marginal = (total mass) rho(z,z)", bridge, 1e-9, 1e-10);

  double radius = 0.0;
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const Rapidity r(eta);
    radius = std::max(radius, std::abs(measure_phase_space_radius(r, 0.7) - phase_space_radius(r)));
  }
  s.bound("wigner", "measured 1/e radius = sqrt(cosh 2eta)", radius, 1e-6, 1e-8);

  const double asym = phase_space_radius(Rapidity(5.0)) / (std::exp(5.0) / std::sqrt(2.0));
  s.bound("wigner", "radius ~ e^eta / sqrt2 at eta = 5", std::abs(asym - 1.0), 0.02, 0.02);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite s(options.strict);
  numerics_checks(s, options);
  kinematics_checks(s);
  oscillator_checks(s, options);
  squeezed_checks(s);
  density_checks(s);
  wigner_checks(s);
  return s.take();
}

}  // namespace covosc::cli

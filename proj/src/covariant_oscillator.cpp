#include "covosc/covariant_oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace covosc {

namespace {

constexpr double kNodeFloor = 1e-3;

// Coefficients the two-quark operator induces on the separation coordinate
// x = (x_a - x_b) / (2 sqrt 2): -1/2 (d_a^2 + d_b^2) contributes -1/8 d_x^2,
// and (x_a - x_b)^2 / 16 contributes x^2 / 2.
constexpr double kRelativeKinetic = 1.0 / 8.0;
constexpr double kRelativePotential = 1.0 / 2.0;

}  // namespace

OscillatorState::OscillatorState(int n_, Rapidity eta_) : n(n_), eta(eta_) {
  if (n < 0) throw std::invalid_argument("oscillator excitation must be nonnegative");
}

CartesianState::CartesianState(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
  if (a < 0 || b < 0 || n < 0) {
    throw std::invalid_argument("Cartesian excitations must be nonnegative");
  }
}

double psi_rest(int n, double z, double t) { return chi(n, z) * chi(0, t); }

double psi_boosted(const OscillatorState& s, double z, double t) {
  const LightConePoint lc = to_light_cone({z, t});
  const double ep = std::exp(s.eta.value());
  const double em = std::exp(-s.eta.value());
  // Hermite argument (e^-eta u + e^eta v)/sqrt2; the orthogonal combination
  // completes the Gaussian exp(-(e^-2eta u^2 + e^2eta v^2)/2).
  const double along = (em * lc.u + ep * lc.v) / std::numbers::sqrt2;
  const double across = (em * lc.u - ep * lc.v) / std::numbers::sqrt2;
  return chi(s.n, along) * chi(0, across);
}

double psi_cartesian(const CartesianState& c, double x, double y, double z, double t) {
  return chi(c.a, x) * chi(c.b, y) * chi(c.n, z) * chi(0, t);
}

double mass_squared(const MassShell& ms) { return ms.m0_squared + ms.lambda + 1.0; }

double apply_reduced_operator(const std::function<double(double, double)>& f, double z, double t,
                              const FiniteDifferenceScheme& scheme) {
  const double dzz = second_derivative([&](double zz) { return f(zz, t); }, z, scheme);
  const double dtt = second_derivative([&](double tt) { return f(z, tt); }, t, scheme);
  const double center = f(z, t);
  return 0.5 * ((-dzz + z * z * center) - (-dtt + t * t * center));
}

ResidualReport residual_reduced_equation(const OscillatorState& s,
                                         std::span<const SpaceTimePoint> grid,
                                         const FiniteDifferenceScheme& scheme) {
  scheme.validate();
  ResidualReport report;
  report.points = grid.size();
  if (grid.empty()) return report;

  const auto psi = [&](double z, double t) { return psi_boosted(s, z, t); };
  std::vector<double> values(grid.size());
  std::vector<double> residuals(grid.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [z, t] = grid[i];
    values[i] = psi(z, t);
    residuals[i] = std::abs(apply_reduced_operator(psi, z, t, scheme) - s.n * values[i]);
    sup = std::max(sup, std::abs(values[i]));
  }
  const double floor = kNodeFloor * sup;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double denom = std::max(std::abs(values[i]), floor);
    const double rel = denom > 0.0 ? residuals[i] / denom : 0.0;
    if (rel > report.max_relative_residual) {
      report.max_relative_residual = rel;
      report.worst_point = grid[i];
    }
  }
  return report;
}

std::vector<SpaceTimePoint> square_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw std::invalid_argument("square_grid: need at least 2 points per axis");
  std::vector<SpaceTimePoint> grid;
  grid.reserve(points * points);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t j = 0; j < points; ++j) {
      grid.push_back({lo + h * static_cast<double>(i), lo + h * static_cast<double>(j)});
    }
  }
  return grid;
}

namespace {

using cplx = std::complex<double>;

// phi(z_a, t_a, z_b, t_b) = exp(i (P_z Z - P_0 T)) chi_n(s x_z) chi_0(s x_t)
struct ProductAnsatz {
  int n;
  double scale;
  HadronMomentum p;

  cplx operator()(double za, double ta, double zb, double tb) const {
    const TwoBodyCoords c = two_body_split({za, ta}, {zb, tb});
    const double phase = p.pz * c.center.z - p.p0 * c.center.t;
    const double rel = chi(n, scale * c.separation.z) * chi(0, scale * c.separation.t);
    return std::polar(rel, phase);
  }
};

SeparationFit fit_constant_shift(const ProductAnsatz& phi, const Grid4& grid,
                                 const FiniteDifferenceScheme& scheme) {
  const std::vector<double> stencil = second_derivative_stencil(scheme.order);
  const int reach = static_cast<int>(stencil.size() / 2);
  const double inv_h2 = 1.0 / (scheme.step * scheme.step);
  const double h = scheme.step;
  const std::size_t m = grid.points;
  const double dx = (grid.hi - grid.lo) / static_cast<double>(m - 1);

  const std::size_t total = m * m * m * m;
  std::vector<cplx> values(total);
  std::vector<cplx> applied(total);

  std::size_t idx = 0;
  for (std::size_t i0 = 0; i0 < m; ++i0) {
    const double za = grid.lo + dx * static_cast<double>(i0);
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      const double ta = grid.lo + dx * static_cast<double>(i1);
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        const double zb = grid.lo + dx * static_cast<double>(i2);
        for (std::size_t i3 = 0; i3 < m; ++i3, ++idx) {
          const double tb = grid.lo + dx * static_cast<double>(i3);
          const cplx center = phi(za, ta, zb, tb);
          cplx d_za = 0.0, d_ta = 0.0, d_zb = 0.0, d_tb = 0.0;
          for (int k = -reach; k <= reach; ++k) {
            const double c = stencil[static_cast<std::size_t>(k + reach)];
            if (k == 0) {
              const cplx term = c * center;
              d_za += term;
              d_ta += term;
              d_zb += term;
              d_tb += term;
              continue;
            }
            const double off = k * h;
            d_za += c * phi(za + off, ta, zb, tb);
            d_ta += c * phi(za, ta + off, zb, tb);
            d_zb += c * phi(za, ta, zb + off, tb);
            d_tb += c * phi(za, ta, zb, tb + off);
          }
          const double dz = za - zb;
          const double dt = ta - tb;
          values[idx] = center;
          applied[idx] = -0.5 * inv_h2 * ((d_za - d_ta) + (d_zb - d_tb)) +
                         (dz * dz - dt * dt) / 16.0 * center;
        }
      }
    }
  }

  cplx num = 0.0;
  double den = 0.0;
  double sup = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    num += std::conj(values[i]) * applied[i];
    den += std::norm(values[i]);
    sup = std::max(sup, std::abs(values[i]));
  }
  SeparationFit fit;
  fit.constant = den > 0.0 ? num / den : cplx{0.0};
  const double floor = kNodeFloor * sup;
  for (std::size_t i = 0; i < total; ++i) {
    const double denom = std::max(std::abs(values[i]), floor);
    if (denom <= 0.0) continue;
    fit.max_relative_residual =
        std::max(fit.max_relative_residual, std::abs(applied[i] - fit.constant * values[i]) / denom);
  }
  return fit;
}

}  // namespace

bool SeparationReport::matches_stated_gap(double tolerance) const {
  return std::abs(implied_mass_gap - stated_mass_gap) <= tolerance;
}

SeparationReport verify_separation(const MassShell& ms, int n, HadronMomentum p, const Grid4& grid,
                                   const FiniteDifferenceScheme& scheme) {
  scheme.validate();
  if (n < 0) throw std::invalid_argument("verify_separation: n must be nonnegative");
  if (grid.points < 2 || !(grid.hi > grid.lo)) {
    throw std::invalid_argument("verify_separation: grid needs >= 2 points and hi > lo");
  }

  SeparationReport report;
  report.matched_scale = std::pow(kRelativePotential / kRelativeKinetic, 0.25);

  report.product = fit_constant_shift({n, report.matched_scale, p}, grid, scheme);
  report.relative_only = fit_constant_shift({n, report.matched_scale, {}}, grid, scheme);
  report.unscaled_product = fit_constant_shift({n, 1.0, p}, grid, scheme);

  // Klein-Gordon factor on its own, differentiated in the hadronic coordinates.
  const std::size_t m = grid.points;
  const double dx = (grid.hi - grid.lo) / static_cast<double>(m - 1);
  const auto wave = [&](double zc, double tc) { return std::polar(1.0, p.pz * zc - p.p0 * tc); };
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double zc = grid.lo + dx * static_cast<double>(i);
      const double tc = grid.lo + dx * static_cast<double>(j);
      const double h = scheme.step;
      const cplx f0 = wave(zc, tc);
      const cplx dzz = (wave(zc + h, tc) - 2.0 * f0 + wave(zc - h, tc)) / (h * h);
      const cplx dtt = (wave(zc, tc + h) - 2.0 * f0 + wave(zc, tc - h)) / (h * h);
      const cplx box = (dzz - dtt) / f0;
      report.plane_wave_error = std::max(report.plane_wave_error, std::abs(box + p.square()));
      sum += -0.25 * box.real();
    }
  }
  report.plane_wave_constant = sum / static_cast<double>(m * m);

  // K phi = (P.P / 4 + c_rel) phi must cancel m0^2, so the mass squared -P.P
  // equals 4 (c_rel + m0^2).
  const double c_rel = report.relative_only.constant.real();
  report.implied_mass_gap = 4.0 * (c_rel + ms.m0_squared) - ms.m0_squared;
  report.stated_mass_gap = ms.lambda + 1.0;
  report.on_shell_mismatch = report.product.constant.real() + ms.m0_squared;
  return report;
}

}  // namespace covosc

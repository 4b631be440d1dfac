#pragma once

/**
 * @file covariant_oscillator.hpp
 * @brief Covariant harmonic-oscillator wavefunctions and equation checks.
 *
 * The longitudinal wavefunction carries an excitation n along z and is held
 * in its ground state along the time separation t. There is deliberately no
 * quantum number for t, so excited time-like states cannot be constructed.
 *
 * Contracted squares use the metric x_mu^2 = x^2 + y^2 + z^2 - t^2.
 */

#include <complex>
#include <cstddef>
#include <span>

#include "covosc/kinematics.hpp"
#include "covosc/numerics.hpp"

namespace covosc {

struct OscillatorState {
  OscillatorState(int n, Rapidity eta);

  int n;
  Rapidity eta;
};

/// Excitations along x, y, z. lambda = a + b + n.
struct CartesianState {
  CartesianState(int a, int b, int n);

  int a;
  int b;
  int n;

  int lambda() const { return a + b + n; }
};

struct MassShell {
  double m0_squared = 0.0;
  int lambda = 0;
};

/// Rest-frame solution chi_n(z) chi_0(t).
double psi_rest(int n, double z, double t);

/// Boosted solution. Evaluated as the Hermite-Gauss form in the squeezed
/// light-cone variables e^{-eta} u and e^{eta} v.
double psi_boosted(const OscillatorState& s, double z, double t);

/// Full 3+1 Cartesian solution with t in its ground state; unit norm over (x, y, z, t).
double psi_cartesian(const CartesianState& c, double x, double y, double z, double t);

/// -P^2 = m0^2 + (lambda + 1).
double mass_squared(const MassShell& ms);

/// 1/2 {[-d_z^2 + z^2] - [-d_t^2 + t^2]} f at (z, t), by central differences.
double apply_reduced_operator(const std::function<double(double, double)>& f, double z, double t,
                              const FiniteDifferenceScheme& scheme);

struct ResidualReport {
  /// max |L psi - n psi| / max(|psi|, 1e-3 ||psi||_inf) over the grid
  double max_relative_residual = 0.0;
  SpaceTimePoint worst_point;
  std::size_t points = 0;

  bool within(double tolerance) const { return max_relative_residual < tolerance; }
};

ResidualReport residual_reduced_equation(const OscillatorState& s,
                                         std::span<const SpaceTimePoint> grid,
                                         const FiniteDifferenceScheme& scheme = {});

/// Uniform square grid of (z, t) points, `points` per axis.
std::vector<SpaceTimePoint> square_grid(double lo, double hi, std::size_t points);

/// Uniform hypercube in the quark coordinates (z_a, t_a, z_b, t_b).
struct Grid4 {
  double lo = -4.0;
  double hi = 4.0;
  std::size_t points = 41;
};

/// Longitudinal hadron four-momentum (P_z, P_0).
struct HadronMomentum {
  double pz = 0.0;
  double p0 = 0.0;

  /// P_z^2 - P_0^2, so that -P.P is the mass squared.
  double square() const { return pz * pz - p0 * p0; }
};

struct SeparationFit {
  /// Constant c minimizing sum |K phi - c phi|^2 over the grid.
  std::complex<double> constant;
  /// max |K phi - c phi| / max(|phi|, 1e-3 ||phi||_inf)
  double max_relative_residual = 0.0;
};

struct SeparationReport {
  /// Scale s applied to the relative coordinate, psi_n(s x_z, s x_t). Fixed by
  /// the kinetic and potential coefficients the two-quark operator induces on x.
  double matched_scale = 0.0;

  /// Plane wave times the scaled relative factor.
  SeparationFit product;
  /// Relative factor alone (P = 0): its eigenvalue under the reduced operator.
  SeparationFit relative_only;
  /// Plane-wave factor alone: -1/4 box_X f / f, averaged over the grid.
  double plane_wave_constant = 0.0;
  /// Worst pointwise |box_X f / f + P.P| over the grid.
  double plane_wave_error = 0.0;
  /// Same ansatz with the unit-frequency relative factor, no rescaling.
  SeparationFit unscaled_product;

  /// The value -P^2 - m0^2 demanded by the measured shift for the equation to hold.
  double implied_mass_gap = 0.0;
  /// The value lambda + 1 stated by the mass-shell relation.
  double stated_mass_gap = 0.0;
  /// product.constant + m0^2; zero iff the supplied P is on the measured shell.
  double on_shell_mismatch = 0.0;

  bool constant_shift_found(double tolerance) const {
    return product.max_relative_residual < tolerance;
  }
  bool matches_stated_gap(double tolerance = 1e-6) const;
};

/// Applies the invariant two-quark operator, restricted to one space and one
/// time coordinate per quark, to f(X) psi(x) on the grid, and measures the
/// constant eigenvalue shift. Never throws on a mismatch; it is reported.
SeparationReport verify_separation(const MassShell& ms, int n, HadronMomentum p, const Grid4& grid,
                                   const FiniteDifferenceScheme& scheme = {});

}  // namespace covosc

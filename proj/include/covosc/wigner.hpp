#pragma once

// Phase-space distribution of the reduced (time-traced) state,
//   W(z, p) = int rho(z + y, z - y) exp(2 i p y) dy,
// taken literally: no 1/pi prefactor, so the total mass is pi, not 1.

#include "covosc/kinematics.hpp"
#include "covosc/numerics.hpp"

namespace covosc {

struct PhaseSpacePoint {
  double z = 0.0;
  double p = 0.0;
};

struct WignerValue {
  double real = 0.0;
  /// Vanishes for a symmetric kernel; a large value signals a quadrature problem.
  double imag = 0.0;
};

/// y-rule for the oscillatory integral: half-width 8 sqrt(cosh 2eta), at least
/// 40 nodes per period of exp(2 i p y) at |p| = max_abs_p, and fine enough to
/// resolve the kernel's exp(-cosh(2eta) y^2) factor.
QuadratureRule wigner_rule(Rapidity eta, double max_abs_p);

WignerValue wigner_numeric(Rapidity eta, PhaseSpacePoint pt, const QuadratureRule& rule);
WignerValue wigner_numeric(Rapidity eta, PhaseSpacePoint pt);

/// exp(-(z^2 + p^2) / cosh 2eta) / cosh 2eta
double wigner_closed(Rapidity eta, PhaseSpacePoint pt);

/// int W(z, p) dp over `rule`.
double wigner_marginal_position(Rapidity eta, double z, const QuadratureRule& rule);

/// 1/e radius of wigner_closed: sqrt(cosh 2eta).
double phase_space_radius(Rapidity eta);

/// Radius along direction `angle` where wigner_numeric drops to 1/e of its
/// value at the origin, found by bisection to `tolerance`.
double measure_phase_space_radius(Rapidity eta, double angle = 0.0, double tolerance = 1e-10);

}  // namespace covosc

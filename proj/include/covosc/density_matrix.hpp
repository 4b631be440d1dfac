#pragma once

/**
 * @file density_matrix.hpp
 * @brief Pure and reduced density kernels of the boosted ground state.
 *
 * Tracing the pure kernel over the unobserved time separation t leaves a
 * mixed state in z. Its entropy is available both in closed form and as
 * -sum p_k ln p_k over the Schmidt probabilities of the squeezed series.
 * Only the ground state n = 0 is traced.
 */

#include <vector>

#include "covosc/covariant_oscillator.hpp"
#include "covosc/kinematics.hpp"
#include "covosc/numerics.hpp"

namespace covosc {

/// rho(z, z') obtained by integrating out t from the boosted ground state.
struct ReducedDensityKernel {
  Rapidity eta;
};

/// psi(z, t) psi(z', t').
double pure_density(const OscillatorState& s, double z, double t, double zp, double tp);

/// (pi cosh 2eta)^{-1/2} exp(-[(z + z')^2 / cosh 2eta + (z - z')^2 cosh 2eta] / 4)
double reduced_closed(const ReducedDensityKernel& k, double z, double zp);

/// Integral over t of psi_eta^0(z, t) psi_eta^0(z', t) using `rule`.
double reduced_numeric(Rapidity eta, double z, double zp, const QuadratureRule& rule);
/// Same, with boosted_trapezoid(eta).
double reduced_numeric(Rapidity eta, double z, double zp);

/// rho(z, z): normalized Gaussian density with variance cosh(2 eta) / 2.
double quark_distribution(const ReducedDensityKernel& k, double z);

/// x ln x with 0 ln 0 = 0.
double xlogx(double x);

/// cosh^2 ln cosh^2 - sinh^2 ln sinh^2, rearranged as
/// 2 ln cosh - 2 sinh^2 ln tanh so that it stays accurate for large eta.
double entropy_closed(Rapidity eta);

struct SeriesEntropy {
  double value = 0.0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// -sum_{k <= truncation} p_k ln p_k; `converged` iff tail bound < tail_tolerance.
SeriesEntropy entropy_series(Rapidity eta, int truncation, double tail_tolerance = 1e-10);

struct PurityResult {
  double numeric = 0.0;
  double closed = 0.0;
};

/// Tr rho^2 by quadrature of the closed kernel, alongside 1 / cosh 2eta.
PurityResult purity(Rapidity eta, const QuadratureRule& rule);

/// Eigenvalues (descending) of the symmetrically weighted Nystrom matrix
/// sqrt(w_i) rho(z_i, z_j) sqrt(w_j), kernel from reduced_numeric when
/// `numeric_kernel` is set, otherwise from reduced_closed.
std::vector<double> kernel_spectrum(Rapidity eta, const QuadratureRule& rule, bool numeric_kernel);

}  // namespace covosc

#pragma once

// Two-mode squeezed vacuum: closed form, paired-eigenstate series and its
// Schmidt probabilities.
//
// The same closed form serves the boosted hadron: (x1, x2) here play the
// roles of (z, t) there.

#include <utility>
#include <vector>

#include "covosc/kinematics.hpp"

namespace covosc {

/// Truncated series c_k chi_k(x1) chi_k(x2), c_k = tanh(eta)^k / cosh(eta).
struct SchmidtExpansion {
  Rapidity eta;
  int truncation = 0;
  std::vector<double> coeffs;
  /// sum_{k > truncation} c_k^2 = tanh(eta)^{2(truncation + 1)}
  double tail_bound = 0.0;
};

struct NormalCoordinates {
  double y1;
  double y2;
};

/// y1 = (x1 + x2)/sqrt2, y2 = (x1 - x2)/sqrt2.
NormalCoordinates normal_coordinates(double x1, double x2);

/// pi^{-1/2} exp(-(e^{-2 eta} y1^2 + e^{2 eta} y2^2) / 2).
double squeezed_vacuum(Rapidity eta, double x1, double x2);

/// log|tanh eta|, accurate when tanh eta rounds to 1. -inf at eta = 0.
double log_abs_tanh(Rapidity eta);
/// log cosh eta without overflow.
double log_cosh(Rapidity eta);

/// K = ceil(ln(tail_tolerance) / (2 ln|tanh eta|)), capped at `cap`. Then
/// tanh^{2K} <= tail_tolerance, so the tail bound of that K is below it too.
int default_truncation(Rapidity eta, double tail_tolerance = 1e-12, int cap = 1000);

SchmidtExpansion expansion(Rapidity eta, int truncation);
SchmidtExpansion expansion(Rapidity eta);

/// Partial sum of the series at (x1, x2).
double reconstruct(const SchmidtExpansion& e, double x1, double x2);

/// p_k = tanh(eta)^{2k} / cosh(eta)^2 for k = 0..truncation.
std::vector<double> schmidt_probabilities(Rapidity eta, int truncation);

}  // namespace covosc

#include "covosc/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covosc/density_matrix.hpp"

namespace covosc {

QuadratureRule wigner_rule(Rapidity eta, double max_abs_p) {
  if (!(max_abs_p >= 0.0) || !std::isfinite(max_abs_p)) {
    throw std::invalid_argument("wigner_rule: max_abs_p must be finite and nonnegative");
  }
  const double width = std::sqrt(eta.cosh2());
  const double half = 8.0 * width;
  const double period = max_abs_p > 0.0 ? std::numbers::pi / max_abs_p : 2.0 * half;
  const double step = std::min(period / 40.0, 0.25 / width);
  auto points = static_cast<std::size_t>(std::ceil(2.0 * half / step)) + 1;
  points = std::max<std::size_t>(points, 2001);
  if (points % 2 == 0) ++points;
  return trapezoid_rule(-half, half, points);
}

WignerValue wigner_numeric(Rapidity eta, PhaseSpacePoint pt, const QuadratureRule& rule) {
  const ReducedDensityKernel k{eta};
  WignerValue w;
  w.real = integrate_1d(
      [&](double y) { return reduced_closed(k, pt.z + y, pt.z - y) * std::cos(2.0 * pt.p * y); },
      rule);
  w.imag = integrate_1d(
      [&](double y) { return reduced_closed(k, pt.z + y, pt.z - y) * std::sin(2.0 * pt.p * y); },
      rule);
  return w;
}

WignerValue wigner_numeric(Rapidity eta, PhaseSpacePoint pt) {
  return wigner_numeric(eta, pt, wigner_rule(eta, std::abs(pt.p)));
}

double wigner_closed(Rapidity eta, PhaseSpacePoint pt) {
  const double c = eta.cosh2();
  return std::exp(-(pt.z * pt.z + pt.p * pt.p) / c) / c;
}

double wigner_marginal_position(Rapidity eta, double z, const QuadratureRule& rule) {
  return integrate_1d([&](double p) { return wigner_closed(eta, {z, p}); }, rule);
}

double phase_space_radius(Rapidity eta) { return std::sqrt(eta.cosh2()); }

double measure_phase_space_radius(Rapidity eta, double angle, double tolerance) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double peak = wigner_numeric(eta, {0.0, 0.0}).real;
  const double target = peak / std::numbers::e;
  const auto excess = [&](double r) {
    return wigner_numeric(eta, {r * c, r * s}).real - target;
  };
  double lo = 0.0;
  double hi = 8.0 * std::sqrt(eta.cosh2());
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace covosc

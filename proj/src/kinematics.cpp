#include "covosc/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace covosc {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

Rapidity::Rapidity(double eta) : eta_(eta) {
  if (!std::isfinite(eta) || std::abs(eta) > kMaxMagnitude) {
    throw std::invalid_argument("rapidity must be finite with |eta| <= 20, got " +
                                std::to_string(eta));
  }
}

double Rapidity::cosh() const { return std::cosh(eta_); }
double Rapidity::sinh() const { return std::sinh(eta_); }
double Rapidity::tanh() const { return std::tanh(eta_); }
double Rapidity::cosh2() const { return std::cosh(2.0 * eta_); }

Velocity::Velocity(double beta) : beta_(beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw std::invalid_argument("velocity must satisfy |v/c| < 1");
  }
}

Rapidity rapidity_from_beta(Velocity v) { return Rapidity(std::atanh(v.beta())); }

double beta_from_rapidity(Rapidity r) { return r.tanh(); }

SpaceTimePoint boost(SpaceTimePoint p, Rapidity r) {
  const double ch = r.cosh();
  const double sh = r.sinh();
  return {ch * p.z + sh * p.t, sh * p.z + ch * p.t};
}

LightConePoint to_light_cone(SpaceTimePoint p) {
  return {(p.z + p.t) * kInvSqrt2, (p.z - p.t) * kInvSqrt2};
}

SpaceTimePoint from_light_cone(LightConePoint lc) {
  return {(lc.u + lc.v) * kInvSqrt2, (lc.u - lc.v) * kInvSqrt2};
}

LightConePoint squeeze_light_cone(LightConePoint lc, Rapidity r) {
  return {std::exp(r.value()) * lc.u, std::exp(-r.value()) * lc.v};
}

TwoBodyCoords two_body_split(SpaceTimePoint a, SpaceTimePoint b) {
  const double s = 0.5 * kInvSqrt2;
  return {{0.5 * (a.z + b.z), 0.5 * (a.t + b.t)}, {s * (a.z - b.z), s * (a.t - b.t)}};
}

std::pair<SpaceTimePoint, SpaceTimePoint> two_body_join(const TwoBodyCoords& c) {
  const double r2 = std::numbers::sqrt2;
  const SpaceTimePoint a{c.center.z + r2 * c.separation.z, c.center.t + r2 * c.separation.t};
  const SpaceTimePoint b{c.center.z - r2 * c.separation.z, c.center.t - r2 * c.separation.t};
  return {a, b};
}

}  // namespace covosc

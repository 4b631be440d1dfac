#pragma once

// Longitudinal Lorentz kinematics in the (z, t) plane: rapidity, boosts,
// light-cone coordinates and two-body center/relative coordinates.

#include <utility>

namespace covosc {

/// Boost parameter eta. Construction rejects non-finite values and |eta| > 20.
class Rapidity {
 public:
  static constexpr double kMaxMagnitude = 20.0;

  constexpr Rapidity() = default;
  explicit Rapidity(double eta);

  double value() const { return eta_; }
  double cosh() const;
  double sinh() const;
  double tanh() const;
  /// cosh(2 eta), the squared width factor of every squeezed Gaussian.
  double cosh2() const;

  Rapidity operator-() const { return Rapidity(-eta_); }
  friend Rapidity operator+(Rapidity a, Rapidity b) { return Rapidity(a.eta_ + b.eta_); }

 private:
  double eta_ = 0.0;
};

/// v/c with |beta| < 1.
class Velocity {
 public:
  explicit Velocity(double beta);
  double beta() const { return beta_; }

 private:
  double beta_;
};

struct SpaceTimePoint {
  double z = 0.0;
  double t = 0.0;

  /// z^2 - t^2
  double interval() const { return z * z - t * t; }
};

struct LightConePoint {
  double u = 0.0;
  double v = 0.0;
};

/// Hadronic (center) and quark-separation coordinates, longitudinal z and t parts.
struct TwoBodyCoords {
  SpaceTimePoint center;
  SpaceTimePoint separation;
};

Rapidity rapidity_from_beta(Velocity v);
double beta_from_rapidity(Rapidity r);

/// z -> cosh(eta) z + sinh(eta) t, t -> sinh(eta) z + cosh(eta) t.
SpaceTimePoint boost(SpaceTimePoint p, Rapidity r);

LightConePoint to_light_cone(SpaceTimePoint p);
SpaceTimePoint from_light_cone(LightConePoint lc);

/// u -> e^eta u, v -> e^-eta v.
LightConePoint squeeze_light_cone(LightConePoint lc, Rapidity r);

/// X = (a + b) / 2, x = (a - b) / (2 sqrt 2).
TwoBodyCoords two_body_split(SpaceTimePoint a, SpaceTimePoint b);
std::pair<SpaceTimePoint, SpaceTimePoint> two_body_join(const TwoBodyCoords& c);

}  // namespace covosc

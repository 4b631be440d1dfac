#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covosc/density_matrix.hpp"
#include "covosc/wigner.hpp"
#include "oracles.hpp"

using namespace covosc;

namespace {
const double kPi = std::numbers::pi;
const double kLn2 = std::numbers::ln2;
}  // namespace

TEST_CASE("wigner closed form") {
  CHECK(wigner_closed(Rapidity(0.0), {0, 0}) == 1.0);
  CHECK(wigner_closed(Rapidity(kLn2), {0, 0}) == doctest::Approx(1.0 / 2.125).epsilon(1e-15));
  oracle::Sampler rng(8);
  for (int i = 0; i < 300; ++i) {
    const PhaseSpacePoint pt{rng.uniform(-20, 20), rng.uniform(-20, 20)};
    CHECK(wigner_closed(Rapidity(rng.uniform(-3, 3)), pt) >= 0.0);
  }
}

TEST_CASE("wigner numeric at the origin") {
  const WignerValue w = wigner_numeric(Rapidity(0.0), {0, 0});
  CHECK(w.real == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(w.imag) < 1e-14);
}

TEST_CASE("wigner numeric matches the closed form") {
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const double c = std::sqrt(std::cosh(2.0 * eta));
    const QuadratureRule rule = wigner_rule(Rapidity(eta), 3.0 * c);
    double worst = 0.0;
    for (int i = 0; i <= 6; ++i) {
      for (int j = 0; j <= 6; ++j) {
        const PhaseSpacePoint pt{-3.0 * c + c * i, -3.0 * c + c * j};
        const WignerValue w = wigner_numeric(Rapidity(eta), pt, rule);
        worst = std::max(worst, std::abs(w.real - wigner_closed(Rapidity(eta), pt)));
        CHECK(std::abs(w.imag) < 1e-12);
      }
    }
    CHECK_MESSAGE(worst < 1e-7, "eta=" << eta);
  }
}

TEST_CASE("wigner_rule resolves the phase") {
  const QuadratureRule r = wigner_rule(Rapidity(1.0), 10.0);
  const double step = r.nodes[1] - r.nodes[0];
  CHECK(step <= kPi / 10.0 / 40.0 * 1.0000001);
  CHECK(r.size() % 2 == 1);
  CHECK(-r.nodes.front() == doctest::Approx(8.0 * std::sqrt(std::cosh(2.0))));
  CHECK_THROWS_AS(wigner_rule(Rapidity(0.0), -1.0), std::invalid_argument);
}

TEST_CASE("marginal bridge and total mass") {
  const ReducedDensityKernel rest{Rapidity(0.0)};
  const QuadratureRule p_rule = trapezoid_rule(-12.0, 12.0, 961);
  CHECK(wigner_marginal_position(Rapidity(0.0), 0.0, p_rule) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
  CHECK(kPi * quark_distribution(rest, 0.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));

  for (double eta : {0.0, 0.5, 1.5}) {
    const double c = std::sqrt(std::cosh(2.0 * eta));
    const QuadratureRule r = trapezoid_rule(-10.0 * c, 10.0 * c, 801);
    for (double z : {-1.0, 0.0, 2.0}) {
      const double ratio = wigner_marginal_position(Rapidity(eta), z, r) /
                           quark_distribution({Rapidity(eta)}, z);
      CHECK(ratio == doctest::Approx(kPi).epsilon(1e-10));
    }
    const double mass = integrate_2d([&](double z, double p) { return wigner_closed(Rapidity(eta), {z, p}); }, r);
    CHECK(std::abs(mass - kPi) < 1e-8);
  }
}

TEST_CASE("phase space radius") {
  CHECK(phase_space_radius(Rapidity(0.0)) == 1.0);
  // sqrt(2.125), mpmath
  CHECK(phase_space_radius(Rapidity(kLn2)) == doctest::Approx(1.45773797371132512).epsilon(1e-15));
  double prev = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double r = phase_space_radius(Rapidity(0.1 * i));
    CHECK(r > prev);
    prev = r;
  }
  CHECK(phase_space_radius(Rapidity(5.0)) / (std::exp(5.0) / std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(0.02));

  for (double eta : {0.0, kLn2, 1.5}) {
    for (double angle : {0.0, 0.9}) {
      CHECK(std::abs(measure_phase_space_radius(Rapidity(eta), angle) - phase_space_radius(Rapidity(eta))) <
            1e-6);
    }
  }
}

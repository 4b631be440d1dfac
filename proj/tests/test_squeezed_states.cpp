#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covosc/numerics.hpp"
#include "covosc/squeezed_states.hpp"
#include "oracles.hpp"

using namespace covosc;

namespace {
const double kLn2 = std::numbers::ln2;

// L2 distance squared between the truncated series and the closed form.
double series_error(Rapidity eta, int k) {
  const SchmidtExpansion e = expansion(eta, k);
  // the narrow axis has width e^-eta, so the step follows it
  const double w = 8.0 * std::sqrt(eta.cosh2());
  const auto points = static_cast<std::size_t>(2.0 * w / (0.5 * std::exp(-std::abs(eta.value())))) | 1U;
  const auto d2 = [&](double x1, double x2) {
    const double d = reconstruct(e, x1, x2) - squeezed_vacuum(eta, x1, x2);
    return d * d;
  };
  return integrate_2d(d2, trapezoid_rule(-w, w, points));
}
}  // namespace

TEST_CASE("normal coordinates") {
  const NormalCoordinates a = normal_coordinates(1.0, 1.0);
  CHECK(a.y1 == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(a.y2 == 0.0);
  const NormalCoordinates b = normal_coordinates(1.0, -1.0);
  CHECK(b.y1 == 0.0);
  CHECK(b.y2 == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
}

TEST_CASE("squeezed_vacuum") {
  for (double x1 : {-1.0, 0.0, 0.6}) {
    for (double x2 : {-0.2, 1.4}) {
      CHECK(squeezed_vacuum(Rapidity(0.0), x1, x2) ==
            doctest::Approx(chi(0, x1) * chi(0, x2)).epsilon(1e-15));
    }
  }
  for (double eta : {0.0, 0.4, 2.0, -3.0}) {
    CHECK(squeezed_vacuum(Rapidity(eta), 0.0, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  }
  oracle::Sampler rng(19);
  for (int i = 0; i < 200; ++i) {
    const Rapidity eta(rng.uniform(-3, 3));
    const double x1 = rng.uniform(-4, 4), x2 = rng.uniform(-4, 4);
    CHECK(squeezed_vacuum(eta, x1, x2) == squeezed_vacuum(eta, x2, x1));
    CHECK(squeezed_vacuum(-eta, x1, x2) ==
          doctest::Approx(squeezed_vacuum(eta, x1, -x2)).epsilon(1e-14));
  }
}

TEST_CASE("expansion coefficients") {
  const SchmidtExpansion zero = expansion(Rapidity(0.0), 5);
  CHECK(zero.coeffs[0] == 1.0);
  for (int k = 1; k <= 5; ++k) CHECK(zero.coeffs[static_cast<std::size_t>(k)] == 0.0);

  const SchmidtExpansion e = expansion(Rapidity(kLn2), 4);
  REQUIRE(e.coeffs.size() == 5);
  CHECK(e.coeffs[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(e.coeffs[1] == doctest::Approx(0.48).epsilon(1e-14));

  const SchmidtExpansion f = expansion(Rapidity(1.0), 50);
  double sum = 0.0;
  for (double c : f.coeffs) sum += c * c;
  CHECK(std::abs(sum - 0.999999999999137404) < 1e-9);
  CHECK(f.tail_bound == doctest::Approx(std::pow(std::tanh(1.0), 102)).epsilon(1e-12));

  // negative rapidity alternates the sign
  const SchmidtExpansion neg = expansion(Rapidity(-0.7), 6);
  const SchmidtExpansion pos = expansion(Rapidity(0.7), 6);
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(neg.coeffs[k] == doctest::Approx((k % 2 == 0 ? 1.0 : -1.0) * pos.coeffs[k]).epsilon(1e-15));
  }

  CHECK_THROWS_AS(expansion(Rapidity(1.0), -1), std::invalid_argument);
}

TEST_CASE("log-space coefficients survive large truncations") {
  const SchmidtExpansion e = expansion(Rapidity(3.0), 500);
  const double lt = std::log(std::tanh(3.0));
  for (int k : {0, 100, 250, 500}) {
    const double expect = std::exp(k * lt) / std::cosh(3.0);
    CHECK(e.coeffs[static_cast<std::size_t>(k)] == doctest::Approx(expect).epsilon(1e-11));
  }
  CHECK(log_abs_tanh(Rapidity(20.0)) < 0.0);
  CHECK(log_abs_tanh(Rapidity(20.0)) == doctest::Approx(-2.0 * std::exp(-40.0)).epsilon(1e-12));
  CHECK(log_cosh(Rapidity(20.0)) == doctest::Approx(20.0 - std::log(2.0)).epsilon(1e-15));
  CHECK(std::isinf(log_abs_tanh(Rapidity(0.0))));
}

TEST_CASE("default truncation") {
  CHECK(default_truncation(Rapidity(0.0)) == 0);
  for (double eta : {0.3, 1.0, 2.0}) {
    const int k = default_truncation(Rapidity(eta));
    const double t2 = std::pow(std::tanh(eta), 2);
    CHECK(std::pow(t2, k) <= 1e-12);
    CHECK(std::pow(t2, k - 1) > 1e-12);
    CHECK(expansion(Rapidity(eta), k).tail_bound < 1e-12);
  }
  CHECK(default_truncation(Rapidity(5.0)) == 1000);
  CHECK(default_truncation(Rapidity(5.0), 1e-12, 50) == 50);
  CHECK(expansion(Rapidity(1.0)).truncation == default_truncation(Rapidity(1.0)));
}

TEST_CASE("reconstruct at zero rapidity is the product ground state") {
  const SchmidtExpansion e = expansion(Rapidity(0.0), 7);
  CHECK(reconstruct(e, 0.3, -1.1) == doctest::Approx(chi(0, 0.3) * chi(0, -1.1)).epsilon(1e-15));
}

TEST_CASE("Parseval: series error equals the tail bound") {
  for (double eta : {0.5, 1.0}) {
    for (int k : {10, 30, 80}) {
      const double err = series_error(Rapidity(eta), k);
      CHECK_MESSAGE(std::abs(err - expansion(Rapidity(eta), k).tail_bound) < 1e-8,
                    "eta=" << eta << " K=" << k);
    }
  }
}

TEST_CASE("pointwise convergence halves the sup error per step") {
  const Rapidity eta(1.0);
  const int step = static_cast<int>(std::ceil(std::log(0.5) / std::log(std::tanh(1.0))));
  double prev = 0.0;
  for (int k = 10; k <= 10 + 4 * step; k += step) {
    const SchmidtExpansion e = expansion(eta, k);
    double sup = 0.0;
    for (double x1 = -4.0; x1 <= 4.0; x1 += 0.25)
      for (double x2 = -4.0; x2 <= 4.0; x2 += 0.25)
        sup = std::max(sup, std::abs(reconstruct(e, x1, x2) - squeezed_vacuum(eta, x1, x2)));
    if (k > 10) CHECK(sup <= 0.5 * prev * 1.05);
    prev = sup;
  }
}

TEST_CASE("schmidt probabilities") {
  const std::vector<double> zero = schmidt_probabilities(Rapidity(0.0), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == 1.0);
  const std::vector<double> p = schmidt_probabilities(Rapidity(kLn2), 3);
  CHECK(p[0] == doctest::Approx(0.64).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(0.2304).epsilon(1e-14));
  for (double v : schmidt_probabilities(Rapidity(2.5), 300)) CHECK(v >= 0.0);
}

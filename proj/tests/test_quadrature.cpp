#include <cmath>

#include "doctest.h"
#include "radialmra/quadrature.hpp"

using namespace rmra;

TEST_CASE("gauss-legendre exactness and normalization") {
  const GaussLegendre& gl = GaussLegendre::get(8);
  double wsum = 0.0;
  for (double w : gl.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  // degree 15 polynomial is integrated exactly by 8 nodes
  double acc = 0.0;
  for (size_t i = 0; i < gl.nodes.size(); ++i)
    acc += gl.weights[i] * std::pow(gl.nodes[i], 14);
  CHECK(acc == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("mapped rule integrates on shifted intervals") {
  std::vector<double> xs, ws;
  gauss_legendre_mapped(16, 1.0, 4.0, xs, ws);
  double acc = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) acc += ws[i] / xs[i];
  CHECK(acc == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("fixed order integral") {
  double v = integrate_1d([](double x) { return std::cos(x); }, 0.0, 1.5);
  CHECK(v == doctest::Approx(std::sin(1.5)).epsilon(1e-13));
}

TEST_CASE("adaptive rule resolves kinks") {
  double v = integrate_adaptive_1d([](double x) { return std::abs(x - 0.3); }, -1.0, 1.0, 1e-12);
  double exact = (0.3 + 1.0) * (0.3 + 1.0) / 2.0 + (1.0 - 0.3) * (1.0 - 0.3) / 2.0;
  CHECK(v == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("adaptive rule resolves jumps") {
  double v = integrate_adaptive_1d([](double x) { return x > 0.125 ? 1.0 : 0.0; }, 0.0, 1.0, 1e-9);
  CHECK(std::abs(v - 0.875) < 1e-7);
}

TEST_CASE("adaptive 2d on a separable integrand") {
  double v = integrate_adaptive_2d(
      [](double x, double y) { return std::exp(-x * x - y * y); }, -4.0, 4.0, -4.0, 4.0, 1e-10);
  CHECK(std::abs(v - M_PI) < 1e-6);
}

TEST_CASE("adaptive 2d with a corner support") {
  double v = integrate_adaptive_2d(
      [](double x, double y) { return (x + y < 1.0) ? 1.0 : 0.0; }, 0.0, 1.0, 0.0, 1.0, 1e-7);
  CHECK(std::abs(v - 0.5) < 1e-5);
}

#include <random>

#include "doctest.h"
#include "radialmra/hankel.hpp"
#include "radialmra/special.hpp"

using namespace rmra;

namespace {

GridFunction gaussian(const BoxGrid& g, double s = 1.0) {
  return GridFunction::sample(
      g, [s](const Vec& x) { return Complex(std::exp(-x.squaredNorm() / (2.0 * s * s)), 0.0); });
}

}  // namespace

TEST_CASE("grid bookkeeping") {
  BoxGrid g = BoxGrid::make(2, 3.0, 8);
  CHECK(g.size() == 64);
  double wsum = 0.0;
  for (long i = 0; i < g.size(); ++i) {
    wsum += g.weight(i);
    Vec p = g.point(i);
    CHECK(p.cwiseAbs().maxCoeff() <= 3.0);
  }
  CHECK(wsum == doctest::Approx(36.0).epsilon(1e-13));  // (2R)^n
}

TEST_CASE("gaussian fixed point") {
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    BoxGrid g = BoxGrid::standard(n);
    HankelTransform H(rd, g);
    GridFunction f = gaussian(g);
    GridFunction F = H.forward(f);
    double dev = 0.0;
    for (long i = 0; i < g.size(); ++i) dev = std::max(dev, std::abs(F.values[i] - f.values[i]));
    CHECK(dev < 1e-6);
  }
}

TEST_CASE("inverse round trip and isometry") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> uni(0.2, 1.2);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    BoxGrid g = BoxGrid::standard(n);
    HankelTransform H(rd, g);
    for (int t = 0; t < 3; ++t) {
      double c = uni(gen), s = 0.5 + uni(gen);
      GridFunction f = GridFunction::sample(g, [&](const Vec& x) {
        double cross = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) cross += std::cos(c * (x[i] - x[j]));
        return Complex((1.0 + 0.3 * cross) * std::exp(-0.5 * s * x.squaredNorm()), 0.0);
      });
      GridFunction F = H.forward(f);
      CHECK(std::abs(F.norm() - f.norm()) / f.norm() < 1e-5);
      GridFunction back = H.inverse(F);
      double dev = 0.0;
      for (long i = 0; i < g.size(); ++i)
        dev = std::max(dev, std::abs(back.values[i] - f.values[i]));
      CHECK(dev < 1e-8);
    }
  }
}

TEST_CASE("pointwise transform matches the gaussian closed form") {
  RootData rd = RootData::make(2);
  BoxGrid g = BoxGrid::standard(2);
  HankelTransform H(rd, g);
  GridFunction f = gaussian(g, 0.8);
  std::mt19937_64 gen(43);
  std::uniform_real_distribution<double> uni(-4.0, 4.0);
  for (int t = 0; t < 20; ++t) {
    Vec xi(2);
    xi << uni(gen), uni(gen);
    Complex grid_val = forward_at(H, f, xi);
    Complex exact = 0.8 * 0.8 * 0.8 * 0.8 *
                    std::exp(-0.8 * 0.8 * xi.squaredNorm() / 2.0);  // s^{n^2} e^{-s^2|xi|^2/2}
    CHECK(std::abs(grid_val - exact) < 1e-6);
  }
  // degenerate frequency goes through the confluent kernel path
  Vec deg(2);
  deg << 0.5, 0.5;
  CHECK(std::isfinite(forward_at(H, f, deg).real()));
}

TEST_CASE("dilation intertwining") {
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    BoxGrid g = BoxGrid::standard(n);
    HankelTransform H(rd, g);
    for (double a : {2.0, 0.5}) {
      // exponent keeps both sides negligible at the box boundary after dilation
      double s = a > 1.0 ? 2.0 : 0.5;
      GridFunction f = GridFunction::sample(
          g, [s](const Vec& x) { return Complex(std::exp(-0.5 * s * x.squaredNorm()), 0.0); });
      // H D_a = D_{1/a} H
      GridFunction lhs = H.forward(dilate(f, a));
      GridFunction rhs = dilate(H.forward(f), 1.0 / a);
      CVec diff = lhs.values - rhs.values;
      GridFunction d{g, diff};
      CHECK(d.norm() < 1e-6 * f.norm());
    }
  }
}

TEST_CASE("unitary dilation preserves the norm") {
  BoxGrid g = BoxGrid::standard(2);
  GridFunction f = gaussian(g, 0.6);
  GridFunction d = dilate(f, 2.0);
  CHECK(std::abs(d.norm() - f.norm()) / f.norm() < 1e-8);
}

TEST_CASE("boundary mass flags truncation") {
  BoxGrid g = BoxGrid::standard(2);
  CHECK(boundary_mass(gaussian(g, 1.0)) < 1e-12);
  GridFunction wide = gaussian(g, 8.0);
  CHECK(boundary_mass(wide) > 1e-4);
}

TEST_CASE("frequency translation multiplies by the kernel") {
  RootData rd = RootData::make(2);
  BoxGrid g = BoxGrid::standard(2);
  GridFunction F = gaussian(g);
  Vec y(2);
  y << 0.7, -0.4;
  GridFunction T = freq_translate(rd, y, F);
  Vec p = g.point(777);
  Complex expect = bessel_j_iy(rd, p, y) * F.values[777];
  CHECK(std::abs(T.values[777] - expect) < 1e-12);
}

#include <random>

#include "doctest.h"
#include "radialmra/hypergroup.hpp"
#include "radialmra/special.hpp"

using namespace rmra;

TEST_CASE("polytope volume function oracles") {
  RootData rd2 = RootData::make(2);
  Vec v(2);
  v << 1.0, -1.0;
  CHECK(t_fun(rd2, v) == doctest::Approx(1.0));
  v << -1.0, 1.0;
  CHECK(t_fun(rd2, v) == doctest::Approx(0.0));

  RootData rd3 = RootData::make(3);
  Vec w(3);
  w << 2.0, -1.0, -1.0;  // simple-root coordinates (2, 1)
  CHECK(t_fun(rd3, w) == doctest::Approx(1.0));
  w << 1.0, 0.0, -1.0;  // coordinates (1, 1)
  CHECK(t_fun(rd3, w) == doctest::Approx(1.0));
  w << 1.0, 1.0, -2.0;  // coordinates (1, 2)
  CHECK(t_fun(rd3, w) == doctest::Approx(1.0));
  Vec bad(3);
  bad << 1.0, 1.0, 1.0;
  CHECK_THROWS_AS(t_fun(rd3, bad), std::invalid_argument);
}

TEST_CASE("rank-2 trace-zero density closed form") {
  RootData rd = RootData::make(2);
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> uni(0.3, 2.5);
  for (int t = 0; t < 200; ++t) {
    double r = uni(gen), s = uni(gen);
    if (std::abs(r - s) < 1e-2) continue;
    Vec x(2), y(2);
    x << r, -r;
    y << s, -s;
    std::uniform_real_distribution<double> ua(std::abs(r - s) + 1e-4, r + s - 1e-4);
    double a = ua(gen);
    Vec h(2);
    h << a, -a;
    CHECK(std::abs(density_k(rd, x, y, h) - a / (2.0 * r * s)) < 1e-12);
    // outside the support the density vanishes
    Vec out(2);
    out << r + s + 0.5, -(r + s + 0.5);
    CHECK(density_k(rd, x, y, out) == 0.0);
  }
}

TEST_CASE("density mass is one") {
  RootData rd = RootData::make(2);
  Vec x(2), y(2);
  x << 0.2, -0.1;
  y << 1.4, -1.1;
  TranslationDensity td(rd, x, y);
  CHECK(std::abs(td.integral(1e-9) - 1.0) < 1e-7);
  // the support plane carries the summed trace
  Vec mid = td.point(Vec::Constant(1, 0.5 * (td.box_lo[0] + td.box_hi[0])));
  CHECK(mid.sum() == doctest::Approx(x.sum() + y.sum()));
}

TEST_CASE("density backend reproduces the product formula") {
  std::mt19937_64 gen(23);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    Vec x(n), y(n), z(n);
    if (n == 2) {
      x << 0.25, -0.05;
      y << 1.3, -1.2;
      z << 0.8, -0.4;
    } else {
      x << 0.3, 0.05, -0.2;
      y << 1.6, 0.2, -1.5;
      z << 0.9, 0.1, -0.6;
    }
    Complex lhs = translate_density_c(
        rd, [&](const Vec& h) { return bessel_j_iy(rd, h, z); }, x, y, n == 2 ? 1e-9 : 1e-6);
    Complex rhs = bessel_j_iy(rd, x, z) * bessel_j_iy(rd, y, z);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-4);
  }
}

TEST_CASE("monte-carlo backend agrees with the density backend") {
  RootData rd = RootData::make(2);
  Vec x(2), y(2), z(2);
  x << 0.3, -0.1;
  y << 1.5, -1.0;
  z << 0.6, -0.3;
  auto f = [&](const Vec& h) { return bessel_j_iy(rd, h, z); };
  Complex dens = translate_density_c(rd, f, x, y, 1e-9);
  McEstimate mc = translate_mc_c(f, x, y, 60000, 77);
  CHECK(std::abs(mc.mean - dens) < 4.0 * mc.stderr_);
}

TEST_CASE("support bound contains the spectrum of the sum") {
  std::mt19937_64 gen(24);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    Vec x(n), y(n);
    if (n == 2) {
      x << 0.3, -0.2;
      y << 1.5, -1.3;
    } else {
      x << 0.25, 0.0, -0.2;
      y << 1.8, 0.1, -1.6;
    }
    SupportRegion sup = support_bound(rd, x, y);
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      Eigen::MatrixXcd u = haar_unitary(n, rng);
      Eigen::MatrixXcd m = x.cast<Complex>().asDiagonal();
      m += u * y.cast<Complex>().asDiagonal() * u.adjoint();
      CHECK(sup.contains(ordered_spectrum(m), 1e-8));
    }
  }
}

TEST_CASE("generalized translation is self-adjoint under the involution") {
  RootData rd = RootData::make(2);
  Vec y(2);
  y << 1.2, -1.2;
  auto f = [](const Vec& v) { return std::exp(-0.5 * v.squaredNorm()); };
  auto g = [](const Vec& v) {
    return std::exp(-0.3 * v.squaredNorm()) * (std::cos(v[0]) + std::cos(v[1]));
  };
  CHECK(adjoint_residual(rd, f, g, y, 8.0, 48) < 1e-6);
}

TEST_CASE("generalized translation contracts the norm") {
  RootData rd = RootData::make(2);
  Vec y(2);
  y << 1.0, -0.8;
  auto f = [](const Vec& v) { return std::exp(-0.4 * v.squaredNorm()); };
  auto [tn, fn] = translate_norms(rd, f, y, 10.0);
  CHECK(tn <= fn * (1.0 + 1e-8));
}

#include <random>

#include "doctest.h"
#include "radialmra/random.hpp"
#include "radialmra/special.hpp"

using namespace rmra;

namespace {

Vec regular(int n, std::mt19937_64& gen, double spread = 2.0, double gap = 0.25) {
  std::uniform_real_distribution<double> uni(-spread, spread);
  for (;;) {
    Vec x(n);
    for (int d = 0; d < n; ++d) x[d] = uni(gen);
    std::sort(x.data(), x.data() + n, std::greater<double>());
    bool ok = true;
    for (int d = 0; d + 1 < n; ++d)
      if (x[d] - x[d + 1] < gap) ok = false;
    if (ok) return x;
  }
}

}  // namespace

TEST_CASE("partition enumeration") {
  auto p2 = Partition::enumerate(2, 3);
  // (0,0),(1,0),(2,0),(1,1),(3,0),(2,1)
  CHECK(p2.size() == 6);
  CHECK(p2.front().weight() == 0);
  for (size_t i = 1; i < p2.size(); ++i) CHECK(p2[i - 1].weight() <= p2[i].weight());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1, -2}), std::invalid_argument);
}

TEST_CASE("dominant weight enumeration") {
  // weakly decreasing n-vectors with entries in [-L, L]: C(2L + n, n)
  CHECK(dominant_weights(2, 4).size() == 45);
  CHECK(dominant_weights(3, 4).size() == 165);
  for (const Vec& w : dominant_weights(3, 2)) {
    CHECK(w[0] >= w[1]);
    CHECK(w[1] >= w[2]);
    CHECK(w.maxCoeff() <= 2.0);
    CHECK(w.minCoeff() >= -2.0);
  }
}

TEST_CASE("m constant agrees between overloads") {
  RootData rd = RootData::make(3);
  Partition lam{3, 1, 0};
  Vec lv(3);
  lv << 3, 1, 0;
  CHECK(m_lambda(rd, lam) == doctest::Approx(m_lambda(rd, lv)).epsilon(1e-15));
}

TEST_CASE("kernel normalization at zero") {
  std::mt19937_64 gen(11);
  for (int n : {2, 3, 4}) {
    RootData rd = RootData::make(n);
    for (int t = 0; t < 10; ++t) {
      Vec x = regular(n, gen);
      CHECK(std::abs(bessel_j(rd, x, CVec::Zero(n)) - 1.0) < 1e-12);
      CHECK(std::abs(bessel_j(rd, Vec::Zero(n), x.cast<Complex>()) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("rank-2 closed form") {
  RootData rd = RootData::make(2);
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> uni(0.3, 2.0);
  for (int t = 0; t < 50; ++t) {
    double a = uni(gen), b = uni(gen);
    Vec x(2);
    x << a, -a;
    CVec z(2);
    z << b, -b;
    // J = sinh(2ab) / (2ab) for opposite trace-zero pairs
    Complex v = bessel_j(rd, x, z);
    CHECK(std::abs(v - std::sinh(2 * a * b) / (2 * a * b)) < 1e-12);
  }
}

TEST_CASE("argument symmetry and scaling identity") {
  std::mt19937_64 gen(13);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    for (int t = 0; t < 10; ++t) {
      Vec x = regular(n, gen), y = regular(n, gen);
      CVec z = y.cast<Complex>();
      // J(x, z) = J(z, x) (symmetric kernel)
      CHECK(std::abs(bessel_j(rd, x, z) - bessel_j(rd, y, x.cast<Complex>())) < 1e-11);
      // J(cx, z) = J(x, cz)
      Complex lhs = bessel_j(rd, Vec(0.5 * x), z);
      Complex rhs = bessel_j(rd, x, CVec(0.5 * z));
      CHECK(std::abs(lhs - rhs) < 1e-11);
    }
  }
}

TEST_CASE("confluent evaluation is continuous across the switch") {
  std::mt19937_64 gen(14);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    Vec x = regular(n, gen);
    CVec z = regular(n, gen).cast<Complex>();
    for (double gap : {5e-4, 2e-4, 1.01e-4, 9.9e-5, 5e-5}) {
      Vec xa = x;
      xa[n - 1] = xa[n - 2] - gap;
      Complex direct = detail::hciz_direct(rd, xa, z);
      Complex conf = detail::hciz_divided_difference(rd, xa, z);
      CHECK(std::abs(direct - conf) / std::abs(conf) < 1e-8);
    }
    // fully degenerate argument still evaluates (pure confluent path)
    Vec deg = Vec::Constant(n, 0.7);
    Complex v = bessel_j(rd, deg, z);
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
  }
}

TEST_CASE("schur polynomial oracle values") {
  RootData rd = RootData::make(2);
  std::mt19937_64 gen(15);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    double a = uni(gen), b = uni(gen);
    if (std::abs(a - b) < 0.1) continue;
    Vec x(2);
    x << a, b;
    Complex u = std::exp(Complex(0, a)), v = std::exp(Complex(0, b));
    // s_(2,0) = u^2 + uv + v^2, s_(1,1) = uv
    CHECK(std::abs(schur_s_raw(rd, Partition{2, 0}, x) - (u * u + u * v + v * v)) < 1e-12);
    CHECK(std::abs(schur_s_raw(rd, Partition{1, 1}, x) - u * v) < 1e-12);
  }
}

TEST_CASE("schur via alternant matches homogeneous path") {
  std::mt19937_64 gen(16);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    for (const Partition& lam : Partition::enumerate(n, 4))
      for (int t = 0; t < 10; ++t) {
        Vec x = regular(n, gen);
        Complex a = schur_s_raw(rd, lam, x);
        Complex h = detail::schur_homogeneous(rd, lam, x);
        CHECK(std::abs(a - h) < 1e-10);
      }
  }
}

TEST_CASE("character identity for the kernel") {
  std::mt19937_64 gen(17);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    for (const Partition& lam : Partition::enumerate(n, 5))
      for (int t = 0; t < 10; ++t) {
        Vec x = regular(n, gen, 2.5, 0.2);
        CHECK(bessel_schur_residual(rd, lam, x) < 1e-9);
      }
  }
}

TEST_CASE("monte-carlo oracle for the kernel") {
  std::mt19937_64 gen(18);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    Vec x = regular(n, gen), y = regular(n, gen);
    CVec z = (Complex(0, 1) * y.cast<Complex>().array()).matrix();
    McEstimate mc = bessel_mc(x, z, 20000, 91 + n);
    CHECK(std::abs(mc.mean - bessel_j(rd, x, z)) < 4.0 * mc.stderr_);
  }
}

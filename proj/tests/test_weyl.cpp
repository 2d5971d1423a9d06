#include <random>

#include "doctest.h"
#include "radialmra/weyl.hpp"

using namespace rmra;

TEST_CASE("root data geometry") {
  for (int n : {2, 3, 4}) {
    RootData rd = RootData::make(n);
    CHECK(rd.q == n * (n - 1) / 2);
    CHECK(rd.m == 2 * n * n - n);
    CHECK(static_cast<int>(rd.positive_roots.size()) == rd.q);
    // rho is the half-sum of the positive roots
    Vec half = Vec::Zero(n);
    for (const Vec& a : rd.positive_roots) half += 0.5 * a;
    CHECK((half - rd.rho).norm() < 1e-14);
    // every non-simple positive root expands with the recorded 0/1 rows
    for (size_t k = 0; k + rd.n - 1 < rd.positive_roots.size(); ++k) {
      Vec rec = Vec::Zero(n);
      for (int j = 0; j < n - 1; ++j)
        rec += static_cast<double>(rd.expansion[k][j]) * rd.simple_roots[j];
      CHECK((rec - rd.positive_roots[k + n - 1]).norm() < 1e-14);
    }
  }
}

TEST_CASE("vandermonde and weight") {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  Vec x(3);
  for (int d = 0; d < 3; ++d) x[d] = uni(gen);
  double direct = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
  CHECK(vandermonde(x) == doctest::Approx(direct));
  CHECK(weight_omega(x) == doctest::Approx(direct * direct));
  Vec sw = x;
  std::swap(sw[0], sw[1]);
  CHECK(vandermonde(sw) == doctest::Approx(-direct));
}

TEST_CASE("denominator factorizes as phase times alternant") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int n : {2, 3}) {
    RootData rd = RootData::make(n);
    for (int t = 0; t < 20; ++t) {
      Vec x(n);
      for (int d = 0; d < n; ++d) x[d] = uni(gen);
      Complex lhs = weyl_denominator(x);
      Complex rhs = phase_alpha(x) * alternant(rd.delta_vec, x);
      CHECK(std::abs(lhs - rhs) < 1e-12);
      CHECK(std::abs(std::abs(phase_alpha(x)) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("orbit hull via majorization") {
  Vec x(3);
  x << 2.0, 0.0, -2.0;
  Vec inside(3), outside(3);
  inside << 1.0, 0.0, -1.0;
  outside << 3.0, 0.0, -3.0;
  CHECK(orbit_hull_contains(inside, x));
  CHECK(!orbit_hull_contains(outside, x));
  CHECK(orbit_hull_contains(x, x));
  Vec off(3);
  off << 1.0, 0.5, -1.0;  // trace mismatch
  CHECK(!orbit_hull_contains(off, x));
}

TEST_CASE("simple root coordinates invert the expansion") {
  RootData rd = RootData::make(4);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Vec y(3);
  for (int d = 0; d < 3; ++d) y[d] = uni(gen);
  Vec v = Vec::Zero(4);
  for (int j = 0; j < 3; ++j) v += y[j] * rd.simple_roots[j];
  CHECK((simple_root_coordinates(v) - y).norm() < 1e-14);
}

TEST_CASE("chamber involution") {
  Vec x(3);
  x << 2.0, 1.0, -0.5;
  Vec xb = chamber_involution(x);
  CHECK(xb[0] == doctest::Approx(0.5));
  CHECK(xb[2] == doctest::Approx(-2.0));
  CHECK((chamber_involution(xb) - x).norm() < 1e-14);
}

TEST_CASE("permutation visitor") {
  int count = 0, sign_sum = 0;
  for_each_permutation(4, [&](const std::vector<int>& p, int s) {
    ++count;
    sign_sum += s;
    CHECK(static_cast<int>(p.size()) == 4);
  });
  CHECK(count == 24);
  CHECK(sign_sum == 0);
}

TEST_CASE("lattice cosets") {
  LatticePair lp = LatticePair::make(3);
  CHECK(lp.r() == 8);
  CHECK(lp.coset_reps[0].norm() == 0.0);
  for (const Vec& p : lp.coset_reps)
    for (int d = 0; d < 3; ++d) CHECK((p[d] == 0.0 || p[d] == doctest::Approx(M_PI)));
}

TEST_CASE("trace projection") {
  Vec x(3);
  x << 1.0, 2.0, 6.0;
  auto [x0, x1] = project_trace(x);
  CHECK(std::abs(x0.sum()) < 1e-14);
  CHECK((x0 + x1 - x).norm() < 1e-14);
  CHECK(std::abs(x1[0] - x1[2]) < 1e-14);
}

#include "doctest.h"
#include "radialmra/random.hpp"

using namespace rmra;

TEST_CASE("haar samples are unitary") {
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    Eigen::MatrixXcd u = haar_unitary(4, rng);
    double dev = (u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
    CHECK(dev < 1e-13);
  }
}

TEST_CASE("haar sampling is deterministic per seed") {
  Rng a(42), b(42);
  Eigen::MatrixXcd ua = haar_unitary(3, a), ub = haar_unitary(3, b);
  CHECK((ua - ub).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conjugation preserves the spectrum") {
  Rng rng(9);
  Vec spec(3);
  spec << 2.0, 0.5, -1.0;
  Eigen::MatrixXcd h = hermitian_from_spectrum(spec, rng);
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Vec back = ordered_spectrum(h);
  CHECK((back - spec).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ordered spectrum sorts descending") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = -1.0;
  d(1, 1) = 3.0;
  d(2, 2) = 0.0;
  Vec s = ordered_spectrum(d);
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[2] == doctest::Approx(-1.0));
}

TEST_CASE("mc estimate exposes a usable error bar") {
  Vec x(2);
  x << 1.0, -1.0;
  CVec z = CVec::Zero(2);
  // e^{tr(...)} with z = 0 is exactly 1: zero variance
  McEstimate mc = bessel_mc(x, z, 100, 5);
  CHECK(std::abs(mc.mean - 1.0) < 1e-14);
  CHECK(mc.stderr_ < 1e-14);
}

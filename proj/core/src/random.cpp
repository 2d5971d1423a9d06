#include "radialmra/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace rmra {

Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  Eigen::MatrixXcd G(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = Complex(rng.normal() * s, rng.normal() * s);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex r = R(j, j);
    Complex phase = (std::abs(r) > 0.0) ? r / std::abs(r) : Complex(1.0);
    Q.col(j) *= phase;
  }
  return Q;
}

Eigen::MatrixXcd hermitian_from_spectrum(const Vec& spectrum, Rng& rng) {
  const int n = static_cast<int>(spectrum.size());
  Eigen::MatrixXcd U = haar_unitary(n, rng);
  return U * spectrum.asDiagonal() * U.adjoint();
}

Vec ordered_spectrum(const Eigen::MatrixXcd& H) {
  const int n = static_cast<int>(H.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
  es.compute(H, Eigen::EigenvaluesOnly);
  Vec ev = es.eigenvalues();  // ascending
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = ev[n - 1 - i];
  return out;
}

McEstimate bessel_mc(const Vec& x, const CVec& z, long samples, std::uint64_t seed) {
  const int n = static_cast<int>(x.size());
  Rng rng(seed);
  Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) Z(i, i) = z[i];
  Complex sum = 0.0;
  double sum_re2 = 0.0, sum_im2 = 0.0;
  for (long s = 0; s < samples; ++s) {
    Eigen::MatrixXcd U = haar_unitary(n, rng);
    Eigen::MatrixXcd X = U * x.asDiagonal() * U.adjoint();
    Complex tr = (X * Z).trace();
    Complex v = std::exp(tr);
    sum += v;
    sum_re2 += v.real() * v.real();
    sum_im2 += v.imag() * v.imag();
  }
  Complex mean = sum / double(samples);
  double var_re = sum_re2 / samples - mean.real() * mean.real();
  double var_im = sum_im2 / samples - mean.imag() * mean.imag();
  double se = std::sqrt(std::max(0.0, var_re + var_im) / samples);
  return {mean, se};
}

}  // namespace rmra

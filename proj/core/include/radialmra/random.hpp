#pragma once

#include <cstdint>
#include <random>

#include "radialmra/weyl.hpp"

namespace rmra {

/// Seedable RNG wrapper; all Monte-Carlo entry points take one explicitly so
/// that runs are reproducible for a fixed (seed, sample count).
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double normal() {
    static thread_local std::normal_distribution<double> d(0.0, 1.0);
    return d(gen);
  }
  double uniform() {
    static thread_local std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(gen);
  }
};

/// Haar-distributed unitary: complex Ginibre matrix + QR with the R-diagonal
/// phase normalization.
Eigen::MatrixXcd haar_unitary(int n, Rng& rng);

/// A Hermitian matrix with the given spectrum, conjugated by a Haar unitary.
Eigen::MatrixXcd hermitian_from_spectrum(const Vec& spectrum, Rng& rng);

/// Ordered (descending) spectrum of a Hermitian matrix.
Vec ordered_spectrum(const Eigen::MatrixXcd& H);

struct McEstimate {
  Complex mean;
  double stderr_;  ///< sqrt((var_re + var_im) / N)
};

/// Monte-Carlo oracle for the HCIZ integral: mean over Haar unitaries u of
/// e^{tr(u diag(x) u^* diag(z))}. Sequential reduction, deterministic per seed.
McEstimate bessel_mc(const Vec& x, const CVec& z, long samples, std::uint64_t seed);

}  // namespace rmra

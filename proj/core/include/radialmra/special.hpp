#pragma once

#include <vector>

#include "radialmra/weyl.hpp"

namespace rmra {

/// A partition with at most n parts, weakly decreasing nonnegative integers.
struct Partition {
  std::vector<int> parts;

  explicit Partition(std::vector<int> p);
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}
  int size() const { return static_cast<int>(parts.size()); }
  int weight() const;  ///< |lambda|_1

  /// lambda + rho as a real vector (a regular chamber point).
  Vec plus_rho(const RootData& rd) const;
  /// lambda + delta with delta = (n-1, ..., 0).
  Vec plus_delta(const RootData& rd) const;

  /// All partitions with at most n parts and weight <= max_weight,
  /// ordered by weight then lexicographically.
  static std::vector<Partition> enumerate(int n, int max_weight);
};

/// All weakly decreasing integer vectors with entries in [-max_abs, max_abs]
/// (the dominant weights inside the box); partitions are the subset with
/// nonnegative entries. Lexicographic order, largest first.
std::vector<Vec> dominant_weights(int n, int max_abs);

/// HCIZ Bessel function J(x, z) = prod k! / (pi(x) pi(z)) * sum_w eps(w) e^{<wx,z>}.
/// Total by continuity: near-degenerate x or z switch to a confluent
/// divided-difference evaluation.
Complex bessel_j(const RootData& rd, const Vec& x, const CVec& z);

/// Convenience overload for purely imaginary second argument i*y.
Complex bessel_j_iy(const RootData& rd, const Vec& x, const Vec& y);

/// Unnormalized Schur polynomial s_lambda(x) = A_{lambda+delta}(e^{ix}) / A_delta(e^{ix}).
Complex schur_s_raw(const RootData& rd, const Partition& lambda, const Vec& x);

/// Normalized S_lambda(x) = s_lambda(x) / (i^{|Sigma_+|} sqrt(n!)).
Complex schur_s(const RootData& rd, const Partition& lambda, const Vec& x);

/// M_lambda = pi(lambda + rho) / (sqrt(n!) prod k!).
double m_lambda(const RootData& rd, const Partition& lambda);
/// Same constant for a general dominant weight.
double m_lambda(const RootData& rd, const Vec& lambda);

/// |S_lambda(x) - M_lambda (pi(x)/Delta(x)) J(x, i(lambda+rho))|.
/// Throws std::domain_error when |Delta(x)| is below threshold.
double bessel_schur_residual(const RootData& rd, const Partition& lambda, const Vec& x,
                             double delta_threshold = 1e-8);

namespace detail {
/// Confluent evaluation of prod k! * det(e^{x_i z_j}) / (pi(x) pi(z)) via
/// two-stage Hermite/Newton divided differences. Exposed for tests.
Complex hciz_divided_difference(const RootData& rd, const Vec& x, const CVec& z);

/// Direct signed-alternant evaluation (Kahan-compensated). Exposed for tests.
Complex hciz_direct(const RootData& rd, const Vec& x, const CVec& z);

/// Schur via complete homogeneous symmetric polynomials in u_k = e^{i x_k}
/// (subtraction-free confluent path). Exposed for tests.
Complex schur_homogeneous(const RootData& rd, const Partition& lambda, const Vec& x);
}  // namespace detail

}  // namespace rmra

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace rmra {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Geometry of the A_{n-1} root system in R^n: positive roots e_i - e_j,
/// simple roots, the Weyl vector rho, and the expansion of non-simple
/// positive roots in the simple-root basis.
struct RootData {
  int n = 0;
  std::vector<Vec> simple_roots;    ///< alpha_1 .. alpha_{n-1}
  std::vector<Vec> positive_roots;  ///< all e_i - e_j, i < j; first n-1 are the simple ones
  Vec rho;                          ///< (n-1, n-3, ..., -n+1) / 2
  Vec delta_vec;                    ///< (n-1, n-2, ..., 0)
  int q = 0;                        ///< |Sigma_+| = n(n-1)/2
  int m = 0;                        ///< 2 n^2 - n (n^2 matrix dimensions + n(n-1) root count)
  /// expansion[k][j] = a_{kj} for the non-simple roots alpha_n..alpha_q,
  /// k = 0 .. q-n, j = 0 .. n-2. All entries are 0 or 1 for type A.
  std::vector<std::vector<int>> expansion;

  static RootData make(int n);
  double fact_prod() const;  ///< prod_{k=1}^{n-1} k!
};

/// Lattices I = 2pi Z^n and L = pi Z^n with the 2^n coset representatives
/// of L/I and the fundamental domains D = [0,2pi)^n, D' = [0,pi)^n.
struct LatticePair {
  int n = 0;
  std::vector<Vec> coset_reps;  ///< the 2^n vectors in {0,pi}^n, rep 0 first
  static LatticePair make(int n);
  int r() const { return static_cast<int>(coset_reps.size()); }
};

/// A point of the closed Weyl chamber: coordinates sorted descending.
struct ChamberPoint {
  Vec coords;

  /// Sorts descending (stable, ties keep input order).
  static ChamberPoint from(const Vec& x);
  bool in_chamber(double tol = 0.0) const;
  bool regular(double tol = 1e-12) const;
  int n() const { return static_cast<int>(coords.size()); }
};

/// pi(x) = prod_{i<j} (x_i - x_j).
double vandermonde(const Vec& x);
Complex vandermonde(const CVec& z);

/// omega(x) = pi(x)^2.
double weight_omega(const Vec& x);

/// Delta(x) = prod_{i<j} (e^{i(x_i-x_j)/2} - e^{-i(x_i-x_j)/2}).
Complex weyl_denominator(const Vec& x);

/// alpha(x) = e^{-i (n-1)/2 <x, 1>}, the phase with Delta = alpha * A_delta(e^{ix}).
Complex phase_alpha(const Vec& x);

/// A_mu(e^{ix}) = det(e^{i mu_j x_k}).
Complex alternant(const Vec& mu, const Vec& x);

/// x = x0 + x1 with <x0, 1> = 0 and x1 a multiple of (1,...,1).
std::pair<Vec, Vec> project_trace(const Vec& x);

/// h in C(x) = conv(S_n . x), tested by the majorization criterion.
bool orbit_hull_contains(const Vec& h, const Vec& x, double tol = 1e-10);

/// v in the closure of the dual cone {sum c_j alpha_j : c_j > 0}.
/// Throws std::invalid_argument if v is not trace-zero within tol_trace.
bool dual_cone_contains(const Vec& v, double tol = 1e-10, double tol_trace = 1e-8);

/// Coordinates (y_1..y_{n-1}) of a trace-zero v in the simple-root basis:
/// y_j = v_1 + ... + v_j.
Vec simple_root_coordinates(const Vec& v);

/// Involution x -> -(x_n, ..., x_1) of the chamber.
Vec chamber_involution(const Vec& x);

/// Visits every permutation of {0..n-1} via Heap's algorithm; the callback
/// receives the permutation and its sign. Capped at n <= 6.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& fn);

}  // namespace rmra

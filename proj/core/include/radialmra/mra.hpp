#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "radialmra/hankel.hpp"
#include "radialmra/special.hpp"
#include "radialmra/weyl.hpp"

namespace rmra {

/// An analytic frequency-side profile on R^n (the transform of a radial
/// function). All multiresolution criteria are stated on this side;
/// physical-side values come from the inverse transform on demand.
struct FrequencyProfile {
  int n = 0;
  std::function<Complex(const Vec&)> eval;

  Complex operator()(const Vec& xi) const { return eval(xi); }
  bool valid() const { return n > 0 && static_cast<bool>(eval); }
};

/// An S_n-invariant function with I-periodic modulus, evaluated anywhere on
/// R^n (symbols gamma, beta^i, filters).
struct PeriodicSymmetricFunction {
  int n = 0;
  std::function<Complex(const Vec&)> eval;

  Complex operator()(const Vec& xi) const { return eval(xi); }
};

/// A candidate scaling function, held by its frequency profile.
struct ScalingFunction {
  RootData rd;
  LatticePair lattice;
  FrequencyProfile freq;  ///< the transform of phi
  double lattice_radius = 16.0 * M_PI;
  /// Band limit of the profile (infinity when unbounded); lets decompose
  /// clip its per-level integration boxes.
  double freq_radius = std::numeric_limits<double>::infinity();
  /// Cached essential bounds of the periodization; negative until computed.
  double riesz_A = -1.0;
  double riesz_B = -1.0;
};

/// Uniform midpoint grid over the fundamental cell [0, 2pi)^n; midpoint
/// offset keeps trigonometric exactness while avoiding the diagonals where
/// the Weyl denominator vanishes and the edges of indicator profiles.
struct TorusGrid {
  int n = 0;
  int npts = 0;

  static TorusGrid make(int n, int npts);
  long size() const;
  Vec point(long idx) const;  ///< row-major, dimension 0 slowest
  /// Normalized cell measure (2pi)^{-n} * (2pi/npts)^n = npts^{-n}.
  double cell() const;
};

/// P_phi(xi) = (1/n!) sum_{q in I} |F(xi+q)|^2, truncated to |xi+q|_inf
/// <= lattice_radius after reducing xi to the fundamental cell. Throws
/// std::runtime_error when the outermost-shell term exceeds tail_tol
/// (slow decay).
double periodization_at(const RootData& rd, const FrequencyProfile& F, const Vec& xi,
                        double lattice_radius = 16.0 * M_PI, double tail_tol = 1e-8);

/// The periodization as a reusable callable.
PeriodicSymmetricFunction periodization(const RootData& rd, const FrequencyProfile& F,
                                        double lattice_radius = 16.0 * M_PI,
                                        double tail_tol = 1e-8);

/// Grid essential bounds of P_phi over the cell; cached on phi.
std::pair<double, double> riesz_bounds(ScalingFunction& phi, int torus_npts = 48);

/// F / sqrt(P_phi): the returned profile has unit periodization. Throws
/// std::runtime_error when the lower Riesz bound is below rb_tol.
ScalingFunction orthonormalize(ScalingFunction phi, int torus_npts = 48, double rb_tol = 1e-10);

/// Gram matrix of {M_lambda T^(lambda) phi} computed by the torus integral
/// of S_lambda conj(S_mu) P_phi against the normalized measure
/// (2pi)^{-n} |Delta|^2 dxi.
Eigen::MatrixXcd gram_matrix(const ScalingFunction& phi, const std::vector<Partition>& lambdas,
                             int torus_npts = 48);

/// Result of the refinement-symbol extraction gamma(xi) =
/// Delta(2 xi) F(2 xi) / (Delta(xi) F(xi)).
struct TwoScaleResult {
  PeriodicSymmetricFunction gamma;  ///< NaN where the denominator is small
  /// sup over cell points and small lattice shifts l of
  /// |Delta(2x)F(2x) - gamma(x mod I) Delta(x)F(x)|, x = xi + 2 pi l;
  /// large values mean no I-periodic symbol exists.
  double relation_residual = 0.0;
  double symmetry_residual = 0.0;  ///< sup |gamma(w xi) - gamma(xi)| over sampled w
  double defined_fraction = 0.0;   ///< share of cell points where the ratio is defined
};

TwoScaleResult two_scale_check(const ScalingFunction& phi, int torus_npts = 32,
                               double denom_tol = 1e-8);

/// The constant linking the refinement symbol to the expansion coefficients
/// of phi_{-1,0} in the level-0 basis: gamma = c sum alpha_lambda S_lambda.
/// With the unitary dilation normalization a^{-n^2/2} this is
/// 2^{-n/2} i^{|Sigma_+|} sqrt(n!).
Complex two_scale_constant(const RootData& rd);

/// Both sides of the coefficient link for an orthonormal phi with compactly
/// supported profile: returns (a_lambda, alpha_lambda) with
/// a_lambda = <gamma, S_lambda> and alpha_lambda = <phi_{-1,0}, phi_{0,lambda}>;
/// the link asserts a = two_scale_constant * alpha.
std::pair<std::vector<Complex>, std::vector<Complex>> two_scale_coefficients(
    const ScalingFunction& phi, const std::vector<Partition>& lambdas, double support_radius,
    int quad_npts = 48, int torus_npts = 48);

/// The refinement filter G = gamma delta, so that F(2 xi) = G(xi) F(xi);
/// evaluated in the pole-free ratio form G(xi) = F(2 xi~) / F(xi~) with xi~
/// the representative of xi in [-pi, pi)^n.
struct FilterFunction {
  RootData rd;
  std::function<Complex(const Vec&)> G;
  /// Optional exact |G|^2 (indicator filters evaluate it without the phase,
  /// which makes the squared-sum identity exact in floating point).
  std::function<double(const Vec&)> mod2;

  Complex operator()(const Vec& xi) const { return G(xi); }
  double modulus2(const Vec& xi) const { return mod2 ? mod2(xi) : std::norm(G(xi)); }
};

FilterFunction filter_from(const ScalingFunction& phi, double denom_tol = 1e-8);

/// delta(x) = Delta(x) / Delta(2x). Throws std::domain_error within pole_tol
/// of a zero of Delta(2 .).
Complex delta_ratio(const Vec& xi, double pole_tol = 1e-8);

/// sup over a half-cell grid of |sum_{p in L/I} |G(xi+p)|^2 - 1|.
double qmf_check(const FilterFunction& G, const LatticePair& lat, int torus_npts = 64);

/// The orthonormal wavelet family: r - 1 = 2^n - 1 frequency profiles and
/// the r symbol-times-delta functions b^i = beta^i delta (b^0 is the filter).
struct WaveletFamily {
  RootData rd;
  LatticePair lattice;
  std::vector<PeriodicSymmetricFunction> symbol;  ///< b^0 .. b^{r-1}
  std::vector<FrequencyProfile> psi;              ///< transforms of psi^1 .. psi^{r-1}
};

/// The r x r matrix with rows i, columns p in L/I and entries
/// beta^i(xi+p) delta(xi+p); unitary almost everywhere for an orthonormal
/// family.
Eigen::MatrixXcd wavelet_matrix(const WaveletFamily& fam, const Vec& xi);

/// Completes the filter row to a unitary symbol matrix per canonical cell
/// point (deterministic Householder; phase-multiple-of-e0 rows complete to
/// the identity) and extends S_n-invariantly and I-periodically. Throws
/// std::runtime_error when qmf_check exceeds qmf_tol.
WaveletFamily wavelet_construct(const ScalingFunction& phi, const FilterFunction& G,
                                double qmf_tol = 1e-8);

/// The explicit band-limited family: F = kappa alpha(xi) on [-pi,pi)^n and
/// wavelets supported on the translated cube unions (q^i + Q) / 2 with
/// Q = union of 2 pi l + [-pi/2, pi/2)^n. kappa < 0 selects the calibrated
/// default sqrt(n!).
std::pair<ScalingFunction, WaveletFamily> shannon_family(int n, double kappa = -1.0);

/// The band-limited refinement filter G = alpha chi_Q with exact indicator
/// modulus (mod2 set), so its squared-sum identity evaluates to exactly 1.
FilterFunction shannon_filter(int n);

/// Lifts an S_n-invariant classical (Euclidean) frequency profile hat_a to a
/// radial scaling profile F = sqrt(n!) (2pi)^{n/2} alpha(xi) hat_a(xi).
/// Throws std::invalid_argument when hat_a fails the symmetry check and
/// std::runtime_error when the Riesz bounds degenerate.
ScalingFunction classical_to_radial(int n, const std::function<Complex(const Vec&)>& hat_a,
                                    int torus_npts = 48, double sym_tol = 1e-10,
                                    unsigned sym_seed = 7);

/// Smooth compactly supported QMF filter: tensor product of 1-D raised
/// polynomial (nu(t) = 35t^4 - 84t^5 + 70t^6 - 20t^7) low-pass factors,
/// symmetrized phase as for the band-limited family. Also provides the
/// matching classical profile for classical_to_radial.
std::function<Complex(const Vec&)> meyer_classical_profile(int n);
FilterFunction meyer_filter(int n);

/// Scaling coefficients <f, phi*_{j,lambda}> per level j and dominant
/// weight lambda, computed on the frequency side. Dominant weights with
/// negative entries are needed for completeness: partitions alone only
/// span the polynomial characters.
struct CoefficientTree {
  RootData rd;
  int j_min = 0;
  int j_max = 0;
  std::vector<Vec> lambdas;  ///< weakly decreasing integer vectors
  std::vector<std::vector<Complex>> coeff;  ///< coeff[j - j_min][lambda index]
  double norm_f = 0.0;                      ///< ||f|| in the frequency inner product
  double reconstruction_error = 0.0;        ///< sqrt(max(0, ||f||^2 - ||P_{j_max} f||^2))

  double level_norm(int j) const;  ///< ||P_j f|| within the partition truncation
};

/// f given by its frequency profile Ff supported in [-R_f, R_f]^n; the
/// translate set is dominant_weights(n, weight_bound).
CoefficientTree decompose(const RootData& rd, const FrequencyProfile& Ff, double support_radius,
                          const ScalingFunction& phi_star, int j_min, int j_max, int weight_bound,
                          int quad_npts = 32);

/// Pointwise transform of a sampled function, for feeding grid data into
/// decompose at rank 2.
FrequencyProfile transform_profile(const HankelTransform& H, const GridFunction& f);

/// Relative residual of projecting the translate T^(lambda) phi*_{0,0} back
/// onto V_0; bounded away from zero because the level-0 spaces are not
/// translation invariant. check = residual > threshold.
double shift_noninvariance_residual(const ScalingFunction& phi_star, const Partition& lambda,
                                    int max_weight, int quad_npts = 48);
bool shift_noninvariance_check(const ScalingFunction& phi_star, const Partition& lambda,
                               int max_weight = 6, double threshold = 0.01);

/// Lossless JSON round-trip of sampled families (exact field names are the
/// public interface; see the repository documentation).
struct FamilyDocument {
  int rank = 0;
  double calibration = 0.0;
  double freq_radius = 0.0;
  int freq_npts = 0;
  int symbol_npts = 0;
  /// freq_samples[0] is the scaling profile, then the wavelets; row-major
  /// over the uniform frequency grid, entries (re, im).
  std::vector<std::vector<std::pair<double, double>>> freq_samples;
  std::vector<std::vector<std::pair<double, double>>> symbol_samples;  ///< b^i on the torus grid

  bool operator==(const FamilyDocument&) const = default;
};

FamilyDocument sample_family(const ScalingFunction& phi, const WaveletFamily& fam,
                             double calibration, double freq_radius, int freq_npts,
                             int symbol_npts);
std::string family_to_json(const FamilyDocument& doc);
FamilyDocument family_from_json(const std::string& text);

}  // namespace rmra

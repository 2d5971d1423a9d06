#pragma once

#include <functional>

#include "radialmra/random.hpp"
#include "radialmra/weyl.hpp"

namespace rmra {

/// Polytope-volume function T on trace-zero vectors, expressed through the
/// simple-root coordinates y_j. Rank 2: indicator of the closed dual cone.
/// Rank 3: max(0, min(y_1, y_2)). Rank >= 4: volume of the parameter polytope
/// {t_k >= 0 : sum_k a_{kj} t_k <= y_j} by recursive integration.
/// Throws std::invalid_argument when v is not trace-zero.
double t_fun(const RootData& rd, const Vec& v, double tol_trace = 1e-8);

/// Density k(x,y,h) of the spectral convolution delta_x * delta_y at a point h
/// of the support plane, with respect to Lebesgue measure in simple-root
/// coordinates of h - (x^1 + y^1):
///   k = pi(rho) pi(h) / (pi(x) pi(y)) * sum_{v,w} eps(v) eps(w) T(vy + wx - h).
/// Returns 0 when h is not weakly decreasing (the measure lives on the
/// chamber; the alternating sum mirrors it outside). Throws std::domain_error
/// for non-regular x or y and std::invalid_argument when h is off the plane.
double density_k(const RootData& rd, const Vec& x, const Vec& y, const Vec& h);

/// Translated orbit hull y + C(x) from the support bound for delta_x * delta_y.
/// Construction throws std::runtime_error when the hypothesis y + C(x) c a+
/// fails (checked on the hull vertices y + wx).
struct SupportRegion {
  Vec x;  ///< hull generator
  Vec y;  ///< translate
  bool contains(const Vec& h, double tol = 1e-10) const;
};
SupportRegion support_bound(const RootData& rd, const Vec& x, const Vec& y);

/// The kernel of delta_x * delta_y on its support plane, parametrized by
/// simple-root coordinates: h(yc) = x^1 + y^1 + sum_j yc_j alpha_j.
struct TranslationDensity {
  RootData rd;
  Vec x, y;       ///< regular chamber points
  Vec offset;     ///< x^1 + y^1 (multiple of the all-ones vector)
  Vec box_lo, box_hi;  ///< bounding box of the support in yc coordinates

  TranslationDensity(const RootData& rd_, const Vec& x_, const Vec& y_);
  Vec point(const Vec& yc) const;  ///< h for given simple-root coordinates
  double at(const Vec& yc) const;  ///< k(x, y, point(yc))
  /// integral of f(h) k(x,y,h) dyc over the bounding box (rank 2 and 3 only).
  double integrate(const std::function<double(const Vec&)>& f, double tol = 1e-8) const;
  double integral(double tol = 1e-8) const;  ///< total mass; == 1 up to quadrature
};

/// T_x f(y) = integral of f against delta_x * delta_y, density backend.
double translate_density(const RootData& rd, const std::function<double(const Vec&)>& f,
                         const Vec& x, const Vec& y, double tol = 1e-8);
Complex translate_density_c(const RootData& rd, const std::function<Complex(const Vec&)>& f,
                            const Vec& x, const Vec& y, double tol = 1e-8);

struct McRealEstimate {
  double mean;
  double stderr_;
};

/// Monte-Carlo backend: average of f(sigma(diag(x) + u diag(y) u*)) over Haar
/// unitaries. Deterministic per (seed, samples).
McRealEstimate translate_mc(const std::function<double(const Vec&)>& f, const Vec& x, const Vec& y,
                            long samples, std::uint64_t seed);
McEstimate translate_mc_c(const std::function<Complex(const Vec&)>& f, const Vec& x, const Vec& y,
                          long samples, std::uint64_t seed);

/// |int T_y f(x) g(x) w(x) dx - int f(x) T_ybar g(x) w(x) dx| with
/// ybar = -(y_n, ..., y_1), both sides by chamber quadrature over |x|_inf <= R.
double adjoint_residual(const RootData& rd, const std::function<double(const Vec&)>& f,
                        const std::function<double(const Vec&)>& g, const Vec& y, double R,
                        int npts = 24);

/// ||T_y f||_2 and ||f||_2 on the truncated chamber (norm-contraction check).
std::pair<double, double> translate_norms(const RootData& rd,
                                          const std::function<double(const Vec&)>& f, const Vec& y,
                                          double R, int npts = 24);

}  // namespace rmra

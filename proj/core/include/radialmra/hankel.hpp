#pragma once

#include <functional>

#include "radialmra/weyl.hpp"

namespace rmra {

/// Tensor Gauss-Legendre grid on the box [-R, R]^n. Radial (symmetric)
/// functions are stored on the full box; chamber integrals carry a 1/n!
/// factor against the symmetric extension.
struct BoxGrid {
  int n = 0;
  double R = 0.0;
  int npts = 0;
  std::vector<double> nodes;    ///< 1-D Gauss-Legendre nodes on [-R, R]
  std::vector<double> weights;  ///< matching 1-D weights

  static BoxGrid make(int n, double R, int npts);
  /// Rank defaults resolving the oscillatory kernel: the e^{-i<x,y>} phase
  /// reaches 2R^2, so npts must exceed 2R^2/pi with margin.
  /// n = 2: R = 12, 192 nodes/dim; n >= 3: R = 10, 128 nodes/dim.
  static BoxGrid standard(int n);
  long size() const;
  Vec point(long idx) const;       ///< row-major, dimension 0 slowest
  double weight(long idx) const;   ///< product of 1-D weights
};

/// Complex-valued samples of a symmetric function on a BoxGrid.
struct GridFunction {
  BoxGrid grid;
  CVec values;

  static GridFunction zero(const BoxGrid& g);
  /// Samples f at every grid point.
  static GridFunction sample(const BoxGrid& g, const std::function<Complex(const Vec&)>& f);
  /// Samples a chamber function symmetrically: f receives sorted coordinates.
  static GridFunction sample_radial(const BoxGrid& g, const std::function<Complex(const Vec&)>& f);

  /// <f, g> = (1/n!) sum w(x) omega(x) f(x) conj(g(x)).
  Complex inner(const GridFunction& other) const;
  double norm() const;
};

/// The radial Hankel transform on a fixed grid, with the Plancherel constant
/// calibrated once so that the radial Gaussian e^{-|x|^2/2} is a fixed point.
/// Forward kernel J(x, -iy); the separable form
///   Hf(y) = c_H prodk! / ((-i)^q pi(y)) * int_box f(x) pi(x) e^{-i<x,y>} dx
/// reduces the transform to per-dimension mode products.
class HankelTransform {
 public:
  HankelTransform(const RootData& rd, const BoxGrid& grid);

  double c_h() const { return c_h_; }
  /// Relative squared mass on the outermost node shell; forward() signals
  /// truncation trouble when it exceeds tail_tol.
  double tail_tol = 1e-6;

  GridFunction forward(const GridFunction& f) const;
  GridFunction inverse(const GridFunction& F) const;
  /// Forward transform evaluated on an arbitrary output box grid.
  GridFunction forward_to(const GridFunction& f, const BoxGrid& out) const;
  GridFunction inverse_to(const GridFunction& F, const BoxGrid& out) const;

  const RootData& root_data() const { return rd_; }
  const BoxGrid& grid() const { return grid_; }

 private:
  CVec apply(const CVec& vals, const BoxGrid& in, const BoxGrid& out, int sign) const;
  RootData rd_;
  BoxGrid grid_;
  double c_h_ = 1.0;
};

/// Unitary dilation D_a f(x) = a^{-n^2/2} f(x/a), resampled by per-dimension
/// barycentric interpolation; points leaving the box evaluate to 0.
GridFunction dilate(const GridFunction& f, double a);

/// Frequency-side generalized translation: pointwise multiplication by J(., iy).
GridFunction freq_translate(const RootData& rd, const Vec& y, const GridFunction& F);

/// Fraction of ||f||^2 carried by the outermost node shell of the grid.
double boundary_mass(const GridFunction& f);

/// Transform of a sampled function at a single arbitrary frequency, via the
/// kernel form c_H (1/n!) sum w(x) omega(x) f(x) J(x, -i xi). Stable at
/// near-degenerate xi (confluent kernel path); cost one kernel evaluation
/// per grid node.
Complex forward_at(const HankelTransform& H, const GridFunction& f, const Vec& xi);

}  // namespace rmra

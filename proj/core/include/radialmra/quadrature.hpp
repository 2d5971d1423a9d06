#pragma once

#include <functional>
#include <vector>

#include "radialmra/weyl.hpp"

namespace rmra {

/// Gauss-Legendre rule on [-1, 1] with the given node count.
struct GaussLegendre {
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< positive, sum to 2
  static const GaussLegendre& get(int npts);  ///< cached per npts
};

/// Nodes/weights of an npts-point Gauss-Legendre rule mapped to [a, b].
void gauss_legendre_mapped(int npts, double a, double b, std::vector<double>& nodes,
                           std::vector<double>& weights);

/// Fixed-order integral of f over [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b, int npts = 64);

/// Adaptive bisection: refines until the two-panel vs one-panel estimate
/// difference is below tol (absolute). Panels hitting the depth cap are
/// accepted with their disagreement tallied; throws std::runtime_error when
/// the tallied error estimate exceeds 10x tol.
double integrate_adaptive_1d(const std::function<double(double)>& f, double a, double b,
                             double tol = 1e-10, int npts = 32, int max_depth = 48);

/// Adaptive 2-D integral over the rectangle [ax,bx] x [ay,by] by nested
/// adaptive 1-D passes (outer tolerance split between the two directions).
double integrate_adaptive_2d(const std::function<double(double, double)>& f, double ax, double bx,
                             double ay, double by, double tol = 1e-8, int npts = 32);

}  // namespace rmra

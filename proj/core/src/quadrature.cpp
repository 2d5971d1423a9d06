#include "radialmra/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rmra {

namespace {

// Newton iteration on Legendre polynomials; standard Golub-Welsch-free method.
GaussLegendre compute_gl(int npts) {
  if (npts < 1) throw std::invalid_argument("GaussLegendre: npts must be >= 1");
  GaussLegendre gl;
  gl.nodes.resize(npts);
  gl.weights.resize(npts);
  const int m = (npts + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess
    double x = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (npts == 1) p1 = p0;
      double pk = (npts == 1) ? p0 : p1;
      double pkm1 = (npts == 1) ? 0.0 : p0;
      for (int k = 2; k <= npts; ++k) {
        double pk1 = ((2.0 * k - 1.0) * x * pk - (k - 1.0) * pkm1) / k;
        pkm1 = pk;
        pk = pk1;
      }
      dp = npts * (x * pk - pkm1) / (x * x - 1.0);
      double dx = pk / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[npts - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[i] = w;
    gl.weights[npts - 1 - i] = w;
  }
  return gl;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int npts) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(npts);
  if (it == cache.end()) it = cache.emplace(npts, compute_gl(npts)).first;
  return it->second;
}

void gauss_legendre_mapped(int npts, double a, double b, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  const GaussLegendre& gl = GaussLegendre::get(npts);
  nodes.resize(npts);
  weights.resize(npts);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < npts; ++i) {
    nodes[i] = c + h * gl.nodes[i];
    weights[i] = h * gl.weights[i];
  }
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, int npts) {
  std::vector<double> xs, ws;
  gauss_legendre_mapped(npts, a, b, xs, ws);
  double s = 0.0;
  for (int i = 0; i < npts; ++i) s += ws[i] * f(xs[i]);
  return s;
}

namespace {

// Depth-capped bisection. Panels that still disagree at the depth limit
// (jump discontinuities of piecewise kernels) are accepted and their
// disagreement charged to err_acc; by then the panel is ~2^-max_depth wide,
// so the residual contribution is negligible for max_depth ~ 48.
double adapt_rec(const std::function<double(double)>& f, double a, double b, double whole,
                 double tol, int npts, int depth, int max_depth, double& err_acc) {
  double mid = 0.5 * (a + b);
  double left = integrate_1d(f, a, mid, npts);
  double right = integrate_1d(f, mid, b, npts);
  double err = std::abs(left + right - whole);
  if (err < tol) return left + right;
  if (depth >= max_depth || b - a < 1e-14 * std::max(1.0, std::abs(a) + std::abs(b))) {
    err_acc += err;
    return left + right;
  }
  return adapt_rec(f, a, mid, left, 0.5 * tol, npts, depth + 1, max_depth, err_acc) +
         adapt_rec(f, mid, b, right, 0.5 * tol, npts, depth + 1, max_depth, err_acc);
}

}  // namespace

double integrate_adaptive_1d(const std::function<double(double)>& f, double a, double b,
                             double tol, int npts, int max_depth) {
  if (b <= a) return 0.0;
  double whole = integrate_1d(f, a, b, npts);
  double err_acc = 0.0;
  double result = adapt_rec(f, a, b, whole, tol, npts, 0, max_depth, err_acc);
  if (err_acc > 10.0 * tol)
    throw std::runtime_error("integrate_adaptive_1d: estimated error above tolerance");
  return result;
}

double integrate_adaptive_2d(const std::function<double(double, double)>& f, double ax, double bx,
                             double ay, double by, double tol, int npts) {
  auto outer = [&](double x) {
    return integrate_adaptive_1d([&](double y) { return f(x, y); }, ay, by, 0.5 * tol, npts);
  };
  return integrate_adaptive_1d(outer, ax, bx, 0.5 * tol, npts);
}

}  // namespace rmra

#include "radialmra/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radialmra/quadrature.hpp"

namespace rmra {

namespace {

constexpr double kRegularTol = 1e-12;

// all permutations of {0..n-1} with signs, enumerated once
struct PermTable {
  std::vector<std::vector<int>> perms;
  std::vector<int> signs;
};

const PermTable& perm_table(int n) {
  static std::vector<PermTable> cache(7);
  PermTable& pt = cache.at(n);
  if (pt.perms.empty()) {
    for_each_permutation(n, [&](const std::vector<int>& p, int s) {
      pt.perms.push_back(p);
      pt.signs.push_back(s);
    });
  }
  return pt;
}

// volume of {t_k >= 0 : sum_k a[k][j] t_k <= budget[j]} over vars k..end
double polytope_volume(const std::vector<std::vector<int>>& a, std::vector<double>& budget,
                       size_t k, double tol) {
  if (k == a.size()) return 1.0;
  double ub = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < budget.size(); ++j)
    if (a[k][j]) ub = std::min(ub, budget[j]);
  if (ub <= 0.0) return 0.0;
  auto f = [&](double t) {
    std::vector<double> b = budget;
    for (size_t j = 0; j < b.size(); ++j)
      if (a[k][j]) b[j] -= t;
    return polytope_volume(a, b, k + 1, tol);
  };
  return integrate_adaptive_1d(f, 0.0, ub, tol, 16);
}

bool weakly_decreasing(const Vec& h, double tol) {
  for (int i = 0; i + 1 < h.size(); ++i)
    if (h[i] < h[i + 1] - tol) return false;
  return true;
}

}  // namespace

double t_fun(const RootData& rd, const Vec& v, double tol_trace) {
  if (v.size() != rd.n) throw std::invalid_argument("t_fun: dimension mismatch");
  double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if (std::abs(v.sum()) > tol_trace * scale)
    throw std::invalid_argument("t_fun: input is not trace-zero");
  Vec y = simple_root_coordinates(v);
  if (rd.n == 2) return y[0] >= 0.0 ? 1.0 : 0.0;
  if (rd.n == 3) return std::max(0.0, std::min(y[0], y[1]));
  std::vector<double> budget(y.data(), y.data() + y.size());
  for (double b : budget)
    if (b < 0.0) return 0.0;
  return polytope_volume(rd.expansion, budget, 0, 1e-10);
}

double density_k(const RootData& rd, const Vec& x, const Vec& y, const Vec& h) {
  const int n = rd.n;
  if (x.size() != n || y.size() != n || h.size() != n)
    throw std::invalid_argument("density_k: dimension mismatch");
  double px = vandermonde(x), py = vandermonde(y);
  if (std::abs(px) < kRegularTol || std::abs(py) < kRegularTol)
    throw std::domain_error("density_k: x and y must be regular");
  double scale = std::max(1.0, x.cwiseAbs().maxCoeff() + y.cwiseAbs().maxCoeff());
  if (std::abs(h.sum() - x.sum() - y.sum()) > 1e-8 * scale)
    throw std::invalid_argument("density_k: h is off the support plane");
  if (!weakly_decreasing(h, 1e-12)) return 0.0;

  const PermTable& pt = perm_table(n);
  const size_t np = pt.perms.size();
  double sum = 0.0;
  Vec s(n);
  for (size_t a = 0; a < np; ++a) {
    const auto& v = pt.perms[a];
    for (size_t b = 0; b < np; ++b) {
      const auto& w = pt.perms[b];
      for (int i = 0; i < n; ++i) s[i] = y[v[i]] + x[w[i]] - h[i];
      s.array() -= s.mean();  // remove trace round-off before the cone test
      sum += double(pt.signs[a] * pt.signs[b]) * t_fun(rd, s);
    }
  }
  return vandermonde(rd.rho) * vandermonde(h) / (px * py) * sum;
}

bool SupportRegion::contains(const Vec& h, double tol) const {
  return orbit_hull_contains(h - y, x, tol);
}

SupportRegion support_bound(const RootData& rd, const Vec& x, const Vec& y) {
  const PermTable& pt = perm_table(rd.n);
  Vec vtx(rd.n);
  for (const auto& w : pt.perms) {
    for (int i = 0; i < rd.n; ++i) vtx[i] = y[i] + x[w[i]];
    if (!weakly_decreasing(vtx, 1e-10))
      throw std::runtime_error("support_bound: y + C(x) is not contained in the chamber");
  }
  return SupportRegion{x, y};
}

TranslationDensity::TranslationDensity(const RootData& rd_, const Vec& x_, const Vec& y_)
    : rd(rd_), x(x_), y(y_) {
  const int n = rd.n;
  if (std::abs(vandermonde(x)) < kRegularTol || std::abs(vandermonde(y)) < kRegularTol)
    throw std::domain_error("TranslationDensity: x and y must be regular");
  offset = Vec::Constant(n, (x.sum() + y.sum()) / n);
  // spectra of sums are majorized by x + y, so the support lies in the orbit
  // hull of (x + y)^0; bound its simple-root coordinates by extreme partial sums
  Vec s = x + y;  // both sorted descending
  Vec s0 = s - Vec::Constant(n, s.mean());
  box_lo = Vec(n - 1);
  box_hi = Vec(n - 1);
  double hi = 0.0, lo = 0.0;
  for (int j = 0; j < n - 1; ++j) {
    hi += s0[j];
    lo += s0[n - 1 - j];
    box_hi[j] = hi;
    box_lo[j] = lo;
  }
}

Vec TranslationDensity::point(const Vec& yc) const {
  const int n = rd.n;
  Vec h = offset;
  h[0] += yc[0];
  for (int i = 1; i < n - 1; ++i) h[i] += yc[i] - yc[i - 1];
  h[n - 1] -= yc[n - 2];
  return h;
}

double TranslationDensity::at(const Vec& yc) const { return density_k(rd, x, y, point(yc)); }

double TranslationDensity::integrate(const std::function<double(const Vec&)>& f,
                                     double tol) const {
  const int n = rd.n;
  if (n == 2) {
    return integrate_adaptive_1d(
        [&](double t) {
          Vec yc(1);
          yc[0] = t;
          Vec h = point(yc);
          double k = density_k(rd, x, y, h);
          return k == 0.0 ? 0.0 : k * f(h);
        },
        box_lo[0], box_hi[0], tol, 32);
  }
  if (n == 3) {
    return integrate_adaptive_2d(
        [&](double t1, double t2) {
          Vec yc(2);
          yc[0] = t1;
          yc[1] = t2;
          Vec h = point(yc);
          double k = density_k(rd, x, y, h);
          return k == 0.0 ? 0.0 : k * f(h);
        },
        box_lo[0], box_hi[0], box_lo[1], box_hi[1], tol, 24);
  }
  throw std::runtime_error("TranslationDensity::integrate: rank > 3 not supported");
}

double TranslationDensity::integral(double tol) const {
  return integrate([](const Vec&) { return 1.0; }, tol);
}

double translate_density(const RootData& rd, const std::function<double(const Vec&)>& f,
                         const Vec& x, const Vec& y, double tol) {
  return TranslationDensity(rd, x, y).integrate(f, tol);
}

Complex translate_density_c(const RootData& rd, const std::function<Complex(const Vec&)>& f,
                            const Vec& x, const Vec& y, double tol) {
  TranslationDensity td(rd, x, y);
  double re = td.integrate([&](const Vec& h) { return f(h).real(); }, tol);
  double im = td.integrate([&](const Vec& h) { return f(h).imag(); }, tol);
  return {re, im};
}

McRealEstimate translate_mc(const std::function<double(const Vec&)>& f, const Vec& x, const Vec& y,
                            long samples, std::uint64_t seed) {
  const int n = static_cast<int>(x.size());
  Rng rng(seed);
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) X(i, i) = x[i];
  double sum = 0.0, sum2 = 0.0;
  for (long s = 0; s < samples; ++s) {
    Eigen::MatrixXcd U = haar_unitary(n, rng);
    Eigen::MatrixXcd H = X + U * y.asDiagonal() * U.adjoint();
    double v = f(ordered_spectrum(H));
    sum += v;
    sum2 += v * v;
  }
  double mean = sum / samples;
  double var = std::max(0.0, sum2 / samples - mean * mean);
  return {mean, std::sqrt(var / samples)};
}

McEstimate translate_mc_c(const std::function<Complex(const Vec&)>& f, const Vec& x, const Vec& y,
                          long samples, std::uint64_t seed) {
  const int n = static_cast<int>(x.size());
  Rng rng(seed);
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) X(i, i) = x[i];
  Complex sum = 0.0;
  double s_re2 = 0.0, s_im2 = 0.0;
  for (long s = 0; s < samples; ++s) {
    Eigen::MatrixXcd U = haar_unitary(n, rng);
    Eigen::MatrixXcd H = X + U * y.asDiagonal() * U.adjoint();
    Complex v = f(ordered_spectrum(H));
    sum += v;
    s_re2 += v.real() * v.real();
    s_im2 += v.imag() * v.imag();
  }
  Complex mean = sum / double(samples);
  double var = std::max(0.0, s_re2 / samples - mean.real() * mean.real()) +
               std::max(0.0, s_im2 / samples - mean.imag() * mean.imag());
  return {mean, std::sqrt(var / samples)};
}

namespace {

// (1/n!) int_{[-R,R]^n} F(sort(x)) w(x) dx, skipping the measure-zero diagonal
double chamber_quadrature(const RootData& rd, const std::function<double(const Vec&)>& F, double R,
                          int npts) {
  const int n = rd.n;
  std::vector<double> xs, ws;
  gauss_legendre_mapped(npts, -R, R, xs, ws);
  double fn = 1.0;
  for (int k = 2; k <= n; ++k) fn *= k;
  double total = 0.0;
  std::vector<int> idx(n, 0);
  Vec pt(n);
  while (true) {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
      pt[d] = xs[idx[d]];
      w *= ws[idx[d]];
    }
    Vec sorted = ChamberPoint::from(pt).coords;
    double p = vandermonde(sorted);
    if (std::abs(p) > 1e-9) total += w * p * p * F(sorted);
    int d = n - 1;
    while (d >= 0 && ++idx[d] == npts) idx[d--] = 0;
    if (d < 0) break;
  }
  return total / fn;
}

}  // namespace

double adjoint_residual(const RootData& rd, const std::function<double(const Vec&)>& f,
                        const std::function<double(const Vec&)>& g, const Vec& y, double R,
                        int npts) {
  Vec ybar = chamber_involution(y);
  double lhs = chamber_quadrature(
      rd, [&](const Vec& xx) { return translate_density(rd, f, xx, y, 1e-9) * g(xx); }, R, npts);
  double rhs = chamber_quadrature(
      rd, [&](const Vec& xx) { return f(xx) * translate_density(rd, g, xx, ybar, 1e-9); }, R,
      npts);
  return std::abs(lhs - rhs);
}

std::pair<double, double> translate_norms(const RootData& rd,
                                          const std::function<double(const Vec&)>& f, const Vec& y,
                                          double R, int npts) {
  double tf2 = chamber_quadrature(
      rd,
      [&](const Vec& xx) {
        double v = translate_density(rd, f, xx, y, 1e-9);
        return v * v;
      },
      R, npts);
  double f2 = chamber_quadrature(rd, [&](const Vec& xx) { return f(xx) * f(xx); }, R, npts);
  return {std::sqrt(std::max(0.0, tf2)), std::sqrt(std::max(0.0, f2))};
}

}  // namespace rmra

#include "radialmra/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rmra {

RootData RootData::make(int n) {
  if (n < 2) throw std::invalid_argument("RootData: rank must be >= 2");
  RootData rd;
  rd.n = n;
  rd.q = n * (n - 1) / 2;
  rd.m = 2 * n * n - n;
  for (int i = 0; i + 1 < n; ++i) {
    Vec a = Vec::Zero(n);
    a[i] = 1.0;
    a[i + 1] = -1.0;
    rd.simple_roots.push_back(a);
    rd.positive_roots.push_back(a);
  }
  // non-simple positive roots e_i - e_j (j > i+1), ordered by (i, j);
  // e_i - e_j = alpha_i + ... + alpha_{j-1}
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 0; i + gap < n; ++i) {
      int j = i + gap;
      Vec a = Vec::Zero(n);
      a[i] = 1.0;
      a[j] = -1.0;
      rd.positive_roots.push_back(a);
      std::vector<int> coeff(n - 1, 0);
      for (int k = i; k < j; ++k) coeff[k] = 1;
      rd.expansion.push_back(coeff);
    }
  }
  rd.rho = Vec::Zero(n);
  rd.delta_vec = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    rd.rho[i] = 0.5 * (n - 1 - 2 * i);
    rd.delta_vec[i] = n - 1 - i;
  }
  return rd;
}

double RootData::fact_prod() const {
  double p = 1.0;
  for (int k = 1; k < n; ++k) p *= std::tgamma(k + 1.0);
  return p;
}

LatticePair LatticePair::make(int n) {
  LatticePair lp;
  lp.n = n;
  const double pi = M_PI;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec p = Vec::Zero(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) p[i] = pi;
    lp.coset_reps.push_back(p);
  }
  return lp;
}

ChamberPoint ChamberPoint::from(const Vec& x) {
  ChamberPoint cp;
  cp.coords = x;
  std::stable_sort(cp.coords.data(), cp.coords.data() + cp.coords.size(),
                   std::greater<double>());
  return cp;
}

bool ChamberPoint::in_chamber(double tol) const {
  for (int i = 0; i + 1 < coords.size(); ++i)
    if (coords[i] < coords[i + 1] - tol) return false;
  return true;
}

bool ChamberPoint::regular(double tol) const {
  for (int i = 0; i + 1 < coords.size(); ++i)
    if (coords[i] - coords[i + 1] <= tol) return false;
  return true;
}

double vandermonde(const Vec& x) {
  double p = 1.0;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) p *= x[i] - x[j];
  return p;
}

Complex vandermonde(const CVec& z) {
  Complex p = 1.0;
  for (int i = 0; i < z.size(); ++i)
    for (int j = i + 1; j < z.size(); ++j) p *= z[i] - z[j];
  return p;
}

double weight_omega(const Vec& x) {
  double p = vandermonde(x);
  return p * p;
}

Complex weyl_denominator(const Vec& x) {
  Complex p = 1.0;
  const Complex I(0.0, 1.0);
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) {
      double t = 0.5 * (x[i] - x[j]);
      p *= Complex(0.0, 2.0 * std::sin(t));
    }
  (void)I;
  return p;
}

Complex phase_alpha(const Vec& x) {
  double s = x.sum();
  double arg = -0.5 * (x.size() - 1) * s;
  return std::polar(1.0, arg);
}

Complex alternant(const Vec& mu, const Vec& x) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXcd M(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) M(j, k) = std::polar(1.0, mu[j] * x[k]);
  return M.determinant();
}

std::pair<Vec, Vec> project_trace(const Vec& x) {
  double mean = x.mean();
  Vec x1 = Vec::Constant(x.size(), mean);
  Vec x0 = x - x1;
  return {x0, x1};
}

bool orbit_hull_contains(const Vec& h, const Vec& x, double tol) {
  if (h.size() != x.size())
    throw std::invalid_argument("orbit_hull_contains: dimension mismatch");
  // h in conv(S_n.x)  <=>  sum h = sum x and sorted(h) is majorized by sorted(x)
  if (std::abs(h.sum() - x.sum()) > tol) return false;
  Vec hs = ChamberPoint::from(h).coords;
  Vec xs = ChamberPoint::from(x).coords;
  double ph = 0.0, px = 0.0;
  for (int k = 0; k + 1 < h.size(); ++k) {
    ph += hs[k];
    px += xs[k];
    if (ph > px + tol) return false;
  }
  return true;
}

bool dual_cone_contains(const Vec& v, double tol, double tol_trace) {
  if (std::abs(v.sum()) > tol_trace * std::max(1.0, v.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("dual_cone_contains: input is not trace-zero");
  Vec y = simple_root_coordinates(v);
  for (int j = 0; j < y.size(); ++j)
    if (y[j] < -tol) return false;
  return true;
}

Vec simple_root_coordinates(const Vec& v) {
  Vec y(v.size() - 1);
  double s = 0.0;
  for (int j = 0; j + 1 < v.size(); ++j) {
    s += v[j];
    y[j] = s;
  }
  return y;
}

Vec chamber_involution(const Vec& x) {
  Vec y(x.size());
  for (int i = 0; i < x.size(); ++i) y[i] = -x[x.size() - 1 - i];
  return y;
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  if (n > 6) throw std::invalid_argument("for_each_permutation: capped at n <= 6");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int sign = 1;
  fn(perm, sign);
  // Heap's algorithm, iterative
  std::vector<int> c(n, 0);
  int i = 0;
  while (i < n) {
    if (c[i] < i) {
      if (i % 2 == 0)
        std::swap(perm[0], perm[i]);
      else
        std::swap(perm[c[i]], perm[i]);
      sign = -sign;
      fn(perm, sign);
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

}  // namespace rmra

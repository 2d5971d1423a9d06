#include "radialmra/special.hpp"

#include <algorithm>
#include <cmath>

namespace rmra {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

Vec Partition::plus_rho(const RootData& rd) const {
  if (size() != rd.n) throw std::invalid_argument("Partition: length mismatch");
  Vec v = rd.rho;
  for (int i = 0; i < rd.n; ++i) v[i] += parts[i];
  return v;
}

Vec Partition::plus_delta(const RootData& rd) const {
  if (size() != rd.n) throw std::invalid_argument("Partition: length mismatch");
  Vec v = rd.delta_vec;
  for (int i = 0; i < rd.n; ++i) v[i] += parts[i];
  return v;
}

std::vector<Partition> Partition::enumerate(int n, int max_weight) {
  std::vector<Partition> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int, int)> rec = [&](int pos, int remaining, int cap) {
    if (pos == n) {
      out.push_back(Partition(cur));
      return;
    }
    for (int v = 0; v <= std::min(cap, remaining); ++v) {
      cur[pos] = v;
      rec(pos + 1, remaining - v, v);
    }
    cur[pos] = 0;
  };
  rec(0, max_weight, max_weight);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts > b.parts;
  });
  return out;
}

namespace {

constexpr double kGapThreshold = 1e-4;
constexpr double kTieThreshold = 1e-13;

double min_gap(const Vec& x) {
  double g = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) g = std::min(g, std::abs(x[i] - x[j]));
  return g;
}

double min_gap(const CVec& z) {
  double g = std::numeric_limits<double>::infinity();
  for (int i = 0; i < z.size(); ++i)
    for (int j = i + 1; j < z.size(); ++j) g = std::min(g, std::abs(z[i] - z[j]));
  return g;
}

// Hermite/Newton divided difference over real nodes xs (sorted, exact ties
// adjacent) of t -> t^k e^{t u}. Returns the full top row (orders 1..len).
// d^j/dt^j [t^k e^{tu}] = sum_{m<=min(j,k)} C(j,m) k!/(k-m)! t^{k-m} u^{j-m} e^{tu}
Complex tk_exp_derivative(int k, Complex u, double t, int j) {
  Complex s = 0.0;
  double binom = 1.0;
  double fall = 1.0;  // k!/(k-m)!
  for (int m = 0; m <= std::min(j, k); ++m) {
    Complex up = (j - m == 0) ? Complex(1.0) : std::pow(u, j - m);
    s += binom * fall * std::pow(t, k - m) * up;
    binom *= double(j - m) / double(m + 1);
    fall *= double(k - m);
  }
  return s * std::exp(t * u);
}

// dd over xs[0..len-1] of t -> t^k e^{tu}; returns vector r with
// r[i] = f[x_0 .. x_i].
std::vector<Complex> dd_tk_exp(const std::vector<double>& xs, int len, int k, Complex u) {
  // table[a] holds f[x_a .. x_{a+level}] at each level
  std::vector<Complex> table(len);
  std::vector<Complex> top(len);
  for (int a = 0; a < len; ++a) table[a] = tk_exp_derivative(k, u, xs[a], 0);
  top[0] = table[0];
  std::vector<double> factinv(len, 1.0);
  for (int lvl = 1; lvl < len; ++lvl) {
    for (int a = 0; a + lvl < len; ++a) {
      double dx = xs[a + lvl] - xs[a];
      if (std::abs(dx) < kTieThreshold) {
        double fact = 1.0;
        for (int t = 2; t <= lvl; ++t) fact *= t;
        table[a] = tk_exp_derivative(k, u, xs[a], lvl) / fact;
      } else {
        table[a] = (table[a + 1] - table[a]) / dx;
      }
    }
    top[lvl] = table[0];
  }
  return top;
}

}  // namespace

namespace detail {

Complex hciz_direct(const RootData& rd, const Vec& x, const CVec& z) {
  const int n = rd.n;
  Complex sum = 0.0, comp = 0.0;  // Kahan
  for_each_permutation(n, [&](const std::vector<int>& w, int sign) {
    Complex e = 0.0;
    for (int i = 0; i < n; ++i) e += x[w[i]] * z[i];
    Complex term = double(sign) * std::exp(e);
    Complex t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  });
  sum += comp;
  return rd.fact_prod() * sum / (vandermonde(x) * vandermonde(z));
}

Complex hciz_divided_difference(const RootData& rd, const Vec& x, const CVec& z) {
  const int n = rd.n;
  // sort x ascending (ties adjacent); sort z lexicographically by (re, im)
  std::vector<double> xs(x.data(), x.data() + n);
  std::sort(xs.begin(), xs.end());
  std::vector<Complex> zs(z.data(), z.data() + n);
  std::sort(zs.begin(), zs.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  // Stage 1: D(i, j) = (t -> e^{t zs_j}) [x_0 .. x_i]
  Eigen::MatrixXcd D(n, n);
  for (int j = 0; j < n; ++j) {
    auto col = dd_tk_exp(xs, n, 0, zs[j]);
    for (int i = 0; i < n; ++i) D(i, j) = col[i];
  }

  // Stage 2: per row i, divided differences across the z nodes. A tie of
  // order k in z needs (1/k!) d^k/du^k of the row function, which is the
  // x-divided difference of t^k e^{tu} / k!.
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Complex> table(n);
    for (int a = 0; a < n; ++a) table[a] = D(i, a);
    G(i, 0) = table[0];
    for (int lvl = 1; lvl < n; ++lvl) {
      for (int a = 0; a + lvl < n; ++a) {
        Complex dz = zs[a + lvl] - zs[a];
        if (std::abs(dz) < kTieThreshold) {
          double fact = 1.0;
          for (int t = 2; t <= lvl; ++t) fact *= t;
          auto col = dd_tk_exp(xs, n, lvl, zs[a]);
          table[a] = col[i] / fact;
        } else {
          table[a] = (table[a + 1] - table[a]) / dz;
        }
      }
      G(i, lvl) = table[0];
    }
  }
  return rd.fact_prod() * G.determinant();
}

Complex schur_homogeneous(const RootData& rd, const Partition& lambda, const Vec& x) {
  const int n = rd.n;
  std::vector<Complex> u(n);
  for (int k = 0; k < n; ++k) u[k] = std::polar(1.0, x[k]);
  const Vec mu = lambda.plus_delta(rd);
  const int mmax = static_cast<int>(mu[0]) + 1;
  // H(i, m) = h_m(u_0..u_{i-1}); recurrence H(i,m) = H(i-1,m) + u_{i-1} H(i,m-1)
  std::vector<std::vector<Complex>> H(n + 1, std::vector<Complex>(mmax + 1, 0.0));
  H[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    H[i][0] = 1.0;
    for (int m = 1; m <= mmax; ++m) H[i][m] = H[i - 1][m] + u[i - 1] * H[i][m - 1];
  }
  auto det_of = [&](const Vec& expo) {
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int m = static_cast<int>(expo[j]) - i;
        M(i, j) = (m < 0) ? Complex(0.0) : H[i + 1][m];
      }
    return M.determinant();
  };
  return det_of(mu) / det_of(rd.delta_vec);
}

}  // namespace detail

Complex bessel_j(const RootData& rd, const Vec& x, const CVec& z) {
  if (x.size() != rd.n || z.size() != rd.n)
    throw std::invalid_argument("bessel_j: dimension mismatch");
  CVec xc = x.cast<Complex>();
  if (min_gap(x) >= kGapThreshold && min_gap(z) >= kGapThreshold)
    return detail::hciz_direct(rd, x, z);
  return detail::hciz_divided_difference(rd, x, z);
}

Complex bessel_j_iy(const RootData& rd, const Vec& x, const Vec& y) {
  CVec z(y.size());
  for (int i = 0; i < y.size(); ++i) z[i] = Complex(0.0, y[i]);
  return bessel_j(rd, x, z);
}

Complex schur_s_raw(const RootData& rd, const Partition& lambda, const Vec& x) {
  // degeneracy measured on the unit circle: u_i close to u_j
  double g = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      g = std::min(g, std::abs(std::polar(1.0, x[i]) - std::polar(1.0, x[j])));
  if (g >= kGapThreshold)
    return alternant(lambda.plus_delta(rd), x) / alternant(rd.delta_vec, x);
  return detail::schur_homogeneous(rd, lambda, x);
}

Complex schur_s(const RootData& rd, const Partition& lambda, const Vec& x) {
  Complex iq = std::pow(Complex(0.0, 1.0), rd.q);
  double fn = std::tgamma(rd.n + 1.0);
  return schur_s_raw(rd, lambda, x) / (iq * std::sqrt(fn));
}

double m_lambda(const RootData& rd, const Partition& lambda) {
  double fn = std::tgamma(rd.n + 1.0);
  return vandermonde(lambda.plus_rho(rd)) / (std::sqrt(fn) * rd.fact_prod());
}

double m_lambda(const RootData& rd, const Vec& lambda) {
  double fn = std::tgamma(rd.n + 1.0);
  return vandermonde(Vec(lambda + rd.rho)) / (std::sqrt(fn) * rd.fact_prod());
}

std::vector<Vec> dominant_weights(int n, int max_abs) {
  std::vector<Vec> out;
  Vec cur(n);
  auto rec = [&](auto&& self, int pos, int hi) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = hi; v >= -max_abs; --v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, max_abs);
  return out;
}

double bessel_schur_residual(const RootData& rd, const Partition& lambda, const Vec& x,
                             double delta_threshold) {
  Complex delta = weyl_denominator(x);
  if (std::abs(delta) < delta_threshold)
    throw std::domain_error("bessel_schur_residual: Delta(x) below threshold");
  Complex lhs = schur_s(rd, lambda, x);
  Complex rhs = m_lambda(rd, lambda) * (vandermonde(x) / delta) *
                bessel_j_iy(rd, x, lambda.plus_rho(rd));
  return std::abs(lhs - rhs);
}

}  // namespace rmra

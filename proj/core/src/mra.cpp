#include "radialmra/mra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "radialmra/quadrature.hpp"

#include "../../vendor/json.hpp"

namespace rmra {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

double wrap_pm_pi(double x) {
  double r = std::fmod(x + M_PI, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r - M_PI;
}

Vec wrap_2pi(const Vec& x) {
  Vec r(x.size());
  for (int i = 0; i < x.size(); ++i) r[i] = wrap_2pi(x[i]);
  return r;
}

Vec wrap_pm_pi(const Vec& x) {
  Vec r(x.size());
  for (int i = 0; i < x.size(); ++i) r[i] = wrap_pm_pi(x[i]);
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Tensor Gauss-Legendre integral over [-b, b]^n of w(xi) omega(xi) f(xi),
/// scaled by (2pi)^{-n} / n!: the frequency-side inner-product measure.
Complex freq_integral(int n, double b, int npts, const std::function<Complex(const Vec&)>& f) {
  std::vector<double> xs, ws;
  gauss_legendre_mapped(npts, -b, b, xs, ws);
  std::vector<int> idx(n, 0);
  Vec xi(n);
  Complex acc = 0.0;
  for (;;) {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
      xi[d] = xs[idx[d]];
      w *= ws[idx[d]];
    }
    acc += w * weight_omega(xi) * f(xi);
    int d = n - 1;
    while (d >= 0 && ++idx[d] == npts) idx[d--] = 0;
    if (d < 0) break;
  }
  return acc * std::pow(kTwoPi, -n) / factorial(n);
}

Complex freq_inner(int n, double b, int npts, const std::function<Complex(const Vec&)>& A,
                   const std::function<Complex(const Vec&)>& B) {
  return freq_integral(n, b, npts, [&](const Vec& xi) { return A(xi) * std::conj(B(xi)); });
}

/// Frequency profile of phi_{0,lambda} = M_lambda T^(lambda) phi at xi:
/// M_lambda J(xi, i(lambda+rho)) F(xi).
Complex level0_profile(const RootData& rd, const Partition& lambda, const FrequencyProfile& F,
                       const Vec& xi) {
  return m_lambda(rd, lambda) * bessel_j_iy(rd, xi, lambda.plus_rho(rd)) * F(xi);
}

Complex level0_profile(const RootData& rd, const Vec& lambda, const FrequencyProfile& F,
                       const Vec& xi) {
  return m_lambda(rd, lambda) * bessel_j_iy(rd, xi, Vec(lambda + rd.rho)) * F(xi);
}

bool weakly_decreasing(const Vec& x) {
  for (int i = 0; i + 1 < x.size(); ++i)
    if (x[i] < x[i + 1]) return false;
  return true;
}

}  // namespace

TorusGrid TorusGrid::make(int n, int npts) {
  if (n < 1 || npts < 1) throw std::invalid_argument("TorusGrid: bad dimensions");
  TorusGrid g;
  g.n = n;
  g.npts = npts;
  return g;
}

long TorusGrid::size() const {
  long s = 1;
  for (int d = 0; d < n; ++d) s *= npts;
  return s;
}

Vec TorusGrid::point(long idx) const {
  Vec x(n);
  for (int d = n - 1; d >= 0; --d) {
    x[d] = (idx % npts + 0.5) * kTwoPi / npts;
    idx /= npts;
  }
  return x;
}

double TorusGrid::cell() const { return std::pow(static_cast<double>(npts), -n); }

double periodization_at(const RootData& rd, const FrequencyProfile& F, const Vec& xi,
                        double lattice_radius, double tail_tol) {
  const int n = rd.n;
  Vec x0 = wrap_2pi(xi);
  std::vector<int> lo(n), hi(n), l(n);
  for (int d = 0; d < n; ++d) {
    lo[d] = static_cast<int>(std::ceil((-lattice_radius - x0[d]) / kTwoPi));
    hi[d] = static_cast<int>(std::floor((lattice_radius - x0[d]) / kTwoPi));
    if (lo[d] > hi[d]) throw std::invalid_argument("periodization: lattice radius too small");
    l[d] = lo[d];
  }
  double sum = 0.0;
  Vec pt(n);
  for (;;) {
    bool shell = false;
    for (int d = 0; d < n; ++d) {
      pt[d] = x0[d] + kTwoPi * l[d];
      if (l[d] == lo[d] || l[d] == hi[d]) shell = true;
    }
    double a2 = std::norm(F(pt));
    if (shell && a2 > tail_tol)
      throw std::runtime_error("periodization: profile tail above tolerance");
    sum += a2;
    int d = n - 1;
    while (d >= 0 && ++l[d] > hi[d]) l[d--] = lo[d];
    if (d < 0) break;
  }
  return sum / factorial(n);
}

PeriodicSymmetricFunction periodization(const RootData& rd, const FrequencyProfile& F,
                                        double lattice_radius, double tail_tol) {
  PeriodicSymmetricFunction P;
  P.n = rd.n;
  P.eval = [rd, F, lattice_radius, tail_tol](const Vec& xi) -> Complex {
    return periodization_at(rd, F, xi, lattice_radius, tail_tol);
  };
  return P;
}

std::pair<double, double> riesz_bounds(ScalingFunction& phi, int torus_npts) {
  TorusGrid g = TorusGrid::make(phi.rd.n, torus_npts);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  const long N = g.size();
  for (long i = 0; i < N; ++i) {
    Vec x = g.point(i);
    if (!weakly_decreasing(x)) continue;  // P is symmetric; one chamber suffices
    double p = periodization_at(phi.rd, phi.freq, x, phi.lattice_radius);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  phi.riesz_A = lo;
  phi.riesz_B = hi;
  return {lo, hi};
}

ScalingFunction orthonormalize(ScalingFunction phi, int torus_npts, double rb_tol) {
  auto [A, B] = riesz_bounds(phi, torus_npts);
  if (!(A > rb_tol) || !std::isfinite(B))
    throw std::runtime_error("orthonormalize: Riesz bounds degenerate");
  ScalingFunction out = phi;
  RootData rd = phi.rd;
  FrequencyProfile F = phi.freq;
  double lr = phi.lattice_radius;
  out.freq.eval = [rd, F, lr](const Vec& xi) -> Complex {
    double p = periodization_at(rd, F, xi, lr);
    return p > 0 ? F(xi) / std::sqrt(p) : Complex(0.0);
  };
  out.riesz_A = out.riesz_B = -1.0;
  return out;
}

Eigen::MatrixXcd gram_matrix(const ScalingFunction& phi, const std::vector<Partition>& lambdas,
                             int torus_npts) {
  const RootData& rd = phi.rd;
  TorusGrid g = TorusGrid::make(rd.n, torus_npts);
  const long N = g.size();
  const int L = static_cast<int>(lambdas.size());
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(L, L);
  Eigen::MatrixXcd S(N, L);
  Eigen::VectorXd kern(N);
  for (long i = 0; i < N; ++i) {
    Vec x = g.point(i);
    kern[i] = std::norm(weyl_denominator(x)) *
              periodization_at(rd, phi.freq, x, phi.lattice_radius) * g.cell();
    for (int a = 0; a < L; ++a) S(i, a) = schur_s(rd, lambdas[a], x);
  }
  for (int a = 0; a < L; ++a)
    for (int b = a; b < L; ++b) {
      Complex acc = 0.0;
      for (long i = 0; i < N; ++i) acc += kern[i] * S(i, a) * std::conj(S(i, b));
      M(a, b) = acc;
      if (b != a) M(b, a) = std::conj(acc);
    }
  return M;
}

TwoScaleResult two_scale_check(const ScalingFunction& phi, int torus_npts, double denom_tol) {
  const RootData rd = phi.rd;
  const FrequencyProfile F = phi.freq;
  auto gamma_at = [rd, F, denom_tol](const Vec& xi) -> Complex {
    Vec t = wrap_pm_pi(xi);
    Complex den = weyl_denominator(t) * F(t);
    if (std::abs(den) < denom_tol)
      return Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    return weyl_denominator(2.0 * t) * F(2.0 * t) / den;
  };
  TwoScaleResult res;
  res.gamma.n = rd.n;
  res.gamma.eval = gamma_at;

  TorusGrid g = TorusGrid::make(rd.n, torus_npts);
  const long N = g.size();
  long defined = 0;
  double rel = 0.0, sym = 0.0;
  // lattice shifts probing I-periodicity of the extracted symbol
  std::vector<Vec> shifts;
  for (int mask = 0; mask < (1 << rd.n); ++mask) {
    Vec s = Vec::Zero(rd.n);
    for (int d = 0; d < rd.n; ++d)
      if (mask & (1 << d)) s[d] = kTwoPi;
    shifts.push_back(s);
  }
  for (long i = 0; i < N; ++i) {
    Vec x = g.point(i);
    Complex gv = gamma_at(x);
    if (std::isnan(gv.real())) continue;
    ++defined;
    for (const Vec& s : shifts) {
      Vec xs = x + s;
      double r = std::abs(weyl_denominator(2.0 * xs) * F(2.0 * xs) -
                          gv * weyl_denominator(xs) * F(xs));
      rel = std::max(rel, r);
    }
    if (rd.n >= 2) {
      Vec xw = x;
      std::swap(xw[0], xw[rd.n - 1]);
      Complex gw = gamma_at(xw);
      if (!std::isnan(gw.real())) sym = std::max(sym, std::abs(gw - gv));
    }
  }
  res.defined_fraction = static_cast<double>(defined) / static_cast<double>(N);
  res.relation_residual = rel;
  res.symmetry_residual = sym;
  return res;
}

Complex two_scale_constant(const RootData& rd) {
  // 2^{q - e} i^q sqrt(n!) with the unitary dilation exponent e = n^2/2,
  // so 2^{q - n^2/2} = 2^{-n/2}.
  Complex iq = std::pow(Complex(0.0, 1.0), rd.q);
  return std::pow(2.0, -0.5 * rd.n) * iq * std::sqrt(factorial(rd.n));
}

std::pair<std::vector<Complex>, std::vector<Complex>> two_scale_coefficients(
    const ScalingFunction& phi, const std::vector<Partition>& lambdas, double support_radius,
    int quad_npts, int torus_npts) {
  const RootData& rd = phi.rd;
  TwoScaleResult ts = two_scale_check(phi, torus_npts);
  TorusGrid g = TorusGrid::make(rd.n, torus_npts);
  const long N = g.size();
  std::vector<Complex> a(lambdas.size(), 0.0);
  for (long i = 0; i < N; ++i) {
    Vec x = g.point(i);
    Complex gv = ts.gamma(x);
    if (std::isnan(gv.real())) continue;
    double kern = std::norm(weyl_denominator(x)) * g.cell();
    for (size_t k = 0; k < lambdas.size(); ++k)
      a[k] += kern * gv * std::conj(schur_s(rd, lambdas[k], x));
  }
  // alpha_lambda = <phi_{-1,0}, phi_{0,lambda}>; phi_{-1,0} has profile
  // 2^{n^2/2} M_0 J(2 xi, i rho) F(2 xi), supported in half the box.
  const FrequencyProfile F = phi.freq;
  Partition zero(std::vector<int>(rd.n, 0));
  auto coarse = [&](const Vec& xi) -> Complex {
    return std::pow(2.0, 0.5 * rd.n * rd.n) * level0_profile(rd, zero, F, 2.0 * xi);
  };
  std::vector<Complex> alpha(lambdas.size(), 0.0);
  for (size_t k = 0; k < lambdas.size(); ++k) {
    const Partition& lam = lambdas[k];
    alpha[k] = freq_inner(
        rd.n, 0.5 * support_radius, quad_npts, coarse,
        [&](const Vec& xi) -> Complex { return level0_profile(rd, lam, F, xi); });
  }
  return {a, alpha};
}

FilterFunction filter_from(const ScalingFunction& phi, double denom_tol) {
  FilterFunction G;
  G.rd = phi.rd;
  const FrequencyProfile F = phi.freq;
  // Phase convention alpha(xi) * eta(xi~) keeps conj(alpha) G lattice-
  // periodic, which the completion construction relies on; the relation
  // F(2 xi) = G(xi) F(xi) only constrains G where xi = xi~, and there the
  // two phases coincide.
  G.G = [F, denom_tol](const Vec& xi) -> Complex {
    Vec t = wrap_pm_pi(xi);
    Complex den = F(t);
    if (std::abs(den) < denom_tol) return 0.0;
    return phase_alpha(xi) * std::conj(phase_alpha(t)) * F(2.0 * t) / den;
  };
  return G;
}

Complex delta_ratio(const Vec& xi, double pole_tol) {
  Complex den = weyl_denominator(2.0 * xi);
  if (std::abs(den) < pole_tol)
    throw std::domain_error("delta_ratio: pole of Delta(2x)");
  return weyl_denominator(xi) / den;
}

double qmf_check(const FilterFunction& G, const LatticePair& lat, int torus_npts) {
  const int n = G.rd.n;
  double dev = 0.0;
  // midpoint grid over the half cell [0, pi)^n
  std::vector<int> idx(n, 0);
  Vec xi(n);
  for (;;) {
    for (int d = 0; d < n; ++d) xi[d] = (idx[d] + 0.5) * M_PI / torus_npts;
    double s = 0.0;
    for (const Vec& p : lat.coset_reps) s += G.modulus2(xi + p);
    dev = std::max(dev, std::abs(s - 1.0));
    int d = n - 1;
    while (d >= 0 && ++idx[d] == torus_npts) idx[d--] = 0;
    if (d < 0) break;
  }
  return dev;
}

Eigen::MatrixXcd wavelet_matrix(const WaveletFamily& fam, const Vec& xi) {
  const int r = fam.lattice.r();
  if (static_cast<int>(fam.symbol.size()) != r)
    throw std::invalid_argument("wavelet_matrix: needs all 2^n symbols");
  Eigen::MatrixXcd M(r, r);
  for (int i = 0; i < r; ++i)
    for (int p = 0; p < r; ++p) M(i, p) = fam.symbol[i](xi + fam.lattice.coset_reps[p]);
  return M;
}

namespace {

/// Deterministic unitary with first row v (assumed unit). A row that is a
/// phase multiple of e0 completes to diag(v0, 1, .., 1); otherwise a single
/// Householder reflector.
Eigen::MatrixXcd unitary_completion(const Eigen::VectorXcd& v) {
  const int r = static_cast<int>(v.size());
  Eigen::VectorXcd rest = v;
  rest[0] = 0.0;
  if (rest.norm() < 1e-12) {
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(r, r);
    U(0, 0) = v[0];
    return U;
  }
  Eigen::VectorXcd u = v.conjugate();
  Complex s = std::abs(u[0]) > 1e-14 ? u[0] / std::abs(u[0]) : Complex(1.0);
  Eigen::VectorXcd w = u;
  w[0] += s;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Identity(r, r) -
                       2.0 / w.squaredNorm() * (w * w.adjoint());
  return -std::conj(s) * H;  // first row conj of first column of -sH, i.e. v
}

}  // namespace

WaveletFamily wavelet_construct(const ScalingFunction& phi, const FilterFunction& G,
                                double qmf_tol) {
  const RootData rd = phi.rd;
  LatticePair lat = LatticePair::make(rd.n);
  double dev = qmf_check(G, lat, 32);
  if (dev > qmf_tol)
    throw std::runtime_error("wavelet_construct: filter fails the squared-sum identity");

  const int n = rd.n;
  const int r = lat.r();
  auto Gfun = G.G;
  // eta^i at an arbitrary point: reduce to the canonical sorted cell point,
  // complete the eta^0 row to a unitary matrix there, and read off the entry
  // for this point's coset column.
  auto eta = [rd, lat, Gfun, n, r](const Vec& zeta) -> Eigen::VectorXcd {
    Vec r2 = wrap_2pi(zeta);
    Vec hat(n);
    std::vector<int> pbit(n);
    for (int d = 0; d < n; ++d) {
      pbit[d] = r2[d] >= M_PI ? 1 : 0;
      hat[d] = r2[d] - M_PI * pbit[d];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return hat[a] > hat[b]; });
    Vec c(n);
    int col = 0;
    for (int j = 0; j < n; ++j) {
      c[j] = hat[order[j]];
      if (pbit[order[j]]) col |= 1 << j;
    }
    Eigen::VectorXcd v(r);
    for (int t = 0; t < r; ++t) {
      Vec pt = c;
      for (int j = 0; j < n; ++j)
        if (t & (1 << j)) pt[j] += M_PI;
      v[t] = std::conj(phase_alpha(pt)) * Gfun(pt);  // eta^0 at the cell point
    }
    double nv = v.norm();
    if (nv > 0) v /= nv;
    Eigen::MatrixXcd U = unitary_completion(v);
    return U.col(col);
  };

  WaveletFamily fam;
  fam.rd = rd;
  fam.lattice = lat;
  fam.symbol.resize(r);
  fam.symbol[0].n = n;
  fam.symbol[0].eval = Gfun;  // b^0 = beta^0 delta = G exactly
  for (int i = 1; i < r; ++i) {
    fam.symbol[i].n = n;
    fam.symbol[i].eval = [eta, i](const Vec& zeta) -> Complex {
      return phase_alpha(zeta) * eta(zeta)[i];
    };
  }
  const FrequencyProfile F = phi.freq;
  fam.psi.resize(r - 1);
  for (int i = 1; i < r; ++i) {
    auto sym = fam.symbol[i].eval;
    fam.psi[i - 1].n = n;
    fam.psi[i - 1].eval = [sym, F](const Vec& zeta) -> Complex {
      Vec half = 0.5 * zeta;
      return sym(half) * F(half);
    };
  }
  return fam;
}

std::pair<ScalingFunction, WaveletFamily> shannon_family(int n, double kappa) {
  RootData rd = RootData::make(n);
  LatticePair lat = LatticePair::make(n);
  const double k = kappa < 0 ? std::sqrt(factorial(n)) : kappa;

  ScalingFunction phi;
  phi.rd = rd;
  phi.lattice = lat;
  phi.lattice_radius = 4.0 * M_PI;
  phi.freq_radius = M_PI;
  phi.freq.n = n;
  phi.freq.eval = [n, k](const Vec& xi) -> Complex {
    for (int d = 0; d < n; ++d)
      if (xi[d] < -M_PI || xi[d] >= M_PI) return 0.0;
    return k * phase_alpha(xi);
  };

  WaveletFamily fam;
  fam.rd = rd;
  fam.lattice = lat;
  fam.symbol.resize(lat.r());
  // chi_Q with Q the lattice union of half-size cubes, half-open for exact
  // tiling under the 2^n coset translates
  auto chi_q = [n](const Vec& xi) {
    Vec t = wrap_pm_pi(xi);
    for (int d = 0; d < n; ++d)
      if (t[d] < -0.5 * M_PI || t[d] >= 0.5 * M_PI) return false;
    return true;
  };
  fam.symbol[0].n = n;
  fam.symbol[0].eval = [chi_q](const Vec& xi) -> Complex {
    return chi_q(xi) ? phase_alpha(xi) : Complex(0.0);
  };
  const FrequencyProfile F = phi.freq;
  fam.psi.resize(lat.r() - 1);
  for (int i = 1; i < lat.r(); ++i) {
    Vec qi = lat.coset_reps[i];
    fam.symbol[i].n = n;
    fam.symbol[i].eval = [chi_q, qi](const Vec& xi) -> Complex {
      return chi_q(xi - qi) ? std::conj(phase_alpha(xi)) : Complex(0.0);
    };
    auto sym = fam.symbol[i].eval;
    fam.psi[i - 1].n = n;
    fam.psi[i - 1].eval = [sym, F](const Vec& zeta) -> Complex {
      Vec half = 0.5 * zeta;
      return sym(half) * F(half);
    };
  }
  return {phi, fam};
}

FilterFunction shannon_filter(int n) {
  FilterFunction G;
  G.rd = RootData::make(n);
  auto chi_q = [n](const Vec& xi) {
    Vec t = wrap_pm_pi(xi);
    for (int d = 0; d < n; ++d)
      if (t[d] < -0.5 * M_PI || t[d] >= 0.5 * M_PI) return false;
    return true;
  };
  G.G = [chi_q](const Vec& xi) -> Complex {
    return chi_q(xi) ? phase_alpha(xi) : Complex(0.0);
  };
  G.mod2 = [chi_q](const Vec& xi) -> double { return chi_q(xi) ? 1.0 : 0.0; };
  return G;
}

ScalingFunction classical_to_radial(int n, const std::function<Complex(const Vec&)>& hat_a,
                                    int torus_npts, double sym_tol, unsigned sym_seed) {
  // symmetry probe at a handful of pseudo-random points
  std::mt19937_64 gen(sym_seed);
  std::uniform_real_distribution<double> uni(-2.0 * M_PI, 2.0 * M_PI);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 32 && n >= 2; ++trial) {
    Vec x(n);
    for (int d = 0; d < n; ++d) x[d] = uni(gen);
    int i = pick(gen), j = pick(gen);
    if (i == j) j = (j + 1) % n;
    Vec xw = x;
    std::swap(xw[i], xw[j]);
    if (std::abs(hat_a(x) - hat_a(xw)) > sym_tol)
      throw std::invalid_argument("classical_to_radial: profile is not symmetric");
  }
  ScalingFunction phi;
  phi.rd = RootData::make(n);
  phi.lattice = LatticePair::make(n);
  const double scale = std::sqrt(factorial(n)) * std::pow(kTwoPi, 0.5 * n);
  phi.freq.n = n;
  phi.freq.eval = [hat_a, scale](const Vec& xi) -> Complex {
    return scale * phase_alpha(xi) * hat_a(xi);
  };
  auto [A, B] = riesz_bounds(phi, torus_npts);
  if (!(A > 1e-10) || !std::isfinite(B))
    throw std::runtime_error("classical_to_radial: Riesz bounds degenerate");
  return phi;
}

namespace {

// smooth transition 0 -> 1 on [0, 1] with 3 vanishing derivatives at the ends
double nu_poly(double t) {
  if (t <= 0) return 0.0;
  if (t >= 1) return 1.0;
  return t * t * t * t * (35.0 - 84.0 * t + 70.0 * t * t - 20.0 * t * t * t);
}

double meyer_hat_1d(double x) {
  double a = std::abs(x);
  if (a <= 2.0 * M_PI / 3.0) return 1.0;
  if (a >= 4.0 * M_PI / 3.0) return 0.0;
  return std::cos(0.5 * M_PI * nu_poly(3.0 * a / kTwoPi - 1.0));
}

}  // namespace

std::function<Complex(const Vec&)> meyer_classical_profile(int n) {
  const double norm = std::pow(kTwoPi, -0.5 * n);
  return [n, norm](const Vec& xi) -> Complex {
    double v = norm;
    for (int d = 0; d < n; ++d) v *= meyer_hat_1d(xi[d]);
    return v;
  };
}

FilterFunction meyer_filter(int n) {
  ScalingFunction phi = classical_to_radial(n, meyer_classical_profile(n));
  phi.freq_radius = 4.0 * M_PI / 3.0;
  return filter_from(phi);
}

double CoefficientTree::level_norm(int j) const {
  if (j < j_min || j > j_max) throw std::out_of_range("CoefficientTree::level_norm");
  double s = 0.0;
  for (const Complex& c : coeff[j - j_min]) s += std::norm(c);
  return std::sqrt(s);
}

CoefficientTree decompose(const RootData& rd, const FrequencyProfile& Ff, double support_radius,
                          const ScalingFunction& phi_star, int j_min, int j_max, int weight_bound,
                          int quad_npts) {
  if (j_min > j_max) throw std::invalid_argument("decompose: empty level range");
  CoefficientTree tree;
  tree.rd = rd;
  tree.j_min = j_min;
  tree.j_max = j_max;
  tree.lambdas = dominant_weights(rd.n, weight_bound);
  tree.coeff.assign(j_max - j_min + 1, std::vector<Complex>(tree.lambdas.size(), 0.0));
  tree.norm_f = std::sqrt(std::abs(
      freq_integral(rd.n, support_radius, quad_npts,
                    [&](const Vec& xi) -> Complex { return std::norm(Ff(xi)); })));
  const FrequencyProfile F = phi_star.freq;
  for (int j = j_min; j <= j_max; ++j) {
    const double scale = std::pow(2.0, j);
    double b = support_radius;
    if (std::isfinite(phi_star.freq_radius)) b = std::min(b, scale * phi_star.freq_radius);
    const double amp = std::pow(scale, -0.5 * rd.n * rd.n);
    for (size_t k = 0; k < tree.lambdas.size(); ++k) {
      const Vec& lam = tree.lambdas[k];
      tree.coeff[j - j_min][k] = freq_inner(
          rd.n, b, quad_npts, Ff, [&](const Vec& xi) -> Complex {
            Vec zoomed = xi / scale;
            return amp * level0_profile(rd, lam, F, zoomed);
          });
    }
  }
  double top = 0.0;
  for (const Complex& c : tree.coeff[j_max - j_min]) top += std::norm(c);
  tree.reconstruction_error = std::sqrt(std::max(0.0, tree.norm_f * tree.norm_f - top));
  return tree;
}

FrequencyProfile transform_profile(const HankelTransform& H, const GridFunction& f) {
  FrequencyProfile F;
  F.n = H.root_data().n;
  auto cache = std::make_shared<std::map<std::vector<double>, Complex>>();
  auto mtx = std::make_shared<std::mutex>();
  auto Hc = std::make_shared<HankelTransform>(H);
  auto fc = std::make_shared<GridFunction>(f);
  F.eval = [cache, mtx, Hc, fc](const Vec& xi) -> Complex {
    std::vector<double> key(xi.data(), xi.data() + xi.size());
    {
      std::lock_guard<std::mutex> lock(*mtx);
      auto it = cache->find(key);
      if (it != cache->end()) return it->second;
    }
    Complex v = forward_at(*Hc, *fc, xi);
    std::lock_guard<std::mutex> lock(*mtx);
    cache->emplace(std::move(key), v);
    return v;
  };
  return F;
}

double shift_noninvariance_residual(const ScalingFunction& phi_star, const Partition& lambda,
                                    int max_weight, int quad_npts) {
  const RootData& rd = phi_star.rd;
  if (!std::isfinite(phi_star.freq_radius))
    throw std::invalid_argument("shift_noninvariance_residual: needs a band-limited profile");
  const double b = phi_star.freq_radius;
  const FrequencyProfile F = phi_star.freq;
  Partition zero(std::vector<int>(rd.n, 0));
  Vec shift = lambda.plus_rho(rd);
  auto g = [&](const Vec& xi) -> Complex {
    return bessel_j_iy(rd, xi, shift) * level0_profile(rd, zero, F, xi);
  };
  double g2 = std::abs(freq_inner(rd.n, b, quad_npts, g, g));
  double proj = 0.0;
  for (const Vec& mu : dominant_weights(rd.n, max_weight)) {
    Complex a = freq_inner(rd.n, b, quad_npts, g, [&](const Vec& xi) -> Complex {
      return level0_profile(rd, mu, F, xi);
    });
    proj += std::norm(a);
  }
  return std::sqrt(std::max(0.0, g2 - proj) / g2);
}

bool shift_noninvariance_check(const ScalingFunction& phi_star, const Partition& lambda,
                               int max_weight, double threshold) {
  return shift_noninvariance_residual(phi_star, lambda, max_weight) > threshold;
}

FamilyDocument sample_family(const ScalingFunction& phi, const WaveletFamily& fam,
                             double calibration, double freq_radius, int freq_npts,
                             int symbol_npts) {
  const int n = phi.rd.n;
  FamilyDocument doc;
  doc.rank = n;
  doc.calibration = calibration;
  doc.freq_radius = freq_radius;
  doc.freq_npts = freq_npts;
  doc.symbol_npts = symbol_npts;

  auto freq_point = [&](long idx) {
    Vec x(n);
    for (int d = n - 1; d >= 0; --d) {
      x[d] = -freq_radius + (idx % freq_npts + 0.5) * 2.0 * freq_radius / freq_npts;
      idx /= freq_npts;
    }
    return x;
  };
  long fN = 1;
  for (int d = 0; d < n; ++d) fN *= freq_npts;
  std::vector<FrequencyProfile> members;
  members.push_back(phi.freq);
  for (const FrequencyProfile& p : fam.psi) members.push_back(p);
  for (const FrequencyProfile& p : members) {
    std::vector<std::pair<double, double>> row(fN);
    for (long i = 0; i < fN; ++i) {
      Complex v = p(freq_point(i));
      row[i] = {v.real(), v.imag()};
    }
    doc.freq_samples.push_back(std::move(row));
  }
  TorusGrid tg = TorusGrid::make(n, symbol_npts);
  const long sN = tg.size();
  for (const PeriodicSymmetricFunction& s : fam.symbol) {
    std::vector<std::pair<double, double>> row(sN);
    for (long i = 0; i < sN; ++i) {
      Complex v = s(tg.point(i));
      row[i] = {v.real(), v.imag()};
    }
    doc.symbol_samples.push_back(std::move(row));
  }
  return doc;
}

namespace {

nlohmann::json samples_to_json(const std::vector<std::vector<std::pair<double, double>>>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& [re, im] : row) jr.push_back({re, im});
    out.push_back(std::move(jr));
  }
  return out;
}

std::vector<std::vector<std::pair<double, double>>> samples_from_json(const nlohmann::json& j) {
  std::vector<std::vector<std::pair<double, double>>> rows;
  for (const auto& jr : j) {
    std::vector<std::pair<double, double>> row;
    for (const auto& e : jr) row.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string family_to_json(const FamilyDocument& doc) {
  nlohmann::json j;
  j["rank"] = doc.rank;
  j["calibration"] = doc.calibration;
  j["freq_radius"] = doc.freq_radius;
  j["freq_npts"] = doc.freq_npts;
  j["symbol_npts"] = doc.symbol_npts;
  j["freq_samples"] = samples_to_json(doc.freq_samples);
  j["symbol_samples"] = samples_to_json(doc.symbol_samples);
  return j.dump(2);
}

FamilyDocument family_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FamilyDocument doc;
  doc.rank = j.at("rank").get<int>();
  doc.calibration = j.at("calibration").get<double>();
  doc.freq_radius = j.at("freq_radius").get<double>();
  doc.freq_npts = j.at("freq_npts").get<int>();
  doc.symbol_npts = j.at("symbol_npts").get<int>();
  doc.freq_samples = samples_from_json(j.at("freq_samples"));
  doc.symbol_samples = samples_from_json(j.at("symbol_samples"));
  return doc;
}

}  // namespace rmra

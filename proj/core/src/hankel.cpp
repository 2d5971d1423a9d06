#include "radialmra/hankel.hpp"

#include <algorithm>
#include <cmath>

#include "radialmra/quadrature.hpp"
#include "radialmra/special.hpp"

namespace rmra {

BoxGrid BoxGrid::make(int n, double R, int npts) {
  if (n < 1 || npts < 2 || R <= 0) throw std::invalid_argument("BoxGrid: bad parameters");
  BoxGrid g;
  g.n = n;
  g.R = R;
  g.npts = npts;
  gauss_legendre_mapped(npts, -R, R, g.nodes, g.weights);
  return g;
}

BoxGrid BoxGrid::standard(int n) {
  return n == 2 ? make(2, 12.0, 192) : make(n, 10.0, 128);
}

long BoxGrid::size() const {
  long s = 1;
  for (int d = 0; d < n; ++d) s *= npts;
  return s;
}

Vec BoxGrid::point(long idx) const {
  Vec x(n);
  for (int d = n - 1; d >= 0; --d) {
    x[d] = nodes[idx % npts];
    idx /= npts;
  }
  return x;
}

double BoxGrid::weight(long idx) const {
  double w = 1.0;
  for (int d = n - 1; d >= 0; --d) {
    w *= weights[idx % npts];
    idx /= npts;
  }
  return w;
}

GridFunction GridFunction::zero(const BoxGrid& g) {
  GridFunction f;
  f.grid = g;
  f.values = CVec::Zero(g.size());
  return f;
}

GridFunction GridFunction::sample(const BoxGrid& g, const std::function<Complex(const Vec&)>& f) {
  GridFunction out = zero(g);
  const long N = g.size();
  for (long i = 0; i < N; ++i) out.values[i] = f(g.point(i));
  return out;
}

GridFunction GridFunction::sample_radial(const BoxGrid& g,
                                         const std::function<Complex(const Vec&)>& f) {
  return sample(g, [&](const Vec& x) { return f(ChamberPoint::from(x).coords); });
}

Complex GridFunction::inner(const GridFunction& other) const {
  if (grid.size() != other.grid.size())
    throw std::invalid_argument("GridFunction::inner: grid mismatch");
  double fn = 1.0;
  for (int k = 2; k <= grid.n; ++k) fn *= k;
  Complex s = 0.0;
  const long N = grid.size();
  for (long i = 0; i < N; ++i) {
    Vec x = grid.point(i);
    s += grid.weight(i) * weight_omega(x) * values[i] * std::conj(other.values[i]);
  }
  return s / fn;
}

double GridFunction::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

double boundary_mass(const GridFunction& f) {
  const BoxGrid& g = f.grid;
  double fn = 1.0;
  for (int k = 2; k <= g.n; ++k) fn *= k;
  double shell = 0.0, total = 0.0;
  const long N = g.size();
  for (long i = 0; i < N; ++i) {
    long idx = i;
    bool outer = false;
    for (int d = 0; d < g.n; ++d) {
      int id = static_cast<int>(idx % g.npts);
      if (id == 0 || id == g.npts - 1) outer = true;
      idx /= g.npts;
    }
    double m = g.weight(i) * weight_omega(g.point(i)) * std::norm(f.values[i]);
    total += m;
    if (outer) shell += m;
  }
  (void)fn;
  return total > 0.0 ? shell / total : 0.0;
}

namespace {

// contract dimension d of a row-major tensor (all dims of `in`, except those
// < d already resized to out.npts) with E (out.npts x in.npts)
CVec mode_product(const CVec& cur, const Eigen::MatrixXcd& E, int n, int d, int in_npts,
                  int out_npts) {
  long pre = 1, post = 1;
  for (int k = 0; k < d; ++k) pre *= out_npts;
  for (int k = d + 1; k < n; ++k) post *= in_npts;
  CVec next(pre * out_npts * post);
  for (long p = 0; p < pre; ++p) {
    Eigen::Map<const Eigen::MatrixXcd> blk(cur.data() + p * in_npts * post, post, in_npts);
    Eigen::Map<Eigen::MatrixXcd> dst(next.data() + p * out_npts * post, post, out_npts);
    dst.noalias() = blk * E.transpose();
  }
  return next;
}

constexpr double kDegenerateTol = 1e-12;

void decode(long idx, int n, int npts, std::vector<int>& ids) {
  ids.resize(n);
  for (int d = n - 1; d >= 0; --d) {
    ids[d] = static_cast<int>(idx % npts);
    idx /= npts;
  }
}

// Lagrange interpolation from an arbitrary clean subset of a node line,
// barycentric form with log-magnitude weights
Complex interp_subset(const std::vector<double>& xs, const std::vector<Complex>& vs, double t) {
  const size_t K = xs.size();
  std::vector<double> lg(K, 0.0), sgn(K, 1.0);
  for (size_t i = 0; i < K; ++i)
    for (size_t j = 0; j < K; ++j)
      if (j != i) {
        double d = xs[i] - xs[j];
        lg[i] -= std::log(std::abs(d));
        if (d < 0) sgn[i] = -sgn[i];
      }
  double mx = *std::max_element(lg.begin(), lg.end());
  Complex num = 0.0;
  double den = 0.0;
  for (size_t i = 0; i < K; ++i) {
    double c = sgn[i] * std::exp(lg[i] - mx) / (t - xs[i]);
    num += c * vs[i];
    den += c;
  }
  return num / den;
}

// The separable quotient G(y)/pi(y) is 0/0 at tensor nodes with tied
// coordinates. The transform itself is smooth there, so fill those nodes by
// 1-D interpolation along a grid line through a tied dimension, using only
// already-reliable samples; process nodes with fewer ties first so that
// higher-multiplicity nodes can draw on freshly filled lines.
void fill_degenerate(const BoxGrid& g, CVec& vals) {
  const int n = g.n, npts = g.npts;
  const long N = g.size();
  std::vector<char> good(N, 1);
  std::vector<std::pair<int, long>> bad;
  std::vector<int> ids;
  for (long i = 0; i < N; ++i) {
    decode(i, n, npts, ids);
    int ties = 0;
    for (int d = 0; d < n; ++d)
      for (int e = d + 1; e < n; ++e)
        if (ids[d] == ids[e]) ++ties;
    if (ties > 0) {
      good[i] = 0;
      bad.emplace_back(ties, i);
    }
  }
  std::sort(bad.begin(), bad.end());
  std::vector<long> stride(n, 1);
  for (int d = n - 2; d >= 0; --d) stride[d] = stride[d + 1] * npts;
  std::vector<double> xs;
  std::vector<Complex> vs;
  for (const auto& [ties, i] : bad) {
    decode(i, n, npts, ids);
    int dim = -1;
    for (int d = 0; d < n && dim < 0; ++d)
      for (int e = d + 1; e < n; ++e)
        if (ids[d] == ids[e]) {
          dim = d;
          break;
        }
    long base = i - long(ids[dim]) * stride[dim];
    xs.clear();
    vs.clear();
    for (int a = 0; a < npts; ++a) {
      long j = base + long(a) * stride[dim];
      if (good[j]) {
        xs.push_back(g.nodes[a]);
        vs.push_back(vals[j]);
      }
    }
    vals[i] = interp_subset(xs, vs, g.nodes[ids[dim]]);
    good[i] = 1;
  }
}

}  // namespace

CVec HankelTransform::apply(const CVec& vals, const BoxGrid& in, const BoxGrid& out,
                            int sign) const {
  const int n = rd_.n;
  // G(y) = int_box v(x) pi(x) e^{sign i <x,y>} dx as per-dimension products
  CVec cur(vals.size());
  for (long i = 0; i < vals.size(); ++i) cur[i] = vals[i] * vandermonde(in.point(i));
  Eigen::MatrixXcd E(out.npts, in.npts);
  for (int b = 0; b < out.npts; ++b)
    for (int a = 0; a < in.npts; ++a)
      E(b, a) = in.weights[a] * std::polar(1.0, sign * in.nodes[a] * out.nodes[b]);
  for (int d = 0; d < n; ++d) cur = mode_product(cur, E, n, d, in.npts, out.npts);
  // divide by the frequency-side Vandermonde and phase
  Complex ph = std::pow(Complex(0.0, double(sign)), rd_.q);
  double scale = c_h_ * rd_.fact_prod();
  const long N = out.size();
  for (long i = 0; i < N; ++i) {
    double py = vandermonde(out.point(i));
    cur[i] = (std::abs(py) < kDegenerateTol) ? Complex(0.0) : scale * cur[i] / (ph * py);
  }
  fill_degenerate(out, cur);
  return cur;
}

HankelTransform::HankelTransform(const RootData& rd, const BoxGrid& grid)
    : rd_(rd), grid_(grid) {
  if (grid.n != rd.n) throw std::invalid_argument("HankelTransform: rank mismatch");
  GridFunction g = GridFunction::sample(
      grid, [](const Vec& x) { return Complex(std::exp(-0.5 * x.squaredNorm())); });
  c_h_ = 1.0;
  GridFunction Hg;
  Hg.grid = grid;
  Hg.values = apply(g.values, grid, grid, -1);
  double denom = Hg.inner(Hg).real();
  if (denom <= 0.0) throw std::runtime_error("HankelTransform: calibration failed");
  c_h_ = g.inner(Hg).real() / denom;
}

GridFunction HankelTransform::forward(const GridFunction& f) const { return forward_to(f, grid_); }

GridFunction HankelTransform::inverse(const GridFunction& F) const { return inverse_to(F, grid_); }

GridFunction HankelTransform::forward_to(const GridFunction& f, const BoxGrid& out) const {
  if (boundary_mass(f) > tail_tol)
    throw std::runtime_error("HankelTransform: tail mass above tolerance, increase R");
  GridFunction Hf;
  Hf.grid = out;
  Hf.values = apply(f.values, f.grid, out, -1);
  return Hf;
}

GridFunction HankelTransform::inverse_to(const GridFunction& F, const BoxGrid& out) const {
  if (boundary_mass(F) > tail_tol)
    throw std::runtime_error("HankelTransform: frequency tail mass above tolerance");
  GridFunction f;
  f.grid = out;
  f.values = apply(F.values, F.grid, out, +1);
  return f;
}

namespace {

// barycentric Lagrange weights, computed in log-magnitude to avoid overflow
std::vector<double> bary_weights(const std::vector<double>& xs) {
  const int N = static_cast<int>(xs.size());
  std::vector<double> lg(N, 0.0);
  std::vector<double> sgn(N, 1.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (j != i) {
        double d = xs[i] - xs[j];
        lg[i] -= std::log(std::abs(d));
        if (d < 0) sgn[i] = -sgn[i];
      }
  double mx = *std::max_element(lg.begin(), lg.end());
  std::vector<double> w(N);
  for (int i = 0; i < N; ++i) w[i] = sgn[i] * std::exp(lg[i] - mx);
  return w;
}

}  // namespace

GridFunction dilate(const GridFunction& f, double a) {
  if (a <= 0) throw std::invalid_argument("dilate: a must be positive");
  const BoxGrid& g = f.grid;
  const int n = g.n, N = g.npts;
  std::vector<double> bw = bary_weights(g.nodes);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(N, N);
  for (int b = 0; b < N; ++b) {
    double t = g.nodes[b] / a;
    if (std::abs(t) > g.R) continue;  // outside the support box
    int hit = -1;
    for (int i = 0; i < N; ++i)
      if (std::abs(t - g.nodes[i]) < 1e-13) hit = i;
    if (hit >= 0) {
      P(b, hit) = 1.0;
      continue;
    }
    double denom = 0.0;
    for (int i = 0; i < N; ++i) denom += bw[i] / (t - g.nodes[i]);
    for (int i = 0; i < N; ++i) P(b, i) = bw[i] / (t - g.nodes[i]) / denom;
  }
  GridFunction out;
  out.grid = g;
  CVec cur = f.values;
  for (int d = 0; d < n; ++d) cur = mode_product(cur, P, n, d, N, N);
  out.values = std::pow(a, -0.5 * n * n) * cur;
  return out;
}

Complex forward_at(const HankelTransform& H, const GridFunction& f, const Vec& xi) {
  const RootData& rd = H.root_data();
  const BoxGrid& g = f.grid;
  const long N = g.size();
  Complex acc = 0.0, comp = 0.0;  // Kahan-compensated: terms alternate in sign
  for (long i = 0; i < N; ++i) {
    Vec x = g.point(i);
    Complex term = g.weight(i) * weight_omega(x) * f.values[i] * std::conj(bessel_j_iy(rd, x, xi));
    Complex t = acc + term;
    if (std::abs(acc) >= std::abs(term))
      comp += (acc - t) + term;
    else
      comp += (term - t) + acc;
    acc = t;
  }
  double fact = 1.0;
  for (int k = 2; k <= rd.n; ++k) fact *= k;
  return H.c_h() / fact * (acc + comp);
}

GridFunction freq_translate(const RootData& rd, const Vec& y, const GridFunction& F) {
  GridFunction out;
  out.grid = F.grid;
  out.values = CVec(F.values.size());
  const long N = F.grid.size();
  for (long i = 0; i < N; ++i)
    out.values[i] = bessel_j_iy(rd, F.grid.point(i), y) * F.values[i];
  return out;
}

}  // namespace rmra

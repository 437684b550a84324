#include "qig/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qig {

std::vector<QuadNode> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  std::vector<QuadNode> out(n);
  const int m = (n + 1) / 2;
  const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
  for (int i = 0; i < m; ++i) {
    // Newton iteration on the Legendre polynomial, seeded by the Chebyshev guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    out[i] = {xm - xl * z, 2.0 * xl / ((1.0 - z * z) * pp * pp)};
    out[n - 1 - i] = {xm + xl * z, out[i].w};
  }
  return out;
}

std::vector<QuadNode> composite_gauss_legendre(int panels, int nodes, double a, double b) {
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: need at least one panel");
  std::vector<QuadNode> out;
  out.reserve(static_cast<size_t>(panels) * nodes);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    auto panel = gauss_legendre(nodes, a + p * h, a + (p + 1) * h);
    out.insert(out.end(), panel.begin(), panel.end());
  }
  return out;
}

std::vector<QuadNode> uniform_rule(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("uniform_rule: need at least one node");
  std::vector<QuadNode> out(n);
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) out[i] = {a + (i + 0.5) * h, h};
  return out;
}

std::vector<QuadNode> BetaQuadrature::build() const {
  auto nodes_v = composite_gauss_legendre(panels, nodes, -t_max, t_max);
  for (auto& nd : nodes_v)
    nd.w *= std::numbers::pi / (2.0 * (std::cosh(std::numbers::pi * nd.x) + 1.0));
  return nodes_v;
}

std::vector<QuadNode> TimeAverage::build(double period) const {
  if (period <= 0.0) throw std::invalid_argument("TimeAverage: period must be positive");
  if (uniform) return uniform_rule(panels * nodes, -period / 2.0, period / 2.0);
  return composite_gauss_legendre(panels, nodes, -period / 2.0, period / 2.0);
}

double TanhSinh::integrate(const std::function<double(double, double)>& f) const {
  // u = (1 + tanh((pi/2) sinh(v))) / 2 on (0,1); both u and 1-u are computed
  // from the exponential form so the endpoints keep full relative accuracy.
  const int n = static_cast<int>(std::ceil(v_max / h));
  double sum = 0.0;
  for (int k = -n; k <= n; ++k) {
    const double v = k * h;
    const double q = 0.5 * std::numbers::pi * std::sinh(v);
    const double e = std::exp(-2.0 * std::abs(q));
    const double lo = e / (1.0 + e);        // min(u, 1-u)
    const double hi = 1.0 / (1.0 + e);      // max(u, 1-u)
    const double u = (q >= 0) ? hi : lo;
    const double omu = (q >= 0) ? lo : hi;
    // du/dv = (pi/2) cosh(v) / cosh^2(q); 1/cosh^2(q) = 4 e /(1+e)^2
    const double w = 0.5 * std::numbers::pi * std::cosh(v) * 4.0 * e / ((1.0 + e) * (1.0 + e)) * 0.5 * h;
    sum += w * f(u, omu);
  }
  return sum;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

} // namespace qig

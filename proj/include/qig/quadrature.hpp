#pragma once

#include <functional>
#include <vector>

namespace qig {

struct QuadNode {
  double x;
  double w;
};

/// Gauss-Legendre nodes/weights on [a, b].
std::vector<QuadNode> gauss_legendre(int n, double a, double b);

/// Composite Gauss-Legendre: `panels` equal panels of `nodes` points on [a, b].
std::vector<QuadNode> composite_gauss_legendre(int panels, int nodes, double a, double b);

/// Uniform (midpoint) rule on [a, b]; exact for trigonometric polynomials of
/// fewer than n frequencies over a full period, which makes it the natural
/// discretization of finite cyclic twirls.
std::vector<QuadNode> uniform_rule(int n, double a, double b);

/// Configuration for integrals against the measure
/// dbeta(t) = pi / (2 (cosh(pi t) + 1)) dt, truncated to |t| <= t_max.
struct BetaQuadrature {
  int panels = 16;
  int nodes = 8;
  double t_max = 12.0;

  /// Nodes t_k with weights w_k = GL weight x beta density; sum(w) ~= 1.
  std::vector<QuadNode> build() const;
};

/// Configuration for the time average over [-T/2, T/2].
struct TimeAverage {
  int panels = 16;
  int nodes = 8;
  bool uniform = false; // uniform rule instead of GL panels (finite cyclic twirl)

  std::vector<QuadNode> build(double period) const;
};

/// tanh-sinh rule on the open interval (0, 1); handles integrable endpoint
/// singularities. Step h and cutoff v_max control accuracy.
struct TanhSinh {
  double h = 1.0 / 64.0;
  double v_max = 4.5;

  double integrate(const std::function<double(double u, double one_minus_u)>& f) const;
};

/// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

} // namespace qig

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qig/operators.hpp"
#include "qig/quadrature.hpp"

namespace qig {

/// Descriptor of a monotone metric: the operator anti-monotone function g,
/// its Morozova-Chentsov evaluator c(x,y) = g(x/y)/y (with the diagonal limit
/// c(x,x) = 1/x handled internally), and, for regular metrics, the density
/// nu_g of the integral representation of J_rho^g.
struct MonotoneMetric {
  enum class Kind { Sld, Rld, Bkm, Alpha, Wyd };

  std::string name;
  Kind kind;
  bool regular = false;
  std::optional<double> alpha; // parameter of the alpha and WYD families

  double g(double x) const;
  double c(double x, double y) const;

  bool has_nu() const;
  double nu(double s) const;

  /// True when c(0+, y) is finite for y > 0 (only the SLD metric).
  bool finite_at_zero() const;
  double c_zero(double y) const;
};

MonotoneMetric metric_sld();
MonotoneMetric metric_rld();
MonotoneMetric metric_bkm();
MonotoneMetric metric_alpha(double alpha);
MonotoneMetric metric_symmetric_inverse(); // alpha(1/2)
MonotoneMetric metric_wyd(double alpha);

/// Name grammar: "sld", "rld", "bkm", "sym-inv", "alpha:0.25", "wyd:0.3".
MonotoneMetric parse_metric(const std::string& name);

/// The built-in registry: sld, rld, bkm, alpha:{0.25,0.5,0.75}, sym-inv, wyd:{0.3,0.5}.
std::vector<MonotoneMetric> builtin_metrics();
std::vector<MonotoneMetric> regular_builtin_metrics();

/// gamma_rho^g(A, B) = sum_ij c(l_i, l_j) conj(A~_ij) B~_ij in rho's eigenbasis.
/// Evaluation is restricted to the support of rho; weight of A or B coupling
/// to the kernel returns +infinity for metrics with unbounded c, and is an
/// error only if c has no zero-limit there.
cxd metric_eval(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a,
                const Matrix& b);
double metric_eval(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a);

/// J_rho^g(A): entrywise c(l_i, l_j) A~_ij in rho's eigenbasis. Requires full rank.
Matrix j_apply(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a);
/// The inverse map (entrywise division). Requires full rank.
Matrix j_inverse_apply(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a);

/// gamma via the integral representation: quadrature of
/// <A rho^{-1/2}, (s + Delta_rho)^{-1}(A rho^{-1/2})> nu_g(s) ds with the
/// substitution s = u/(1-u), u in (0,1). Requires a regular metric (nu present).
double metric_eval_integral(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a,
                            const TanhSinh& quad = TanhSinh{});

/// Finite-difference oracle for the WYD metric: the mixed second derivative of
/// tr((rho + sA)^alpha (rho + tB)^{1-alpha}) at s = t = 0, normalized by
/// 1/(alpha(1-alpha)) so that commuting instances reproduce the classical
/// Fisher value. Central differences with step h.
double wyd_hessian_reference(const DensityOperator& rho, const Matrix& a, const Matrix& b,
                             double alpha, double h);

} // namespace qig

#include "qig/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bkm_c(double x, double y) {
  if (std::abs(x - y) <= kDiagLimitTol * std::max(x, y)) return 2.0 / (x + y);
  return std::log1p((x - y) / y) / (x - y);
}

double wyd_c(double alpha, double x, double y) {
  if (std::abs(x - y) <= kDiagLimitTol * std::max(x, y)) return 2.0 / (x + y);
  const double l = std::log(x / y);
  // (x^a - y^a)(x^{1-a} - y^{1-a}) = y expm1(a l) expm1((1-a) l)
  return y * std::expm1(alpha * l) * std::expm1((1.0 - alpha) * l) /
         (alpha * (1.0 - alpha) * (x - y) * (x - y));
}

} // namespace

double MonotoneMetric::g(double x) const {
  switch (kind) {
    case Kind::Sld: return 2.0 / (x + 1.0);
    case Kind::Rld: return (x + 1.0) / (2.0 * x);
    case Kind::Bkm: return bkm_c(x, 1.0);
    case Kind::Alpha: {
      const double a = *alpha;
      return 0.5 * (std::pow(x, -a) + std::pow(x, a - 1.0));
    }
    case Kind::Wyd: return wyd_c(*alpha, x, 1.0);
  }
  throw std::logic_error("unreachable");
}

double MonotoneMetric::c(double x, double y) const {
  switch (kind) {
    case Kind::Sld: return 2.0 / (x + y);
    case Kind::Rld: return 0.5 * (1.0 / x + 1.0 / y);
    case Kind::Bkm: return bkm_c(x, y);
    case Kind::Alpha: {
      const double a = *alpha;
      return 0.5 * (std::pow(x, -a) * std::pow(y, a - 1.0) +
                    std::pow(x, a - 1.0) * std::pow(y, -a));
    }
    case Kind::Wyd: return wyd_c(*alpha, x, y);
  }
  throw std::logic_error("unreachable");
}

bool MonotoneMetric::has_nu() const { return kind == Kind::Bkm || kind == Kind::Alpha || kind == Kind::Wyd; }

double MonotoneMetric::nu(double s) const {
  switch (kind) {
    case Kind::Bkm: return 1.0 / (1.0 + s);
    case Kind::Alpha: {
      const double a = *alpha;
      return std::sin(std::numbers::pi * a) / (2.0 * std::numbers::pi) *
             (std::pow(s, -a) + std::pow(s, a - 1.0));
    }
    case Kind::Wyd: {
      // Stieltjes inversion of g; satisfies nu(1/s) = s nu(s).
      const double a = *alpha;
      return std::sin(std::numbers::pi * a) * (std::pow(s, a) + std::pow(s, 1.0 - a)) /
             (a * (1.0 - a) * std::numbers::pi * (1.0 + s) * (1.0 + s));
    }
    default:
      throw std::invalid_argument("metric '" + name + "' has no integral density nu_g");
  }
}

bool MonotoneMetric::finite_at_zero() const { return kind == Kind::Sld; }

double MonotoneMetric::c_zero(double y) const {
  if (!finite_at_zero())
    throw std::invalid_argument("metric '" + name + "' diverges at the kernel boundary");
  return 2.0 / y;
}

MonotoneMetric metric_sld() { return {"sld", MonotoneMetric::Kind::Sld, false, std::nullopt}; }
MonotoneMetric metric_rld() { return {"rld", MonotoneMetric::Kind::Rld, false, std::nullopt}; }
MonotoneMetric metric_bkm() { return {"bkm", MonotoneMetric::Kind::Bkm, true, std::nullopt}; }

MonotoneMetric metric_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha metric requires alpha in (0,1)");
  return {"alpha:" + std::to_string(alpha), MonotoneMetric::Kind::Alpha, true, alpha};
}

MonotoneMetric metric_symmetric_inverse() {
  MonotoneMetric m = metric_alpha(0.5);
  m.name = "sym-inv";
  return m;
}

MonotoneMetric metric_wyd(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("WYD metric requires alpha in (0,1)");
  return {"wyd:" + std::to_string(alpha), MonotoneMetric::Kind::Wyd, true, alpha};
}

MonotoneMetric parse_metric(const std::string& name) {
  if (name == "sld") return metric_sld();
  if (name == "rld") return metric_rld();
  if (name == "bkm") return metric_bkm();
  if (name == "sym-inv") return metric_symmetric_inverse();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    double value = 0.0;
    try {
      value = std::stod(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown metric name '" + name + "'");
    }
    MonotoneMetric m = (head == "alpha")  ? metric_alpha(value)
                       : (head == "wyd") ? metric_wyd(value)
                                         : throw std::invalid_argument("unknown metric name '" + name + "'");
    m.name = name;
    return m;
  }
  throw std::invalid_argument("unknown metric name '" + name + "'");
}

std::vector<MonotoneMetric> builtin_metrics() {
  return {metric_sld(),       metric_rld(),       metric_bkm(), metric_alpha(0.25),
          metric_symmetric_inverse(), metric_alpha(0.75), metric_wyd(0.3), metric_wyd(0.5)};
}

std::vector<MonotoneMetric> regular_builtin_metrics() {
  std::vector<MonotoneMetric> out;
  for (auto& m : builtin_metrics())
    if (m.regular) out.push_back(m);
  return out;
}

cxd metric_eval(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a,
                const Matrix& b) {
  const int d = rho.dim();
  if (a.rows() != d || b.rows() != d || a.cols() != d || b.cols() != d)
    throw std::invalid_argument("metric_eval: dimension mismatch");
  const auto& eig = rho.spectrum();
  const Matrix at = eig.vectors.adjoint() * a * eig.vectors;
  const Matrix bt = eig.vectors.adjoint() * b * eig.vectors;
  const double tol = rho.rank_tolerance();

  cxd acc(0.0, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double x = eig.values[i], y = eig.values[j];
      const bool zi = x <= tol, zj = y <= tol;
      const double weight = std::max(std::abs(at(i, j)), std::abs(bt(i, j)));
      if (zi && zj) {
        if (weight > kSupportTol) return cxd(kInf, 0.0); // kernel corner, every c diverges
        continue;
      }
      if (zi || zj) {
        if (weight <= kSupportTol) continue;
        if (!m.finite_at_zero()) return cxd(kInf, 0.0);
        acc += m.c_zero(zi ? y : x) * std::conj(at(i, j)) * bt(i, j);
        continue;
      }
      acc += m.c(x, y) * std::conj(at(i, j)) * bt(i, j);
    }
  }
  return acc;
}

double metric_eval(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a) {
  return metric_eval(m, rho, a, a).real();
}

namespace {

Matrix entrywise_kernel(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a,
                        bool inverse) {
  if (!rho.full_rank())
    throw std::invalid_argument("j_apply/j_inverse_apply require a full-rank density operator");
  const auto& eig = rho.spectrum();
  Matrix at = eig.vectors.adjoint() * a * eig.vectors;
  const int d = rho.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double c = m.c(eig.values[i], eig.values[j]);
      at(i, j) *= inverse ? 1.0 / c : c;
    }
  return eig.vectors * at * eig.vectors.adjoint();
}

} // namespace

Matrix j_apply(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a) {
  return entrywise_kernel(m, rho, a, false);
}

Matrix j_inverse_apply(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a) {
  return entrywise_kernel(m, rho, a, true);
}

double metric_eval_integral(const MonotoneMetric& m, const DensityOperator& rho, const Matrix& a,
                            const TanhSinh& quad) {
  if (!m.has_nu())
    throw std::invalid_argument("metric_eval_integral: metric '" + m.name + "' has no nu_g");
  if (!rho.full_rank())
    throw std::invalid_argument("metric_eval_integral requires a full-rank density operator");
  const auto& eig = rho.spectrum();
  const Matrix at = eig.vectors.adjoint() * a * eig.vectors;
  const int d = rho.dim();

  // gamma = int_0^inf nu(s) sum_ij |A~_ij|^2 / (lambda_j (s + lambda_i/lambda_j)) ds,
  // with s = u/(1-u).
  return quad.integrate([&](double u, double omu) {
    const double s = u / omu;
    if (!std::isfinite(s)) return 0.0;
    const double nu = m.nu(s);
    if (nu == 0.0 || !std::isfinite(nu)) return 0.0;
    double acc = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double mag = std::norm(at(i, j));
        if (mag == 0.0) continue;
        acc += mag / (eig.values[j] * s + eig.values[i]);
      }
    // ds/du = 1/(1-u)^2; the 1/(1-u)^2 jacobian combines with the row above:
    // 1/(l_j (s + l_i/l_j)) = 1/(l_j s + l_i).
    return nu * acc / (omu * omu);
  });
}

double wyd_hessian_reference(const DensityOperator& rho, const Matrix& a, const Matrix& b,
                             double alpha, double h) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("wyd_hessian_reference: alpha must lie in (0,1)");
  if (!rho.full_rank())
    throw std::invalid_argument("wyd_hessian_reference requires a full-rank density operator");
  auto power = [&](const Matrix& base, double expo) {
    Eigensystem e = spectral_decompose(base);
    if (e.values.minCoeff() <= 0.0)
      throw std::invalid_argument("wyd_hessian_reference: step h leaves the positive cone");
    return matrix_function(e, [&](double x) { return cxd(std::pow(x, expo), 0.0); });
  };
  auto corner = [&](double s, double t) {
    const Matrix lhs = power(rho.matrix() + s * a, alpha);
    const Matrix rhs = power(rho.matrix() + t * b, 1.0 - alpha);
    return (lhs * rhs).trace().real();
  };
  const double mixed =
      (corner(h, h) - corner(h, -h) - corner(-h, h) + corner(-h, -h)) / (4.0 * h * h);
  return mixed / (alpha * (1.0 - alpha));
}

} // namespace qig

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>

#include "qig/constants.hpp"

namespace qig {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and the
/// unitary of column eigenvectors, so that source = U diag(values) U*.
struct Eigensystem {
  Eigen::VectorXd values;
  Matrix vectors;

  Matrix reconstruct() const;
};

/// Dense Hermitian operator. The builder accepts matrices that are Hermitian
/// within kHermTol and symmetrizes them exactly; anything worse is rejected.
class HermitianOperator {
public:
  explicit HermitianOperator(const Matrix& m, double tol = kHermTol);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

  static HermitianOperator zero(int dim);

private:
  Matrix m_;
};

/// Density operator: Hermitian, unit trace, positive semidefinite.
/// Eigenvalues in [kEigClipFloor, 0] are clipped to zero on construction;
/// more negative values are a validation error. The eigensystem is cached.
class DensityOperator {
public:
  explicit DensityOperator(const Matrix& m, double rank_tol = kRankTol);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  const Eigensystem& spectrum() const { return spec_; }
  bool full_rank() const { return full_rank_; }
  int rank() const { return rank_; }
  double rank_tolerance() const { return rank_tol_; }

  /// Projector onto the support.
  Matrix support() const;
  /// rho^z with the power taken on the support only (inverse-type functions
  /// act on the support, zero eigenvalues map to zero).
  Matrix power(cxd z) const;

private:
  Matrix m_;
  Eigensystem spec_;
  double rank_tol_;
  int rank_;
  bool full_rank_;
};

Eigensystem spectral_decompose(const Matrix& hermitian);
Eigensystem spectral_decompose(const HermitianOperator& h);

/// U diag(f(lambda)) U* for the decomposition E.
Matrix matrix_function(const Eigensystem& e, const std::function<cxd(double)>& f);

/// x^z applied on the support: eigenvalues <= tol map to 0.
Matrix support_power(const Eigensystem& e, cxd z, double tol = kRankTol);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// F(rho,sigma) = || sqrt(rho) sqrt(sigma) ||_1, in [0,1].
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

Matrix tensor(const Matrix& a, const Matrix& b);

/// Partial trace of an operator on A (x) B; `which` = 0 traces out A, 1 traces out B.
Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, int which);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline double frobenius(const Matrix& m) { return m.norm(); }

/// JSON operator format {"dim": d, "re": [[...]], "im": [[...]]}, row-major.
std::string operator_to_json(const Matrix& m);
Matrix operator_from_json(const std::string& text);

} // namespace qig

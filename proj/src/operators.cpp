#include "qig/operators.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>

namespace qig {

namespace {

void check_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
  if (m.rows() > kMaxDim)
    throw std::invalid_argument(std::string(who) + ": dimension exceeds the configured cap of 64");
}

} // namespace

Matrix Eigensystem::reconstruct() const {
  return vectors * values.asDiagonal() * vectors.adjoint();
}

HermitianOperator::HermitianOperator(const Matrix& m, double tol) {
  check_square(m, "HermitianOperator");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument("HermitianOperator: input deviates from Hermitian by " +
                                std::to_string(dev));
  m_ = 0.5 * (m + m.adjoint().eval());
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

DensityOperator::DensityOperator(const Matrix& m, double rank_tol) : rank_tol_(rank_tol) {
  check_square(m, "DensityOperator");
  HermitianOperator h(m);
  const double tr = h.matrix().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw std::invalid_argument("DensityOperator: trace is " + std::to_string(tr));

  spec_ = spectral_decompose(h.matrix());
  for (int i = 0; i < spec_.values.size(); ++i) {
    const double ev = spec_.values[i];
    if (ev < kEigClipFloor)
      throw std::invalid_argument("DensityOperator: negative eigenvalue " + std::to_string(ev));
    if (ev < 0.0) spec_.values[i] = 0.0;
  }
  m_ = spec_.reconstruct();

  rank_ = 0;
  for (int i = 0; i < spec_.values.size(); ++i)
    if (spec_.values[i] > rank_tol_) ++rank_;
  full_rank_ = (rank_ == dim());
}

Matrix DensityOperator::support() const {
  Matrix p = Matrix::Zero(dim(), dim());
  for (int i = 0; i < spec_.values.size(); ++i)
    if (spec_.values[i] > rank_tol_)
      p += spec_.vectors.col(i) * spec_.vectors.col(i).adjoint();
  return p;
}

Matrix DensityOperator::power(cxd z) const { return support_power(spec_, z, rank_tol_); }

Eigensystem spectral_decompose(const Matrix& hermitian) {
  check_square(hermitian, "spectral_decompose");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (hermitian + hermitian.adjoint().eval()));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral_decompose: eigensolver failed to converge");
  return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

Eigensystem spectral_decompose(const HermitianOperator& h) {
  return spectral_decompose(h.matrix());
}

Matrix matrix_function(const Eigensystem& e, const std::function<cxd(double)>& f) {
  Eigen::VectorXcd d(e.values.size());
  for (int i = 0; i < e.values.size(); ++i) d[i] = f(e.values[i]);
  return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

Matrix support_power(const Eigensystem& e, cxd z, double tol) {
  return matrix_function(e, [&](double x) -> cxd {
    if (x <= tol) return cxd(0.0, 0.0);
    return std::exp(z * std::log(x));
  });
}

double trace_norm(const Matrix& m) {
  check_square(m, "trace_norm");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const Matrix a = rho.power(0.5), b = sigma.power(0.5);
  double f = trace_norm(a * b);
  return std::min(1.0, std::max(0.0, f));
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, int which) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw std::invalid_argument("partial_trace: dimensions do not factor the matrix");
  if (which == 0) { // trace out A, keep B
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int a = 0; a < dim_a; ++a)
      out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
    return out;
  }
  if (which == 1) { // trace out B, keep A
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    return out;
  }
  throw std::invalid_argument("partial_trace: subsystem index must be 0 or 1");
}

std::string operator_to_json(const Matrix& m) {
  nlohmann::json j;
  j["dim"] = m.rows();
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json rrow = nlohmann::json::array(), irow = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) {
      rrow.push_back(m(i, k).real());
      irow.push_back(m(i, k).imag());
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

Matrix operator_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const int d = j.at("dim").get<int>();
  Matrix m(d, d);
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
    throw std::invalid_argument("operator_from_json: row count mismatch");
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      m(i, k) = cxd(re[i][k].get<double>(), im[i][k].get<double>());
  return m;
}

} // namespace qig

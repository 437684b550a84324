#pragma once

#include <optional>
#include <vector>

#include "qig/operators.hpp"
#include "qig/quadrature.hpp"

namespace qig {

/// Completely positive trace-preserving map held as a Kraus list, with the
/// Choi matrix and superoperator (column-stacking vectorization) derived on
/// construction. Validation admits maps that are trace preserving on a
/// support projector only, which is what Petz maps of rank-deficient
/// references produce.
class QuantumChannel {
public:
  static QuantumChannel from_kraus(std::vector<Matrix> kraus);
  static QuantumChannel from_superop(const Matrix& superop, int dim_in, int dim_out);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Matrix& superop() const { return superop_; }
  const Matrix& choi() const { return choi_; }
  bool trace_preserving_on_support_only() const { return support_tp_; }

  Matrix apply(const Matrix& x) const;
  DensityOperator apply(const DensityOperator& rho) const;
  Matrix adjoint_apply(const Matrix& y) const;

private:
  QuantumChannel() = default;
  void validate() const;

  int dim_in_ = 0, dim_out_ = 0;
  std::vector<Matrix> kraus_;
  Matrix superop_;
  Matrix choi_;
  bool support_tp_ = false;
};

QuantumChannel identity_channel(int dim);
QuantumChannel unitary_channel(const Matrix& u);
/// Trace out subsystem `which` (0 = A, 1 = B) of an A (x) B input.
QuantumChannel partial_trace_channel(int dim_a, int dim_b, int which);
/// X -> X (x) ancilla.
QuantumChannel tensor_ancilla_channel(int dim, const DensityOperator& ancilla);
/// second o first.
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

/// Dephasing onto the eigen-subspaces of H (Kraus list of spectral projectors).
QuantumChannel pinching_channel(const HermitianOperator& h);

/// Haar-random isometry into dim_out x kraus_count, sliced into Kraus
/// operators; deterministic for a fixed seed.
QuantumChannel random_channel(int dim_in, int dim_out, int kraus_count, unsigned long long seed);

/// Petz recovery map R_{sigma,Phi}(.) = sigma^{1/2} Phi†(Phi(sigma)^{-1/2} . Phi(sigma)^{-1/2}) sigma^{1/2};
/// inverse square roots are taken on the support of Phi(sigma).
QuantumChannel petz_map(const DensityOperator& sigma, const QuantumChannel& phi);

/// Rotated Petz map with factors sigma^{1/2 -it}, Phi(sigma)^{-1/2 +it}; t = 0
/// reproduces petz_map exactly.
QuantumChannel rotated_petz_map(const DensityOperator& sigma, const QuantumChannel& phi, double t);

/// Universal recovery map applied to X: the rotated Petz maps R^{t/2}
/// integrated against dbeta(t) = pi/(2(cosh(pi t)+1)) dt.
Matrix universal_recovery_apply(const DensityOperator& sigma, const QuantumChannel& phi,
                                const Matrix& x, const BetaQuadrature& quad = BetaQuadrature{});

/// The map V_{rho,t}(A) = Phi†(A Phi(rho)^{-1/2-it}) rho^{1/2+it} as a
/// superoperator, together with the two operator inequalities it satisfies.
struct ContractionOperator {
  double t = 0.0;
  Matrix v;          // dim_in^2 x dim_out^2
  Matrix delta_in;   // relative modular superoperator of rho
  Matrix delta_out;  // relative modular superoperator of Phi(rho)

  /// max eigenvalue of V*V - I (should be <= 0 up to roundoff)
  double contraction_violation() const;
  /// max eigenvalue of V* Delta_rho V - Delta_Phi(rho)
  double modular_violation() const;
};

ContractionOperator contraction_operator(const DensityOperator& rho, const QuantumChannel& phi,
                                         double t);

/// Operator norm of the commutator between Phi's superoperator and the
/// generator X -> -i[H, X]; zero iff Phi intertwines the two time evolutions.
double check_covariance(const QuantumChannel& phi, const HermitianOperator& h_in,
                        const HermitianOperator& h_out);

/// (1/T) int_{-T/2}^{T/2} e^{iH_out t} Phi(e^{-iH_in t} . e^{iH_in t}) e^{-iH_out t} dt
/// by quadrature. For H with commensurate integer spectra and T the common
/// period this is the U(1) twirl; with quad.uniform and n nodes it is the
/// finite cyclic Z_n twirl.
QuantumChannel twirl_channel(const QuantumChannel& phi, const HermitianOperator& h_in,
                             const HermitianOperator& h_out, double period,
                             const TimeAverage& quad = TimeAverage{});

/// Time-averaged Petz map of eq-style (1/T) int e^{iH_in t} R(e^{-iH_out t} . e^{iH_out t}) e^{-iH_in t} dt.
/// Warns (stderr) when Phi is not covariant, and still computes.
QuantumChannel averaged_petz(const DensityOperator& rho, const QuantumChannel& phi,
                             const HermitianOperator& h_in, const HermitianOperator& h_out,
                             double period, const TimeAverage& quad = TimeAverage{});

std::string channel_to_json(const QuantumChannel& phi);
QuantumChannel channel_from_json(const std::string& text);

Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, int rows, int cols);
/// Superoperator of X -> A X B.
Matrix sandwich_superop(const Matrix& a, const Matrix& b);

} // namespace qig

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

// Two-qubit density matrix of the spin pair under decoherence and
// dephasing, and the PPT entanglement witness built from the eigenvector of
// the minimal eigenvalue of the partial transpose. The numerical PPT
// construction is the ground truth; the closed form is a reference
// evaluator (it carries the Pauli-form normalization, four times the
// projector expectation).

namespace qgem::witness {

/// 4x4 complex Hermitian unit-trace state, basis order |00>,|01>,|10>,|11>.
/// Construction validates Hermiticity (1e-12), trace (1e-12) and positive
/// semidefiniteness (min eigenvalue >= -1e-10).
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  Eigen::Matrix4cd m_;
};

/// Density matrix of the final spin state with effective phase delta_phi,
/// dephasing phase phi_d, and decoherence rate gamma acting for time t.
/// Diagonal entries are 1/4; single-index coherences damp as e^{-gamma t},
/// double-index ones as e^{-2 gamma t}.
DensityMatrix4 build_density_matrix(double delta_phi, double phi_d, double gamma, double t);

/// Partial transpose over one qubit (0 = first, 1 = second).
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& m, int qubit);

/// Eigen-decomposition of a 4x4 Hermitian matrix by cyclic complex Jacobi
/// rotations, converged when the off-diagonal Frobenius norm drops below
/// 1e-14. Eigenvalues ascending; columns of `vectors` are the eigenvectors.
struct EigenSystem4 {
  std::array<double, 4> values{};
  Eigen::Matrix4cd vectors;
};
EigenSystem4 jacobi_eigensystem(const Eigen::Matrix4cd& hermitian);

struct WitnessOutcome {
  double expectation = 0.0;          // Tr(W rho), real part after residue check
  double min_ppt_eigenvalue = 0.0;   // lambda_- of rho^{T_B}
  bool entangled = false;            // expectation < 0
  Eigen::Matrix4cd witness_matrix;   // W = (|l-><l-|)^{T_B}
};

/// PPT witness evaluation. `transposed_qubit` selects which subsystem is
/// partially transposed; the Appendix-A family is symmetric under the
/// choice.
WitnessOutcome ppt_witness(const DensityMatrix4& rho, int transposed_qubit = 1);

/// Reference evaluator, Pauli-basis closed form:
///   1 - e^{-gamma t}(-sin(delta_phi)[1 + cos(phi_d)] + cos(phi_d) e^{-gamma t}).
double closed_form_witness(double delta_phi, double phi_d, double gamma, double t);

/// Minimal detectable phase over n_trials shot-noise-limited runs,
/// sigma_multiplier / sqrt(N) (5-sigma rule by default).
double detection_threshold(std::uint64_t n_trials, double sigma_multiplier = 5.0);

/// Entanglement survives decoherence iff |phi_eff| > 2 gamma t (strict).
bool entanglement_condition(double phi_eff, double gamma, double t);

}  // namespace qgem::witness

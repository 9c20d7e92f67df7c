#include "qgem/witness.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qgem::witness {

namespace {

using std::complex;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdSlack = -1e-10;
constexpr double kJacobiTol = 1e-14;

double offdiag_norm(const Eigen::Matrix4cd& m) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

/// Deterministic eigenvector representative: first component of largest
/// magnitude made real and positive.
Eigen::Vector4cd canonical_phase(Eigen::Vector4cd v) {
  int pivot = 0;
  double best = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(v(i)) > best + 1e-15) {
      best = std::abs(v(i));
      pivot = i;
    }
  }
  if (best > 0.0) v *= std::conj(v(pivot)) / std::abs(v(pivot));
  return v;
}

/// Lexicographic order on (re, im) component pairs, used only to break
/// exact eigenvalue ties deterministically.
bool lex_less(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
  for (int i = 0; i < 4; ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

DensityMatrix4 ::DensityMatrix4(const Eigen::Matrix4cd& m) : m_(m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m.trace() - complex<double>(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("density matrix trace is not 1");
  const auto eig = jacobi_eigensystem(0.5 * (m + m.adjoint()));
  if (eig.values[0] < kPsdSlack)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix4 build_density_matrix(double delta_phi, double phi_d, double gamma, double t) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be non-negative");
  if (t < 0.0) throw std::invalid_argument("t must be non-negative");
  const double g1 = std::exp(-gamma * t);
  const double g2 = g1 * g1;
  const complex<double> i(0.0, 1.0);
  const complex<double> ep = std::exp(i * delta_phi);
  const complex<double> em = std::exp(-i * delta_phi);
  const complex<double> dp = std::exp(i * phi_d);
  const complex<double> dm = std::exp(-i * phi_d);

  Eigen::Matrix4cd m;
  m << 1.0, em * dp * g1, em * g1, dp * g2,
       ep * dm * g1, 1.0, dm * g2, ep * g1,
       ep * g1, dp * g2, 1.0, ep * dp * g1,
       dm * g2, em * g1, em * dm * g1, 1.0;
  return DensityMatrix4(0.25 * m);
}

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& m, int qubit) {
  if (qubit != 0 && qubit != 1) throw std::invalid_argument("qubit index must be 0 or 1");
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          // row index (a b), column index (c d) in the |q0 q1> basis
          const int row = 2 * a + b;
          const int col = 2 * c + d;
          const int src_row = (qubit == 0) ? 2 * c + b : 2 * a + d;
          const int src_col = (qubit == 0) ? 2 * a + d : 2 * c + b;
          out(row, col) = m(src_row, src_col);
        }
  return out;
}

EigenSystem4 jacobi_eigensystem(const Eigen::Matrix4cd& hermitian) {
  Eigen::Matrix4cd a = hermitian;
  Eigen::Matrix4cd v = Eigen::Matrix4cd::Identity();

  for (int sweep = 0; sweep < 60 && offdiag_norm(a) > kJacobiTol; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const complex<double> phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double tee = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + tee * tee);
        const double s = tee * c;

        // Unitary Givens-like update on rows/columns p and q.
        Eigen::Matrix4cd rot = Eigen::Matrix4cd::Identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s * phase;
        rot(q, p) = -s * std::conj(phase);
        a = rot.adjoint() * a * rot;
        v = v * rot;
        a(p, q) = 0.0;  // zeroed by construction, clear rounding residue
        a(q, p) = 0.0;
      }
    }
  }

  EigenSystem4 out;
  std::array<int, 4> order = {0, 1, 2, 3};
  std::array<double, 4> vals = {a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (vals[x] != vals[y]) return vals[x] < vals[y];
    return lex_less(canonical_phase(v.col(x)), canonical_phase(v.col(y)));
  });
  for (int k = 0; k < 4; ++k) {
    out.values[k] = vals[order[k]];
    out.vectors.col(k) = canonical_phase(v.col(order[k]));
  }
  return out;
}

WitnessOutcome ppt_witness(const DensityMatrix4& rho, int transposed_qubit) {
  const Eigen::Matrix4cd rt = partial_transpose(rho.matrix(), transposed_qubit);
  const auto eig = jacobi_eigensystem(rt);
  const Eigen::Vector4cd lam_vec = eig.vectors.col(0);

  WitnessOutcome out;
  out.min_ppt_eigenvalue = eig.values[0];
  out.witness_matrix = partial_transpose(lam_vec * lam_vec.adjoint(), transposed_qubit);
  const complex<double> expct = (out.witness_matrix * rho.matrix()).trace();
  if (std::abs(expct.imag()) > 1e-10)
    throw std::runtime_error("witness expectation has a non-real residue");
  out.expectation = expct.real();
  out.entangled = out.expectation < 0.0;
  return out;
}

double closed_form_witness(double delta_phi, double phi_d, double gamma, double t) {
  if (gamma < 0.0 || t < 0.0) throw std::invalid_argument("gamma and t must be non-negative");
  const double g1 = std::exp(-gamma * t);
  return 1.0 - g1 * (-std::sin(delta_phi) * (1.0 + std::cos(phi_d)) + std::cos(phi_d) * g1);
}

double detection_threshold(std::uint64_t n_trials, double sigma_multiplier) {
  if (n_trials == 0) throw std::invalid_argument("n_trials must be at least 1");
  return sigma_multiplier / std::sqrt(static_cast<double>(n_trials));
}

bool entanglement_condition(double phi_eff, double gamma, double t) {
  if (gamma < 0.0 || t < 0.0) throw std::invalid_argument("gamma and t must be non-negative");
  return std::fabs(phi_eff) > 2.0 * gamma * t;
}

}  // namespace qgem::witness

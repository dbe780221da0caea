#pragma once

// Spectrum of the filtered Laplacian through the 2D oscillator number basis.
// The scaled operator is H_eps = -Lap + x^2 + t^2 + eps x^2 t + eps^2 x^4/4
// with eps = (4 pi k)^{-1/2}; spec(Delta_k) = 4 pi k spec(H_eps).  The
// differential convention is used here (ground energy 2 at eps = 0); the
// ladder module's algebra carries its own convention and the bridge between
// the two is exercised in the tests.

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "nil_theta/rational.hpp"
#include "nil_theta/theta.hpp"

namespace niltheta {

struct NumberBasisOperator {
  int N = 0;
  std::vector<std::pair<int, int>> states;  // (n1, n2), n1 + n2 <= N, graded
  Eigen::MatrixXd mat;
  double symmetry_defect() const;
};

NumberBasisOperator build_scaled_hamiltonian(double eps, int N);

// Independent assembly of Delta_k itself in the dilated basis phi_n(s x),
// s^2 = 4 pi k (no eps substitution); cross-checks the scaling identity
// spec(Delta_k) = 4 pi k spec(H_eps) at eigenvalue level.  The x^2 t term
// enters with the sign of the displayed potential, a t-parity conjugate of
// the eps form, so spectra agree while matrices need not.
NumberBasisOperator build_delta_k_direct(long k, int N);

struct SpectrumReport {
  long k = 0;       // 0 when the eps-form spectrum is reported directly
  double eps = 0;
  int N = 0;
  std::vector<double> eigenvalues;  // ascending, lowest `count`
  std::vector<double> ground_coeff;  // unit eigenvector of lambda0, number basis
  bool converged = false;
  double convergence_delta = 0;  // relative change of lambda0 under N -> N+8
};

SpectrumReport spectrum_scaled(double eps, int N, int count);
SpectrumReport spectrum_delta_k(long k, int N, int count);

struct BandAssignment {
  double eigenvalue;
  int band;          // nearest center 2(band + 1) of the eps = 0 spectrum
  double deviation;  // |eigenvalue - center|
};

struct BandReport {
  double eps = 0;
  int N = 0;
  std::vector<BandAssignment> assignments;
  double ground_band_deviation = 0;
};

BandReport band_report(double eps, int N, int count = 6);

struct GroundState {
  long k = 0;
  int N = 0;
  double lambda0 = 0;  // of Delta_k
  double lambda1 = 0;
  bool converged = false;
  std::vector<std::pair<int, int>> states;
  std::vector<double> coeff;  // unit eigenvector in the number basis

  // psi0(x, t) = sqrt(4 pi k) sum c_{n1 n2} phi_{n1}(s x) phi_{n2}(s t),
  // s = sqrt(4 pi k); unit L^2 norm on R^2.
  double operator()(double x, double t) const;
};

GroundState ground_state(long k, int N);

// 16 pi^2 k^2 [ (x^2 + t^2) + x^2 (x^2/4 - t) ]
double potential_eval(long k, double x, double t);
// the displayed and the factored polynomial (sans the 16 pi^2 k^2 prefactor);
// they agree identically
std::pair<Rational, Rational> potential_forms(const Rational& x, const Rational& t);

// relative L^2 residual of (Delta_k - lambda0) psi0 on a uniform grid over
// [-halfwidth, halfwidth]^2, derivatives by high-order central differences
double ground_state_fd_residual(const GroundState& gs, int grid = 200,
                                double halfwidth = 2.2);

// Empirical decay envelope of psi0 used to certify theta truncation windows.
GaussianSpec ground_state_bound(long k);

// One theta evaluator per integral point: the 4k^2 sections spanning the
// quantization space.
std::vector<SectionEvaluator> quantization_basis(long k, int N, const TruncationWindow& w);

}  // namespace niltheta

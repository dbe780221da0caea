#pragma once

// Invariant symplectic geometry of the base group and the family of
// (almost) Calabi-Yau structures attached to the e-family of polarizations.
//
// Conventions fixed here and relied on throughout:
//   omega = 2 pi (b1 ^ b3 + b2 ^ bT)  in coordinates 2 pi (da1^da3 + da2^dr),
//   Hamiltonian fields via contraction in the second slot, omega(., X_f) = df,
//   Poisson bracket {f,g} = X_f(g).
// With these choices the frame Hamiltonians are
//   phi1 = -2 pi a3, phi2 = -2 pi (r + a1^2/2), phi3 = 2 pi a1,
//   phiT = 2 pi a2,  phiU = 2 pi,
// and they generate the right-invariant frame fields.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "nil_theta/coadjoint.hpp"
#include "nil_theta/forms.hpp"
#include "nil_theta/lie.hpp"
#include "nil_theta/rational.hpp"

namespace niltheta {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;

// ---- Lagrangian subspaces of the 4-dim base ----

// basis must be two base vectors (u component zero); true iff the plane they
// span is omega-isotropic.  Throws if the input is not a 2-dim base subspace.
bool is_lagrangian(const std::vector<LieVector>& basis);

// Project a 3-dim subalgebra containing the central direction U to the base.
// Throws unless the input has rank 3, contains U, and projects to a plane.
std::vector<LieVector> subalgebra_to_lagrangian(const std::vector<LieVector>& h);

// L + RU, provided that is closed under the bracket; nullopt otherwise.
std::optional<std::vector<LieVector>> lagrangian_to_subalgebra(
    const std::vector<LieVector>& L);

// ---- Calabi-Yau structures for the e-family ----

struct CYStructure {
  Rational e;
  Mat2c Omega;  // symmetric period matrix, Im positive definite
  Mat4 J;       // complex structure in the frame (X1, X2, X3, T)
  KForm<std::complex<double>> epsilon;  // the (2,0)-form, scaled by pi i
};

CYStructure cy_structure(const Rational& e);

struct CYReport {
  double j_squared_residual;        // max |(J^2 + I)_ij|
  double compatibility_residual;    // max |omega(Jv, Jw) - omega(v, w)|
  double metric_symmetry_residual;  // max |g - g^T| for g = omega(., J.)
  double metric_min_eigenvalue;     // smallest eigenvalue of g
  std::complex<double> volume_ratio;  // (eps ^ conj eps) / (omega^2 / 2)
  double det_im_omega;                // should equal the ratio, and equal 1
  double d_re_epsilon_residual;       // max coefficient of d(Re eps)
  bool pass(double tol = 1e-10) const;
};

CYReport verify_cy(const CYStructure& cy);

// Im(epsilon) restricted to the plane, max |value| over the basis pair.
// The plane must be Lagrangian in the exact sense first.
bool is_special_lagrangian(const std::vector<LieVector>& basis,
                           const CYStructure& cy, double tol = 1e-10);

// Exact-arithmetic variant, available when |e| is a perfect rational square
// (then sqrt|e| and hence every entry of Omega, J, epsilon is rational).
struct CYStructureExact {
  Rational e;
  Rational sqrt_abs_e;
  std::array<std::array<RationalComplex, 2>, 2> Omega;
  std::array<std::array<Rational, 4>, 4> J;
  KForm<RationalComplex> epsilon;  // epsilon / (pi i), exact coefficients
};

bool has_exact_cy(const Rational& e);
CYStructureExact cy_structure_exact(const Rational& e);

struct CYReportExact {
  bool j_squared_ok;      // J^2 = -I exactly
  bool compatibility_ok;  // J^T W J = W exactly for the omega Gram matrix
  bool metric_symmetric;  // g = W J symmetric exactly
  bool ratio_is_one;      // (eps ^ conj eps) / (omega^2/2) = 1 exactly
  bool d_re_epsilon_zero;
  bool pass() const {
    return j_squared_ok && compatibility_ok && metric_symmetric && ratio_is_one &&
           d_re_epsilon_zero;
  }
};

CYReportExact verify_cy_exact(const CYStructureExact& cy);

// Exact special-Lagrangian test against an exact structure.
bool is_special_lagrangian_exact(const std::vector<LieVector>& basis,
                                 const CYStructureExact& cy);

// ---- leaf compactness ----

// x = p + q sqrt(d), d a nonnegative integer
struct QuadraticIrrational {
  Rational p;
  Rational q;
  long d = 0;
  bool is_rational() const;
  double value() const;
};

// Whether the polarization leaf through x is a closed torus fiber: true for
// the degenerate parameters (e = 0 or infinite), or whenever x is rational.
bool is_torus_fiber(const ExtRational& e, const QuadraticIrrational& x);

// ---- Hamiltonian frame ----

struct HamiltonianAssignment {
  // phi values and coordinate gradients (d/da1, d/da2, d/da3, d/dr) at a point
  static double phi(int i, const BaseElement& at);          // i in 0..4
  static std::array<double, 4> grad(int i, const BaseElement& at);
  // right-invariant frame field components at a point, same coordinate order
  static std::array<double, 4> frame_field(int i, const BaseElement& at);  // i in 0..3
};

struct HamiltonianFrameReport {
  double max_contraction_residual;  // | d phi_i - omega(., X_i) | over frame
  double max_poisson_residual;      // bracket relations among the phi
  bool pass(double tol = 1e-12) const {
    return max_contraction_residual < tol && max_poisson_residual < tol;
  }
};

HamiltonianFrameReport verify_hamiltonian_frame(const std::vector<BaseElement>& samples);

}  // namespace niltheta

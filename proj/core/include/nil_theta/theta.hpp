#pragma once

// Periodizing maps into the level-k part of L^2 of the prequantum bundle,
// their trivializations on R^4, pseudoperiodicity and intertwining checks,
// inner products over the fundamental domain, and the classical circle-bundle
// torus oracle.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "nil_theta/lie.hpp"
#include "nil_theta/rational.hpp"
#include "nil_theta/reps.hpp"

namespace niltheta {

// Decay certificate: |f(x,t)| <= amplitude * exp(-pi((x-x0)^2+(t-t0)^2)/sigma^2).
struct GaussianSpec {
  double x0 = 0, t0 = 0;
  double sigma = 1;
  double amplitude = 1;
};

// A test function paired with the decay bound its truncation relies on.
struct WindowedFunction {
  Function2D f;
  GaussianSpec bound;
};

WindowedFunction gaussian2d(const GaussianSpec& spec);

struct TruncationWindow {
  int W = 8;
  double tol = 1e-12;
};

// Smallest window such that the discarded tail of the lattice sum is below
// tol whenever the evaluation point satisfies max(|x-x0|, |t-t0|) <= max_coord.
// Uses the bound  tail <= 4 C (1+sigma)^2 exp(-pi rho^2 / sigma^2).
int required_window(const GaussianSpec& bound, double max_coord, double tol);
TruncationWindow auto_window(const GaussianSpec& bound, double max_coord, double tol);

// The periodizing lattice sum at a point of the extended group; the result is
// k-equivariant in the central coordinate and invariant under the lattice.
std::complex<double> theta_map(const IntegralPoint& p, const WindowedFunction& f,
                               const GroupElement& g, const TruncationWindow& w);

struct R4Point {
  double x = 0, y = 0, z = 0, t = 0;
};

// Trivialized theta function on R^4: theta_map at central coordinate u = 0.
std::complex<double> theta_R4(const IntegralPoint& p, const WindowedFunction& f,
                              const R4Point& pt, const TruncationWindow& w);

// The four lattice transformation rules of the trivialized function:
//   (x+1, y, z, t)    -> factor 1
//   (x, y+1, z-x, t)  -> factor e^{-2 pi i k x^2}
//   (x, y, z+1, t)    -> factor e^{4 pi i k x}
//   (x, y, z, t+1)    -> factor e^{4 pi i k y}
// Each factor also equals e^{-4 pi i k psi(gamma^-1, g)} for the generator
// gamma of the shift, computed independently through the group cocycle.
struct PseudoperiodicityReport {
  std::array<double, 4> residual{};                       // |lhs - factor * base|
  std::array<std::complex<double>, 4> factor{};           // from the rules
  std::array<std::complex<double>, 4> cocycle_factor{};   // from cocycle_psi
  double max_residual() const;
  double max_factor_mismatch() const;
};

PseudoperiodicityReport check_pseudoperiodicity(const IntegralPoint& p,
                                                const WindowedFunction& f,
                                                const BaseElement& pt,
                                                const TruncationWindow& w);

// max over samples s of |Theta(pi(g) f)(s) - Theta(f)(s g)|.
double check_intertwining(const IntegralPoint& p, const WindowedFunction& f,
                          const GroupElement& g,
                          const std::vector<GroupElement>& samples,
                          const TruncationWindow& w);

using SectionEvaluator = std::function<std::complex<double>(const R4Point&)>;

// Hermitian pairing over the fundamental domain [0,1)^4, conjugate-linear in
// the second slot, normalized so that the periodizing map satisfies
// <f, f>_{L^2(R^2)} = (1/2) <Theta f, Theta f>_P.
std::complex<double> inner_product_P(const SectionEvaluator& F, const SectionEvaluator& G,
                                     int nodes_per_axis = 12);

// ---- classical torus oracle ----

using Function1D = std::function<double(double)>;

std::complex<double> weil_brezin_torus(long k, const Function1D& f, double x, double y,
                                       double phi, int W);

// Sum over |n| <= W of exp(-pi n^2) exp(2 pi i n z): the tau = i theta series.
std::complex<double> jacobi_theta(std::complex<double> z, int W = 12);

struct C2Function1D {
  Function1D f;
  Function1D d2;  // analytic second derivative
};

C2Function1D classical_ground();  // exp(-pi t^2)
C2Function1D classical_first();   // t exp(-pi t^2)

// -(1/4)[f'' - 4 pi^2 t^2 f + 2 pi f] at t
double classical_delta1_apply(const C2Function1D& f, double t);

}  // namespace niltheta

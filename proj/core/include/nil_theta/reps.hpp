#pragma once

// Induced representations attached to the 4-dim orbits with the e = 0
// polarization.  The inducing subgroup is H0 = {(0, y, z, 0, v)} (abelian);
// the coset space H0\G is identified with R^2 through the section
// s(x, t) = (x, 0, 0, t, 0).  Everything algebraic here stays rational;
// complex phases appear only at evaluation time.

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nil_theta/lie.hpp"
#include "nil_theta/rational.hpp"

namespace niltheta {

using Function2D = std::function<std::complex<double>(double, double)>;

// Label of a maximal character trivial on the lattice part of H0.
struct IntegralPoint {
  long k = 1;  // nonzero level
  long m = 0;
  long n = 0;
};

struct HElement {
  Rational h2{0}, h3{0}, h5{0};
};

struct CosetCoords {
  Rational x{0}, t{0};
};

GroupElement embed(const HElement& h);       // (0, h2, h3, 0, h5)
GroupElement section(const CosetCoords& c);  // (x, 0, 0, t, 0)

// Solve s(x) g = h s(x') for h in H0 and the translated coset point x'.
std::pair<HElement, CosetCoords> master_solution(const CosetCoords& c,
                                                 const GroupElement& g);

// Exponent of the character over 2 pi i: lambda(h) = e^{2 pi i phase},
// phase = -(2 k h5 + m h2 - n h3).  Exact rational.
Rational character_phase(const IntegralPoint& p, const HElement& h);
std::complex<double> character(const IntegralPoint& p, const HElement& h);

// pi(g) f at the coset point: character(h) * f(x'), per the master solution.
std::complex<double> induced_rep_apply(const IntegralPoint& p, const GroupElement& g,
                                       const Function2D& f, const CosetCoords& at);

// Action of the base lattice coordinates (x0, t0) on the character labels:
// (m, n) -> (m - n x0 + 2 k t0 - k x0^2, n + 2 k x0).  An additive Z^2 action.
std::pair<long, long> gamma_action(long k, std::pair<long, long> gamma0,
                                   std::pair<long, long> mn);

// Representative of the gamma_action orbit inside {0..2|k|-1}^2.
std::pair<long, long> canonical_orbit_rep(long k, long m, long n);

// The fundamental domain {(m, n) : 0 <= m, n < 2|k|}; size 4 k^2.
std::vector<IntegralPoint> enumerate_integral_points(long k);
long multiplicity(long k);

// Pull the character lambda_p back through conjugation h -> g h g^-1.
// For lattice g the result is again an integral point (H0 is normal and
// conjugation fixes the level), and for g = (x0, 0, 0, t0, 0) it agrees with
// gamma_action.  nullopt when the pulled-back labels are not integers, which
// signals a non-lattice g.
std::optional<IntegralPoint> conjugated_point(const IntegralPoint& p,
                                              const GroupElement& g);

// First-order operator c0(x, t) + c1 d/dx + c2 d/dt obtained by
// differentiating the representation along a one-parameter subgroup.
// c0 is a polynomial, keyed by (x-degree, t-degree).
struct DerivedOperator {
  std::map<std::pair<int, int>, std::complex<double>> c0;
  std::complex<double> c1{0}, c2{0};

  std::complex<double> eval_c0(double x, double t) const;
  // caller supplies f and its first partials at (x, t)
  std::complex<double> apply(std::complex<double> f, std::complex<double> fx,
                             std::complex<double> ft, double x, double t) const;
};

DerivedOperator derived_rep(const LieVector& X, const IntegralPoint& p);

}  // namespace niltheta

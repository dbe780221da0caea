#pragma once

// Coadjoint orbits of the extended algebra and their subordinate subalgebras.
// Orbits come in three types: 4-dimensional (mu != 0), 2-dimensional (mu = 0,
// alpha3 != 0) and points.  A subordinate subalgebra for a covector lambda is
// a subalgebra on whose derived algebra lambda vanishes, of the maximal
// dimension admitted by the orbit type (3, 4, 5 respectively).

#include <vector>

#include "nil_theta/lie.hpp"
#include "nil_theta/rational.hpp"

namespace niltheta {

struct Covector {
  Rational alpha1{0}, alpha2{0}, alpha3{0}, rho{0}, mu{0};

  friend bool operator==(const Covector&, const Covector&) = default;
};

Rational pairing(const Covector& lam, const LieVector& x);

// Ad*(g) lambda; the central coordinate of g acts trivially.
Covector coadjoint_action(const GroupElement& g, const Covector& lam);

// <lambda, [x, y]>
Rational orbit_pairing(const Covector& lam, const LieVector& x, const LieVector& y);

enum class OrbitKind { FourDim, TwoDim, ZeroDim };

struct OrbitClass {
  OrbitKind kind;
  Covector canonical_rep;
};

OrbitClass classify_orbit(const Covector& lam);

// For mu != 0: the group element moving lambda to (0,0,0,0,mu).
GroupElement orbit_normalizer(const Covector& lam);

// Rational line with projective endpoints, used as family parameter.
struct ExtRational {
  enum Kind { Finite, PosInf, NegInf } kind = Finite;
  Rational value{0};

  static ExtRational finite(Rational v) { return {Finite, std::move(v)}; }
  static ExtRational pos_inf() { return {PosInf, Rational(0)}; }
  static ExtRational neg_inf() { return {NegInf, Rational(0)}; }
  bool infinite() const { return kind != Finite; }
};

enum class FamilyTag { C, BD, E };

struct SubalgebraSpec {
  std::vector<LieVector> basis;
  FamilyTag tag;
  ExtRational p1;  // c, b, or e
  ExtRational p2;  // d (BD only)
};

// The three 3-parameter families of subalgebras subordinate to covectors with
// mu != 0:
//   c-family:  span{X1 + c X3, T, U}            (c = inf: span{X3, T, U})
//   bd-family: span{X1 + b X2 + d T, X3 - (1/b) T, U},  b != 0
//   e-family:  span{X2 + e T, X3, U}            (e = +-inf: span{X3, T, U})
SubalgebraSpec subordinate_family(FamilyTag tag, const ExtRational& p1,
                                  const ExtRational& p2 = ExtRational::finite(Rational(0)));

// Exact rank / span membership over the rationals.
int rank(const std::vector<LieVector>& vecs);
bool in_span(const LieVector& x, const std::vector<LieVector>& vecs);

bool is_subalgebra(const std::vector<LieVector>& basis);
bool is_subordinate(const std::vector<LieVector>& basis, const Covector& lam);
bool is_ideal(const std::vector<LieVector>& basis);

}  // namespace niltheta

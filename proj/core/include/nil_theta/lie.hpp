#pragma once

// Central extension of Heis(3) x R, in canonical coordinates of the second
// kind g = exp(a1 X1) exp(a2 X2) exp(a3 X3) exp(r T) exp(v U).  Nonzero
// brackets: [X1,X2] = X3, [X1,X3] = -U = [X2,T].  The group law carries the
// extension cocycle psi in the v slot; everything here is exact.

#include <array>
#include <optional>
#include <utility>

#include "nil_theta/rational.hpp"

namespace niltheta {

struct LieVector {
  Rational x1{0}, x2{0}, x3{0}, t{0}, u{0};

  friend bool operator==(const LieVector&, const LieVector&) = default;
  friend LieVector operator+(const LieVector& a, const LieVector& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.t + b.t, a.u + b.u};
  }
  friend LieVector operator*(const Rational& c, const LieVector& a) {
    return {c * a.x1, c * a.x2, c * a.x3, c * a.t, c * a.u};
  }
};

LieVector bracket(const LieVector& x, const LieVector& y);

// Element of the base group G = Heis(3) x R (no central v coordinate).
struct BaseElement {
  Rational a1{0}, a2{0}, a3{0}, r{0};

  friend bool operator==(const BaseElement&, const BaseElement&) = default;
};

struct GroupElement {
  Rational a1{0}, a2{0}, a3{0}, r{0}, v{0};

  BaseElement base() const { return {a1, a2, a3, r}; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Extension cocycle: psi(g1, g2) = a3*b1 - (1/2) a2*b1^2 + r*b2.
Rational cocycle_psi(const BaseElement& g1, const BaseElement& g2);

BaseElement multiply(const BaseElement& g1, const BaseElement& g2);
BaseElement inverse(const BaseElement& g);
GroupElement multiply(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

inline GroupElement lift(const BaseElement& g, Rational v = Rational(0)) {
  return {g.a1, g.a2, g.a3, g.r, std::move(v)};
}

// Lattice subgroup: integer base coordinates, v in (1/2)Z.
struct LatticeElement {
  long n1 = 0, n2 = 0, n3 = 0, nr = 0;
  Rational v{0};  // constrained to (1/2)Z

  GroupElement to_group() const {
    return {Rational(n1), Rational(n2), Rational(n3), Rational(nr), v};
  }
  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

bool is_lattice(const GroupElement& g);

// gamma * g = g0 with a1,a2,a3,r in [0,1) and v in [0,1/2); reduction is done
// coordinate by coordinate in the order a1, a2, a3, r, v and certified post
// hoc by lattice membership of g0 * g^{-1}.
std::pair<LatticeElement, GroupElement> lattice_reduce(const GroupElement& g);

struct Matrix5 {
  std::array<std::array<Rational, 5>, 5> m{};

  static Matrix5 identity();
  static Matrix5 zero();
  Rational& operator()(int i, int j) { return m[i][j]; }
  const Rational& operator()(int i, int j) const { return m[i][j]; }
  friend bool operator==(const Matrix5&, const Matrix5&) = default;
  friend Matrix5 operator*(const Matrix5& a, const Matrix5& b);
  friend Matrix5 operator+(const Matrix5& a, const Matrix5& b);
  friend Matrix5 operator*(const Rational& c, const Matrix5& a);
};

// Faithful 5x5 unipotent representation (the homomorphism oracle for the
// group law) and the matching Lie algebra representation.
Matrix5 to_matrix(const GroupElement& g);
Matrix5 algebra_matrix(const LieVector& x);

// Terminating series for unipotent/nilpotent 5x5 matrices.
Matrix5 matrix_exp(const Matrix5& nilpotent);
Matrix5 matrix_log(const Matrix5& unipotent);

// Inverts to_matrix; returns nullopt unless the matrix has the exact shape
// produced by to_matrix.
std::optional<GroupElement> from_matrix(const Matrix5& m);

// Decomposes a Lie algebra matrix over the basis (X1,X2,X3,T,U); nullopt if
// the matrix is outside the span.
std::optional<LieVector> algebra_coordinates(const Matrix5& m);

}  // namespace niltheta

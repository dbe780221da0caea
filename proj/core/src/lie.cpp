#include "nil_theta/lie.hpp"

namespace niltheta {

LieVector bracket(const LieVector& x, const LieVector& y) {
  // [x,y] = (x1 y2 - x2 y1) X3 + (x3 y1 - x1 y3 + t_x y2 - x2 t_y) U
  LieVector z;
  z.x3 = x.x1 * y.x2 - x.x2 * y.x1;
  z.u = x.x3 * y.x1 - x.x1 * y.x3 + x.t * y.x2 - x.x2 * y.t;
  return z;
}

Rational cocycle_psi(const BaseElement& g1, const BaseElement& g2) {
  return g1.a3 * g2.a1 - g1.a2 * g2.a1 * g2.a1 / 2 + g1.r * g2.a2;
}

BaseElement multiply(const BaseElement& g1, const BaseElement& g2) {
  return {g1.a1 + g2.a1, g1.a2 + g2.a2, g1.a3 + g2.a3 - g1.a2 * g2.a1, g1.r + g2.r};
}

BaseElement inverse(const BaseElement& g) {
  return {-g.a1, -g.a2, -g.a3 - g.a1 * g.a2, -g.r};
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
  BaseElement b = multiply(g1.base(), g2.base());
  return {b.a1, b.a2, b.a3, b.r, g1.v + g2.v + cocycle_psi(g1.base(), g2.base())};
}

GroupElement inverse(const GroupElement& g) {
  BaseElement b = inverse(g.base());
  return {b.a1, b.a2, b.a3, b.r, -g.v - cocycle_psi(g.base(), b)};
}

bool is_lattice(const GroupElement& g) {
  return is_integer(g.a1) && is_integer(g.a2) && is_integer(g.a3) && is_integer(g.r) &&
         is_half_integer(g.v);
}

std::pair<LatticeElement, GroupElement> lattice_reduce(const GroupElement& g) {
  GroupElement cur = g;
  auto shift = [&cur](const GroupElement& s) { cur = multiply(s, cur); };

  // later shifts leave already-normalized coordinates untouched
  shift({Rational(-floor_long(cur.a1)), 0, 0, 0, 0});
  shift({0, Rational(-floor_long(cur.a2)), 0, 0, 0});
  shift({0, 0, Rational(-floor_long(cur.a3)), 0, 0});
  shift({0, 0, 0, Rational(-floor_long(cur.r)), 0});
  shift({0, 0, 0, 0, rat(-floor_long(cur.v * 2), 2)});

  GroupElement gam = multiply(cur, inverse(g));
  if (!is_lattice(gam)) throw std::logic_error("lattice_reduce produced non-lattice factor");
  LatticeElement gamma{floor_long(gam.a1), floor_long(gam.a2), floor_long(gam.a3),
                       floor_long(gam.r), gam.v};
  return {gamma, cur};
}

Matrix5 Matrix5::identity() {
  Matrix5 r;
  for (int i = 0; i < 5; ++i) r(i, i) = 1;
  return r;
}

Matrix5 Matrix5::zero() { return {}; }

Matrix5 operator*(const Matrix5& a, const Matrix5& b) {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < 5; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

Matrix5 operator+(const Matrix5& a, const Matrix5& b) {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix5 operator*(const Rational& c, const Matrix5& a) {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(i, j) = c * a(i, j);
  return r;
}

Matrix5 to_matrix(const GroupElement& g) {
  const Rational &a1 = g.a1, &a2 = g.a2, &a3 = g.a3, &r = g.r, &v = g.v;
  Matrix5 m = Matrix5::identity();
  m(0, 1) = a1;
  m(0, 2) = a2;
  m(0, 3) = 2 * a3 + a1 * a2;
  m(0, 4) = 3 * v - 3 * r * a2 + a2 * a2 / 2 - a1 * a3;
  m(1, 3) = a2;
  m(1, 4) = -a3;
  m(2, 3) = -a1;
  m(2, 4) = -3 * r - a1 * a1 / 2 + a2;
  m(3, 4) = a1;
  return m;
}

Matrix5 algebra_matrix(const LieVector& x) {
  Matrix5 m;
  m(0, 1) = x.x1;
  m(2, 3) = -x.x1;
  m(3, 4) = x.x1;
  m(0, 2) = x.x2;
  m(1, 3) = x.x2;
  m(2, 4) = x.x2 - 3 * x.t;
  m(0, 3) = 2 * x.x3;
  m(1, 4) = -x.x3;
  m(0, 4) = 3 * x.u;
  return m;
}

Matrix5 matrix_exp(const Matrix5& n) {
  Matrix5 r = Matrix5::identity();
  Matrix5 p = Matrix5::identity();
  Rational f(1);
  for (int j = 1; j <= 4; ++j) {
    p = p * n;
    f /= j;
    r = r + f * p;
  }
  return r;
}

Matrix5 matrix_log(const Matrix5& u) {
  Matrix5 n = u + rat(-1) * Matrix5::identity();
  Matrix5 r = Matrix5::zero();
  Matrix5 p = Matrix5::identity();
  for (int j = 1; j <= 4; ++j) {
    p = p * n;
    r = r + rat(j % 2 ? 1 : -1, j) * p;
  }
  return r;
}

std::optional<GroupElement> from_matrix(const Matrix5& m) {
  GroupElement g;
  g.a1 = m(0, 1);
  g.a2 = m(0, 2);
  g.a3 = -m(1, 4);
  g.r = (g.a2 - g.a1 * g.a1 / 2 - m(2, 4)) / 3;
  g.v = (m(0, 4) + 3 * g.r * g.a2 - g.a2 * g.a2 / 2 + g.a1 * g.a3) / 3;
  if (to_matrix(g) == m) return g;
  return std::nullopt;
}

std::optional<LieVector> algebra_coordinates(const Matrix5& m) {
  LieVector x;
  x.x1 = m(0, 1);
  x.x2 = m(0, 2);
  x.x3 = m(0, 3) / 2;
  x.t = (x.x2 - m(2, 4)) / 3;
  x.u = m(0, 4) / 3;
  if (algebra_matrix(x) == m) return x;
  return std::nullopt;
}

}  // namespace niltheta

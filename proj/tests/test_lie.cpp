#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nil_theta/lie.hpp"

using namespace niltheta;

namespace {
Rational rr(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-48, 48);
  std::uniform_int_distribution<long> den(1, 12);
  return rat(num(rng), den(rng));
}
GroupElement rg(std::mt19937_64& rng) {
  return {rr(rng), rr(rng), rr(rng), rr(rng), rr(rng)};
}
LieVector rv(std::mt19937_64& rng) {
  return {rr(rng), rr(rng), rr(rng), rr(rng), rr(rng)};
}
}  // namespace

TEST_CASE("bracket: antisymmetry, Jacobi, matrix commutator") {
  std::mt19937_64 rng(1);
  const LieVector zero{};
  for (int i = 0; i < 200; ++i) {
    LieVector x = rv(rng), y = rv(rng), z = rv(rng);
    CHECK(bracket(x, y) + bracket(y, x) == zero);
    LieVector jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                    bracket(z, bracket(x, y));
    CHECK(jac == zero);
    Matrix5 lhs = algebra_matrix(bracket(x, y));
    Matrix5 rhs = algebra_matrix(x) * algebra_matrix(y) +
                  rat(-1) * (algebra_matrix(y) * algebra_matrix(x));
    CHECK(lhs == rhs);
  }
  LieVector X1{rat(1), rat(0), rat(0), rat(0), rat(0)};
  LieVector X2{rat(0), rat(1), rat(0), rat(0), rat(0)};
  LieVector X3{rat(0), rat(0), rat(1), rat(0), rat(0)};
  LieVector T{rat(0), rat(0), rat(0), rat(1), rat(0)};
  LieVector U{rat(0), rat(0), rat(0), rat(0), rat(1)};
  CHECK(bracket(X1, X2) == X3);
  CHECK(bracket(X1, X3) == rat(-1) * U);
  CHECK(bracket(X2, T) == rat(-1) * U);
  CHECK(bracket(X3, T) == zero);
  CHECK(bracket(U, X1) == zero);
}

TEST_CASE("group law: associativity, identity, inverses") {
  std::mt19937_64 rng(2);
  const GroupElement e{};
  for (int i = 0; i < 300; ++i) {
    GroupElement g1 = rg(rng), g2 = rg(rng), g3 = rg(rng);
    CHECK(multiply(multiply(g1, g2), g3) == multiply(g1, multiply(g2, g3)));
    CHECK(multiply(g1, e) == g1);
    CHECK(multiply(e, g1) == g1);
    CHECK(multiply(g1, inverse(g1)) == e);
    CHECK(multiply(inverse(g1), g1) == e);
    // base group multiplication is the v-forgetful quotient
    CHECK(multiply(g1.base(), g2.base()) == multiply(g1, g2).base());
  }
  CHECK(cocycle_psi(e.base(), e.base()) == rat(0));
}

TEST_CASE("matrix model: homomorphism and inversion") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    GroupElement g1 = rg(rng), g2 = rg(rng);
    CHECK(to_matrix(multiply(g1, g2)) == to_matrix(g1) * to_matrix(g2));
    auto back = from_matrix(to_matrix(g1));
    REQUIRE(back.has_value());
    CHECK(*back == g1);
  }
  // inverse through the matrix model
  GroupElement g{rat(1, 3), rat(-2, 5), rat(7), rat(-1, 2), rat(4, 9)};
  auto inv = from_matrix(to_matrix(inverse(g)));
  REQUIRE(inv.has_value());
  CHECK(multiply(g, *inv) == GroupElement{});
  // a matrix not of the model shape is rejected
  Matrix5 bad = Matrix5::identity();
  bad(3, 0) = rat(1);
  CHECK(!from_matrix(bad).has_value());
}

TEST_CASE("exp/log between the algebra and group models") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    LieVector x = rv(rng);
    Matrix5 X = algebra_matrix(x);
    CHECK(matrix_log(matrix_exp(X)) == X);
    auto coords = algebra_coordinates(X);
    REQUIRE(coords.has_value());
    CHECK(*coords == x);
    GroupElement g = rg(rng);
    CHECK(matrix_exp(matrix_log(to_matrix(g))) == to_matrix(g));
  }
  // one-parameter subgroups of the coordinate directions
  for (int gen = 0; gen < 5; ++gen) {
    LieVector x{};
    GroupElement g{};
    Rational s = rat(3, 7);
    switch (gen) {
      case 0: x.x1 = s; g.a1 = s; break;
      case 1: x.x2 = s; g.a2 = s; break;
      case 2: x.x3 = s; g.a3 = s; break;
      case 3: x.t = s; g.r = s; break;
      case 4: x.u = s; g.v = s; break;
    }
    CHECK(matrix_exp(algebra_matrix(x)) == to_matrix(g));
  }
}

TEST_CASE("lattice membership and reduction") {
  std::mt19937_64 rng(5);
  CHECK(is_lattice(GroupElement{rat(1), rat(-3), rat(2), rat(0), rat(5, 2)}));
  CHECK(!is_lattice(GroupElement{rat(1, 2), rat(0), rat(0), rat(0), rat(0)}));
  CHECK(!is_lattice(GroupElement{rat(1), rat(0), rat(0), rat(0), rat(1, 3)}));
  for (int i = 0; i < 200; ++i) {
    GroupElement g = rg(rng);
    auto [gamma, g0] = lattice_reduce(g);
    CHECK(multiply(gamma.to_group(), g) == g0);
    CHECK(g0.a1 >= 0);
    CHECK(g0.a1 < 1);
    CHECK(g0.a2 >= 0);
    CHECK(g0.a2 < 1);
    CHECK(g0.a3 >= 0);
    CHECK(g0.a3 < 1);
    CHECK(g0.r >= 0);
    CHECK(g0.r < 1);
    CHECK(g0.v >= 0);
    CHECK(g0.v < Rational(1, 2));
    CHECK(is_lattice(multiply(g0, inverse(g))));
  }
}

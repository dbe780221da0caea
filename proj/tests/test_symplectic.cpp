#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "nil_theta/forms.hpp"
#include "nil_theta/symplectic.hpp"

using namespace niltheta;

namespace {
const LieVector X1{rat(1), rat(0), rat(0), rat(0), rat(0)};
const LieVector X2{rat(0), rat(1), rat(0), rat(0), rat(0)};
const LieVector X3{rat(0), rat(0), rat(1), rat(0), rat(0)};
const LieVector T{rat(0), rat(0), rat(0), rat(1), rat(0)};
const LieVector U{rat(0), rat(0), rat(0), rat(0), rat(1)};
}  // namespace

TEST_CASE("structure equations and d^2 = 0") {
  for (int dir = 0; dir < kFormDirections; ++dir) {
    auto b = KForm<Rational>::basis({dir});
    CHECK(exterior_d(exterior_d(b)).is_zero());
  }
  // d b3 = -b1 ^ b2
  auto db3 = exterior_d(KForm<Rational>::basis({2}));
  auto b1b2 = wedge(KForm<Rational>::basis({0}), KForm<Rational>::basis({1}));
  CHECK((db3 + b1b2).is_zero());
  // Leibniz: d(b1 ^ bU) = -b1 ^ d bU = -b1 ^ b2 ^ bT
  auto lhs = exterior_d(wedge(KForm<Rational>::basis({0}), KForm<Rational>::basis({4})));
  auto rhs = rat(-1) * wedge(KForm<Rational>::basis({0}),
                             wedge(KForm<Rational>::basis({1}), KForm<Rational>::basis({3})));
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("omega: closed, invariantly paired on the base frame") {
  CHECK(exterior_d(omega_normalized()).is_zero());
  CHECK(evaluate2(omega_normalized(), X1, X3) == rat(1));
  CHECK(evaluate2(omega_normalized(), X2, T) == rat(1));
  CHECK(evaluate2(omega_normalized(), X1, X2) == rat(0));
  CHECK(evaluate2(omega_normalized(), X1, T) == rat(0));
  CHECK(std::abs(evaluate2(omega(), X1, X3) - 2 * M_PI) < 1e-15);
}

TEST_CASE("Lagrangian planes of the base") {
  CHECK(is_lagrangian({X1, X2}));   // omega(X1, X2) = 0
  CHECK(is_lagrangian({X3, T}));
  CHECK(is_lagrangian({X2, X3}));
  CHECK(!is_lagrangian({X1, X3}));  // omega(X1, X3) = 1
  CHECK(!is_lagrangian({X2, T}));
  CHECK_THROWS(is_lagrangian({X1, U}));        // not a base subspace
  CHECK_THROWS(is_lagrangian({X1, rat(2) * X1}));  // not a plane
}

TEST_CASE("subalgebra <-> Lagrangian round trips") {
  for (long n : {-3L, 0L, 2L}) {
    auto sub = subordinate_family(FamilyTag::E, ExtRational::finite(rat(n)));
    auto L = subalgebra_to_lagrangian(sub.basis);
    CHECK(is_lagrangian(L));
    auto back = lagrangian_to_subalgebra(L);
    REQUIRE(back.has_value());
    CHECK(rank(*back) == 3);
    CHECK(is_subalgebra(*back));
    for (const auto& v : sub.basis) CHECK(in_span(v, *back));
  }
  // span{X1, X2} is Lagrangian but not closed under the bracket after adding U
  CHECK(is_lagrangian({X1, X2}));
  CHECK(!lagrangian_to_subalgebra({X1, X2}).has_value());
}

TEST_CASE("numeric CY structures across the parameter range") {
  for (const char* es : {"0", "1", "-1", "2", "1/3", "-7/5"}) {
    CAPTURE(es);
    Rational e = parse_rational(es);
    CYStructure cy = cy_structure(e);
    CYReport rep = verify_cy(cy);
    CHECK(rep.pass(1e-10));
    CHECK(rep.metric_min_eigenvalue > 0);
    CHECK(std::abs(rep.volume_ratio - std::complex<double>(1, 0)) < 1e-10);
    CHECK(std::abs(rep.det_im_omega - 1.0) < 1e-10);
    // the leaf plane is special Lagrangian, a generic plane is not
    LieVector le = X2 + e * T;
    CHECK(is_special_lagrangian({le, X3}, cy));
    CHECK(!is_special_lagrangian({X1, X2}, cy));
  }
}

TEST_CASE("exact CY structures at perfect-square parameters") {
  CHECK(has_exact_cy(rat(0)));
  CHECK(has_exact_cy(rat(1)));
  CHECK(has_exact_cy(rat(-1)));
  CHECK(has_exact_cy(rat(4)));
  CHECK(has_exact_cy(rat(9, 4)));
  CHECK(!has_exact_cy(rat(2)));
  CHECK(!has_exact_cy(rat(1, 3)));
  for (const char* es : {"0", "1", "-1", "4", "9/4"}) {
    CAPTURE(es);
    Rational e = parse_rational(es);
    CYStructureExact cy = cy_structure_exact(e);
    CHECK(cy.sqrt_abs_e * cy.sqrt_abs_e == (e < 0 ? -e : e));
    CHECK(verify_cy_exact(cy).pass());
    LieVector le = X2 + e * T;
    CHECK(is_special_lagrangian_exact({le, X3}, cy));
    CHECK(!is_special_lagrangian_exact({X1, X2}, cy));
  }
}

TEST_CASE("exact and numeric structures agree where both exist") {
  for (const char* es : {"0", "1", "-1", "4"}) {
    Rational e = parse_rational(es);
    CYStructure num = cy_structure(e);
    CYStructureExact ex = cy_structure_exact(e);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(std::abs(num.J[i][j] - to_double(ex.J[i][j])) < 1e-12);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(num.Omega[i][j].real() - to_double(ex.Omega[i][j].re)) < 1e-12);
        CHECK(std::abs(num.Omega[i][j].imag() - to_double(ex.Omega[i][j].im)) < 1e-12);
      }
  }
}

TEST_CASE("Hamiltonian frame: contraction and Poisson relations") {
  std::vector<BaseElement> pts;
  for (int i = -2; i <= 2; ++i)
    pts.push_back(BaseElement{rat(i, 3), rat(2 * i + 1, 5), rat(i * i - 2, 7), rat(-i, 2)});
  auto rep = verify_hamiltonian_frame(pts);
  CHECK(rep.pass());
  CHECK(rep.max_contraction_residual < 1e-12);
  CHECK(rep.max_poisson_residual < 1e-12);
}

TEST_CASE("leaf compactness by parameter arithmetic") {
  QuadraticIrrational xr{rat(3, 2), rat(0), 5};   // rational value
  QuadraticIrrational xi{rat(1), rat(1), 5};      // 1 + sqrt 5
  QuadraticIrrational xs{rat(1), rat(2), 9};      // 1 + 2*3, rational after all
  CHECK(xr.is_rational());
  CHECK(!xi.is_rational());
  CHECK(xs.is_rational());
  CHECK(is_torus_fiber(ExtRational::finite(rat(1)), xr));
  CHECK(!is_torus_fiber(ExtRational::finite(rat(1)), xi));
  CHECK(is_torus_fiber(ExtRational::finite(rat(0)), xi));  // degenerate e
  CHECK(is_torus_fiber(ExtRational::pos_inf(), xi));
  CHECK(is_torus_fiber(ExtRational::finite(rat(1)), xs));
}

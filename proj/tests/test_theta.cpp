#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "nil_theta/quadrature.hpp"
#include "nil_theta/theta.hpp"

using namespace niltheta;
using C = std::complex<double>;

TEST_CASE("window certificate: monotone, sufficient, enforced") {
  GaussianSpec spec{0.1, -0.3, 1.1, 0.8};
  CHECK(required_window(spec, 2.0, 1e-8) <= required_window(spec, 2.0, 1e-14));
  CHECK(required_window(spec, 1.0, 1e-10) <= required_window(spec, 3.0, 1e-10));
  TruncationWindow w = auto_window(spec, 2.0, 1e-12);
  CHECK(w.W >= required_window(spec, 2.0, 1e-12));

  // a window certified for small reach refuses far evaluation points
  WindowedFunction wf = gaussian2d(spec);
  TruncationWindow tight = auto_window(spec, 0.5, 1e-12);
  IntegralPoint p{1, 0, 0};
  CHECK_THROWS(theta_R4(p, wf, R4Point{3.5, 0, 0, 0}, tight));

  // enlarging a certified window does not move the value beyond the tolerance
  TruncationWindow wide{w.W + 6, w.tol};
  R4Point pt{0.3, 0.7, 0.1, 0.4};
  CHECK(std::abs(theta_R4(p, wf, pt, w) - theta_R4(p, wf, pt, wide)) < 2e-12);
}

TEST_CASE("pseudoperiodicity under a certified window, factors from the cocycle") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> num(-64, 64);
  for (long k : {1L, 2L}) {
    CAPTURE(k);
    IntegralPoint p{k, 1, 0};
    GaussianSpec spec{0.1, -0.3, 1.1, 0.8};
    WindowedFunction wf = gaussian2d(spec);
    TruncationWindow w = auto_window(spec, 3.0, 1e-13);
    for (int trial = 0; trial < 6; ++trial) {
      BaseElement pt{rat(num(rng), 64), rat(num(rng), 64), rat(num(rng), 64),
                     rat(num(rng), 64)};
      auto rep = check_pseudoperiodicity(p, wf, pt, w);
      CHECK(rep.max_residual() < 1e-10);
      CHECK(rep.max_factor_mismatch() < 1e-13);
    }
  }
}

TEST_CASE("theta_map is invariant under left lattice translation") {
  IntegralPoint p{1, 1, 1};
  GaussianSpec spec{0.0, 0.0, 1.0, 1.0};
  WindowedFunction wf = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 4.0, 1e-13);
  GroupElement g{rat(1, 3), rat(-1, 5), rat(2, 7), rat(1, 2), rat(1, 4)};
  for (const auto& gam :
       {GroupElement{rat(1), rat(0), rat(0), rat(0), rat(0)},
        GroupElement{rat(0), rat(1), rat(0), rat(0), rat(0)},
        GroupElement{rat(0), rat(0), rat(1), rat(0), rat(1, 2)},
        GroupElement{rat(-2), rat(1), rat(3), rat(1), rat(-1, 2)}}) {
    C base = theta_map(p, wf, g, w);
    C moved = theta_map(p, wf, multiply(gam, g), w);
    CHECK(std::abs(moved - base) < 1e-11);
  }
}

TEST_CASE("theta_map is k-equivariant in the central coordinate") {
  IntegralPoint p{2, 0, 1};
  GaussianSpec spec{0.0, 0.0, 1.0, 1.0};
  WindowedFunction wf = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 3.0, 1e-13);
  GroupElement g{rat(1, 4), rat(-1, 3), rat(1, 6), rat(1, 5), rat(0)};
  C base = theta_map(p, wf, g, w);
  for (const char* us : {"1/8", "-2/3", "5/7"}) {
    Rational u = parse_rational(us);
    GroupElement gu = g;
    gu.v = u;
    C got = theta_map(p, wf, gu, w);
    C expect = std::polar(1.0, -4 * M_PI * p.k * to_double(u)) * base;
    CHECK(std::abs(got - expect) < 1e-11);
  }
}

TEST_CASE("intertwining with the induced representation") {
  IntegralPoint p{1, 0, 1};
  GaussianSpec spec{0.0, 0.0, 1.0, 1.0};
  WindowedFunction wf = gaussian2d(spec);
  GroupElement g{Rational(1, 3), Rational(-1, 2), Rational(1, 5), Rational(2, 7),
                 Rational(1, 4)};
  std::vector<GroupElement> samples;
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> num(-8, 8);
  for (int i = 0; i < 5; ++i)
    samples.push_back(GroupElement{rat(num(rng), 16), rat(num(rng), 16),
                                   rat(num(rng), 16), rat(num(rng), 16),
                                   rat(num(rng), 16)});
  TruncationWindow w = auto_window(spec, 4.0, 1e-13);
  CHECK(check_intertwining(p, wf, g, samples, w) < 1e-9);
}

TEST_CASE("unitarity normalization of the domain pairing") {
  IntegralPoint p{1, 0, 0};
  GaussianSpec spec{0.0, 0.0, 1.0, 1.0};
  WindowedFunction wf = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 2.0, 1e-12);
  SectionEvaluator F = [&](const R4Point& pt) { return theta_R4(p, wf, pt, w); };
  // <f, f>_{L^2(R^2)} = 1/2 for the unit Gaussian, so the pairing gives 1
  double lhs = inner_product_P(F, F, 12).real();
  CHECK(std::abs(lhs - 1.0) < 1e-3);
}

TEST_CASE("Weil-Brezin transform matches the Jacobi series on the torus") {
  Function1D f = [](double t) { return std::exp(-M_PI * t * t); };
  for (auto [x, y] : {std::pair{0.2, 0.3}, std::pair{-0.4, 0.7}, std::pair{0.0, 1.0}}) {
    C wb = weil_brezin_torus(1, f, x, y, 0.0, 10);
    C jac = jacobi_theta(C(x, y), 12) * std::exp(-M_PI * y * y);
    CHECK(std::abs(wb - jac) < 1e-12);
  }
  // the circle coordinate enters as the k-th character
  for (long k : {1L, 3L}) {
    C with_phi = weil_brezin_torus(k, f, 0.2, 0.3, 0.25, 10);
    C base = weil_brezin_torus(k, f, 0.2, 0.3, 0.0, 10);
    CHECK(std::abs(with_phi - std::polar(1.0, -2 * M_PI * k * 0.25) * base) < 1e-13);
  }
}

TEST_CASE("classical oscillator oracle") {
  auto g0 = classical_ground();
  auto g1 = classical_first();
  for (double t : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
    CHECK(std::abs(classical_delta1_apply(g0, t)) < 1e-12);
    CHECK(std::abs(classical_delta1_apply(g1, t) - M_PI * g1.f(t)) < 1e-12);
  }
}

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
  Quadrature q = gauss_legendre01(8);
  // degree 15 monomial: int_0^1 x^15 = 1/16
  double acc = 0;
  for (size_t i = 0; i < q.nodes.size(); ++i)
    acc += q.weights[i] * std::pow(q.nodes[i], 15);
  CHECK(std::abs(acc - 1.0 / 16) < 1e-14);
  double wsum = 0;
  for (double wgt : q.weights) wsum += wgt;
  CHECK(std::abs(wsum - 1.0) < 1e-14);
}

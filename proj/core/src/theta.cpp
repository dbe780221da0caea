#include "nil_theta/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nil_theta/quadrature.hpp"

namespace niltheta {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

std::complex<double> cis(double arg) { return {std::cos(arg), std::sin(arg)}; }

// exp(2 pi i theta) for exact rational theta, reduced mod 1 first
std::complex<double> unit_phase(const Rational& theta) {
  Rational red = theta - Rational(floor_long(theta));
  return cis(kTau * to_double(red));
}
}  // namespace

WindowedFunction gaussian2d(const GaussianSpec& spec) {
  if (spec.sigma <= 0) throw std::invalid_argument("gaussian width must be positive");
  GaussianSpec s = spec;
  return {[s](double x, double t) -> std::complex<double> {
            const double dx = x - s.x0, dt = t - s.t0;
            return s.amplitude *
                   std::exp(-std::numbers::pi * (dx * dx + dt * dt) / (s.sigma * s.sigma));
          },
          spec};
}

int required_window(const GaussianSpec& bound, double max_coord, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const double s = bound.sigma;
  const double c = 4.0 * bound.amplitude * (1 + s) * (1 + s);
  double rho = 1.0;
  if (c > tol) rho = std::max(1.0, s * std::sqrt(std::log(c / tol) / std::numbers::pi));
  return static_cast<int>(std::ceil(max_coord + rho)) + 1;
}

TruncationWindow auto_window(const GaussianSpec& bound, double max_coord, double tol) {
  return {required_window(bound, max_coord, tol), tol};
}

std::complex<double> theta_map(const IntegralPoint& p, const WindowedFunction& f,
                               const GroupElement& g, const TruncationWindow& w) {
  if (p.k == 0) throw std::invalid_argument("level k must be nonzero");
  const double x = to_double(g.a1), y = to_double(g.a2), z = to_double(g.a3),
               t = to_double(g.r), u = to_double(g.v);
  const double k = static_cast<double>(p.k);
  const double m = static_cast<double>(p.m);
  const double n = static_cast<double>(p.n);

  const double reach = std::max(std::abs(x - f.bound.x0), std::abs(t - f.bound.t0));
  if (w.W < required_window(f.bound, reach, w.tol))
    throw std::invalid_argument("truncation window too small for requested tolerance");

  // prefactor e^{-2 pi i (m y - n (z + x y))} e^{-4 pi i k (u - z x)}
  const std::complex<double> pre =
      cis(kTau * (-(m * y - n * (z + x * y)) - 2 * k * (u - z * x)));

  std::complex<double> sum = 0;
  for (int a = -w.W; a <= w.W; ++a) {
    const double xa = x + a;
    for (int b = -w.W; b <= w.W; ++b) {
      // e^{2 pi i n y a} e^{-4 pi i k (b y - z a - (y/2)(x+a)^2)}
      const double arg = kTau * (n * y * a - 2 * k * (b * y - z * a - 0.5 * y * xa * xa));
      sum += cis(arg) * f.f(xa, t + b);
    }
  }
  return pre * sum;
}

std::complex<double> theta_R4(const IntegralPoint& p, const WindowedFunction& f,
                              const R4Point& pt, const TruncationWindow& w) {
  GroupElement g{Rational(pt.x), Rational(pt.y), Rational(pt.z), Rational(pt.t), 0};
  return theta_map(p, f, g, w);
}

double PseudoperiodicityReport::max_residual() const {
  double r = 0;
  for (double v : residual) r = std::max(r, v);
  return r;
}

double PseudoperiodicityReport::max_factor_mismatch() const {
  double r = 0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(factor[i] - cocycle_factor[i]));
  return r;
}

PseudoperiodicityReport check_pseudoperiodicity(const IntegralPoint& p,
                                                const WindowedFunction& f,
                                                const BaseElement& pt,
                                                const TruncationWindow& w) {
  PseudoperiodicityReport rep;
  const double x = to_double(pt.a1), y = to_double(pt.a2);
  const double k = static_cast<double>(p.k);

  const GroupElement base = lift(pt);
  const std::complex<double> v0 = theta_map(p, f, base, w);

  const BaseElement shifts[4] = {
      BaseElement{pt.a1 + 1, pt.a2, pt.a3, pt.r},
      BaseElement{pt.a1, pt.a2 + 1, pt.a3 - pt.a1, pt.r},
      BaseElement{pt.a1, pt.a2, pt.a3 + 1, pt.r},
      BaseElement{pt.a1, pt.a2, pt.a3, pt.r + 1},
  };
  rep.factor[0] = 1.0;
  rep.factor[1] = cis(-kTau * k * x * x);
  rep.factor[2] = cis(2 * kTau * k * x);
  rep.factor[3] = cis(2 * kTau * k * y);

  const BaseElement gens[4] = {
      BaseElement{1, 0, 0, 0},
      BaseElement{0, 1, 0, 0},
      BaseElement{0, 0, 1, 0},
      BaseElement{0, 0, 0, 1},
  };
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> lhs = theta_map(p, f, lift(shifts[i]), w);
    rep.residual[i] = std::abs(lhs - rep.factor[i] * v0);
    // e^{-4 pi i k psi(gamma^-1, g)} = e^{2 pi i (-2k psi)}
    rep.cocycle_factor[i] = unit_phase(Rational(-2 * p.k) * cocycle_psi(inverse(gens[i]), pt));
  }
  return rep;
}

double check_intertwining(const IntegralPoint& p, const WindowedFunction& f,
                          const GroupElement& g,
                          const std::vector<GroupElement>& samples,
                          const TruncationWindow& w) {
  // pi(g) f, with the decay certificate translated by the coset shift
  WindowedFunction moved;
  moved.bound = f.bound;
  moved.bound.x0 -= to_double(g.a1);
  moved.bound.t0 -= to_double(g.r);
  Function2D inner = f.f;
  IntegralPoint pp = p;
  GroupElement gg = g;
  moved.f = [pp, gg, inner](double x, double t) {
    return induced_rep_apply(pp, gg, inner, CosetCoords{Rational(x), Rational(t)});
  };

  double worst = 0;
  for (const auto& s : samples) {
    const std::complex<double> lhs = theta_map(p, moved, s, w);
    const std::complex<double> rhs = theta_map(p, f, multiply(s, g), w);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::complex<double> inner_product_P(const SectionEvaluator& F, const SectionEvaluator& G,
                                     int nodes_per_axis) {
  // vol((lattice cap H0)\H0) = 1/2, so the pairing carries a factor 2 to make
  // the periodizing map an isometry up to that volume.
  const Quadrature q = gauss_legendre01(nodes_per_axis);
  std::complex<double> acc = 0;
  for (int i = 0; i < nodes_per_axis; ++i)
    for (int j = 0; j < nodes_per_axis; ++j)
      for (int l = 0; l < nodes_per_axis; ++l)
        for (int r = 0; r < nodes_per_axis; ++r) {
          const R4Point pt{q.nodes[i], q.nodes[j], q.nodes[l], q.nodes[r]};
          const double wt = q.weights[i] * q.weights[j] * q.weights[l] * q.weights[r];
          acc += wt * F(pt) * std::conj(G(pt));
        }
  return 2.0 * acc;
}

std::complex<double> weil_brezin_torus(long k, const Function1D& f, double x, double y,
                                       double phi, int W) {
  std::complex<double> sum = 0;
  for (int mm = -W; mm <= W; ++mm) sum += f(y + mm) * cis(kTau * mm * x);
  return cis(-kTau * k * phi) * sum;
}

std::complex<double> jacobi_theta(std::complex<double> z, int W) {
  std::complex<double> sum = 0;
  for (int n = -W; n <= W; ++n) {
    const std::complex<double> iz(-z.imag(), z.real());
    sum += std::exp(-std::numbers::pi * n * n + kTau * static_cast<double>(n) * iz);
  }
  return sum;
}

C2Function1D classical_ground() {
  return {[](double t) { return std::exp(-std::numbers::pi * t * t); },
          [](double t) {
            const double pi = std::numbers::pi;
            return (4 * pi * pi * t * t - 2 * pi) * std::exp(-pi * t * t);
          }};
}

C2Function1D classical_first() {
  return {[](double t) { return t * std::exp(-std::numbers::pi * t * t); },
          [](double t) {
            const double pi = std::numbers::pi;
            return (4 * pi * pi * t * t - 6 * pi) * t * std::exp(-pi * t * t);
          }};
}

double classical_delta1_apply(const C2Function1D& f, double t) {
  const double pi = std::numbers::pi;
  return -0.25 * (f.d2(t) - 4 * pi * pi * t * t * f.f(t) + 2 * pi * f.f(t));
}

}  // namespace niltheta

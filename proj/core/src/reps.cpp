#include "nil_theta/reps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace niltheta {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

// exp(2 pi i theta) with theta reduced mod 1 first, for phase accuracy
std::complex<double> unit_phase(const Rational& theta) {
  Rational red = theta - Rational(floor_long(theta));
  double t = to_double(red);
  return {std::cos(kTau * t), std::sin(kTau * t)};
}
}  // namespace

GroupElement embed(const HElement& h) { return GroupElement{0, h.h2, h.h3, 0, h.h5}; }

GroupElement section(const CosetCoords& c) { return GroupElement{c.x, 0, 0, c.t, 0}; }

std::pair<HElement, CosetCoords> master_solution(const CosetCoords& c,
                                                 const GroupElement& g) {
  const Rational &x = c.x, &t = c.t;
  const Rational &a = g.a1, &b = g.a2, &cc = g.a3, &r = g.r, &v = g.v;
  HElement h;
  h.h2 = b;
  h.h3 = cc + b * (x + a);
  h.h5 = v + b * t - cc * (x + a) - a * b * x - b * (x * x + a * a) / 2;
  CosetCoords out{x + a, t + r};
  return {h, out};
}

Rational character_phase(const IntegralPoint& p, const HElement& h) {
  if (p.k == 0) throw std::invalid_argument("level k must be nonzero");
  return -(2 * p.k * h.h5 + p.m * h.h2 - p.n * h.h3);
}

std::complex<double> character(const IntegralPoint& p, const HElement& h) {
  return unit_phase(character_phase(p, h));
}

std::complex<double> induced_rep_apply(const IntegralPoint& p, const GroupElement& g,
                                       const Function2D& f, const CosetCoords& at) {
  auto [h, moved] = master_solution(at, g);
  return character(p, h) * f(to_double(moved.x), to_double(moved.t));
}

std::pair<long, long> gamma_action(long k, std::pair<long, long> gamma0,
                                   std::pair<long, long> mn) {
  if (k == 0) throw std::invalid_argument("level k must be nonzero");
  const auto [x0, t0] = gamma0;
  const auto [m, n] = mn;
  return {m - n * x0 + 2 * k * t0 - k * x0 * x0, n + 2 * k * x0};
}

std::pair<long, long> canonical_orbit_rep(long k, long m, long n) {
  if (k == 0) throw std::invalid_argument("level k must be nonzero");
  const long K = 2 * std::labs(k);
  auto mod = [K](long v) { return ((v % K) + K) % K; };
  const long nhat = mod(n);
  const long x0 = (nhat - n) / (2 * k);
  const long m1 = m - n * x0 - k * x0 * x0;
  const long mhat = mod(m1);
  return {mhat, nhat};
}

std::vector<IntegralPoint> enumerate_integral_points(long k) {
  if (k == 0) throw std::invalid_argument("level k must be nonzero");
  const long K = 2 * std::labs(k);
  std::vector<IntegralPoint> pts;
  pts.reserve(static_cast<size_t>(K * K));
  for (long m = 0; m < K; ++m)
    for (long n = 0; n < K; ++n) pts.push_back(IntegralPoint{k, m, n});
  return pts;
}

long multiplicity(long k) { return static_cast<long>(enumerate_integral_points(k).size()); }

std::optional<IntegralPoint> conjugated_point(const IntegralPoint& p,
                                              const GroupElement& g) {
  auto pulled_phase = [&](const HElement& h) {
    GroupElement u = multiply(multiply(g, embed(h)), inverse(g));
    // conjugation preserves H0 (a1 and r components stay zero)
    HElement uh{u.a2, u.a3, u.v};
    return character_phase(p, uh);
  };
  const Rational base = pulled_phase(HElement{0, 0, 0});
  if (!is_integer(base)) return std::nullopt;
  const Rational mcoef = -(pulled_phase(HElement{1, 0, 0}) - base);
  const Rational ncoef = pulled_phase(HElement{0, 1, 0}) - base;
  const Rational vcoef = pulled_phase(HElement{0, 0, 1}) - base;
  if (vcoef != Rational(-2 * p.k)) throw std::logic_error("level changed under conjugation");
  if (!is_integer(mcoef) || !is_integer(ncoef)) return std::nullopt;
  return IntegralPoint{p.k, floor_long(mcoef), floor_long(ncoef)};
}

std::complex<double> DerivedOperator::eval_c0(double x, double t) const {
  std::complex<double> v = 0;
  for (const auto& [deg, coef] : c0)
    v += coef * std::pow(x, deg.first) * std::pow(t, deg.second);
  return v;
}

std::complex<double> DerivedOperator::apply(std::complex<double> f, std::complex<double> fx,
                                            std::complex<double> ft, double x,
                                            double t) const {
  return eval_c0(x, t) * f + c1 * fx + c2 * ft;
}

DerivedOperator derived_rep(const LieVector& X, const IntegralPoint& p) {
  if (p.k == 0) throw std::invalid_argument("level k must be nonzero");
  DerivedOperator op;
  const std::complex<double> i2pi(0.0, kTau);
  const double k = static_cast<double>(p.k);
  const double m = static_cast<double>(p.m);
  const double n = static_cast<double>(p.n);

  auto add = [&op](int dx, int dt, std::complex<double> c) {
    if (c != std::complex<double>(0.0)) op.c0[{dx, dt}] += c;
  };

  const double x1 = to_double(X.x1), x2 = to_double(X.x2), x3 = to_double(X.x3),
               tt = to_double(X.t), uu = to_double(X.u);

  // X1 -> d/dx ; T -> d/dt
  op.c1 = x1;
  op.c2 = tt;
  // X2 -> -4 pi i k (t - x^2/2) - 2 pi i m + 2 pi i n x
  add(0, 1, i2pi * (-2.0 * k) * x2);
  add(2, 0, i2pi * k * x2);
  add(0, 0, i2pi * (-m) * x2);
  add(1, 0, i2pi * n * x2);
  // X3 -> 4 pi i k x + 2 pi i n
  add(1, 0, i2pi * 2.0 * k * x3);
  add(0, 0, i2pi * n * x3);
  // U -> -4 pi i k
  add(0, 0, i2pi * (-2.0 * k) * uu);
  return op;
}

}  // namespace niltheta

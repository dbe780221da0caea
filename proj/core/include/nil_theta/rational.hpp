#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace niltheta {

// Exact rational scalar used throughout the algebraic layer.  GMP keeps
// intermediate results exact regardless of coordinate growth under repeated
// group multiplication.
using Rational = mpq_class;

// Preferred constructor: mpq_class(p, q) does NOT canonicalize, and GMP
// comparisons misbehave on non-canonical values.
inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", and signed variants.  Rejects q = 0 and garbage.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Largest integer n with n <= r.
inline long floor_long(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floor out of long range");
  return q.get_si();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True when r lies in (1/2)Z.
inline bool is_half_integer(const Rational& r) {
  Rational d = r * 2;
  return is_integer(d);
}

// Element of the quadratic field Q(sqrt 2); grade-3 normal-form data lives in
// Q * sqrt(2)^{-1}, which this type represents exactly (1/sqrt2 = (1/2) sqrt2).
struct QSqrt2 {
  Rational a{0};  // rational part
  Rational b{0};  // coefficient of sqrt(2)

  QSqrt2() = default;
  QSqrt2(Rational ra) : a(std::move(ra)) {}
  QSqrt2(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
  static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), rat(1, 2)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  double value() const { return to_double(a) + to_double(b) * 1.4142135623730950488; }

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a, -x.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  QSqrt2 operator/(const Rational& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    return {a / d, b / d};
  }
};

inline std::string to_string(const QSqrt2& x) {
  if (x.b == 0) return to_string(x.a);
  std::string s = to_string(x.b) + "*sqrt2";
  if (x.a != 0) s = to_string(x.a) + (x.b > 0 ? "+" : "") + s;
  return s;
}

// Gaussian rational, for exact complex form coefficients.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(int n) : re(n) {}
  RationalComplex(Rational r) : re(std::move(r)) {}
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  RationalComplex conj() const { return {re, -im}; }

  friend RationalComplex operator+(const RationalComplex& x, const RationalComplex& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend RationalComplex operator-(const RationalComplex& x, const RationalComplex& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend RationalComplex operator-(const RationalComplex& x) { return {-x.re, -x.im}; }
  friend RationalComplex operator*(const RationalComplex& x, const RationalComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const RationalComplex& x, const RationalComplex& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const RationalComplex& x, const RationalComplex& y) {
    return !(x == y);
  }
};

}  // namespace niltheta

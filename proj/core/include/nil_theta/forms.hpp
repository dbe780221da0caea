#pragma once

// Left-invariant forms on the extended group in the coframe
// (b1, b2, b3, bT, bU), indexed 0..4.  Structure equations:
//   d b3 = -b1 ^ b2,   d bU = b1 ^ b3 + b2 ^ bT,   d b1 = d b2 = d bT = 0.
// A KForm is a homogeneous form with coefficients over the chosen scalar.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>

#include "nil_theta/lie.hpp"
#include "nil_theta/rational.hpp"

namespace niltheta {

inline constexpr int kFormDirections = 5;

template <class Scalar>
struct KForm {
  int degree = 0;
  // bitmask over directions -> coefficient; masks always have popcount == degree
  std::map<uint8_t, Scalar> coeff;

  static KForm basis(std::initializer_list<int> dirs) {
    KForm f;
    uint8_t mask = 0;
    for (int d : dirs) {
      if (d < 0 || d >= kFormDirections) throw std::invalid_argument("bad form direction");
      if (mask & (1u << d)) throw std::invalid_argument("repeated form direction");
      mask |= (1u << d);
      ++f.degree;
    }
    f.coeff[mask] = Scalar(1);
    return f;
  }

  void add_term(uint8_t mask, const Scalar& c) {
    if (std::popcount(mask) != degree) throw std::invalid_argument("degree mismatch");
    auto it = coeff.find(mask);
    if (it == coeff.end()) {
      if (!(c == Scalar(0))) coeff[mask] = c;
    } else {
      it->second = it->second + c;
      if (it->second == Scalar(0)) coeff.erase(it);
    }
  }

  bool is_zero() const { return coeff.empty(); }

  friend KForm operator+(const KForm& a, const KForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) throw std::invalid_argument("adding forms of different degree");
    KForm r = a;
    for (const auto& [m, c] : b.coeff) r.add_term(m, c);
    return r;
  }

  friend KForm operator*(const Scalar& s, const KForm& a) {
    KForm r;
    r.degree = a.degree;
    for (const auto& [m, c] : a.coeff) {
      Scalar v = s * c;
      if (!(v == Scalar(0))) r.coeff[m] = v;
    }
    return r;
  }

  friend KForm operator-(const KForm& a) { return Scalar(-1) * a; }
  friend KForm operator-(const KForm& a, const KForm& b) { return a + (Scalar(-1) * b); }
};

namespace detail {
// (-1)^{# inversions} for concatenating two disjoint sorted index sets
inline int wedge_sign(uint8_t a, uint8_t b) {
  int inv = 0;
  for (int i = 0; i < kFormDirections; ++i)
    if (a & (1u << i))
      for (int j = 0; j < i; ++j)
        if (b & (1u << j)) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}
}  // namespace detail

template <class Scalar>
KForm<Scalar> wedge(const KForm<Scalar>& a, const KForm<Scalar>& b) {
  KForm<Scalar> r;
  r.degree = a.degree + b.degree;
  for (const auto& [ma, ca] : a.coeff)
    for (const auto& [mb, cb] : b.coeff) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (detail::wedge_sign(ma, mb) < 0) c = Scalar(-1) * c;
      r.add_term(static_cast<uint8_t>(ma | mb), c);
    }
  return r;
}

// d of a basis 1-form, by the structure equations.
template <class Scalar>
KForm<Scalar> d_basis_one_form(int dir) {
  KForm<Scalar> r;
  r.degree = 2;
  switch (dir) {
    case 2:  // d b3 = -b1 ^ b2
      r.add_term(0b00011, Scalar(-1));
      break;
    case 4:  // d bU = b1 ^ b3 + b2 ^ bT
      r.add_term(0b00101, Scalar(1));
      r.add_term(0b01010, Scalar(1));
      break;
    default:
      break;
  }
  return r;
}

template <class Scalar>
KForm<Scalar> exterior_d(const KForm<Scalar>& f) {
  if (f.degree >= 4) throw std::invalid_argument("exterior_d: degree must be at most 3");
  KForm<Scalar> r;
  r.degree = f.degree + 1;
  for (const auto& [mask, c] : f.coeff) {
    int pos = 0;
    for (int i = 0; i < kFormDirections; ++i) {
      if (!(mask & (1u << i))) continue;
      KForm<Scalar> di = d_basis_one_form<Scalar>(i);
      if (!di.coeff.empty()) {
        KForm<Scalar> rest;
        rest.degree = f.degree - 1;
        rest.coeff[static_cast<uint8_t>(mask & ~(1u << i))] =
            (pos % 2 == 0) ? c : Scalar(-1) * c;
        KForm<Scalar> term = wedge(rest, di);
        for (const auto& [m2, c2] : term.coeff) r.add_term(m2, c2);
      }
      ++pos;
    }
  }
  return r;
}

namespace detail {
template <class Scalar>
std::array<Scalar, 5> frame_coords(const LieVector& v) {
  return {Scalar(to_double(v.x1)), Scalar(to_double(v.x2)), Scalar(to_double(v.x3)),
          Scalar(to_double(v.t)), Scalar(to_double(v.u))};
}
template <>
inline std::array<Rational, 5> frame_coords<Rational>(const LieVector& v) {
  return {v.x1, v.x2, v.x3, v.t, v.u};
}
template <>
inline std::array<RationalComplex, 5> frame_coords<RationalComplex>(const LieVector& v) {
  return {RationalComplex(v.x1), RationalComplex(v.x2), RationalComplex(v.x3),
          RationalComplex(v.t), RationalComplex(v.u)};
}
}  // namespace detail

// Evaluate a 2-form on a pair of frame vectors.
template <class Scalar>
Scalar evaluate2(const KForm<Scalar>& f, const LieVector& v, const LieVector& w) {
  if (f.degree != 2) throw std::invalid_argument("evaluate2 expects a 2-form");
  auto vc = detail::frame_coords<Scalar>(v);
  auto wc = detail::frame_coords<Scalar>(w);
  Scalar tot(0);
  for (const auto& [mask, c] : f.coeff) {
    int idx[2], k = 0;
    for (int i = 0; i < kFormDirections; ++i)
      if (mask & (1u << i)) idx[k++] = i;
    tot = tot + c * (vc[idx[0]] * wc[idx[1]] - vc[idx[1]] * wc[idx[0]]);
  }
  return tot;
}

// omega = 2 pi (b1 ^ b3 + b2 ^ bT); the coordinate expansion of the invariant
// symplectic form on the base group.  The normalized variant omits the 2 pi.
KForm<double> omega();
KForm<Rational> omega_normalized();

}  // namespace niltheta

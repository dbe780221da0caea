#include "nil_theta/forms.hpp"

#include <numbers>

namespace niltheta {

KForm<double> omega() {
  KForm<double> w;
  w.degree = 2;
  const double tau = 2.0 * std::numbers::pi;
  w.add_term(0b00101, tau);  // b1 ^ b3
  w.add_term(0b01010, tau);  // b2 ^ bT
  return w;
}

KForm<Rational> omega_normalized() {
  KForm<Rational> w;
  w.degree = 2;
  w.add_term(0b00101, Rational(1));
  w.add_term(0b01010, Rational(1));
  return w;
}

}  // namespace niltheta

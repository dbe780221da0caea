#pragma once

// Exact normal-ordered polynomial algebra over the two-mode ladder operators
// a1, a2, b1, b2 with [a_i, b_j] = delta_ij, and the quantum Birkhoff normal
// form through order eps^2.  Grade-3 data carries a global 1/sqrt(2), so
// coefficients live in Q(sqrt 2); all even-grade results are rational.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nil_theta/rational.hpp"

namespace niltheta {

// Monomial a1^{p1} a2^{p2} b1^{q1} b2^{q2}, already in normal order.
struct MultiIndex {
  int a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  int degree() const { return a1 + a2 + b1 + b2; }
  // eigenvalue of ad H2 on this monomial
  int weight() const { return (b1 + b2) - (a1 + a2); }
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

struct LadderPolynomial {
  std::map<MultiIndex, QSqrt2> terms;

  static LadderPolynomial zero() { return {}; }
  static LadderPolynomial constant(const QSqrt2& c);
  static LadderPolynomial monomial(const MultiIndex& m, const QSqrt2& c = QSqrt2(Rational(1)));

  void add(const MultiIndex& m, const QSqrt2& c);
  bool is_zero() const { return terms.empty(); }
  int max_degree() const;

  friend LadderPolynomial operator+(const LadderPolynomial& p, const LadderPolynomial& q);
  friend LadderPolynomial operator-(const LadderPolynomial& p, const LadderPolynomial& q);
  friend LadderPolynomial operator*(const QSqrt2& c, const LadderPolynomial& p);
  friend bool operator==(const LadderPolynomial& p, const LadderPolynomial& q) {
    return p.terms == q.terms;
  }
};

// Product rewritten into normal order through b_i a_i -> a_i b_i - 1.
LadderPolynomial normal_product(const LadderPolynomial& p, const LadderPolynomial& q);
LadderPolynomial commutator(const LadderPolynomial& p, const LadderPolynomial& q);

// Diagonal action of ad H2: monomial -> weight * monomial.
LadderPolynomial ad_h2(const LadderPolynomial& p);
// Inverse on the image; rejects input with a weight-zero component.
LadderPolynomial ad_h2_inverse(const LadderPolynomial& p);
// Projection onto ker ad H2 = span of |alpha| = |beta| monomials.
LadderPolynomial project_kernel(const LadderPolynomial& p);

struct HamiltonianGrading {
  LadderPolynomial H2;  // a1 b1 + a2 b2 - 1
  LadderPolynomial H3;  // (a1+b1)^2 (a2+b2) / (2 sqrt 2)
  LadderPolynomial H4;  // (a1+b1)^4 / 16
};
HamiltonianGrading hamiltonian_grading();

struct BnfPair {
  int order;  // grade j; the eps power is j - 2
  LadderPolynomial K;
  LadderPolynomial A;
};

// exp(ad A) H = K solved inductively: K_j is the kernel projection of the
// accumulated grade-j terms, A_j kills the rest.  max_order is 3 or 4.
std::vector<BnfPair> bnf(int max_order);

// Series in eps: power -> polynomial.
using GradedSeries = std::map<int, LadderPolynomial>;

// H + [A,H] + (1/2)[A,[A,H]] + ..., collected by eps power, truncated.
GradedSeries exp_ad_apply(const GradedSeries& A, const GradedSeries& H, int order);

// <0| p |0> via <0| a^alpha b^beta |0> = delta_{alpha beta} alpha!.
Rational vacuum_expectation(const LadderPolynomial& p);

// Deterministic display, graded lexicographic term order.
std::string to_string(const LadderPolynomial& p);

}  // namespace niltheta

#include "nil_theta/ladder.hpp"

#include <algorithm>
#include <stdexcept>

namespace niltheta {

namespace {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r = r * i;
  return r;
}

// b^n a^m = sum_j (-1)^j C(n,j) C(m,j) j! a^{m-j} b^{n-j}, per mode
Rational reorder_coef(int n, int m, int j) {
  Rational c = binomial(n, j) * binomial(m, j) * factorial(j);
  return (j % 2 == 0) ? c : -c;
}

}  // namespace

LadderPolynomial LadderPolynomial::constant(const QSqrt2& c) {
  LadderPolynomial p;
  p.add(MultiIndex{}, c);
  return p;
}

LadderPolynomial LadderPolynomial::monomial(const MultiIndex& m, const QSqrt2& c) {
  LadderPolynomial p;
  p.add(m, c);
  return p;
}

void LadderPolynomial::add(const MultiIndex& m, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

int LadderPolynomial::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

LadderPolynomial operator+(const LadderPolynomial& p, const LadderPolynomial& q) {
  LadderPolynomial r = p;
  for (const auto& [m, c] : q.terms) r.add(m, c);
  return r;
}

LadderPolynomial operator-(const LadderPolynomial& p, const LadderPolynomial& q) {
  LadderPolynomial r = p;
  for (const auto& [m, c] : q.terms) r.add(m, -c);
  return r;
}

LadderPolynomial operator*(const QSqrt2& c, const LadderPolynomial& p) {
  LadderPolynomial r;
  for (const auto& [m, coef] : p.terms) r.add(m, c * coef);
  return r;
}

LadderPolynomial normal_product(const LadderPolynomial& p, const LadderPolynomial& q) {
  LadderPolynomial out;
  for (const auto& [mp, cp] : p.terms)
    for (const auto& [mq, cq] : q.terms) {
      const QSqrt2 c = cp * cq;
      // rewrite b1^{mp.b1} a1^{mq.a1} and b2^{mp.b2} a2^{mq.a2}
      for (int j1 = 0; j1 <= std::min(mp.b1, mq.a1); ++j1) {
        const Rational c1 = reorder_coef(mp.b1, mq.a1, j1);
        for (int j2 = 0; j2 <= std::min(mp.b2, mq.a2); ++j2) {
          const Rational c2 = reorder_coef(mp.b2, mq.a2, j2);
          MultiIndex m{mp.a1 + mq.a1 - j1, mp.a2 + mq.a2 - j2, mp.b1 + mq.b1 - j1,
                       mp.b2 + mq.b2 - j2};
          out.add(m, c * QSqrt2(c1 * c2));
        }
      }
    }
  return out;
}

LadderPolynomial commutator(const LadderPolynomial& p, const LadderPolynomial& q) {
  return normal_product(p, q) - normal_product(q, p);
}

LadderPolynomial ad_h2(const LadderPolynomial& p) {
  LadderPolynomial r;
  for (const auto& [m, c] : p.terms) r.add(m, QSqrt2(Rational(m.weight())) * c);
  return r;
}

LadderPolynomial ad_h2_inverse(const LadderPolynomial& p) {
  LadderPolynomial r;
  for (const auto& [m, c] : p.terms) {
    const int w = m.weight();
    if (w == 0)
      throw std::domain_error("ad_h2_inverse: input has a kernel component");
    r.add(m, c / Rational(w));
  }
  return r;
}

LadderPolynomial project_kernel(const LadderPolynomial& p) {
  LadderPolynomial r;
  for (const auto& [m, c] : p.terms)
    if (m.weight() == 0) r.add(m, c);
  return r;
}

HamiltonianGrading hamiltonian_grading() {
  HamiltonianGrading h;
  h.H2.add(MultiIndex{1, 0, 1, 0}, QSqrt2(Rational(1)));
  h.H2.add(MultiIndex{0, 1, 0, 1}, QSqrt2(Rational(1)));
  h.H2.add(MultiIndex{}, QSqrt2(Rational(-1)));

  LadderPolynomial s1, s2;
  s1.add(MultiIndex{1, 0, 0, 0}, QSqrt2(Rational(1)));
  s1.add(MultiIndex{0, 0, 1, 0}, QSqrt2(Rational(1)));
  s2.add(MultiIndex{0, 1, 0, 0}, QSqrt2(Rational(1)));
  s2.add(MultiIndex{0, 0, 0, 1}, QSqrt2(Rational(1)));

  const LadderPolynomial s1s1 = normal_product(s1, s1);
  // 1/(2 sqrt 2) = sqrt(2)/4
  h.H3 = QSqrt2(Rational(0), rat(1, 4)) * normal_product(s1s1, s2);
  h.H4 = QSqrt2(rat(1, 16)) * normal_product(s1s1, s1s1);
  return h;
}

std::vector<BnfPair> bnf(int max_order) {
  if (max_order < 3 || max_order > 4)
    throw std::invalid_argument("bnf supports max_order 3 or 4");
  const auto [H2, H3, H4] = hamiltonian_grading();
  std::vector<BnfPair> out;
  out.push_back(BnfPair{2, H2, LadderPolynomial::zero()});

  const LadderPolynomial K3 = project_kernel(H3);
  const LadderPolynomial A3 = ad_h2_inverse(H3 - K3);
  out.push_back(BnfPair{3, K3, A3});
  if (max_order == 3) return out;

  const LadderPolynomial R4 = H4 + QSqrt2(rat(1, 2)) * commutator(A3, H3);
  const LadderPolynomial K4 = project_kernel(R4);
  const LadderPolynomial A4 = ad_h2_inverse(R4 - K4);
  out.push_back(BnfPair{4, K4, A4});
  return out;
}

GradedSeries exp_ad_apply(const GradedSeries& A, const GradedSeries& H, int order) {
  if (order < 0 || order > 2) throw std::invalid_argument("series truncated at eps^2");
  auto truncate = [order](GradedSeries& s) {
    for (auto it = s.begin(); it != s.end();) {
      if (it->first > order || it->second.is_zero())
        it = s.erase(it);
      else
        ++it;
    }
  };
  auto bracket_series = [&](const GradedSeries& s) {
    GradedSeries out;
    for (const auto& [u, pa] : A)
      for (const auto& [v, ph] : s) {
        if (u + v > order) continue;
        LadderPolynomial br = commutator(pa, ph);
        auto it = out.find(u + v);
        if (it == out.end())
          out.emplace(u + v, br);
        else
          it->second = it->second + br;
      }
    truncate(out);
    return out;
  };

  GradedSeries result = H;
  truncate(result);
  GradedSeries current = result;
  Rational fact = 1;
  for (int s = 1; s <= order; ++s) {
    current = bracket_series(current);
    if (current.empty()) break;
    fact = fact * s;
    for (const auto& [pw, poly] : current) {
      LadderPolynomial scaled = QSqrt2(1 / fact) * poly;
      auto it = result.find(pw);
      if (it == result.end())
        result.emplace(pw, scaled);
      else
        it->second = it->second + scaled;
    }
  }
  truncate(result);
  return result;
}

Rational vacuum_expectation(const LadderPolynomial& p) {
  QSqrt2 acc;
  for (const auto& [m, c] : p.terms)
    if (m.a1 == m.b1 && m.a2 == m.b2)
      acc = acc + QSqrt2(factorial(m.a1) * factorial(m.a2)) * c;
  if (!acc.is_rational())
    throw std::domain_error("vacuum expectation is irrational");
  return acc.a;
}

std::string to_string(const LadderPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::vector<std::pair<MultiIndex, QSqrt2>> ts(p.terms.begin(), p.terms.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    return x.first.degree() < y.first.degree();
  });
  std::string s;
  auto power = [](const char* sym, int e) -> std::string {
    if (e == 0) return "";
    std::string r = sym;
    if (e > 1) r += "^" + std::to_string(e);
    return r + " ";
  };
  for (const auto& [m, c] : ts) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    std::string mono = power("a1", m.a1) + power("a2", m.a2) + power("b1", m.b1) +
                       power("b2", m.b2);
    if (!mono.empty()) {
      mono.pop_back();
      s += " " + mono;
    }
  }
  return s;
}

}  // namespace niltheta

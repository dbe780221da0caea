#include "nil_theta/coadjoint.hpp"

#include <stdexcept>

namespace niltheta {

Rational pairing(const Covector& lam, const LieVector& x) {
  return lam.alpha1 * x.x1 + lam.alpha2 * x.x2 + lam.alpha3 * x.x3 + lam.rho * x.t + lam.mu * x.u;
}

Covector coadjoint_action(const GroupElement& g, const Covector& lam) {
  Covector out;
  out.alpha1 = lam.alpha1 + g.a2 * lam.alpha3 - g.a3 * lam.mu;
  out.alpha2 = lam.alpha2 - g.a1 * lam.alpha3 - (g.r + g.a1 * g.a1 / 2) * lam.mu;
  out.alpha3 = lam.alpha3 + g.a1 * lam.mu;
  out.rho = lam.rho + g.a2 * lam.mu;
  out.mu = lam.mu;
  return out;
}

Rational orbit_pairing(const Covector& lam, const LieVector& x, const LieVector& y) {
  return pairing(lam, bracket(x, y));
}

OrbitClass classify_orbit(const Covector& lam) {
  if (lam.mu != 0) return {OrbitKind::FourDim, {0, 0, 0, 0, lam.mu}};
  if (lam.alpha3 != 0) return {OrbitKind::TwoDim, {0, 0, lam.alpha3, lam.rho, 0}};
  return {OrbitKind::ZeroDim, lam};
}

GroupElement orbit_normalizer(const Covector& lam) {
  if (lam.mu == 0) throw std::invalid_argument("orbit_normalizer requires mu != 0");
  const Rational &a1g = lam.alpha1, &a2g = lam.alpha2, &a3g = lam.alpha3, &rho = lam.rho,
                 &mu = lam.mu;
  GroupElement g;
  g.a1 = -a3g / mu;
  g.a2 = -rho / mu;
  g.a3 = (mu * a1g - rho * a3g) / (mu * mu);
  g.r = (a3g * a3g + 2 * a2g * mu) / (2 * mu * mu);
  return g;
}

namespace {

std::array<Rational, 5> coords(const LieVector& x) { return {x.x1, x.x2, x.x3, x.t, x.u}; }

// Row echelon over Q; returns rank, leaves reduced rows in `rows`.
int echelon(std::vector<std::array<Rational, 5>>& rows) {
  int r = 0;
  for (int col = 0; col < 5 && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[r][col];
      for (int j = col; j < 5; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const std::vector<LieVector>& vecs) {
  std::vector<std::array<Rational, 5>> rows;
  rows.reserve(vecs.size());
  for (const auto& v : vecs) rows.push_back(coords(v));
  return echelon(rows);
}

bool in_span(const LieVector& x, const std::vector<LieVector>& vecs) {
  std::vector<LieVector> ext = vecs;
  ext.push_back(x);
  return rank(ext) == rank(vecs);
}

bool is_subalgebra(const std::vector<LieVector>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!in_span(bracket(basis[i], basis[j]), basis)) return false;
  return true;
}

bool is_subordinate(const std::vector<LieVector>& basis, const Covector& lam) {
  if (!is_subalgebra(basis)) return false;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (orbit_pairing(lam, basis[i], basis[j]) != 0) return false;
  int required;
  switch (classify_orbit(lam).kind) {
    case OrbitKind::FourDim: required = 3; break;
    case OrbitKind::TwoDim: required = 4; break;
    default: required = 5; break;
  }
  return rank(basis) == required;
}

bool is_ideal(const std::vector<LieVector>& basis) {
  if (!is_subalgebra(basis)) return false;
  const LieVector gens[5] = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                             {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  for (const auto& g : gens)
    for (const auto& h : basis)
      if (!in_span(bracket(g, h), basis)) return false;
  return true;
}

SubalgebraSpec subordinate_family(FamilyTag tag, const ExtRational& p1, const ExtRational& p2) {
  const LieVector X1{1, 0, 0, 0, 0}, X2{0, 1, 0, 0, 0}, X3{0, 0, 1, 0, 0}, T{0, 0, 0, 1, 0},
      U{0, 0, 0, 0, 1};
  SubalgebraSpec s;
  s.tag = tag;
  s.p1 = p1;
  s.p2 = p2;
  switch (tag) {
    case FamilyTag::C:
      if (p1.infinite())
        s.basis = {X3, T, U};
      else
        s.basis = {X1 + p1.value * X3, T, U};
      break;
    case FamilyTag::BD: {
      if (!p1.infinite() && p1.value == 0)
        throw std::invalid_argument("bd-family requires b != 0");
      if (p1.infinite()) {
        s.basis = {X2, X3, U};  // b -> inf degenerates onto the e = 0 member
      } else if (p2.infinite()) {
        s.basis = {X3, T, U};  // d -> inf degenerates onto the c = inf member
      } else {
        LieVector first = X1 + p1.value * X2 + p2.value * T;
        LieVector second = X3 + (-Rational(1) / p1.value) * T;
        s.basis = {first, second, U};
      }
      break;
    }
    case FamilyTag::E:
      if (p1.infinite())
        s.basis = {X3, T, U};
      else
        s.basis = {X2 + p1.value * T, X3, U};
      break;
  }
  return s;
}

}  // namespace niltheta

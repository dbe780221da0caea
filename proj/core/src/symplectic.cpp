#include "nil_theta/symplectic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace niltheta {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

LieVector unit_u() { return LieVector{0, 0, 0, 0, 1}; }

bool is_base_vector(const LieVector& v) { return v.u == 0; }

// Gram matrix of omega / (2 pi) in the frame (X1, X2, X3, T).
template <class S>
std::array<std::array<S, 4>, 4> omega_gram() {
  std::array<std::array<S, 4>, 4> w{};
  w[0][2] = S(1);
  w[1][3] = S(1);
  w[2][0] = S(-1);
  w[3][1] = S(-1);
  return w;
}

template <class S>
std::array<std::array<S, 4>, 4> mat_mul(const std::array<std::array<S, 4>, 4>& a,
                                        const std::array<std::array<S, 4>, 4>& b) {
  std::array<std::array<S, 4>, 4> c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

template <class S>
std::array<std::array<S, 4>, 4> mat_transpose(const std::array<std::array<S, 4>, 4>& a) {
  std::array<std::array<S, 4>, 4> c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[j][i];
  return c;
}

}  // namespace

bool is_lagrangian(const std::vector<LieVector>& basis) {
  if (basis.size() != 2) throw std::invalid_argument("lagrangian test expects 2 basis vectors");
  for (const auto& v : basis)
    if (!is_base_vector(v)) throw std::invalid_argument("lagrangian basis must lie in the base");
  if (rank(basis) != 2) throw std::invalid_argument("lagrangian basis is degenerate");
  return evaluate2(omega_normalized(), basis[0], basis[1]) == 0;
}

std::vector<LieVector> subalgebra_to_lagrangian(const std::vector<LieVector>& h) {
  if (rank(h) != 3) throw std::invalid_argument("expected a 3-dim subalgebra");
  if (!in_span(unit_u(), h))
    throw std::invalid_argument("subalgebra must contain the central direction");
  std::vector<LieVector> proj;
  for (const auto& v : h) {
    LieVector p = v;
    p.u = 0;
    proj.push_back(p);
  }
  // reduce to two independent vectors
  std::vector<LieVector> out;
  for (const auto& p : proj) {
    std::vector<LieVector> trial = out;
    trial.push_back(p);
    if (rank(trial) > static_cast<int>(out.size())) out = trial;
    if (out.size() == 2) break;
  }
  if (out.size() != 2) throw std::invalid_argument("base projection is not a plane");
  return out;
}

std::optional<std::vector<LieVector>> lagrangian_to_subalgebra(
    const std::vector<LieVector>& L) {
  if (!is_lagrangian(L)) return std::nullopt;
  std::vector<LieVector> h = {L[0], L[1], unit_u()};
  if (!is_subalgebra(h)) return std::nullopt;
  return h;
}

CYStructure cy_structure(const Rational& e) {
  CYStructure cy;
  cy.e = e;
  const double ed = to_double(e);
  const double ae = std::abs(ed);
  const double s = std::sqrt(ae);

  using C = std::complex<double>;
  const C a(-ed * (1 + 2 * ae) / (1 + ae), 1 + 2 * ae);
  const C b(ed == 0 ? 0.0 : -ed / s, s);
  const C d(-ed / (1 + 2 * ae), (1 + ae) / (1 + 2 * ae));
  cy.Omega = {{{a, b}, {b, d}}};

  // J from the period matrix: with Omega = O1 + i O2,
  //   J = [ O1 O2^-1,  -O2 - O1 O2^-1 O1 ]
  //       [ O2^-1   ,  -O2^-1 O1        ]
  const double o1[2][2] = {{a.real(), b.real()}, {b.real(), d.real()}};
  const double o2[2][2] = {{a.imag(), b.imag()}, {b.imag(), d.imag()}};
  const double det2 = o2[0][0] * o2[1][1] - o2[0][1] * o2[1][0];
  const double inv2[2][2] = {{o2[1][1] / det2, -o2[0][1] / det2},
                             {-o2[1][0] / det2, o2[0][0] / det2}};
  double o1inv[2][2];  // O1 * O2^-1
  double invo1[2][2];  // O2^-1 * O1
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      o1inv[i][j] = o1[i][0] * inv2[0][j] + o1[i][1] * inv2[1][j];
      invo1[i][j] = inv2[i][0] * o1[0][j] + inv2[i][1] * o1[1][j];
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double o1invo1 = o1inv[i][0] * o1[0][j] + o1inv[i][1] * o1[1][j];
      cy.J[i][j] = o1inv[i][j];
      cy.J[i][j + 2] = -o2[i][j] - o1invo1;
      cy.J[i + 2][j] = inv2[i][j];
      cy.J[i + 2][j + 2] = -invo1[i][j];
    }

  const C P = a * d - b * b;
  const C pi_i(0.0, std::numbers::pi);
  cy.epsilon.degree = 2;
  cy.epsilon.add_term(0b00011, pi_i);                     // b1 ^ b2
  cy.epsilon.add_term(0b01100, pi_i * std::conj(P));      // b3 ^ bT
  cy.epsilon.add_term(0b00101, -pi_i * std::conj(b));     // b1 ^ b3
  cy.epsilon.add_term(0b01001, -pi_i * std::conj(d));     // b1 ^ bT
  cy.epsilon.add_term(0b00110, pi_i * std::conj(a));      // b2 ^ b3
  cy.epsilon.add_term(0b01010, pi_i * std::conj(b));      // b2 ^ bT
  return cy;
}

bool CYReport::pass(double tol) const {
  return j_squared_residual < tol && compatibility_residual < tol &&
         metric_symmetry_residual < tol && metric_min_eigenvalue > tol &&
         std::abs(volume_ratio - std::complex<double>(det_im_omega, 0.0)) < tol &&
         std::abs(det_im_omega - 1.0) < tol && d_re_epsilon_residual < tol;
}

CYReport verify_cy(const CYStructure& cy) {
  CYReport rep{};

  Mat4 j2 = mat_mul(cy.J, cy.J);
  double r = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(j2[i][j] + (i == j ? 1.0 : 0.0)));
  rep.j_squared_residual = r;

  Mat4 w = omega_gram<double>();
  Mat4 jwj = mat_mul(mat_transpose(cy.J), mat_mul(w, cy.J));
  r = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, kTau * std::abs(jwj[i][j] - w[i][j]));
  rep.compatibility_residual = r;

  Mat4 g = mat_mul(w, cy.J);
  r = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, kTau * std::abs(g[i][j] - g[j][i]));
  rep.metric_symmetry_residual = r;

  Eigen::Matrix4d gs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gs(i, j) = kTau * 0.5 * (g[i][j] + g[j][i]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(gs);
  rep.metric_min_eigenvalue = es.eigenvalues().minCoeff();

  KForm<std::complex<double>> eps_bar;
  eps_bar.degree = 2;
  for (const auto& [m, c] : cy.epsilon.coeff) eps_bar.add_term(m, std::conj(c));
  auto top = wedge(cy.epsilon, eps_bar);
  std::complex<double> num = 0;
  if (auto it = top.coeff.find(0b01111); it != top.coeff.end()) num = it->second;
  // omega^2 / 2 has top coefficient -(2 pi)^2
  rep.volume_ratio = num / std::complex<double>(-kTau * kTau, 0.0);

  rep.det_im_omega =
      cy.Omega[0][0].imag() * cy.Omega[1][1].imag() - cy.Omega[0][1].imag() * cy.Omega[1][0].imag();

  KForm<double> re_eps;
  re_eps.degree = 2;
  for (const auto& [m, c] : cy.epsilon.coeff) re_eps.add_term(m, c.real());
  auto dre = exterior_d(re_eps);
  r = 0;
  for (const auto& [m, c] : dre.coeff) r = std::max(r, std::abs(c));
  rep.d_re_epsilon_residual = r;
  return rep;
}

bool is_special_lagrangian(const std::vector<LieVector>& basis, const CYStructure& cy,
                           double tol) {
  if (!is_lagrangian(basis)) return false;
  auto val = evaluate2(cy.epsilon, basis[0], basis[1]);
  return std::abs(val.imag()) < tol;
}

// ---- exact variant ----

namespace {

bool perfect_square(const mpz_class& z, mpz_class* root) {
  if (z < 0) return false;
  if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
  mpz_sqrt(root->get_mpz_t(), z.get_mpz_t());
  return true;
}

}  // namespace

bool has_exact_cy(const Rational& e) {
  Rational ae = abs(e);
  mpz_class rn, rd;
  return perfect_square(ae.get_num(), &rn) && perfect_square(ae.get_den(), &rd);
}

CYStructureExact cy_structure_exact(const Rational& e) {
  Rational ae = abs(e);
  mpz_class rn, rd;
  if (!perfect_square(ae.get_num(), &rn) || !perfect_square(ae.get_den(), &rd))
    throw std::invalid_argument("|e| is not a perfect rational square");
  CYStructureExact cy;
  cy.e = e;
  cy.sqrt_abs_e = Rational(rn, rd);
  cy.sqrt_abs_e.canonicalize();
  const Rational& s = cy.sqrt_abs_e;

  using RC = RationalComplex;
  RC a(-e * (1 + 2 * ae) / (1 + ae), 1 + 2 * ae);
  RC b(e == 0 ? Rational(0) : Rational(-e / s), s);
  RC d(-e / (1 + 2 * ae), (1 + ae) / (1 + 2 * ae));
  cy.Omega = {{{a, b}, {b, d}}};

  const Rational o1[2][2] = {{a.re, b.re}, {b.re, d.re}};
  const Rational o2[2][2] = {{a.im, b.im}, {b.im, d.im}};
  const Rational det2 = o2[0][0] * o2[1][1] - o2[0][1] * o2[1][0];
  const Rational inv2[2][2] = {{o2[1][1] / det2, -o2[0][1] / det2},
                               {-o2[1][0] / det2, o2[0][0] / det2}};
  Rational o1inv[2][2], invo1[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      o1inv[i][j] = o1[i][0] * inv2[0][j] + o1[i][1] * inv2[1][j];
      invo1[i][j] = inv2[i][0] * o1[0][j] + inv2[i][1] * o1[1][j];
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational o1invo1 = o1inv[i][0] * o1[0][j] + o1inv[i][1] * o1[1][j];
      cy.J[i][j] = o1inv[i][j];
      cy.J[i][j + 2] = -o2[i][j] - o1invo1;
      cy.J[i + 2][j] = inv2[i][j];
      cy.J[i + 2][j + 2] = -invo1[i][j];
    }

  RC P = a * d - b * b;
  cy.epsilon.degree = 2;  // stored as epsilon / (pi i)
  cy.epsilon.add_term(0b00011, RC(1));
  cy.epsilon.add_term(0b01100, P.conj());
  cy.epsilon.add_term(0b00101, -b.conj());
  cy.epsilon.add_term(0b01001, -d.conj());
  cy.epsilon.add_term(0b00110, a.conj());
  cy.epsilon.add_term(0b01010, b.conj());
  return cy;
}

CYReportExact verify_cy_exact(const CYStructureExact& cy) {
  CYReportExact rep{};
  auto j2 = mat_mul(cy.J, cy.J);
  rep.j_squared_ok = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (j2[i][j] != Rational(i == j ? -1 : 0)) rep.j_squared_ok = false;

  auto w = omega_gram<Rational>();
  auto jwj = mat_mul(mat_transpose(cy.J), mat_mul(w, cy.J));
  rep.compatibility_ok = (jwj == w);

  auto g = mat_mul(w, cy.J);
  rep.metric_symmetric = (g == mat_transpose(g));

  KForm<RationalComplex> eps_bar;
  eps_bar.degree = 2;
  for (const auto& [m, c] : cy.epsilon.coeff) eps_bar.add_term(m, c.conj());
  auto top = wedge(cy.epsilon, eps_bar);
  RationalComplex num;
  if (auto it = top.coeff.find(0b01111); it != top.coeff.end()) num = it->second;
  // epsilon = pi i * stored form, so eps ^ conj eps = pi^2 * (stored ^ conj);
  // against omega^2/2 = -4 pi^2 * vol the ratio is num / (-4).
  Rational det_im =
      cy.Omega[0][0].im * cy.Omega[1][1].im - cy.Omega[0][1].im * cy.Omega[1][0].im;
  rep.ratio_is_one = (num == RationalComplex(Rational(-4))) && det_im == 1;

  // Re(pi i * stored) = -pi Im(stored), so d Re eps = 0 iff d Im(stored) = 0.
  KForm<Rational> im_part;
  im_part.degree = 2;
  for (const auto& [m, c] : cy.epsilon.coeff) im_part.add_term(m, c.im);
  rep.d_re_epsilon_zero = exterior_d(im_part).is_zero();
  return rep;
}

bool is_special_lagrangian_exact(const std::vector<LieVector>& basis,
                                 const CYStructureExact& cy) {
  if (!is_lagrangian(basis)) return false;
  // Im(pi i * stored(v, w)) = pi Re(stored(v, w))
  return evaluate2(cy.epsilon, basis[0], basis[1]).re == 0;
}

// ---- leaf compactness ----

bool QuadraticIrrational::is_rational() const {
  if (d < 0) throw std::invalid_argument("negative discriminant");
  if (q == 0 || d == 0) return true;
  mpz_class z(d), root;
  return perfect_square(z, &root);
}

double QuadraticIrrational::value() const {
  if (d < 0) throw std::invalid_argument("negative discriminant");
  return to_double(p) + to_double(q) * std::sqrt(static_cast<double>(d));
}

bool is_torus_fiber(const ExtRational& e, const QuadraticIrrational& x) {
  if (e.infinite()) return true;
  if (e.value == 0) return true;
  return x.is_rational();
}

// ---- Hamiltonian frame ----

double HamiltonianAssignment::phi(int i, const BaseElement& at) {
  const double a1 = to_double(at.a1), a2 = to_double(at.a2), a3 = to_double(at.a3),
               r = to_double(at.r);
  switch (i) {
    case 0: return -kTau * a3;
    case 1: return -kTau * (r + a1 * a1 / 2);
    case 2: return kTau * a1;
    case 3: return kTau * a2;
    case 4: return kTau;
    default: throw std::invalid_argument("phi index out of range");
  }
}

std::array<double, 4> HamiltonianAssignment::grad(int i, const BaseElement& at) {
  const double a1 = to_double(at.a1);
  switch (i) {
    case 0: return {0, 0, -kTau, 0};
    case 1: return {-kTau * a1, 0, 0, -kTau};
    case 2: return {kTau, 0, 0, 0};
    case 3: return {0, kTau, 0, 0};
    case 4: return {0, 0, 0, 0};
    default: throw std::invalid_argument("phi index out of range");
  }
}

std::array<double, 4> HamiltonianAssignment::frame_field(int i, const BaseElement& at) {
  const double a1 = to_double(at.a1);
  switch (i) {
    case 0: return {1, 0, 0, 0};
    case 1: return {0, 1, -a1, 0};
    case 2: return {0, 0, 1, 0};
    case 3: return {0, 0, 0, 1};
    default: throw std::invalid_argument("frame index out of range");
  }
}

namespace {

// omega(e_j, X) for the coordinate frame e_j, X given in coordinates
std::array<double, 4> omega_second_slot(const std::array<double, 4>& x) {
  return {kTau * x[2], kTau * x[3], -kTau * x[0], -kTau * x[1]};
}

double poisson(const std::array<double, 4>& df, const std::array<double, 4>& dg) {
  // X_f = (1/2pi)(-f_3, -f_r, f_1, f_2); {f, g} = X_f . dg
  return (-df[2] * dg[0] - df[3] * dg[1] + df[0] * dg[2] + df[1] * dg[3]) / kTau;
}

}  // namespace

HamiltonianFrameReport verify_hamiltonian_frame(const std::vector<BaseElement>& samples) {
  HamiltonianFrameReport rep{0, 0};
  for (const auto& at : samples) {
    for (int i = 0; i < 4; ++i) {
      auto lhs = HamiltonianAssignment::grad(i, at);
      auto rhs = omega_second_slot(HamiltonianAssignment::frame_field(i, at));
      for (int j = 0; j < 4; ++j)
        rep.max_contraction_residual =
            std::max(rep.max_contraction_residual, std::abs(lhs[j] - rhs[j]));
    }
    std::array<std::array<double, 4>, 5> d;
    for (int i = 0; i < 5; ++i) d[i] = HamiltonianAssignment::grad(i, at);
    const double phi3 = HamiltonianAssignment::phi(2, at);
    const double rels[] = {
        poisson(d[0], d[1]) + phi3,   // {phi1, phi2} = -phi3
        poisson(d[0], d[2]) - kTau,   // {phi1, phi3} = 2 pi
        poisson(d[1], d[3]) - kTau,   // {phi2, phiT} = 2 pi
        poisson(d[0], d[3]),          // {phi1, phiT} = 0
        poisson(d[1], d[2]),          // {phi2, phi3} = 0
        poisson(d[2], d[3]),          // {phi3, phiT} = 0
        poisson(d[0], d[4]), poisson(d[1], d[4]), poisson(d[2], d[4]),
        poisson(d[3], d[4]),          // the center is Casimir
    };
    for (double v : rels)
      rep.max_poisson_residual = std::max(rep.max_poisson_residual, std::abs(v));
  }
  return rep;
}

}  // namespace niltheta

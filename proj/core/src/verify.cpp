#include "nil_theta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "nil_theta/coadjoint.hpp"
#include "nil_theta/ladder.hpp"
#include "nil_theta/lie.hpp"
#include "nil_theta/quadrature.hpp"
#include "nil_theta/rational.hpp"
#include "nil_theta/reps.hpp"
#include "nil_theta/spectral.hpp"
#include "nil_theta/symplectic.hpp"
#include "nil_theta/theta.hpp"

namespace niltheta {

namespace {

using cplx = std::complex<double>;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

Rational rand_rat(std::mt19937_64& rng, long num_max = 60, long den_max = 12) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return rat(num(rng), den(rng));
}

GroupElement rand_group(std::mt19937_64& rng) {
  return {rand_rat(rng), rand_rat(rng), rand_rat(rng), rand_rat(rng), rand_rat(rng)};
}

// ---- 1: the 5x5 unipotent model multiplies like the group ----

CriterionResult criterion1() {
  std::mt19937_64 rng(101);
  int ok = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    GroupElement g1 = rand_group(rng), g2 = rand_group(rng);
    if (to_matrix(multiply(g1, g2)) == to_matrix(g1) * to_matrix(g2)) ++ok;
  }
  return {1, "matrix model respects the group law", ok == trials, 0, 5.0,
          fmt("%d/%d products exact", ok, trials)};
}

// ---- 2: normalizer moves every mu != 0 covector to (0,0,0,0,mu) ----

CriterionResult criterion2() {
  std::mt19937_64 rng(102);
  int ok = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    Covector lam{rand_rat(rng), rand_rat(rng), rand_rat(rng), rand_rat(rng),
                 rand_rat(rng)};
    while (lam.mu == 0) lam.mu = rand_rat(rng);
    Covector target{Rational(0), Rational(0), Rational(0), Rational(0), lam.mu};
    if (coadjoint_action(orbit_normalizer(lam), lam) == target) ++ok;
  }
  return {2, "orbit normalizer reaches the canonical covector", ok == trials, 0, 5.0,
          fmt("%d/%d covectors normalized exactly", ok, trials)};
}

// ---- 3: level k carries exactly 4k^2 characters ----

CriterionResult criterion3() {
  bool pass = true;
  std::string detail;
  for (long k = 1; k <= 5; ++k) {
    auto pts = enumerate_integral_points(k);
    std::set<std::pair<long, long>> uniq;
    bool domain = true;
    for (const auto& p : pts) {
      uniq.insert({p.m, p.n});
      domain = domain && p.k == k && 0 <= p.m && p.m < 2 * k && 0 <= p.n && p.n < 2 * k;
    }
    bool here = (long)pts.size() == 4 * k * k && multiplicity(k) == 4 * k * k &&
                (long)uniq.size() == 4 * k * k && domain;
    pass = pass && here;
    detail += fmt("k=%ld:%zu ", k, pts.size());
  }
  return {3, "integral point count is 4k^2", pass, 0, 1.0, detail};
}

// ---- 4: the three families are subordinate subalgebras; ideal set is the
//         e-family (the degenerate c = inf member coincides with it) ----

CriterionResult criterion4() {
  std::vector<SubalgebraSpec> members;
  for (long n = -10; n <= 10; ++n)
    members.push_back(subordinate_family(FamilyTag::C, ExtRational::finite(rat(n, 2))));
  members.push_back(subordinate_family(FamilyTag::C, ExtRational::pos_inf()));
  for (long bn : {-4L, -3L, -2L, -1L, 1L, 2L, 3L, 4L})
    for (long dn : {-2L, 0L, 2L})
      members.push_back(subordinate_family(FamilyTag::BD, ExtRational::finite(rat(bn, 2)),
                                           ExtRational::finite(rat(dn, 2))));
  for (long n = -10; n <= 10; ++n)
    members.push_back(subordinate_family(FamilyTag::E, ExtRational::finite(rat(n, 2))));
  members.push_back(subordinate_family(FamilyTag::E, ExtRational::pos_inf()));
  members.push_back(subordinate_family(FamilyTag::E, ExtRational::neg_inf()));

  std::vector<Covector> lams;
  for (const Rational& mu : {rat(1), rat(-2), rat(3, 2)})
    lams.push_back({Rational(0), Rational(0), Rational(0), Rational(0), mu});

  int bad = 0;
  for (const auto& s : members) {
    bool ok = is_subalgebra(s.basis) && (int)s.basis.size() == 3;
    for (const auto& lam : lams) ok = ok && is_subordinate(s.basis, lam);
    ok = ok && is_lagrangian(subalgebra_to_lagrangian(s.basis));
    bool want_ideal =
        s.tag == FamilyTag::E || (s.tag == FamilyTag::C && s.p1.infinite());
    ok = ok && (is_ideal(s.basis) == want_ideal);
    if (!ok) ++bad;
  }
  return {4, "subordinate families: subalgebra, Lagrangian projection, ideal set",
          bad == 0, 0, 5.0,
          fmt("%zu members checked, %d failures", members.size(), bad)};
}

// ---- 5: the almost CY structures verify and share one volume ratio ----

CriterionResult criterion5() {
  const double tol = 1e-10;
  std::vector<Rational> es = {rat(0), rat(1), rat(-1), rat(2), rat(1, 3)};
  bool pass = true;
  cplx ratio0{0, 0};
  double ratio_spread = 0, worst_resid = 0;
  for (size_t i = 0; i < es.size(); ++i) {
    CYStructure cy = cy_structure(es[i]);
    CYReport rep = verify_cy(cy);
    pass = pass && rep.pass(tol);
    worst_resid = std::max({worst_resid, rep.j_squared_residual,
                            rep.compatibility_residual, rep.d_re_epsilon_residual});
    std::vector<LieVector> Le = {
        LieVector{Rational(0), Rational(1), Rational(0), es[i], Rational(0)},
        LieVector{Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)}};
    pass = pass && is_special_lagrangian(Le, cy, tol);
    if (i == 0)
      ratio0 = rep.volume_ratio;
    else
      ratio_spread = std::max(ratio_spread, std::abs(rep.volume_ratio - ratio0));
  }
  pass = pass && ratio_spread < tol;
  return {5, "almost CY structures pass and share one volume ratio", pass, 0, 2.0,
          fmt("common ratio %.12g%+.2gi, spread %.2e, worst residual %.2e",
              ratio0.real(), ratio0.imag(), ratio_spread, worst_resid)};
}

// ---- 6: pseudoperiodicity with certified windows, factors via the cocycle ----

CriterionResult criterion6() {
  std::mt19937_64 rng(106);
  GaussianSpec spec{0.15, -0.2, 1.1, 0.9};
  WindowedFunction f = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 3.0, 1e-12);
  std::uniform_int_distribution<long> num(-24, 24);
  double worst_resid = 0, worst_mismatch = 0;
  for (long k : {1L, 2L}) {
    IntegralPoint p{k, (k == 1) ? 1 : 3, (k == 1) ? 0 : 2};
    for (int i = 0; i < 20; ++i) {
      BaseElement pt{rat(num(rng), 16), rat(num(rng), 16), rat(num(rng), 16),
                     rat(num(rng), 16)};
      auto rep = check_pseudoperiodicity(p, f, pt, w);
      worst_resid = std::max(worst_resid, rep.max_residual());
      worst_mismatch = std::max(worst_mismatch, rep.max_factor_mismatch());
    }
  }
  bool pass = worst_resid < 1e-10 && worst_mismatch < 1e-12;
  return {6, "theta pseudoperiodicity with certified windows", pass, 0, 30.0,
          fmt("window W=%d, max residual %.2e, max cocycle mismatch %.2e", w.W,
              worst_resid, worst_mismatch)};
}

// shared by 7 and 12: Gram matrix of evaluators under the domain pairing
std::vector<std::vector<cplx>> gram_matrix(const std::vector<SectionEvaluator>& F,
                                           int nodes_per_axis) {
  Quadrature q = gauss_legendre01(nodes_per_axis);
  const int n = nodes_per_axis;
  std::vector<R4Point> pts;
  std::vector<double> wts;
  pts.reserve((size_t)n * n * n * n);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz)
        for (int it = 0; it < n; ++it) {
          pts.push_back({q.nodes[ix], q.nodes[iy], q.nodes[iz], q.nodes[it]});
          wts.push_back(q.weights[ix] * q.weights[iy] * q.weights[iz] * q.weights[it]);
        }
  std::vector<std::vector<cplx>> vals(F.size(), std::vector<cplx>(pts.size()));
  for (size_t j = 0; j < F.size(); ++j)
    for (size_t s = 0; s < pts.size(); ++s) vals[j][s] = F[j](pts[s]);
  std::vector<std::vector<cplx>> G(F.size(), std::vector<cplx>(F.size(), cplx{0, 0}));
  for (size_t a = 0; a < F.size(); ++a)
    for (size_t b = 0; b < F.size(); ++b) {
      cplx acc{0, 0};
      for (size_t s = 0; s < pts.size(); ++s)
        acc += wts[s] * vals[a][s] * std::conj(vals[b][s]);
      G[a][b] = 2.0 * acc;  // pairing normalization over the half-size domain
    }
  return G;
}

// ---- 7: <f, f> = (1/2) <Theta f, Theta f>_P and distinct characters are
//         orthogonal ----

CriterionResult criterion7() {
  GaussianSpec spec{0, 0, 1, 1};
  WindowedFunction f = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 2.5, 1e-12);
  const double l2 = spec.amplitude * spec.amplitude * spec.sigma * spec.sigma / 2;

  std::vector<SectionEvaluator> F;
  for (long m : {0L, 1L})
    for (long n : {0L, 1L}) {
      IntegralPoint p{1, m, n};
      F.push_back([p, f, w](const R4Point& pt) { return theta_R4(p, f, pt, w); });
    }
  auto G = gram_matrix(F, 12);

  double diag_err = 0, offdiag = 0;
  for (size_t a = 0; a < F.size(); ++a)
    for (size_t b = 0; b < F.size(); ++b) {
      if (a == b)
        diag_err = std::max(diag_err, std::abs(0.5 * G[a][a].real() - l2) / l2);
      else
        offdiag = std::max(offdiag, std::abs(G[a][b]));
    }
  bool pass = diag_err < 1e-3 && offdiag < 1e-3;
  return {7, "periodizing map is unitary up to the factor 2", pass, 0, 300.0,
          fmt("12^4 nodes: pairing rel err %.2e, max cross-Gram %.2e", diag_err,
              offdiag)};
}

// ---- 8: circle-bundle torus oracle equals the Jacobi series; the classical
//         operator annihilates the ground function ----

CriterionResult criterion8() {
  const double phi = 0.3;
  C2Function1D ground = classical_ground();
  double worst = 0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      double x = i / 20.0, y = j / 20.0;
      cplx lhs = weil_brezin_torus(1, ground.f, x, y, phi, 12);
      cplx rhs = std::exp(cplx(0, -2 * M_PI * phi)) * jacobi_theta(cplx(x, y)) *
                 std::exp(-M_PI * y * y);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  double ann = 0, first_err = 0;
  C2Function1D first = classical_first();
  for (int i = 0; i <= 120; ++i) {
    double t = -3 + i * 0.05;
    ann = std::max(ann, std::abs(classical_delta1_apply(ground, t)));
    first_err = std::max(
        first_err, std::abs(classical_delta1_apply(first, t) - M_PI * first.f(t)));
  }
  bool pass = worst < 1e-12 && ann < 1e-12 && first_err < 1e-12;
  return {8, "torus oracle matches the Jacobi theta", pass, 0, 5.0,
          fmt("identity %.2e, ground annihilation %.2e, first eigenvalue pi %.2e",
              worst, ann, first_err)};
}

// ---- 9: order-4 normal form equals the frozen display; exp(ad A) closes ----

CriterionResult criterion9() {
  auto steps = bnf(4);
  auto H = hamiltonian_grading();
  bool pass = steps.size() == 3;
  if (!pass) return {9, "Birkhoff normal form matches the frozen order-4 data",
                     false, 0, 10.0, "unexpected step count"};
  const auto& s2 = steps[0];
  const auto& s3 = steps[1];
  const auto& s4 = steps[2];
  pass = pass && s2.order == 2 && s3.order == 3 && s4.order == 4;
  pass = pass && s2.K == H.H2 && s2.A.is_zero() && s3.K.is_zero();

  auto mono = [](int a1c, int a2c, int b1c, int b2c) {
    return MultiIndex{a1c, a2c, b1c, b2c};
  };
  LadderPolynomial A3;
  auto add3 = [&](const Rational& c, MultiIndex m) {
    A3 = A3 + LadderPolynomial::monomial(m, QSqrt2(rat(0), c / 4));
  };
  add3(Rational(-1, 3), mono(2, 1, 0, 0));
  add3(rat(-1), mono(2, 0, 0, 1));
  add3(rat(1), mono(0, 1, 2, 0));
  add3(Rational(1, 3), mono(0, 0, 2, 1));
  add3(rat(-2), mono(1, 1, 1, 0));
  add3(rat(2), mono(1, 0, 1, 1));
  add3(rat(1), mono(0, 1, 0, 0));
  add3(rat(-1), mono(0, 0, 0, 1));
  pass = pass && s3.A == A3;

  LadderPolynomial K4;
  auto add4 = [&](const Rational& c, MultiIndex m) {
    K4 = K4 + LadderPolynomial::monomial(m, QSqrt2(c / 24));
  };
  add4(Rational(-1, 2), mono(0, 0, 0, 0));
  add4(rat(10), mono(1, 0, 1, 0));
  add4(rat(8), mono(0, 1, 0, 1));
  add4(rat(-1), mono(2, 0, 2, 0));
  add4(rat(-12), mono(2, 0, 0, 2));
  add4(rat(-16), mono(1, 1, 1, 1));
  add4(rat(-12), mono(0, 2, 2, 0));
  pass = pass && s4.K == K4;

  LadderPolynomial A4;
  auto add5 = [&](const Rational& c, MultiIndex m) {
    A4 = A4 + LadderPolynomial::monomial(m, QSqrt2(c / 192));
  };
  add5(rat(-4), mono(2, 0, 0, 0));
  add5(rat(-16), mono(0, 2, 0, 0));
  add5(rat(4), mono(0, 0, 2, 0));
  add5(rat(16), mono(0, 0, 0, 2));
  add5(rat(-5), mono(4, 0, 0, 0));
  add5(rat(-8), mono(3, 0, 1, 0));
  add5(rat(-8), mono(2, 2, 0, 0));
  add5(rat(32), mono(2, 1, 0, 1));
  add5(rat(32), mono(1, 2, 1, 0));
  add5(rat(8), mono(1, 0, 3, 0));
  add5(rat(-32), mono(1, 0, 1, 2));
  add5(rat(-32), mono(0, 1, 2, 1));
  add5(rat(5), mono(0, 0, 4, 0));
  add5(rat(8), mono(0, 0, 2, 2));
  pass = pass && s4.A == A4;
  pass = pass && vacuum_expectation(s4.K) == Rational(-1, 48);

  GradedSeries A;
  A[1] = s3.A;
  A[2] = s4.A;
  GradedSeries Hs;
  Hs[0] = H.H2;
  Hs[1] = H.H3;
  Hs[2] = H.H4;
  GradedSeries K = exp_ad_apply(A, Hs, 2);
  pass = pass && K[0] == s2.K && K[1] == s3.K && K[2] == s4.K;
  return {9, "Birkhoff normal form matches the frozen order-4 data", pass, 0, 10.0,
          pass ? "A3, K4, A4 exact; vev(K4) = -1/48; exp(ad A) closure holds"
               : "mismatch against frozen data"};
}

// ---- 10: ground levels of Delta_k near 8 pi k, simple, converged ----

CriterionResult criterion10() {
  bool pass = true;
  std::string detail;
  for (long k = 1; k <= 4; ++k) {
    SpectrumReport rep = spectrum_delta_k(k, 40, 2);
    double offset = rep.eigenvalues[0] - 8 * M_PI * k;
    double gap = rep.eigenvalues[1] - rep.eigenvalues[0];
    bool here = rep.converged && rep.convergence_delta < 1e-8 && offset > -1.0 &&
                offset < 1.0 && gap >= 0.9 * 4 * M_PI * k;
    pass = pass && here;
    detail += fmt("k=%ld: off %.4f gap %.2f%s ", k, offset, gap, here ? "" : " FAIL");
  }
  return {10, "Laplacian ground levels sit near 8 pi k", pass, 0, 120.0, detail};
}

// ---- 11: the lowest six levels cluster around the eps = 0 centers with
//          deviation O(eps^2) ----

CriterionResult criterion11() {
  const double c_dev = 1.5;
  std::vector<double> eps = {0.05, 0.1, 0.2};
  std::vector<double> dev;
  bool pass = true;
  std::string detail;
  for (double e : eps) {
    BandReport br = band_report(e, 40, 6);
    double worst = 0;
    for (const auto& a : br.assignments) worst = std::max(worst, a.deviation);
    pass = pass && worst <= c_dev * e * e;
    dev.push_back(br.ground_band_deviation);
    detail += fmt("eps=%.2f: worst %.4f (cap %.4f) ", e, worst, c_dev * e * e);
  }
  // least-squares slope of log(dev) against log(eps)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < eps.size(); ++i) {
    double lx = std::log(eps[i]), ly = std::log(dev[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  double n = (double)eps.size();
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  pass = pass && std::abs(slope - 2.0) <= 0.15 * 2.0;
  detail += fmt("slope %.4f", slope);
  return {11, "band clustering scales as eps^2", pass, 0, 60.0, detail};
}

// ---- 12: the level-1 quantization basis is pseudoperiodic and orthogonal ----

CriterionResult criterion12() {
  const long k = 1;
  const int N = 40;
  GroundState gs = ground_state(k, N);
  GaussianSpec bound = ground_state_bound(k);
  TruncationWindow w = auto_window(bound, 2.5, 1e-10);
  WindowedFunction wf{
      [gs](double x, double t) { return cplx(gs(x, t), 0); }, bound};

  std::mt19937_64 rng(112);
  std::uniform_int_distribution<long> num(-10, 10);
  double worst_resid = 0;
  for (const auto& p : enumerate_integral_points(k))
    for (int i = 0; i < 5; ++i) {
      BaseElement pt{rat(num(rng), 8), rat(num(rng), 8), rat(num(rng), 8),
                     rat(num(rng), 8)};
      auto rep = check_pseudoperiodicity(p, wf, pt, w);
      worst_resid = std::max(worst_resid, rep.max_residual());
    }

  auto basis = quantization_basis(k, N, w);
  auto G = gram_matrix(basis, 10);
  double diag_err = 0, offdiag = 0;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      if (a == b)
        diag_err = std::max(diag_err, std::abs(G[a][a].real() - 2.0) / 2.0);
      else
        offdiag = std::max(offdiag, std::abs(G[a][b]) / 2.0);
    }
  bool pass = basis.size() == 4 && worst_resid < 1e-8 && diag_err < 1e-3 &&
              offdiag < 1e-3;
  return {12, "quantization basis is pseudoperiodic and orthogonal", pass, 0, 600.0,
          fmt("max residual %.2e, Gram diag rel err %.2e, offdiag %.2e (10^4 nodes)",
              worst_resid, diag_err, offdiag)};
}

}  // namespace

CriterionResult run_criterion(int id) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion1(); break;
    case 2: r = criterion2(); break;
    case 3: r = criterion3(); break;
    case 4: r = criterion4(); break;
    case 5: r = criterion5(); break;
    case 6: r = criterion6(); break;
    case 7: r = criterion7(); break;
    case 8: r = criterion8(); break;
    case 9: r = criterion9(); break;
    case 10: r = criterion10(); break;
    case 11: r = criterion11(); break;
    case 12: r = criterion12(); break;
    default: throw std::invalid_argument("criterion id must be 1..12");
  }
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace niltheta

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "nil_theta/quadrature.hpp"
#include "nil_theta/spectral.hpp"
#include "nil_theta/theta.hpp"

using namespace niltheta;
using C = std::complex<double>;

TEST_CASE("assembled operator: symmetric, banded in total degree") {
  NumberBasisOperator op = build_scaled_hamiltonian(0.17, 12);
  CHECK(op.symmetry_defect() < 1e-13);
  double worst = 0;
  for (size_t i = 0; i < op.states.size(); ++i)
    for (size_t j = 0; j < op.states.size(); ++j) {
      int di = op.states[i].first + op.states[i].second;
      int dj = op.states[j].first + op.states[j].second;
      if (std::abs(di - dj) > 4) worst = std::max(worst, std::abs(op.mat(i, j)));
    }
  CHECK(worst == 0.0);
}

TEST_CASE("eps = 0 reduces to the exact 2D oscillator") {
  SpectrumReport r = spectrum_scaled(0.0, 12, 6);
  double expect[6] = {2, 4, 4, 6, 6, 6};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(r.eigenvalues[i] - expect[i]) < 1e-12);
  CHECK(r.converged);
}

TEST_CASE("spectrum of the level-k Laplacian") {
  SpectrumReport r = spectrum_delta_k(1, 36, 10);
  CHECK(r.converged);
  CHECK(r.eigenvalues[0] - 8 * M_PI > -1.0);
  CHECK(r.eigenvalues[0] - 8 * M_PI < 1.0);
  CHECK(r.eigenvalues[1] - r.eigenvalues[0] >= 0.9 * 4 * M_PI);
  for (int i = 0; i + 1 < 10; ++i) CHECK(r.eigenvalues[i] <= r.eigenvalues[i + 1]);
  for (double ev : r.eigenvalues) CHECK(ev >= 0);

  // the offset stays bounded while the gap grows linearly in k
  double prev_gap = 0;
  for (long k = 1; k <= 2; ++k) {
    SpectrumReport rk = spectrum_delta_k(k, 36, 2);
    double off = rk.eigenvalues[0] - 8 * M_PI * k;
    double gap = rk.eigenvalues[1] - rk.eigenvalues[0];
    CHECK(off > -1.0);
    CHECK(off < 1.0);
    CHECK(gap >= 0.9 * 4 * M_PI * k);
    CHECK(gap > prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("variational monotonicity of the ground level in the cut") {
  double prev = 1e300;
  for (int N : {8, 16, 24, 32}) {
    double l0 = spectrum_delta_k(1, N, 1).eigenvalues[0];
    CHECK(l0 <= prev + 1e-12);
    prev = l0;
  }
}

TEST_CASE("direct assembly and eps-scaling give the same spectrum") {
  const long k = 1;
  NumberBasisOperator direct = build_delta_k_direct(k, 28);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(direct.mat, Eigen::EigenvaluesOnly);
  SpectrumReport scaled = spectrum_delta_k(k, 28, 8);
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(es.eigenvalues()(i) - scaled.eigenvalues[i]) /
              scaled.eigenvalues[i] <
          1e-9);
}

TEST_CASE("perturbation constant matches the exact vacuum bridge") {
  auto cfit = [](double eps) {
    return (spectrum_scaled(eps, 36, 1).eigenvalues[0] - 2.0) / (eps * eps);
  };
  double c1 = cfit(0.05), c2 = cfit(0.1);
  double rich = (4 * c1 - c2) / 3;
  CHECK(std::abs(rich - 1.0 / 12) < 2e-4);
}

TEST_CASE("band clustering at small eps") {
  double devs[3];
  int idx = 0;
  for (double eps : {0.05, 0.1, 0.2}) {
    CAPTURE(eps);
    BandReport br = band_report(eps, 36, 6);
    devs[idx++] = br.ground_band_deviation;
    double worst6 = 0;
    for (const auto& a : br.assignments) worst6 = std::max(worst6, a.deviation);
    CHECK(br.ground_band_deviation < eps * eps);
    CHECK(worst6 < 1.5 * eps * eps);
    // lowest six sit in the first three bands
    CHECK(br.assignments[0].band == 0);
    CHECK(br.assignments[1].band == 1);
    CHECK(br.assignments[2].band == 1);
    CHECK(br.assignments[5].band == 2);
  }
  double slope = std::log(devs[2] / devs[0]) / std::log(4.0);
  CHECK(std::abs(slope - 2.0) < 0.3);
  BandReport b0 = band_report(0.0, 20, 6);
  CHECK(b0.ground_band_deviation == 0.0);
  for (const auto& a : b0.assignments) CHECK(a.deviation < 1e-12);
}

TEST_CASE("ground state: parity, normalization, residual, decay certificate") {
  GroundState gs = ground_state(1, 36);
  CHECK(gs.converged);
  CHECK(gs.lambda1 - gs.lambda0 > 1.0);
  double norm2 = 0;
  for (double c : gs.coeff) norm2 += c * c;
  CHECK(std::abs(norm2 - 1.0) < 1e-12);
  // x -> -x symmetry of the potential forces even n1 content
  double worst_odd = 0;
  for (size_t i = 0; i < gs.states.size(); ++i)
    if (gs.states[i].first % 2 == 1)
      worst_odd = std::max(worst_odd, std::abs(gs.coeff[i]));
  CHECK(worst_odd < 1e-12);

  // numeric L2 norm over [-3,3]^2
  Quadrature q = gauss_legendre01(80);
  double nrm = 0;
  for (int i = 0; i < 80; ++i)
    for (int j = 0; j < 80; ++j) {
      double x = -3.0 + 6.0 * q.nodes[i];
      double t = -3.0 + 6.0 * q.nodes[j];
      double v = gs(x, t);
      nrm += 36.0 * q.weights[i] * q.weights[j] * v * v;
    }
  CHECK(std::abs(nrm - 1.0) < 1e-6);

  CHECK(ground_state_fd_residual(gs, 160, 2.2) < 1e-5);

  GaussianSpec b = ground_state_bound(1);
  double worst_ratio = 0;
  for (double x = -4.0; x <= 4.0; x += 0.25)
    for (double t = -4.0; t <= 4.0; t += 0.25) {
      double bound = b.amplitude * std::exp(-M_PI * (x * x + t * t) / (b.sigma * b.sigma));
      double v = std::abs(gs(x, t));
      if (v > 1e-300 && bound > 0) worst_ratio = std::max(worst_ratio, v / bound);
    }
  CHECK(worst_ratio <= 1.0);

  SpectrumReport r = spectrum_delta_k(1, 36, 2);
  CHECK(std::abs(gs.lambda0 - r.eigenvalues[0]) < 1e-9);
  CHECK(std::abs(gs.lambda1 - r.eigenvalues[1]) < 1e-9);
}

TEST_CASE("potential: displayed and factored forms agree") {
  CHECK(potential_eval(1, 0, 0) == 0.0);
  CHECK(std::abs(potential_eval(1, 1, 1) - 16 * M_PI * M_PI * 1.25) < 1e-9);
  for (int xi = -6; xi <= 6; ++xi)
    for (int ti = -6; ti <= 6; ++ti) {
      auto [disp, fact] = potential_forms(rat(xi, 3), rat(ti, 3));
      CHECK(disp == fact);
      CHECK(disp >= 0);
    }
}

TEST_CASE("quantization basis: size, pseudoperiodicity spot checks, Gram") {
  const long k = 1;
  TruncationWindow w = auto_window(ground_state_bound(k), 2.5, 1e-10);
  auto basis = quantization_basis(k, 30, w);
  REQUIRE(basis.size() == 4);

  for (const auto& F : basis) {
    R4Point pt{0.3, 0.2, 0.1, 0.4};
    C base = F(pt);
    C lhs = F(R4Point{pt.x, pt.y, pt.z + 1, pt.t});
    CHECK(std::abs(lhs - std::polar(1.0, 4 * M_PI * k * pt.x) * base) < 1e-8);
    C lhs2 = F(R4Point{pt.x, pt.y, pt.z, pt.t + 1});
    CHECK(std::abs(lhs2 - std::polar(1.0, 4 * M_PI * k * pt.y) * base) < 1e-8);
  }

  C gram[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram[i][j] = inner_product_P(basis[i], basis[j], 8);
  double offmax = 0, dmin = 1e300, dmax = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) {
        dmin = std::min(dmin, std::abs(gram[i][j]));
        dmax = std::max(dmax, std::abs(gram[i][j]));
      } else {
        offmax = std::max(offmax, std::abs(gram[i][j]));
      }
    }
  CHECK(offmax < 5e-3);
  CHECK(dmin > 1.0);  // ~2 by the pairing normalization
  CHECK(dmax < 3.0);
}

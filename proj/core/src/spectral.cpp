#include "nil_theta/spectral.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "nil_theta/reps.hpp"

namespace niltheta {

namespace {

// 1D position matrix on modes 0..M-1: x|n> = sqrt(n/2)|n-1> + sqrt((n+1)/2)|n+1>.
Eigen::MatrixXd position_matrix(int M) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(M, M);
  for (int n = 0; n + 1 < M; ++n) {
    const double c = std::sqrt((n + 1) / 2.0);
    x(n, n + 1) = c;
    x(n + 1, n) = c;
  }
  return x;
}

std::vector<std::pair<int, int>> graded_states(int N) {
  std::vector<std::pair<int, int>> states;
  states.reserve(static_cast<size_t>(N + 1) * (N + 2) / 2);
  for (int d = 0; d <= N; ++d)
    for (int n1 = 0; n1 <= d; ++n1) states.emplace_back(n1, d - n1);
  return states;
}

}  // namespace

double NumberBasisOperator::symmetry_defect() const {
  return (mat - mat.transpose()).cwiseAbs().maxCoeff();
}

NumberBasisOperator build_scaled_hamiltonian(double eps, int N) {
  if (N < 0) throw std::invalid_argument("build_scaled_hamiltonian: N < 0");
  NumberBasisOperator op;
  op.N = N;
  op.states = graded_states(N);
  const int dim = static_cast<int>(op.states.size());

  // Pad so that truncated products of the 1D matrices are exact on modes
  // 0..N: x^4 walks at most 4 modes out.
  const int M = N + 6;
  const Eigen::MatrixXd x = position_matrix(M);
  const Eigen::MatrixXd x2 = x * x;
  const Eigen::MatrixXd x4 = x2 * x2;

  op.mat = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto [n1, n2] = op.states[i];
    for (int j = 0; j < dim; ++j) {
      const auto [m1, m2] = op.states[j];
      double v = 0;
      if (i == j) v += 2.0 * (n1 + n2 + 1);           // -Lap + x^2 + t^2
      if (n2 == m2) v += eps * eps * 0.25 * x4(n1, m1);  // eps^2 x^4 / 4
      v += eps * x2(n1, m1) * x(n2, m2);               // eps x^2 t
      op.mat(i, j) = v;
    }
  }
  return op;
}

NumberBasisOperator build_delta_k_direct(long k, int N) {
  if (k < 1) throw std::invalid_argument("build_delta_k_direct: k < 1");
  if (N < 0) throw std::invalid_argument("build_delta_k_direct: N < 0");
  NumberBasisOperator op;
  op.N = N;
  op.states = graded_states(N);
  const int dim = static_cast<int>(op.states.size());

  const double omega = 4.0 * M_PI * static_cast<double>(k);  // dilation s^2
  const int M = N + 6;
  const Eigen::MatrixXd x = position_matrix(M);
  const Eigen::MatrixXd x2 = x * x;
  const Eigen::MatrixXd x4 = x2 * x2;
  // -d^2/dxi^2 = 2(n + 1/2) - xi^2 per mode
  Eigen::MatrixXd p2 = -x2;
  for (int n = 0; n < M; ++n) p2(n, n) += 2.0 * n + 1.0;

  op.mat = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto [n1, n2] = op.states[i];
    for (int j = 0; j < dim; ++j) {
      const auto [m1, m2] = op.states[j];
      double v = 0;
      if (n2 == m2) v += omega * (p2(n1, m1) + x2(n1, m1)) + 0.25 * x4(n1, m1);
      if (n1 == m1) v += omega * (p2(n2, m2) + x2(n2, m2));
      v -= std::sqrt(omega) * x2(n1, m1) * x(n2, m2);  // -16 pi^2 k^2 x^2 t
      op.mat(i, j) = v;
    }
  }
  return op;
}

namespace {

Eigen::VectorXd eigenvalues_of(const NumberBasisOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.mat, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solve failed");
  return es.eigenvalues();
}

}  // namespace

SpectrumReport spectrum_scaled(double eps, int N, int count) {
  if (count < 1) throw std::invalid_argument("spectrum: count < 1");
  SpectrumReport r;
  r.k = 0;
  r.eps = eps;
  r.N = N;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_scaled_hamiltonian(eps, N).mat);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::VectorXd ev_big = eigenvalues_of(build_scaled_hamiltonian(eps, N + 8));
  if (ev.size() < count) throw std::invalid_argument("spectrum: count exceeds basis");
  r.eigenvalues.assign(ev.data(), ev.data() + count);
  Eigen::VectorXd v = es.eigenvectors().col(0);
  if (v(0) < 0) v = -v;
  r.ground_coeff.assign(v.data(), v.data() + v.size());
  r.convergence_delta = std::abs(ev(0) - ev_big(0)) / std::abs(ev_big(0));
  r.converged = r.convergence_delta < 1e-8;
  return r;
}

SpectrumReport spectrum_delta_k(long k, int N, int count) {
  if (k < 1) throw std::invalid_argument("spectrum_delta_k: k < 1");
  const double scale = 4.0 * M_PI * static_cast<double>(k);
  SpectrumReport r = spectrum_scaled(1.0 / std::sqrt(scale), N, count);
  r.k = k;
  for (double& ev : r.eigenvalues) ev *= scale;
  return r;
}

BandReport band_report(double eps, int N, int count) {
  BandReport br;
  br.eps = eps;
  br.N = N;
  const SpectrumReport sr = spectrum_scaled(eps, N, count);
  for (double ev : sr.eigenvalues) {
    BandAssignment a;
    a.eigenvalue = ev;
    a.band = std::max(0, static_cast<int>(std::lround(ev / 2.0)) - 1);
    a.deviation = std::abs(ev - 2.0 * (a.band + 1));
    br.assignments.push_back(a);
  }
  for (const auto& a : br.assignments)
    if (a.band == 0) br.ground_band_deviation = std::max(br.ground_band_deviation, a.deviation);
  return br;
}

GroundState ground_state(long k, int N) {
  if (k < 1) throw std::invalid_argument("ground_state: k < 1");
  GroundState gs;
  gs.k = k;
  gs.N = N;
  // The eps form is a t-parity conjugate of Delta_k (x^2 t enters with
  // opposite sign), so the evaluator coefficients come from the direct
  // assembly; eigenvalues agree with the scaled route either way.
  const NumberBasisOperator op = build_delta_k_direct(k, N);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.mat);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solve failed");
  gs.lambda0 = es.eigenvalues()(0);
  gs.lambda1 = es.eigenvalues()(1);
  gs.states = op.states;
  const Eigen::VectorXd v = es.eigenvectors().col(0);
  gs.coeff.assign(v.data(), v.data() + v.size());
  // Fix the overall sign: make the vacuum component positive.
  if (gs.coeff[0] < 0)
    for (double& c : gs.coeff) c = -c;

  const Eigen::VectorXd ev_big = eigenvalues_of(build_delta_k_direct(k, N + 8));
  gs.converged = std::abs(es.eigenvalues()(0) - ev_big(0)) / std::abs(ev_big(0)) < 1e-8;
  return gs;
}

double GroundState::operator()(double x, double t) const {
  const double s = std::sqrt(4.0 * M_PI * static_cast<double>(k));
  const double xi = s * x, tau = s * t;
  // Normalized Hermite functions phi_n by upward recurrence:
  // phi_0 = pi^{-1/4} e^{-xi^2/2}, phi_{n+1} = xi sqrt(2/(n+1)) phi_n
  //                                            - sqrt(n/(n+1)) phi_{n-1}.
  std::vector<double> hx(N + 1), ht(N + 1);
  const double p0 = std::pow(M_PI, -0.25);
  hx[0] = p0 * std::exp(-0.5 * xi * xi);
  ht[0] = p0 * std::exp(-0.5 * tau * tau);
  if (N >= 1) {
    hx[1] = std::sqrt(2.0) * xi * hx[0];
    ht[1] = std::sqrt(2.0) * tau * ht[0];
  }
  for (int n = 1; n < N; ++n) {
    hx[n + 1] = xi * std::sqrt(2.0 / (n + 1)) * hx[n] - std::sqrt(n / (n + 1.0)) * hx[n - 1];
    ht[n + 1] = tau * std::sqrt(2.0 / (n + 1)) * ht[n] - std::sqrt(n / (n + 1.0)) * ht[n - 1];
  }
  double acc = 0;
  for (size_t i = 0; i < states.size(); ++i)
    acc += coeff[i] * hx[states[i].first] * ht[states[i].second];
  return s * acc;
}

double potential_eval(long k, double x, double t) {
  const double c = 16.0 * M_PI * M_PI * static_cast<double>(k) * static_cast<double>(k);
  const double w = t - 0.5 * x * x;
  return c * (x * x + w * w);
}

std::pair<Rational, Rational> potential_forms(const Rational& x, const Rational& t) {
  const Rational displayed = (x * x + t * t) + x * x * (x * x / 4 - t);
  const Rational w = t - x * x / 2;
  const Rational factored = x * x + w * w;
  return {displayed, factored};
}

double ground_state_fd_residual(const GroundState& gs, int grid, double halfwidth) {
  if (grid < 16) throw std::invalid_argument("fd residual: grid too small");
  const double h = 2.0 * halfwidth / (grid - 1);
  std::vector<double> xs(grid);
  for (int i = 0; i < grid; ++i) xs[i] = -halfwidth + i * h;
  // Cache psi on the grid plus a 3-point apron for the 6th-order stencil.
  const int G = grid + 6;
  std::vector<double> vals(static_cast<size_t>(G) * G);
  auto at = [&](int i, int j) -> double& { return vals[static_cast<size_t>(i) * G + j]; };
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j)
      at(i, j) = gs(-halfwidth + (i - 3) * h, -halfwidth + (j - 3) * h);

  // f'' ~ (2 f(+-3h) - 27 f(+-2h) + 270 f(+-h) - 490 f(0)) / (180 h^2)
  const double c3 = 2.0, c2 = -27.0, c1 = 270.0, c0 = -490.0;
  const double inv = 1.0 / (180.0 * h * h);
  double num = 0, den = 0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const int a = i + 3, b = j + 3;
      const double f = at(a, b);
      const double fxx = inv * (c0 * f + c1 * (at(a - 1, b) + at(a + 1, b)) +
                                c2 * (at(a - 2, b) + at(a + 2, b)) +
                                c3 * (at(a - 3, b) + at(a + 3, b)));
      const double ftt = inv * (c0 * f + c1 * (at(a, b - 1) + at(a, b + 1)) +
                                c2 * (at(a, b - 2) + at(a, b + 2)) +
                                c3 * (at(a, b - 3) + at(a, b + 3)));
      const double r = -fxx - ftt + potential_eval(gs.k, xs[i], xs[j]) * f - gs.lambda0 * f;
      num += r * r;
      den += f * f;
    }
  }
  return std::sqrt(num / den);
}

GaussianSpec ground_state_bound(long k) {
  GaussianSpec b;
  b.x0 = 0;
  b.t0 = 0;
  // Leading decay e^{-2 pi k (x^2 + t^2)}; widen to absorb the polynomial
  // prefactor of the basis truncation.  Validated pointwise in the tests.
  b.sigma = 1.3 / std::sqrt(2.0 * static_cast<double>(k));
  b.amplitude = 6.0 * std::sqrt(static_cast<double>(k));
  return b;
}

std::vector<SectionEvaluator> quantization_basis(long k, int N, const TruncationWindow& w) {
  auto gs = std::make_shared<GroundState>(ground_state(k, N));
  WindowedFunction wf;
  wf.f = [gs](double x, double t) { return std::complex<double>((*gs)(x, t), 0.0); };
  wf.bound = ground_state_bound(k);

  std::vector<SectionEvaluator> basis;
  for (const IntegralPoint& p : enumerate_integral_points(k))
    basis.push_back([p, wf, w](const R4Point& pt) { return theta_R4(p, wf, pt, w); });
  return basis;
}

}  // namespace niltheta

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "nil_theta/ladder.hpp"
#include "nil_theta/lie.hpp"
#include "nil_theta/spectral.hpp"
#include "nil_theta/theta.hpp"

using namespace niltheta;

namespace {

std::vector<GroupElement> random_elements(size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> numd(-60, 60);
  std::uniform_int_distribution<long> dend(1, 12);
  std::vector<GroupElement> out(n);
  for (auto& g : out)
    g = {rat(numd(rng), dend(rng)), rat(numd(rng), dend(rng)), rat(numd(rng), dend(rng)),
         rat(numd(rng), dend(rng)), rat(numd(rng), dend(rng))};
  return out;
}

void bm_group_multiply(benchmark::State& state) {
  auto els = random_elements(256);
  size_t i = 0;
  for (auto _ : state) {
    GroupElement p = multiply(els[i % 256], els[(i + 1) % 256]);
    benchmark::DoNotOptimize(p);
    ++i;
  }
}
BENCHMARK(bm_group_multiply);

void bm_matrix_homomorphism(benchmark::State& state) {
  auto els = random_elements(256);
  size_t i = 0;
  for (auto _ : state) {
    Matrix5 m = to_matrix(els[i % 256]) * to_matrix(els[(i + 1) % 256]);
    benchmark::DoNotOptimize(m);
    ++i;
  }
}
BENCHMARK(bm_matrix_homomorphism);

void bm_theta_eval(benchmark::State& state) {
  GaussianSpec spec{0, 0, 1, 1};
  WindowedFunction wf = gaussian2d(spec);
  TruncationWindow w = auto_window(spec, 2.0, 1e-12);
  IntegralPoint p{1, 1, 0};
  double x = 0;
  for (auto _ : state) {
    x += 1.0 / 4096;
    if (x >= 1) x -= 1;
    std::complex<double> v = theta_R4(p, wf, R4Point{x, 0.3, 0.2, 0.6}, w);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_theta_eval);

void bm_hamiltonian_assembly(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    NumberBasisOperator op = build_scaled_hamiltonian(0.1, N);
    benchmark::DoNotOptimize(op.mat.data());
  }
}
BENCHMARK(bm_hamiltonian_assembly)->Arg(16)->Arg(24)->Arg(32);

void bm_spectrum_ground(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    NumberBasisOperator op = build_delta_k_direct(1, N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.mat, Eigen::EigenvaluesOnly);
    benchmark::DoNotOptimize(es.eigenvalues()(0));
  }
}
BENCHMARK(bm_spectrum_ground)->Arg(16)->Arg(24);

void bm_bnf_order4(benchmark::State& state) {
  for (auto _ : state) {
    auto steps = bnf(4);
    benchmark::DoNotOptimize(steps.back().K.terms.size());
  }
}
BENCHMARK(bm_bnf_order4);

void bm_ground_state_eval(benchmark::State& state) {
  GroundState gs = ground_state(1, 24);
  double x = -2;
  for (auto _ : state) {
    x += 1.0 / 1024;
    if (x > 2) x = -2;
    benchmark::DoNotOptimize(gs(x, 0.4));
  }
}
BENCHMARK(bm_ground_state_eval);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cstdint>

#include "detchain/chain.hpp"
#include "detchain/checks.hpp"
#include "detchain/field.hpp"
#include "detchain/ideal.hpp"
#include "detchain/matrix.hpp"
#include "detchain/polynomial.hpp"
#include "detchain/rng.hpp"

namespace {

using namespace detchain;

const Field& bench_field() {
  static const Field f = Field::prime(32003);
  return f;
}

// Dense-ish form product; degree comes from the benchmark argument.
void BM_PolynomialMul(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const int num_vars = 6;
  SplitMix64 rng(42);
  Polynomial a = random_form(bench_field(), num_vars, degree, rng, 24);
  Polynomial b = random_form(bench_field(), num_vars, degree + 1, rng, 24);
  for (auto _ : state) {
    Polynomial p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolynomialMul)->Arg(2)->Arg(4)->Arg(6);

// Reduced Groebner basis of I_t of a generic m x n matrix under grevlex.
// The minors are already close to a basis in this order, so this mostly
// measures pair elimination and inter-reduction.
void BM_GroebnerGenericMinors(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  PolyMatrix mat = generic_matrix(bench_field(), m, n);
  MonomialOrder ord = MonomialOrder::grevlex();
  for (auto _ : state) {
    IdealHandle ideal = minors_ideal(mat, t, ord);
    compute_groebner_basis(ideal);
    benchmark::DoNotOptimize(ideal.basis().size());
  }
}
BENCHMARK(BM_GroebnerGenericMinors)
    ->Args({2, 3, 2})
    ->Args({3, 3, 2})
    ->Args({3, 4, 2})
    ->Args({3, 4, 3});

// Height certificate for I_t: basis plus the hitting-set dimension walk.
void BM_HeightCertificate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  PolyMatrix mat = generic_matrix(bench_field(), m, n);
  CheckConfig cfg;
  for (auto _ : state) {
    HeightReport rep = is_determinantal(mat, t, cfg);
    benchmark::DoNotOptimize(rep.computed_height);
  }
}
BENCHMARK(BM_HeightCertificate)->Args({3, 3, 2})->Args({3, 4, 3});

// End-to-end certified chain: every Groebner run, height certificate, and
// ratio-relation pass for all t-1 steps down to the terminal ideal.
void BM_FullChain(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int t = static_cast<int>(state.range(2));
  PolyMatrix mat = generic_matrix(bench_field(), m, n);
  ChainConfig cfg;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    ChainCertificate cert = full_chain(mat, t, seed, cfg);
    benchmark::DoNotOptimize(cert.status);
  }
}
BENCHMARK(BM_FullChain)->Args({2, 3, 2})->Args({3, 3, 2})->Args({3, 4, 3});

}  // namespace

BENCHMARK_MAIN();

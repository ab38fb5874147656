#include <benchmark/benchmark.h>

#include <random>

#include "rht/catalog.hpp"
#include "rht/cohomology.hpp"
#include "rht/homotopy.hpp"
#include "rht/linalg.hpp"
#include "rht/model.hpp"
#include "rht/morphism.hpp"

namespace {

using namespace rht;

QMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat(num(rng), den(rng));
  return m;
}

void BM_rref(benchmark::State& state) {
  QMatrix m = random_matrix(40, 60, 0x5eed);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref);

void BM_poly_mul(benchmark::State& state) {
  Catalog cat;
  ModelPtr a5 = cat.model("a5");
  Polynomial p = Polynomial::zero(a5->alg()), q = p;
  for (std::uint32_t i = 0; i < a5->alg().size(); ++i) {
    Polynomial g = Polynomial::generator(a5->alg(), i);
    if (a5->alg().gen(i).degree + 2 <= a5->bound()) {
      p = p + g;
      q = q + g.scaled(rat(1, i + 1));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_poly_mul);

void BM_betti_su3t(benchmark::State& state) {
  Catalog cat;
  ModelPtr m = cat.model("su3_t");
  for (auto _ : state) {
    Cohomology coh(m);  // fresh cache: measures the full degree sweep
    int sum = 0;
    for (int n = 0; n <= m->bound(); ++n) sum += coh.betti(n);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_betti_su3t);

void BM_decide_homotopic(benchmark::State& state) {
  Catalog cat;
  ModelPtr s4 = cat.model("s4"), prod = cat.model("s3xs4");
  MapPtr hopf = cat.map("hopf_composite");
  MapPtr zero = ModelMap::make("zero", s4, prod,
                               {Polynomial::zero(prod->alg()), Polynomial::zero(prod->alg())});
  for (auto _ : state) {
    Cohomology Cs4(s4), Cprod(prod);
    benchmark::DoNotOptimize(decide_homotopic(*hopf, *zero, Cs4, Cprod));
  }
}
BENCHMARK(BM_decide_homotopic);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "polycol/algebraic.hpp"
#include "polycol/engine.hpp"
#include "polycol/poly.hpp"
#include "polycol/spectral.hpp"

using namespace polycol;

namespace {

Instance load(const std::string& name) {
  std::ifstream f(std::string(POLYCOL_BENCH_DATA) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

void BM_RootIsolation(benchmark::State& st) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-100, 100);
  std::vector<ZPoly> polys;
  for (int i = 0; i < 32; ++i) {
    std::vector<Integer> c(st.range(0) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1 + std::abs(coef(rng));
    polys.emplace_back(c);
  }
  std::size_t i = 0;
  for (auto _ : st) {
    ZPoly p = polys[i++ % polys.size()];
    benchmark::DoNotOptimize(AlgebraicNumber::roots_of(squarefree_part(p)));
  }
}
BENCHMARK(BM_RootIsolation)->DenseRange(2, 6, 2);

void BM_Spectrum(benchmark::State& st) {
  Instance in = load("rotation_scale.json");
  for (auto _ : st) benchmark::DoNotOptimize(spectrum(in.matrix));
}
BENCHMARK(BM_Spectrum);

// The full engine, and the symbolic pipeline with the shortcuts off.
void engine(benchmark::State& st, const char* file, bool symbolic) {
  Instance in = load(file);
  SolveOptions s;
  s.search_cap = in.options.max_witness;
  EngineOptions e = engine_options(in.options);
  if (symbolic) {
    e.prescan = 0;
    e.escape_limit = 0;
  }
  for (auto _ : st) benchmark::DoNotOptimize(run(in, s, e));
}

BENCHMARK_CAPTURE(engine, diag_two, "diag_two.json", false);
BENCHMARK_CAPTURE(engine, diag_two_symbolic, "diag_two.json", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(engine, rotation_quarter_symbolic, "rotation_quarter.json", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(engine, rotation_scale_symbolic, "rotation_scale.json", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(engine, diverging, "diverging.json", false)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

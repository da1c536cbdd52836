#include <benchmark/benchmark.h>

#include "neumass/assembly.hpp"

using namespace neumass;

namespace {

Mesh make_mesh(int level, Degree deg) {
  Triangle t = triangle_from_vertices({0, 0}, {4, 0}, {0, 3});
  return refine_mesh(t, level, deg);
}

void BM_assemble_parallel(benchmark::State& state) {
  Mesh m = make_mesh(static_cast<int>(state.range(0)), Degree::p2);
  for (auto _ : state) {
    AssembledSystem sys = assemble(m);
    benchmark::DoNotOptimize(sys.K);
  }
  state.SetComplexityN(static_cast<int64_t>(m.elements.size()));
}

void BM_assemble_serial(benchmark::State& state) {
  Mesh m = make_mesh(static_cast<int>(state.range(0)), Degree::p2);
  for (auto _ : state) {
    AssembledSystem sys = assemble_serial(m);
    benchmark::DoNotOptimize(sys.K);
  }
  state.SetComplexityN(static_cast<int64_t>(m.elements.size()));
}

}  // namespace

BENCHMARK(BM_assemble_parallel)->DenseRange(4, 7)->Complexity(benchmark::oN);
BENCHMARK(BM_assemble_serial)->DenseRange(4, 7)->Complexity(benchmark::oN);

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels on the enumeration and oracle workloads.

#include "fixtures.hpp"

#include "relca/fpspace.hpp"
#include "relca/oracle.hpp"
#include "relca/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace relca;
using namespace relca::testing;

namespace {

// n copies of the mirrored two-context example: the interval has 16^n families.
RelationalContextFamily mirrors(std::size_t n) {
  RelationalContextFamily rcf;
  for (std::size_t i = 0; i < n; ++i) {
    auto base = 2 * i;
    std::string s = std::to_string(i);
    rcf.contexts.emplace_back("L" + s, std::vector<std::string>{"a" + s, "b" + s}, std::vector<Attribute>{}, 0,
                              std::vector<Bits>{});
    rcf.contexts.emplace_back("R" + s, std::vector<std::string>{"c" + s, "d" + s}, std::vector<Attribute>{}, 0,
                              std::vector<Bits>{});
    rcf.relations.emplace_back("p" + s, base, base + 1, 2, 2, std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
    rcf.relations.emplace_back("q" + s, base + 1, base, 2, 2, std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
  }
  rcf.operators.ops = {Op::QualifiedExistential};
  return rcf;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) ? "openmp x" + std::to_string(thread_count()) : "serial");
}

void BM_EnumerateMirrors(benchmark::State& state) {
  auto rcf = mirrors(3);
  EnumerateOptions o;
  o.exec = exec_of(state);
  o.prune = false;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_acceptable(rcf, o).acceptable.size());
  label(state);
}

void BM_EnumeratePruned(benchmark::State& state) {
  auto rcf = mirrors(3);
  EnumerateOptions o;
  o.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_acceptable(rcf, o).acceptable.size());
  label(state);
}

void BM_OracleSelfRelation(benchmark::State& state) {
  auto rcf = load("self_relation.rcf");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_enumerate(rcf, kDefaultBudget, exec_of(state)).acceptable_count);
  label(state);
}

void BM_GfpMirrors(benchmark::State& state) {
  auto rcf = mirrors(6);
  for (auto _ : state) benchmark::DoNotOptimize(rca_gfp(rcf, exec_of(state)).scaled_attribute_count());
  label(state);
}

}  // namespace

BENCHMARK(BM_EnumerateMirrors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumeratePruned)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSelfRelation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GfpMirrors)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

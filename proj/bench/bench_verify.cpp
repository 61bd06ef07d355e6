// Parallel catalog verification against the serial reference.
#include <benchmark/benchmark.h>

#include "sqf/verify.hpp"

namespace {

const sqf::Catalog& catalog() {
  static const sqf::Catalog c = sqf::load_catalog_file(sqf::default_catalog_path());
  return c;
}

void BM_VerifyCatalog(benchmark::State& state) {
  sqf::VerificationPlan p;
  p.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sqf::verify_catalog(catalog(), p));
}

void BM_VerifyCatalogRef(benchmark::State& state) {
  sqf::VerificationPlan p;
  for (auto _ : state) benchmark::DoNotOptimize(sqf::verify_catalog_ref(catalog(), p));
}

}  // namespace

BENCHMARK(BM_VerifyCatalog)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyCatalogRef)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <vector>

#include "nga/alphabet.hpp"
#include "nga/harness.hpp"
#include "nga/hopfield.hpp"
#include "nga/rng.hpp"

namespace {

// Single-group convergence cost as the dimension grows.
void BM_Converge(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  nga::RandomStream rng(1, "bench");
  const nga::WeightMatrix w = nga::new_random_group(n, rng);
  nga::Pattern start(n);
  for (std::size_t i = 0; i < n; ++i) start.set(i, rng.next_bool());

  std::vector<double> scratch;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nga::flips_to_convergence(w, start, scratch));
  }
}
BENCHMARK(BM_Converge)->Arg(16)->Arg(25)->Arg(64)->Arg(100);

// The presentation fan-out: converge a whole repertoire on one stimulus.
// Run with more workers to see the throughput scale.
void BM_PresentRepertoire(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  nga::RandomStream rng(2, "bench");
  std::vector<nga::WeightMatrix> groups;
  groups.reserve(2000);
  for (int i = 0; i < 2000; ++i) groups.push_back(nga::new_random_group(16, rng));
  const nga::Pattern stimulus = nga::encode_grid(nga::builtin_alphabet()[7]);

  nga::ThreadPool pool(workers);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nga::present_to_repertoire(groups, stimulus, &pool));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(groups.size()));
}
BENCHMARK(BM_PresentRepertoire)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

// Census cost over a mid-sized repertoire.
void BM_Census(benchmark::State& state) {
  nga::RandomStream rng(3, "bench");
  std::vector<nga::WeightMatrix> groups;
  for (int i = 0; i < 2000; ++i) groups.push_back(nga::new_random_group(16, rng));
  const auto patterns = nga::encode_glyph_set(nga::builtin_alphabet());

  nga::ThreadPool pool(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nga::census(groups, patterns, &pool));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(groups.size()));
}
BENCHMARK(BM_Census)->Arg(1)->Arg(2)->UseRealTime();

}  // namespace

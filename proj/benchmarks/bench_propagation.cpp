#include <benchmark/benchmark.h>

#include <vector>

#include "nga/dynamics.hpp"
#include "nga/repertoire.hpp"
#include "nga/rng.hpp"

namespace {

// One bulk-synchronous recognition propagation step over a built graph.
void BM_PropagateRecognition(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  nga::RandomStream rng(4, "bench");
  nga::RepertoireParams params;
  params.target_size = 2000;
  params.neuron_count = 16;
  const nga::RepertoireGraph graph = nga::build_recognition_repertoire(params, rng);

  std::vector<double> excitations(graph.size());
  for (std::size_t i = 0; i < excitations.size(); ++i) {
    excitations[i] = 0.5 + 3.0 * ((i * 37) % 100) / 100.0;
  }
  nga::LearningParams learn;
  std::vector<nga::WeightMatrix> out(graph.size(), nga::WeightMatrix(16));
  nga::PropagationStats stats;

  nga::ThreadPool pool(workers);
  for (auto _ : state) {
    nga::propagate_recognition(graph.groups, excitations, graph, learn, out, stats, &pool);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graph.size()));
}
BENCHMARK(BM_PropagateRecognition)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace

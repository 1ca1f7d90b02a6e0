#include "nga/repertoire.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "nga/errors.hpp"
#include "nga/hopfield.hpp"

namespace nga {

namespace {

void validate(const RepertoireParams& p) {
  if (p.target_size < 1) throw ConfigError("repertoire: target_size must be at least 1");
  if (p.neuron_count < 1) throw ConfigError("repertoire: neuron_count must be at least 1");
  if (p.fanout < 1) throw ConfigError("repertoire: fanout must be at least 1");
  if (p.branch_sample < 1 || p.branch_sample > p.fanout) {
    throw ConfigError("repertoire: branch_sample must be in [1, fanout]");
  }
  const std::size_t pairs = p.neuron_count * (p.neuron_count - 1) / 2;
  if (p.mutation_count > pairs) {
    throw ConfigError("repertoire: mutation_count exceeds free pair count");
  }
}

void add_edge(RepertoireGraph& g, std::uint32_t a, std::uint32_t b) {
  if (a == b) return;
  auto& na = g.neighbors[a];
  const auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return;  // already wired
  na.insert(it, b);
  auto& nb = g.neighbors[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

}  // namespace

RepertoireGraph build_recognition_repertoire(const RepertoireParams& params, RandomStream& rng) {
  validate(params);

  RepertoireGraph graph;
  graph.neuron_count = params.neuron_count;
  graph.groups.reserve(params.target_size);
  graph.neighbors.resize(params.target_size);
  graph.parent.reserve(params.target_size);
  graph.layer.reserve(params.target_size);

  graph.groups.push_back(new_random_group(params.neuron_count, rng));
  graph.parent.push_back(-1);
  graph.layer.push_back(0);

  std::vector<std::uint32_t> frontier{0};
  std::vector<std::uint32_t> prev_layer{0};
  std::uint32_t layer_index = 0;

  while (graph.size() < params.target_size) {
    ++layer_index;
    std::vector<std::uint32_t> new_layer;
    new_layer.reserve(params.fanout * frontier.size());
    for (const std::uint32_t seed : frontier) {
      for (std::size_t c = 0; c < params.fanout && graph.size() < params.target_size; ++c) {
        const auto id = static_cast<std::uint32_t>(graph.size());
        graph.groups.push_back(mutate_weights(graph.groups[seed], params.mutation_count, rng));
        graph.parent.push_back(seed);
        graph.layer.push_back(layer_index);
        add_edge(graph, id, seed);
        new_layer.push_back(id);
      }
      if (graph.size() >= params.target_size) break;
    }
    for (std::size_t e = 0; e < params.back_edges && !new_layer.empty(); ++e) {
      const auto a = new_layer[rng.next_below(new_layer.size())];
      const auto b = prev_layer[rng.next_below(prev_layer.size())];
      add_edge(graph, a, b);
    }
    const std::size_t take = std::min(params.branch_sample, new_layer.size());
    const auto picks = rng.sample_without_replacement(take, new_layer.size());
    frontier.clear();
    for (const auto p : picks) frontier.push_back(new_layer[p]);
    prev_layer = std::move(new_layer);
  }
  return graph;
}

AbstractionMap build_abstraction_map(const RepertoireGraph& graph, std::size_t count,
                                     RandomStream& rng) {
  if (count < 1 || count > graph.size()) {
    throw ConfigError("abstraction: count must be in [1, repertoire size]");
  }
  AbstractionMap map;
  map.anchors = rng.sample_without_replacement(count, graph.size());
  map.connections.reserve(count);
  for (const auto anchor : map.anchors) {
    std::set<std::uint32_t> closed;
    const auto a = static_cast<std::uint32_t>(anchor);
    closed.insert(a);
    for (const auto n1 : graph.neighbors[a]) {
      closed.insert(n1);
      for (const auto n2 : graph.neighbors[n1]) closed.insert(n2);
    }
    map.connections.emplace_back(closed.begin(), closed.end());
  }
  return map;
}

bool is_connected(const RepertoireGraph& graph) {
  if (graph.size() == 0) return false;
  std::vector<char> seen(graph.size(), 0);
  std::queue<std::uint32_t> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t visited = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop();
    for (const auto w : graph.neighbors[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        queue.push(w);
      }
    }
  }
  return visited == graph.size();
}

std::size_t pair_disagreement(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("pair_disagreement: dimension mismatch");
  std::size_t count = 0;
  for (std::size_t k = 0; k + 1 < a.dim(); ++k) {
    for (std::size_t j = k + 1; j < a.dim(); ++j) {
      if (a.at(k, j) != b.at(k, j)) ++count;
    }
  }
  return count;
}

}  // namespace nga

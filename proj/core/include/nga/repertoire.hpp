#pragma once

#include <cstdint>
#include <vector>

#include "nga/rng.hpp"
#include "nga/weight_matrix.hpp"

namespace nga {

// The recognition population plus its fixed, undirected neighbor structure.
// Adjacency never changes after construction; the matrices are owned by the
// learning step.
struct RepertoireGraph {
  std::size_t neuron_count = 0;
  std::vector<WeightMatrix> groups;
  std::vector<std::vector<std::uint32_t>> neighbors;  // sorted, symmetric, no self-loops
  std::vector<std::int64_t> parent;                   // -1 for the root
  std::vector<std::uint32_t> layer;                   // creation layer

  std::size_t size() const { return groups.size(); }
};

// With 16 neurons a letter pattern is a stable state of a random group
// with probability ~4e-4, so distinct letters need many independent
// draws before one covers them. Small mutation counts clone long
// lineages and starve the initial covering; the default resamples every
// free pair (children are wired to, but independent of, their parents),
// which maximizes the variety selection can act on.
struct RepertoireParams {
  std::size_t target_size = 1;       // r
  std::size_t mutation_count = 120;  // resampled pairs per child
  std::size_t fanout = 5;            // children per frontier seed
  std::size_t branch_sample = 3;     // seeds sampled for the next layer
  std::size_t back_edges = 8;        // extra edges between consecutive layers
  std::size_t neuron_count = 16;
};

// Stepwise topographic expansion: a root group, then layers of mutated
// children (each wired to its parent), a sampled frontier per layer, and a
// few extra edges between consecutive layers. Stops exactly at target_size.
RepertoireGraph build_recognition_repertoire(const RepertoireParams& params, RandomStream& rng);

// Per abstraction group: the sampled anchor and the recognition groups it
// receives from (the anchor's closed 2-hop neighborhood).
struct AbstractionMap {
  std::vector<std::uint64_t> anchors;
  std::vector<std::vector<std::uint32_t>> connections;  // sorted, non-empty

  std::size_t size() const { return anchors.size(); }
};

// Samples `count` distinct anchors and expands each to its closed 2-hop
// neighborhood. The abstraction groups' matrices are initialized by the
// caller (one new_random_group per anchor, same stream).
AbstractionMap build_abstraction_map(const RepertoireGraph& graph, std::size_t count,
                                     RandomStream& rng);

// True when every group can be reached from group 0.
bool is_connected(const RepertoireGraph& graph);

// Upper-triangle positions where a and b disagree.
std::size_t pair_disagreement(const WeightMatrix& a, const WeightMatrix& b);

}  // namespace nga

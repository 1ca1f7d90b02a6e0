#include <cmath>
#include <optional>

#include "doctest.h"
#include "nga/dynamics.hpp"
#include "nga/errors.hpp"
#include "nga/hopfield.hpp"
#include "nga/rng.hpp"

using namespace nga;

namespace {

// Three-neuron matrix from its free pairs (w01, w02, w12).
WeightMatrix tri(double w01, double w02, double w12) {
  WeightMatrix w(3);
  w.set_pair(0, 1, w01);
  w.set_pair(0, 2, w02);
  w.set_pair(1, 2, w12);
  return w;
}

// Single-group "graph": r groups, group 0 wired to all others.
RepertoireGraph star_graph(std::vector<WeightMatrix> groups) {
  RepertoireGraph g;
  g.neuron_count = groups.front().dim();
  g.groups = std::move(groups);
  g.neighbors.resize(g.groups.size());
  for (std::uint32_t i = 1; i < g.groups.size(); ++i) {
    g.neighbors[0].push_back(i);
    g.neighbors[i].push_back(0);
  }
  g.parent.assign(g.groups.size(), -1);
  g.layer.assign(g.groups.size(), 0);
  return g;
}

}  // namespace

TEST_CASE("recognition excitation credit") {
  LearningParams params;
  CHECK(recognition_excitation(2, params) == 0.5);
  CHECK(recognition_excitation(1, params) == 1.0);
  CHECK(recognition_excitation(0, params) == params.zero_flip_excitation);
  CHECK(recognition_excitation(4, params) == 0.25);

  params.zero_flip_excitation = 2.0;
  CHECK(recognition_excitation(0, params) == 2.0);

  // Exact recognition must stay the unique maximum.
  CHECK(recognition_excitation(0, params) > recognition_excitation(1, params));
  for (std::uint64_t q = 1; q < 40; ++q) {
    CHECK(recognition_excitation(q, params) > recognition_excitation(q + 1, params));
  }
}

TEST_CASE("excitation update") {
  LearningParams params;
  params.attenuation = 0.97;

  GroupState prev;
  prev.excitation = 1.0;
  CHECK(update_excitation(prev, std::nullopt, params).excitation == 0.97);

  params.attenuation = 0.5;
  prev.excitation = 2.0;
  const GroupState next = update_excitation(prev, 1, params);
  CHECK(next.excitation == 2.0);  // 1 + 0.5 * 2
  CHECK(next.last_flips == 1);
  CHECK_FALSE(next.frozen);

  prev.excitation = 0.0;
  CHECK(update_excitation(prev, 4, params).excitation == 0.25);

  prev.excitation = 30.0;
  CHECK(update_excitation(prev, std::nullopt, params).frozen);  // 15 >= 10
}

TEST_CASE("excitation decays geometrically with no stimulus") {
  LearningParams params;
  GroupState state;
  state.excitation = 5.0;
  double prev = state.excitation;
  for (int t = 1; t <= 40; ++t) {
    state = update_excitation(state, std::nullopt, params);
    CHECK(state.excitation < prev);
    CHECK(state.excitation == doctest::Approx(5.0 * std::pow(0.97, t)).epsilon(1e-12));
    prev = state.excitation;
  }
}

TEST_CASE("keyed noise is deterministic and respects sigma = 0") {
  CHECK(keyed_gaussian(1, 2, 3) == keyed_gaussian(1, 2, 3));
  CHECK(keyed_gaussian(1, 2, 3) != keyed_gaussian(1, 2, 4));

  LearningParams params;
  GroupState prev;
  prev.excitation = 1.0;
  // noise enters as an explicit additive term
  const GroupState a = update_excitation(prev, std::nullopt, params, 0.0);
  const GroupState b = update_excitation(prev, std::nullopt, params, 0.25);
  CHECK(b.excitation == a.excitation + 0.25);
}

TEST_CASE("learning params validation") {
  LearningParams p;
  p.attenuation = 1.0;
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = LearningParams{};
  p.zero_flip_excitation = 1.0;
  CHECK_THROWS_AS(validate(p), ConfigError);
  p = LearningParams{};
  p.noise_sigma = -0.1;
  CHECK_THROWS_AS(validate(p), ConfigError);
  CHECK_NOTHROW(validate(LearningParams{}));
}

TEST_CASE("recognition propagation: no excited neighbor leaves weights untouched") {
  RandomStream rng(1, "dyn");
  std::vector<WeightMatrix> groups;
  for (int i = 0; i < 4; ++i) groups.push_back(new_random_group(8, rng));
  const RepertoireGraph graph = star_graph(groups);

  LearningParams params;
  std::vector<double> excitations(4, params.excitation_threshold);  // at threshold: no credit
  std::vector<WeightMatrix> out(4, WeightMatrix(8));
  PropagationStats stats;
  propagate_recognition(graph.groups, excitations, graph, params, out, stats);
  CHECK(out == graph.groups);
  CHECK(stats.recognition_degenerate == 0);
}

TEST_CASE("recognition propagation: collinear update is the identity") {
  RandomStream rng(2, "dyn");
  const WeightMatrix w = new_random_group(8, rng);
  const RepertoireGraph graph = star_graph({w, w});

  LearningParams params;
  params.excitation_threshold = 1.0;
  params.rec_learning_rate = 0.5;
  // coefficient = 0.5 * (3 - 1) = 1.0 exactly: out = w + 1*w, renormalized.
  std::vector<double> excitations{0.0, 3.0};
  std::vector<WeightMatrix> out(2, WeightMatrix(8));
  PropagationStats stats;
  propagate_recognition(graph.groups, excitations, graph, params, out, stats);
  CHECK(out[0] == w);
}

TEST_CASE("recognition propagation: worked three-neuron blend") {
  // Base (1,1,1); neighbor (-1,1,1) at effective coefficient 0.5:
  // candidate (0.5, 1.5, 1.5) -> normalized (1/3, 1, 1).
  const WeightMatrix base = tri(1, 1, 1);
  const WeightMatrix other = tri(-1, 1, 1);
  const RepertoireGraph graph = star_graph({base, other});

  LearningParams params;
  params.excitation_threshold = 1.0;
  params.rec_learning_rate = 0.25;
  std::vector<double> excitations{0.0, 3.0};  // 0.25 * (3-1) = 0.5
  std::vector<WeightMatrix> out(2, WeightMatrix(3));
  PropagationStats stats;
  propagate_recognition(graph.groups, excitations, graph, params, out, stats);

  CHECK(out[0].at(0, 1) == 1.0 / 3.0);
  CHECK(out[0].at(0, 2) == 1.0);
  CHECK(out[0].at(1, 2) == 1.0);
  CHECK(out[0].at(1, 0) == out[0].at(0, 1));
  CHECK(out[0].at(0, 0) == 0.0);
  CHECK(out[0].max_abs() == 1.0);
}

TEST_CASE("recognition propagation: frozen group is bit-unchanged") {
  RandomStream rng(3, "dyn");
  const WeightMatrix w = new_random_group(8, rng);
  const WeightMatrix v = new_random_group(8, rng);
  const RepertoireGraph graph = star_graph({w, v});

  LearningParams params;
  params.freeze_threshold = 10.0;
  std::vector<double> excitations{12.0, 50.0};  // group 0 frozen, neighbor very hot
  std::vector<WeightMatrix> out(2, WeightMatrix(8));
  PropagationStats stats;
  propagate_recognition(graph.groups, excitations, graph, params, out, stats);
  CHECK(out[0] == w);
  // The hot neighbor is itself frozen too.
  CHECK(out[1] == v);
}

TEST_CASE("recognition propagation: degenerate all-zero candidate is retained") {
  const WeightMatrix base = tri(1, -1, 1);
  WeightMatrix negated = tri(-1, 1, -1);
  const RepertoireGraph graph = star_graph({base, negated});

  LearningParams params;
  params.excitation_threshold = 1.0;
  params.rec_learning_rate = 0.5;
  std::vector<double> excitations{0.0, 3.0};  // coefficient exactly 1: w + (-w) = 0
  std::vector<WeightMatrix> out(2, WeightMatrix(3));
  PropagationStats stats;
  propagate_recognition(graph.groups, excitations, graph, params, out, stats);
  CHECK(out[0] == base);
  CHECK(stats.recognition_degenerate == 1);
}

TEST_CASE("recognition propagation preserves matrix invariants") {
  RandomStream rng(4, "dyn");
  std::vector<WeightMatrix> groups;
  for (int i = 0; i < 6; ++i) groups.push_back(new_random_group(10, rng));
  const RepertoireGraph graph = star_graph(groups);

  LearningParams params;
  params.excitation_threshold = 1.2;
  std::vector<double> excitations{2.0, 3.0, 1.5, 8.0, 0.1, 2.5};
  std::vector<WeightMatrix> out(6, WeightMatrix(10));
  PropagationStats stats;
  propagate_recognition(graph.groups, excitations, graph, params, out, stats);

  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].max_abs() <= 1.0);
    for (std::size_t k = 0; k < 10; ++k) {
      CHECK(out[i].at(k, k) == 0.0);
      for (std::size_t j = k + 1; j < 10; ++j) CHECK(out[i].at(k, j) == out[i].at(j, k));
    }
    if (!(out[i] == graph.groups[i])) CHECK(out[i].max_abs() == 1.0);
  }
}

TEST_CASE("abstraction gates") {
  AbstractionMap map;
  map.anchors = {0, 1};
  map.connections = {std::vector<std::uint32_t>(23, 0), {0}};
  for (std::uint32_t i = 0; i < 23; ++i) map.connections[0][i] = i;

  LearningParams params;
  params.abs_threshold_coeff = 0.5;
  const auto gates = compute_abstraction_gates(map, params);
  CHECK(gates[0] == 11.5);
  CHECK(gates[1] == 0.5);

  params.abs_threshold_coeff = 0.0;
  CHECK(compute_abstraction_gates(map, params)[0] == 0.0);
}

TEST_CASE("abstraction propagation: gate closed leaves weights unchanged") {
  RandomStream rng(5, "dyn");
  std::vector<WeightMatrix> rec;
  for (int i = 0; i < 3; ++i) rec.push_back(new_random_group(8, rng));
  std::vector<WeightMatrix> abs{new_random_group(8, rng)};

  AbstractionMap map;
  map.anchors = {0};
  map.connections = {{0, 1, 2}};

  LearningParams params;
  params.excitation_threshold = 1.0;
  params.abs_threshold_coeff = 2.0;  // gate level 6
  std::vector<double> excitations{2.0, 2.0, 2.0};  // sum over threshold = 3 <= 6
  std::vector<WeightMatrix> out(1, WeightMatrix(8));
  PropagationStats stats;
  propagate_abstraction(abs, rec, excitations, map, params, out, stats);
  CHECK(out[0] == abs[0]);
}

TEST_CASE("abstraction propagation: worked blend matches the recognition arithmetic") {
  const WeightMatrix base = tri(1, 1, 1);
  const WeightMatrix rec0 = tri(-1, 1, 1);

  AbstractionMap map;
  map.anchors = {0};
  map.connections = {{0}};

  LearningParams params;
  params.excitation_threshold = 1.0;
  params.abs_learning_rate = 0.25;
  params.abs_threshold_coeff = 0.5;  // gate level 0.5 < 2.0
  std::vector<double> excitations{3.0};
  std::vector<WeightMatrix> out(1, WeightMatrix(3));
  PropagationStats stats;
  propagate_abstraction({base}, {rec0}, excitations, map, params, out, stats);

  CHECK(out[0].at(0, 1) == 1.0 / 3.0);
  CHECK(out[0].at(0, 2) == 1.0);
  CHECK(out[0].at(1, 2) == 1.0);
  CHECK(out[0].max_abs() == 1.0);
}

TEST_CASE("abstraction propagation: collinear update is the identity") {
  RandomStream rng(6, "dyn");
  const WeightMatrix w = new_random_group(8, rng);

  AbstractionMap map;
  map.anchors = {0};
  map.connections = {{0}};

  LearningParams params;
  params.excitation_threshold = 1.0;
  params.abs_learning_rate = 0.5;
  std::vector<double> excitations{3.0};  // coefficient exactly 1
  std::vector<WeightMatrix> out(1, WeightMatrix(8));
  PropagationStats stats;
  propagate_abstraction({w}, {w}, excitations, map, params, out, stats);
  CHECK(out[0] == w);
}

TEST_CASE("abstraction gate monotonicity") {
  RandomStream rng(7, "dyn");
  std::vector<WeightMatrix> rec;
  for (int i = 0; i < 4; ++i) rec.push_back(new_random_group(6, rng));
  const std::vector<WeightMatrix> abs{new_random_group(6, rng)};

  AbstractionMap map;
  map.anchors = {0};
  map.connections = {{0, 1, 2, 3}};

  LearningParams params;
  params.excitation_threshold = 1.2;
  params.abs_threshold_coeff = 0.5;  // gate level 2, below the baseline sum

  auto fires = [&](const std::vector<double>& excitations) {
    std::vector<WeightMatrix> out(1, WeightMatrix(6));
    PropagationStats stats;
    propagate_abstraction(abs, rec, excitations, map, params, out, stats);
    return !(out[0] == abs[0]);
  };

  std::vector<double> excitations{2.0, 1.0, 3.0, 0.5};
  REQUIRE(fires(excitations));  // over-threshold sum 2.6 > 2
  for (std::size_t v = 0; v < excitations.size(); ++v) {
    std::vector<double> raised = excitations;
    raised[v] += 5.0;
    CHECK(fires(raised));  // raising any S_v never turns the update off
  }
}

TEST_CASE("propagation is identical with and without a thread pool") {
  RandomStream rng(8, "dyn");
  std::vector<WeightMatrix> groups;
  for (int i = 0; i < 33; ++i) groups.push_back(new_random_group(9, rng));
  const RepertoireGraph graph = star_graph(groups);

  LearningParams params;
  std::vector<double> excitations(33);
  for (std::size_t i = 0; i < 33; ++i) excitations[i] = 0.3 * static_cast<double>(i);

  std::vector<WeightMatrix> serial(33, WeightMatrix(9));
  std::vector<WeightMatrix> parallel(33, WeightMatrix(9));
  PropagationStats s1, s2;
  propagate_recognition(graph.groups, excitations, graph, params, serial, s1, nullptr);
  ThreadPool pool(4);
  propagate_recognition(graph.groups, excitations, graph, params, parallel, s2, &pool);
  CHECK(serial == parallel);
}

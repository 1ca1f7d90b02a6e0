#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "nga/engine.hpp"
#include "nga/errors.hpp"
#include "nga/harness.hpp"
#include "nga/snapshot.hpp"

using namespace nga;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("nga_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

SimConfig desk_config() {
  SimConfig c;
  c.recognition_size = 120;
  c.abstraction_size = 8;
  c.total_presentations = 60;
  c.census_cadence = 20;
  c.seed = 404;
  return c;
}

}  // namespace

TEST_CASE("snapshot round-trips bit-exactly") {
  TempDir tmp;
  ThreadPool pool(2);
  SimulationEngine engine(desk_config(), builtin_alphabet(), pool);
  engine.advance(37);

  const SnapshotState before = engine.snapshot();
  const auto file = tmp.path / "state.snap";
  save_snapshot(file, before);
  const SnapshotState after = load_snapshot(file);

  CHECK(after.config_text == before.config_text);
  CHECK(after.master_seed == before.master_seed);
  CHECK(after.presentations == before.presentations);
  CHECK(after.current_letter == before.current_letter);
  CHECK(after.graph.neuron_count == before.graph.neuron_count);
  CHECK(after.graph.groups == before.graph.groups);
  CHECK(after.graph.neighbors == before.graph.neighbors);
  CHECK(after.graph.parent == before.graph.parent);
  CHECK(after.graph.layer == before.graph.layer);
  CHECK(after.excitations == before.excitations);
  CHECK(after.last_flips == before.last_flips);
  CHECK(after.abstraction_weights == before.abstraction_weights);
  CHECK(after.abstraction_map.anchors == before.abstraction_map.anchors);
  CHECK(after.abstraction_map.connections == before.abstraction_map.connections);
  CHECK(after.letter_draws == before.letter_draws);
  CHECK(after.repertoire_draws == before.repertoire_draws);
  CHECK(after.abstraction_draws == before.abstraction_draws);

  // Re-serialization is byte-identical.
  const auto file2 = tmp.path / "state2.snap";
  save_snapshot(file2, after);
  CHECK(file_fingerprint(file) == file_fingerprint(file2));
}

TEST_CASE("resume continues bit-exactly") {
  TempDir tmp;
  ThreadPool pool(2);
  const SimConfig config = desk_config();

  // Uninterrupted run to 60.
  SimulationEngine full(config, builtin_alphabet(), pool);
  full.advance(60);
  save_snapshot(tmp.path / "full.snap", full.snapshot());

  // Checkpoint at 20, then resume to 60.
  SimulationEngine part(config, builtin_alphabet(), pool);
  part.advance(20);
  save_snapshot(tmp.path / "part.snap", part.snapshot());

  SimulationEngine resumed(config, builtin_alphabet(), load_snapshot(tmp.path / "part.snap"),
                           pool);
  CHECK(resumed.presentations() == 20);
  resumed.advance(40);
  save_snapshot(tmp.path / "resumed.snap", resumed.snapshot());

  CHECK(file_fingerprint(tmp.path / "full.snap") ==
        file_fingerprint(tmp.path / "resumed.snap"));
}

TEST_CASE("resume validates the configuration") {
  TempDir tmp;
  ThreadPool pool(1);
  const SimConfig config = desk_config();
  SimulationEngine engine(config, builtin_alphabet(), pool);
  engine.advance(10);
  const auto file = tmp.path / "s.snap";
  save_snapshot(file, engine.snapshot());

  // Only total_presentations may change.
  SimConfig bigger = config;
  bigger.total_presentations = 5000;
  CHECK_NOTHROW(SimulationEngine(bigger, builtin_alphabet(), load_snapshot(file), pool));

  SimConfig other_seed = config;
  other_seed.seed = 7;
  CHECK_THROWS_AS(SimulationEngine(other_seed, builtin_alphabet(), load_snapshot(file), pool),
                  ConfigError);

  SimConfig other_rate = config;
  other_rate.learning.rec_learning_rate = 0.2;
  CHECK_THROWS_AS(SimulationEngine(other_rate, builtin_alphabet(), load_snapshot(file), pool),
                  ConfigError);
}

TEST_CASE("snapshot rejects corruption") {
  TempDir tmp;
  ThreadPool pool(1);
  SimulationEngine engine(desk_config(), builtin_alphabet(), pool);
  const auto file = tmp.path / "c.snap";
  save_snapshot(file, engine.snapshot());

  // Bad magic.
  {
    std::fstream f(file, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(0);
    f.write("XXXX", 4);
  }
  CHECK_THROWS_WITH_AS(load_snapshot(file), doctest::Contains("bad magic"), RuntimeError);

  // Flipped byte in the body trips the checksum.
  save_snapshot(file, engine.snapshot());
  {
    std::fstream f(file, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(200);
    char b = 0;
    f.seekg(200);
    f.read(&b, 1);
    b = static_cast<char>(b ^ 0x40);
    f.seekp(200);
    f.write(&b, 1);
  }
  CHECK_THROWS_AS(load_snapshot(file), RuntimeError);

  // Truncation.
  save_snapshot(file, engine.snapshot());
  const auto size = std::filesystem::file_size(file);
  std::filesystem::resize_file(file, size / 2);
  CHECK_THROWS_AS(load_snapshot(file), RuntimeError);
}

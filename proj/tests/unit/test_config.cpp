#include "doctest.h"
#include "nga/config.hpp"
#include "nga/errors.hpp"

using namespace nga;

TEST_CASE("defaults survive an empty config") {
  const SimConfig c = parse_config_text("");
  CHECK(c == SimConfig{});
  CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("full config parse") {
  const std::string text = R"(
# desk-scale run
neuron_count = 16
recognition_size = 500
abstraction_size = 20
fanout = 4
branch_sample = 2
back_edges = 1
mutation_count = 5
attenuation = 0.9
rec_learning_rate = 0.1
abs_learning_rate = 0.2
excitation_threshold = 1.5
abs_threshold_coeff = 0.25
freeze_threshold = 8
zero_flip_excitation = 3
noise_sigma = 0.01
repetitions = 5
total_presentations = 1000
census_cadence = 50
seed = 99
glyphs = builtin
)";
  const SimConfig c = parse_config_text(text);
  CHECK(c.neuron_count == 16);
  CHECK(c.recognition_size == 500);
  CHECK(c.abstraction_size == 20);
  CHECK(c.fanout == 4);
  CHECK(c.branch_sample == 2);
  CHECK(c.back_edges == 1);
  CHECK(c.mutation_count == 5);
  CHECK(c.learning.attenuation == 0.9);
  CHECK(c.learning.rec_learning_rate == 0.1);
  CHECK(c.learning.abs_learning_rate == 0.2);
  CHECK(c.learning.excitation_threshold == 1.5);
  CHECK(c.learning.abs_threshold_coeff == 0.25);
  CHECK(c.learning.freeze_threshold == 8.0);
  CHECK(c.learning.zero_flip_excitation == 3.0);
  CHECK(c.learning.noise_sigma == 0.01);
  CHECK(c.repetitions == 5);
  CHECK(c.total_presentations == 1000);
  CHECK(c.census_cadence == 50);
  CHECK(c.seed == 99);
  CHECK(c.glyph_source == "builtin");
  CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("unknown and duplicate keys are rejected by name") {
  CHECK_THROWS_WITH_AS(parse_config_text("bogus_key = 3\n"),
                       doctest::Contains("unknown key 'bogus_key'"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("seed = 1\nseed = 2\n"),
                       doctest::Contains("duplicate key 'seed'"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("seed\n"), doctest::Contains("expected 'key = value'"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("seed = abc\n"), doctest::Contains("seed"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("attenuation = fast\n"),
                       doctest::Contains("attenuation"), ConfigError);
}

TEST_CASE("validation bounds") {
  auto invalid = [](auto&& mutate) {
    SimConfig c;
    mutate(c);
    CHECK_THROWS_AS(validate_config(c), ConfigError);
  };
  invalid([](SimConfig& c) { c.neuron_count = 0; });
  invalid([](SimConfig& c) { c.recognition_size = 0; });
  invalid([](SimConfig& c) { c.abstraction_size = 0; });
  invalid([](SimConfig& c) { c.abstraction_size = c.recognition_size + 1; });
  invalid([](SimConfig& c) { c.branch_sample = c.fanout + 1; });
  invalid([](SimConfig& c) { c.mutation_count = 121; });  // n=16 has 120 pairs
  invalid([](SimConfig& c) { c.repetitions = 0; });
  invalid([](SimConfig& c) { c.census_cadence = 0; });
  invalid([](SimConfig& c) { c.census_cadence = c.total_presentations + 1; });
  invalid([](SimConfig& c) { c.glyph_source.clear(); });
  invalid([](SimConfig& c) { c.learning.attenuation = -0.1; });

  // T = 0 is a valid degenerate run (initial census only).
  SimConfig c;
  c.total_presentations = 0;
  CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("canonical text round-trips") {
  SimConfig c;
  c.recognition_size = 777;
  c.learning.attenuation = 0.123456789012345;
  c.learning.noise_sigma = 1e-9;
  c.seed = 0xdeadbeef;
  c.glyph_source = "some/file.glyphs";
  const std::string text = canonical_config_text(c);
  const SimConfig back = parse_config_text(text);
  CHECK(back == c);
  CHECK(canonical_config_text(back) == text);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.97) == "0.97");
  CHECK(format_double(10.0) == "10");
  CHECK(format_double(0.0) == "0");
}

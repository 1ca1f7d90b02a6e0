#include "nga/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nga/errors.hpp"

namespace nga {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key + "': expected a non-negative integer, got '" + value + "'");
  }
  return out;
}

double parse_f64(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

using Setter = std::function<void(SimConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  auto u64_field = [](std::uint64_t SimConfig::* member) {
    return [member](SimConfig& c, const std::string& k, const std::string& v) {
      c.*member = parse_u64(k, v);
    };
  };
  auto size_field = [](std::size_t SimConfig::* member) {
    return [member](SimConfig& c, const std::string& k, const std::string& v) {
      c.*member = static_cast<std::size_t>(parse_u64(k, v));
    };
  };
  auto learn_field = [](double LearningParams::* member) {
    return [member](SimConfig& c, const std::string& k, const std::string& v) {
      c.learning.*member = parse_f64(k, v);
    };
  };
  static const std::map<std::string, Setter> map = {
      {"neuron_count", size_field(&SimConfig::neuron_count)},
      {"recognition_size", size_field(&SimConfig::recognition_size)},
      {"abstraction_size", size_field(&SimConfig::abstraction_size)},
      {"fanout", size_field(&SimConfig::fanout)},
      {"branch_sample", size_field(&SimConfig::branch_sample)},
      {"back_edges", size_field(&SimConfig::back_edges)},
      {"mutation_count", size_field(&SimConfig::mutation_count)},
      {"attenuation", learn_field(&LearningParams::attenuation)},
      {"rec_learning_rate", learn_field(&LearningParams::rec_learning_rate)},
      {"abs_learning_rate", learn_field(&LearningParams::abs_learning_rate)},
      {"excitation_threshold", learn_field(&LearningParams::excitation_threshold)},
      {"abs_threshold_coeff", learn_field(&LearningParams::abs_threshold_coeff)},
      {"freeze_threshold", learn_field(&LearningParams::freeze_threshold)},
      {"zero_flip_excitation", learn_field(&LearningParams::zero_flip_excitation)},
      {"noise_sigma", learn_field(&LearningParams::noise_sigma)},
      {"repetitions", size_field(&SimConfig::repetitions)},
      {"total_presentations", u64_field(&SimConfig::total_presentations)},
      {"census_cadence", u64_field(&SimConfig::census_cadence)},
      {"seed", u64_field(&SimConfig::seed)},
      {"glyphs",
       [](SimConfig& c, const std::string&, const std::string& v) { c.glyph_source = v; }},
  };
  return map;
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
  SimConfig config;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(trimmed.substr(0, eq));
    const std::string value = trim(trimmed.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    it->second(config, key, value);
  }
  return config;
}

SimConfig parse_config_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(file.string() + ": " + e.what());
  }
}

void validate_config(const SimConfig& config) {
  if (config.neuron_count < 1) throw ConfigError("neuron_count must be at least 1");
  if (config.recognition_size < 1) throw ConfigError("recognition_size must be at least 1");
  if (config.abstraction_size < 1) throw ConfigError("abstraction_size must be at least 1");
  if (config.abstraction_size > config.recognition_size) {
    throw ConfigError("abstraction_size must not exceed recognition_size");
  }
  if (config.fanout < 1) throw ConfigError("fanout must be at least 1");
  if (config.branch_sample < 1 || config.branch_sample > config.fanout) {
    throw ConfigError("branch_sample must be in [1, fanout]");
  }
  const std::size_t pairs = config.neuron_count * (config.neuron_count - 1) / 2;
  if (config.mutation_count > pairs) {
    throw ConfigError("mutation_count exceeds the free pair count n(n-1)/2");
  }
  if (config.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (config.census_cadence < 1) throw ConfigError("census_cadence must be at least 1");
  if (config.total_presentations > 0 && config.census_cadence > config.total_presentations) {
    throw ConfigError("census_cadence must not exceed total_presentations");
  }
  if (config.glyph_source.empty()) throw ConfigError("glyphs must be 'builtin' or a file path");
  validate(config.learning);
}

std::string canonical_config_text(const SimConfig& c) {
  std::ostringstream out;
  out << "neuron_count = " << c.neuron_count << '\n'
      << "recognition_size = " << c.recognition_size << '\n'
      << "abstraction_size = " << c.abstraction_size << '\n'
      << "fanout = " << c.fanout << '\n'
      << "branch_sample = " << c.branch_sample << '\n'
      << "back_edges = " << c.back_edges << '\n'
      << "mutation_count = " << c.mutation_count << '\n'
      << "attenuation = " << format_double(c.learning.attenuation) << '\n'
      << "rec_learning_rate = " << format_double(c.learning.rec_learning_rate) << '\n'
      << "abs_learning_rate = " << format_double(c.learning.abs_learning_rate) << '\n'
      << "excitation_threshold = " << format_double(c.learning.excitation_threshold) << '\n'
      << "abs_threshold_coeff = " << format_double(c.learning.abs_threshold_coeff) << '\n'
      << "freeze_threshold = " << format_double(c.learning.freeze_threshold) << '\n'
      << "zero_flip_excitation = " << format_double(c.learning.zero_flip_excitation) << '\n'
      << "noise_sigma = " << format_double(c.learning.noise_sigma) << '\n'
      << "repetitions = " << c.repetitions << '\n'
      << "total_presentations = " << c.total_presentations << '\n'
      << "census_cadence = " << c.census_cadence << '\n'
      << "seed = " << c.seed << '\n'
      << "glyphs = " << c.glyph_source << '\n';
  return out.str();
}

}  // namespace nga

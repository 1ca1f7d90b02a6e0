#include "nga/harness.hpp"

#include <chrono>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>

#include "nga/errors.hpp"
#include "nga/hopfield.hpp"

namespace nga {

std::vector<std::uint64_t> present_to_repertoire(const std::vector<WeightMatrix>& groups,
                                                 const Pattern& pattern, ThreadPool* pool) {
  std::vector<std::uint64_t> flips(groups.size(), 0);
  auto body = [&](std::size_t lo, std::size_t hi) {
    std::vector<double> scratch;
    for (std::size_t i = lo; i < hi; ++i) {
      flips[i] = flips_to_convergence(groups[i], pattern, scratch);
    }
  };
  if (pool) {
    pool->for_range(0, groups.size(), body);
  } else {
    body(0, groups.size());
  }
  return flips;
}

std::vector<std::uint32_t> census(const std::vector<WeightMatrix>& groups,
                                  const std::vector<Pattern>& glyph_patterns,
                                  ThreadPool* pool) {
  std::vector<std::uint32_t> counts(glyph_patterns.size(), 0);
  if (groups.empty()) return counts;

  // Integer partial counts merge commutatively, so the totals cannot depend
  // on the chunk split or merge order.
  std::mutex merge;
  auto body = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint32_t> local(counts.size(), 0);
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t g = 0; g < glyph_patterns.size(); ++g) {
        if (is_stable(groups[i], glyph_patterns[g])) ++local[g];
      }
    }
    std::lock_guard lock(merge);
    for (std::size_t g = 0; g < counts.size(); ++g) counts[g] += local[g];
  };
  if (pool) {
    pool->for_range(0, groups.size(), body);
  } else {
    body(0, groups.size());
  }
  return counts;
}

GlyphSet resolve_glyphs(const SimConfig& config) {
  if (config.glyph_source == "builtin") return builtin_alphabet();
  return load_glyph_set(std::filesystem::path(config.glyph_source));
}

RunResult run_simulation(const SimConfig& config, const RunOptions& options, ThreadPool& pool) {
  validate_config(config);
  GlyphSet glyphs = resolve_glyphs(config);

  std::optional<SimulationEngine> engine;
  if (options.resume_from) {
    SnapshotState state = load_snapshot(*options.resume_from);
    engine.emplace(config, std::move(glyphs), std::move(state), pool);
  } else {
    engine.emplace(config, std::move(glyphs), pool);
  }
  if (engine->presentations() > config.total_presentations) {
    throw ConfigError("snapshot is already past total_presentations");
  }

  std::error_code ec;
  std::filesystem::create_directories(options.output_dir, ec);
  if (ec) throw RuntimeError("cannot create output directory: " + options.output_dir.string());

  RunResult result;
  result.csv_path = options.output_dir / "metrics.csv";
  result.summary_path = options.output_dir / "summary.txt";
  result.snapshot_path = options.output_dir / "final.snap";

  using Clock = std::chrono::steady_clock;
  auto mark = Clock::now();

  auto record_census = [&] {
    MetricsRecord rec = engine->take_census();
    const auto now = Clock::now();
    rec.interval_seconds = std::chrono::duration<double>(now - mark).count();
    mark = now;
    result.records.push_back(rec);
    if (options.log) {
      (*options.log) << "t=" << rec.presentation_index
                     << " letters_learned=" << rec.letters_learned << '/'
                     << engine->glyphs().size() << " (" << std::fixed << std::setprecision(2)
                     << rec.interval_seconds << "s)\n";
    }
  };

  record_census();
  while (engine->presentations() < config.total_presentations) {
    const std::uint64_t remaining = config.total_presentations - engine->presentations();
    const std::uint64_t chunk = std::min<std::uint64_t>(config.census_cadence, remaining);
    engine->advance(chunk);
    record_census();
    if (options.checkpoints && engine->presentations() < config.total_presentations) {
      std::ostringstream name;
      name << "checkpoint-" << std::setw(8) << std::setfill('0') << engine->presentations()
           << ".snap";
      save_snapshot(options.output_dir / name.str(), engine->snapshot());
    }
  }

  export_metrics(result.records, engine->glyphs(), config, result.csv_path, result.summary_path);
  save_snapshot(result.snapshot_path, engine->snapshot());
  return result;
}

std::vector<Pattern> enumerate_stable_states(const WeightMatrix& w) {
  const std::size_t n = w.dim();
  if (n > kMaxExhaustiveNeurons) {
    throw ConfigError("exhaustive stable-state scan is limited to n <= " +
                      std::to_string(kMaxExhaustiveNeurons) + " (got n = " + std::to_string(n) +
                      "); probe specific patterns instead");
  }
  std::vector<Pattern> stable;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Pattern p = Pattern::from_mask(mask, n);
    if (is_stable(w, p)) stable.push_back(std::move(p));
  }
  return stable;
}

GroupReport inspect_group(const SnapshotState& state, const LearningParams& params,
                          std::size_t group_id, bool abstraction,
                          const std::vector<std::pair<std::string, Pattern>>& probes,
                          bool enumerate) {
  GroupReport report;
  report.group_id = group_id;
  report.is_abstraction = abstraction;

  if (abstraction) {
    if (group_id >= state.abstraction_weights.size()) {
      throw ConfigError("unknown abstraction group id " + std::to_string(group_id));
    }
    report.weights = state.abstraction_weights[group_id];
    report.neighbors = state.abstraction_map.connections[group_id];
  } else {
    if (group_id >= state.graph.size()) {
      throw ConfigError("unknown recognition group id " + std::to_string(group_id));
    }
    report.weights = state.graph.groups[group_id];
    report.neighbors = state.graph.neighbors[group_id];
    report.excitation = state.excitations[group_id];
    report.last_flips = state.last_flips[group_id];
    report.frozen = report.excitation >= params.freeze_threshold;
  }

  for (const auto& [label, probe] : probes) {
    if (probe.size() != report.weights.dim()) {
      throw ConfigError("probe '" + label + "' length does not match the group dimension");
    }
    ProbeResult pr;
    pr.label = label;
    pr.probe = probe;
    ConvergenceResult conv = converge(report.weights, probe);
    pr.flips = conv.flips;
    pr.final_energy = energy(report.weights, conv.stable_state);
    pr.final_state = std::move(conv.stable_state);
    report.probes.push_back(std::move(pr));
  }

  if (enumerate) {
    report.stable_states = enumerate_stable_states(report.weights);
    report.enumerated = true;
  }
  return report;
}

std::string format_report(const GroupReport& report) {
  std::ostringstream out;
  out << (report.is_abstraction ? "abstraction" : "recognition") << " group "
      << report.group_id << '\n';
  if (!report.is_abstraction) {
    out << "  excitation = " << format_double(report.excitation) << '\n'
        << "  frozen = " << (report.frozen ? "true" : "false") << '\n'
        << "  last_flips = " << report.last_flips << '\n';
  }
  out << "  connections = [";
  for (std::size_t i = 0; i < report.neighbors.size(); ++i) {
    if (i) out << ' ';
    out << report.neighbors[i];
  }
  out << "]\n  weights (" << report.weights.dim() << "x" << report.weights.dim() << "):\n";
  const std::size_t n = report.weights.dim();
  out << std::fixed << std::setprecision(4);
  for (std::size_t k = 0; k < n; ++k) {
    out << "   ";
    for (std::size_t j = 0; j < n; ++j) out << ' ' << std::setw(7) << report.weights.at(k, j);
    out << '\n';
  }
  for (const auto& probe : report.probes) {
    out << "  probe " << probe.label << ": q=" << probe.flips
        << " final=" << probe.final_state.to_string() << " energy=" << probe.final_energy
        << '\n';
  }
  if (report.enumerated) {
    out << "  stable states (" << report.stable_states.size() << "):\n";
    for (const auto& s : report.stable_states) out << "    " << s.to_string() << '\n';
  }
  return out.str();
}

}  // namespace nga

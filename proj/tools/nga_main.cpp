// nga: neuronal-group-selection simulator CLI.
//
// Subcommands:
//   build    construct both repertoires and save a t=0 snapshot
//   run      simulate; writes metrics.csv, summary.txt, final.snap
//   census   one-off census of a snapshot
//   inspect  per-group transparency report
//   glyphs   validate and print a glyph file (or the builtin alphabet)
//
// Exit codes: 0 success, 1 configuration/usage error, 2 runtime or I/O error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nga/alphabet.hpp"
#include "nga/config.hpp"
#include "nga/engine.hpp"
#include "nga/errors.hpp"
#include "nga/harness.hpp"
#include "nga/snapshot.hpp"
#include "nga/version.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  unsigned workers = 0;
};

nga::SimConfig load_config(const CommonArgs& args) {
  nga::SimConfig config = nga::parse_config_file(args.config_path);
  if (args.seed_override) config.seed = *args.seed_override;
  nga::validate_config(config);
  return config;
}

int cmd_build(const CommonArgs& args, const std::string& out_path) {
  const nga::SimConfig config = load_config(args);
  nga::ThreadPool pool(args.workers);
  nga::SimulationEngine engine(config, nga::resolve_glyphs(config), pool);
  nga::save_snapshot(out_path, engine.snapshot());
  std::cout << "built repertoires: r=" << engine.graph().size()
            << " a=" << engine.abstraction_weights().size() << " n=" << config.neuron_count
            << "\nsnapshot: " << out_path
            << "\nsnapshot hash: " << nga::file_fingerprint(out_path) << '\n';
  return 0;
}

int cmd_run(const CommonArgs& args, const std::string& out_dir,
            const std::optional<std::string>& resume, bool checkpoints) {
  const nga::SimConfig config = load_config(args);
  nga::ThreadPool pool(args.workers);
  nga::RunOptions options;
  options.output_dir = out_dir;
  options.checkpoints = checkpoints;
  options.log = &std::cerr;
  if (resume) options.resume_from = *resume;
  const nga::RunResult result = nga::run_simulation(config, options, pool);
  const auto& last = result.records.back();
  std::cout << "presentations: " << last.presentation_index
            << "\nletters_learned: " << last.letters_learned << '/'
            << last.abstraction_census.size() << "\nmetrics: " << result.csv_path.string()
            << "\nsummary: " << result.summary_path.string()
            << "\nsnapshot: " << result.snapshot_path.string()
            << "\nsnapshot hash: " << nga::file_fingerprint(result.snapshot_path) << '\n';
  return 0;
}

int cmd_census(const std::string& snapshot_path, const std::optional<std::string>& glyph_source,
               unsigned workers) {
  const nga::SnapshotState state = nga::load_snapshot(snapshot_path);
  nga::SimConfig config = nga::parse_config_text(state.config_text);
  if (glyph_source) config.glyph_source = *glyph_source;
  const nga::GlyphSet glyphs = nga::resolve_glyphs(config);
  nga::validate_glyph_set(glyphs);
  const auto patterns = nga::encode_glyph_set(glyphs);
  if (!patterns.empty() && patterns.front().size() != state.graph.neuron_count) {
    throw nga::ConfigError("glyph dimension does not match the snapshot's neuron count");
  }

  nga::ThreadPool pool(workers);
  const auto rec = nga::census(state.graph.groups, patterns, &pool);
  const auto abs = nga::census(state.abstraction_weights, patterns, &pool);

  std::cout << "t = " << state.presentations << '\n';
  std::cout << "letter rec_count abs_count\n";
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    std::cout << glyphs[i].label << ' ' << rec[i] << ' ' << abs[i] << '\n';
  }
  std::cout << "letters_learned = " << nga::count_letters_learned(abs) << '/' << glyphs.size()
            << '\n';
  return 0;
}

int cmd_inspect(const std::string& snapshot_path, std::size_t group_id, bool abstraction,
                const std::vector<std::string>& letters,
                const std::vector<std::string>& patterns, bool enumerate) {
  const nga::SnapshotState state = nga::load_snapshot(snapshot_path);
  const nga::SimConfig config = nga::parse_config_text(state.config_text);
  std::vector<std::pair<std::string, nga::Pattern>> probes;

  if (!letters.empty()) {
    const nga::GlyphSet glyphs = nga::resolve_glyphs(config);
    for (const auto& label_arg : letters) {
      if (label_arg.size() != 1) throw nga::ConfigError("--letter expects a single character");
      bool found = false;
      for (const auto& g : glyphs) {
        if (g.label == label_arg[0]) {
          probes.emplace_back(label_arg, nga::encode_grid(g));
          found = true;
          break;
        }
      }
      if (!found) throw nga::ConfigError("no glyph labeled '" + label_arg + "' in the glyph set");
    }
  }
  for (const auto& bits : patterns) {
    probes.emplace_back(bits, nga::Pattern::parse(bits));
  }

  const nga::GroupReport report =
      nga::inspect_group(state, config.learning, group_id, abstraction, probes, enumerate);
  std::cout << nga::format_report(report);
  return 0;
}

int cmd_glyphs(const std::optional<std::string>& file, bool quiet) {
  const nga::GlyphSet glyphs = file ? nga::load_glyph_set(std::filesystem::path(*file))
                                    : nga::builtin_alphabet();
  if (!quiet) {
    for (const auto& g : glyphs) {
      std::cout << '@' << g.label << '\n' << nga::render_glyph(g) << '\n';
    }
  }
  const std::size_t side = glyphs.empty() ? 0 : glyphs.front().side;
  std::cout << glyphs.size() << " glyphs, side " << side << ", n = " << side * side
            << ", fingerprint " << nga::glyph_set_fingerprint(glyphs) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selection-driven Hopfield group simulator"};
  app.set_version_flag("--version", std::string(nga::kVersion));
  app.require_subcommand(1);

  CommonArgs common;

  auto* build = app.add_subcommand("build", "Construct repertoires and save a snapshot");
  std::string build_out = "repertoire.snap";
  build->add_option("--config", common.config_path, "Config file")->required();
  build->add_option("--seed", common.seed_override, "Override the config seed");
  build->add_option("--workers", common.workers, "Worker threads (0 = auto)");
  build->add_option("--out", build_out, "Output snapshot path");

  auto* run = app.add_subcommand("run", "Run the simulation");
  std::string run_out = "out";
  std::optional<std::string> run_resume;
  bool run_checkpoints = false;
  run->add_option("--config", common.config_path, "Config file")->required();
  run->add_option("--seed", common.seed_override, "Override the config seed");
  run->add_option("--workers", common.workers, "Worker threads (0 = auto)");
  run->add_option("--out", run_out, "Output directory");
  run->add_option("--resume", run_resume, "Resume from a snapshot");
  run->add_flag("--checkpoints", run_checkpoints, "Write a snapshot at every census point");

  auto* censusc = app.add_subcommand("census", "Census of a snapshot");
  std::string census_snapshot;
  std::optional<std::string> census_glyphs;
  unsigned census_workers = 0;
  censusc->add_option("--snapshot", census_snapshot, "Snapshot file")->required();
  censusc->add_option("--glyphs", census_glyphs, "Override glyph source (builtin or file)");
  censusc->add_option("--workers", census_workers, "Worker threads (0 = auto)");

  auto* inspect = app.add_subcommand("inspect", "Report on a single group");
  std::string inspect_snapshot;
  std::size_t inspect_id = 0;
  bool inspect_abs = false;
  bool inspect_enum = false;
  std::vector<std::string> inspect_letters;
  std::vector<std::string> inspect_patterns;
  inspect->add_option("--snapshot", inspect_snapshot, "Snapshot file")->required();
  inspect->add_option("--group", inspect_id, "Group index")->required();
  inspect->add_flag("--abstraction", inspect_abs, "Index the abstraction repertoire");
  inspect->add_option("--letter", inspect_letters, "Probe with a glyph label (repeatable)");
  inspect->add_option("--pattern", inspect_patterns, "Probe with a 0/1 string (repeatable)");
  inspect->add_flag("--enumerate", inspect_enum, "Exhaustively list stable states (n <= 20)");

  auto* glyphs = app.add_subcommand("glyphs", "Validate and print a glyph file");
  std::optional<std::string> glyphs_file;
  bool glyphs_quiet = false;
  glyphs->add_option("--file", glyphs_file, "Glyph file (omit for the builtin alphabet)");
  glyphs->add_flag("--quiet", glyphs_quiet, "Only print the validation summary");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(common, build_out);
    if (run->parsed()) return cmd_run(common, run_out, run_resume, run_checkpoints);
    if (censusc->parsed()) return cmd_census(census_snapshot, census_glyphs, census_workers);
    if (inspect->parsed()) {
      return cmd_inspect(inspect_snapshot, inspect_id, inspect_abs, inspect_letters,
                         inspect_patterns, inspect_enum);
    }
    if (glyphs->parsed()) return cmd_glyphs(glyphs_file, glyphs_quiet);
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const nga::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

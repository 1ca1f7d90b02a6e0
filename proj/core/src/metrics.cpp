#include "nga/metrics.hpp"

#include <fstream>
#include <sstream>

#include "nga/errors.hpp"
#include "nga/version.hpp"

namespace nga {

std::uint32_t count_letters_learned(const std::vector<std::uint32_t>& abstraction_census) {
  std::uint32_t learned = 0;
  for (const auto c : abstraction_census) {
    if (c >= 1) ++learned;
  }
  return learned;
}

namespace {

void check_records(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs) {
  if (records.empty()) throw RuntimeError("export_metrics: no records to export");
  for (const auto& rec : records) {
    if (rec.recognition_census.size() != glyphs.size() ||
        rec.abstraction_census.size() != glyphs.size()) {
      throw RuntimeError("export_metrics: census width does not match glyph set");
    }
  }
}

}  // namespace

std::string metrics_csv(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs) {
  check_records(records, glyphs);
  std::ostringstream out;
  out << "t,letter,rec_count,abs_count\n";
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < glyphs.size(); ++i) {
      out << rec.presentation_index << ',' << glyphs[i].label << ','
          << rec.recognition_census[i] << ',' << rec.abstraction_census[i] << '\n';
    }
  }
  return out.str();
}

std::string metrics_summary(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs,
                            const SimConfig& config) {
  check_records(records, glyphs);
  const MetricsRecord& last = records.back();
  std::ostringstream out;
  out << "letters_learned = " << last.letters_learned << '\n'
      << "final_presentation = " << last.presentation_index << '\n'
      << "census_points = " << records.size() << '\n'
      << "seed = " << config.seed << '\n'
      << "version = " << kVersion << '\n'
      << "final_census:\n";
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    out << "  " << glyphs[i].label << " rec=" << last.recognition_census[i]
        << " abs=" << last.abstraction_census[i] << '\n';
  }
  out << "config:\n";
  std::istringstream cfg(canonical_config_text(config));
  std::string line;
  while (std::getline(cfg, line)) out << "  " << line << '\n';
  return out.str();
}

void export_metrics(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs,
                    const SimConfig& config, const std::filesystem::path& csv_path,
                    const std::filesystem::path& summary_path) {
  const std::string csv = metrics_csv(records, glyphs);
  const std::string summary = metrics_summary(records, glyphs, config);
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw RuntimeError("cannot write metrics CSV: " + csv_path.string());
    out << csv;
    if (!out) throw RuntimeError("write failed: " + csv_path.string());
  }
  {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw RuntimeError("cannot write summary: " + summary_path.string());
    out << summary;
    if (!out) throw RuntimeError("write failed: " + summary_path.string());
  }
}

}  // namespace nga

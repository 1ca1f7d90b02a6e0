#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nga/alphabet.hpp"
#include "nga/config.hpp"

namespace nga {

// One census snapshot: per-letter stable-state counts in both repertoires.
struct MetricsRecord {
  std::uint64_t presentation_index = 0;
  std::vector<std::uint32_t> recognition_census;  // one count per glyph
  std::vector<std::uint32_t> abstraction_census;
  std::uint32_t letters_learned = 0;   // glyphs with abstraction census >= 1
  double interval_seconds = 0.0;       // wall clock since the previous census; not serialized
};

// Reads letters_learned off the abstraction census.
std::uint32_t count_letters_learned(const std::vector<std::uint32_t>& abstraction_census);

// CSV time series: header `t,letter,rec_count,abs_count`, one row per
// (census point, glyph), records in order. Byte-deterministic.
std::string metrics_csv(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs);

// Human-readable run summary: final letters_learned, final per-letter
// counts, seed, code version, and the canonical config echo.
// Byte-deterministic given identical records.
std::string metrics_summary(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs,
                            const SimConfig& config);

// Writes both files; throws RuntimeError on empty records or I/O failure.
void export_metrics(const std::vector<MetricsRecord>& records, const GlyphSet& glyphs,
                    const SimConfig& config, const std::filesystem::path& csv_path,
                    const std::filesystem::path& summary_path);

}  // namespace nga

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "nga/pattern.hpp"

namespace nga {

// One labeled g x g binary glyph.
struct GlyphGrid {
  std::size_t side = 0;
  std::vector<std::uint8_t> cells;  // row-major, side*side entries of 0/1
  char label = '?';

  std::uint8_t at(std::size_t r, std::size_t c) const { return cells[r * side + c]; }
};

using GlyphSet = std::vector<GlyphGrid>;

// Row-major flattening: bit r*g + c <- cell (r, c).
Pattern encode_grid(const GlyphGrid& grid);

// Exact inverse of encode_grid; p.size() must equal side*side.
GlyphGrid decode_pattern(const Pattern& p, std::size_t side, char label = '?');

// The canonical built-in 4x4 Latin alphabet, labels 'A'..'Z'. The bitmaps
// are a pinned data asset; census results are only comparable run-to-run
// against the same set (see tests for the pinned hash).
const GlyphSet& builtin_alphabet();

// Glyph file grammar (plain text, LF or CRLF):
//   glyph   := '@' label NEWLINE row{g}
//   row     := g characters from {0, 1, ., #}   ('#' == 1, '.' == 0)
// Blank lines may separate glyphs. The side g is fixed by the first row of
// the first glyph; all glyphs in one file must match it. Duplicate labels
// and duplicate bitmaps are rejected.
GlyphSet load_glyph_set(std::istream& in);
GlyphSet load_glyph_set(const std::filesystem::path& file);

// Validates invariants shared by every glyph source: uniform square side,
// unique labels, pairwise-distinct bitmaps. Throws RuntimeError.
void validate_glyph_set(const GlyphSet& glyphs);

// Multi-line '#'/'.' rendering, one row per line.
std::string render_glyph(const GlyphGrid& grid);

// Serializes in the load_glyph_set grammar.
std::string glyph_set_to_text(const GlyphSet& glyphs);

// Encodes every glyph; all patterns share length side*side.
std::vector<Pattern> encode_glyph_set(const GlyphSet& glyphs);

// FNV-1a over labels and cell bytes, in order; pins the asset.
std::uint64_t glyph_set_fingerprint(const GlyphSet& glyphs);

}  // namespace nga

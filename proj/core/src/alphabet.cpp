#include "nga/alphabet.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <set>

#include "nga/errors.hpp"
#include "nga/rng.hpp"

namespace nga {

Pattern encode_grid(const GlyphGrid& grid) {
  return Pattern::from_bits(grid.cells);
}

GlyphGrid decode_pattern(const Pattern& p, std::size_t side, char label) {
  if (side == 0 || p.size() != side * side) {
    throw std::invalid_argument("decode_pattern: pattern length is not side*side");
  }
  GlyphGrid g;
  g.side = side;
  g.label = label;
  g.cells = p.bits();
  return g;
}

std::string render_glyph(const GlyphGrid& grid) {
  std::string out;
  out.reserve(grid.side * (grid.side + 1));
  for (std::size_t r = 0; r < grid.side; ++r) {
    for (std::size_t c = 0; c < grid.side; ++c) {
      out.push_back(grid.at(r, c) ? '#' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

std::string glyph_set_to_text(const GlyphSet& glyphs) {
  std::string out;
  for (const auto& g : glyphs) {
    out.push_back('@');
    out.push_back(g.label);
    out.push_back('\n');
    out += render_glyph(g);
    out.push_back('\n');
  }
  return out;
}

std::vector<Pattern> encode_glyph_set(const GlyphSet& glyphs) {
  std::vector<Pattern> out;
  out.reserve(glyphs.size());
  for (const auto& g : glyphs) out.push_back(encode_grid(g));
  return out;
}

std::uint64_t glyph_set_fingerprint(const GlyphSet& glyphs) {
  std::string bytes;
  for (const auto& g : glyphs) {
    bytes.push_back(g.label);
    for (auto c : g.cells) bytes.push_back(static_cast<char>('0' + c));
  }
  return fnv1a64(bytes);
}

void validate_glyph_set(const GlyphSet& glyphs) {
  std::set<char> labels;
  std::map<std::vector<std::uint8_t>, char> bitmaps;
  std::size_t side = 0;
  for (const auto& g : glyphs) {
    const std::string name = std::string("glyph '") + g.label + "'";
    if (g.side == 0 || g.cells.size() != g.side * g.side) {
      throw RuntimeError(name + ": cell count does not match side");
    }
    if (side == 0) side = g.side;
    if (g.side != side) {
      throw RuntimeError(name + ": inconsistent side (" + std::to_string(g.side) +
                         " vs " + std::to_string(side) + ")");
    }
    for (auto c : g.cells) {
      if (c > 1) throw RuntimeError(name + ": cells must be 0/1");
    }
    if (!labels.insert(g.label).second) {
      throw RuntimeError(name + ": duplicate label");
    }
    auto [it, inserted] = bitmaps.emplace(g.cells, g.label);
    if (!inserted) {
      throw RuntimeError(name + ": duplicate bitmap (same as glyph '" +
                         std::string(1, it->second) + "')");
    }
  }
}

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

GlyphSet load_glyph_set(std::istream& in) {
  GlyphSet glyphs;
  std::string line;
  std::size_t line_no = 0;
  std::size_t side = 0;

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    if (line[0] != '@' || line.size() != 2) {
      throw RuntimeError("glyph file line " + std::to_string(line_no) +
                         ": expected '@<label>' header, got '" + line + "'");
    }
    GlyphGrid g;
    g.label = line[1];
    const std::string name = std::string("glyph '") + g.label + "'";

    // First row fixes this glyph's side; the set side is fixed by the first
    // glyph overall.
    std::size_t rows_needed = side;  // 0 = unknown until the first row
    std::size_t rows_read = 0;
    while (rows_needed == 0 || rows_read < rows_needed) {
      if (!std::getline(in, line)) {
        throw RuntimeError(name + ": unexpected end of file inside glyph rows");
      }
      ++line_no;
      strip_cr(line);
      if (is_blank(line)) {
        throw RuntimeError(name + " row " + std::to_string(rows_read + 1) +
                           " (line " + std::to_string(line_no) + "): blank line inside glyph");
      }
      if (rows_needed == 0) {
        rows_needed = line.size();
        if (side == 0) side = rows_needed;
      }
      if (line.size() != rows_needed) {
        throw RuntimeError(name + " row " + std::to_string(rows_read + 1) +
                           " (line " + std::to_string(line_no) + "): expected " +
                           std::to_string(rows_needed) + " characters, got " +
                           std::to_string(line.size()));
      }
      for (char c : line) {
        switch (c) {
          case '#':
          case '1':
            g.cells.push_back(1);
            break;
          case '.':
          case '0':
            g.cells.push_back(0);
            break;
          default:
            throw RuntimeError(name + " row " + std::to_string(rows_read + 1) +
                               " (line " + std::to_string(line_no) +
                               "): invalid character '" + std::string(1, c) + "'");
        }
      }
      ++rows_read;
    }
    g.side = rows_needed;
    if (g.side != side) {
      throw RuntimeError(name + ": inconsistent side " + std::to_string(g.side) +
                         " (set uses " + std::to_string(side) + ")");
    }
    glyphs.push_back(std::move(g));
  }

  validate_glyph_set(glyphs);
  return glyphs;
}

GlyphSet load_glyph_set(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw RuntimeError("cannot open glyph file: " + file.string());
  try {
    return load_glyph_set(in);
  } catch (const RuntimeError& e) {
    throw RuntimeError(file.string() + ": " + e.what());
  }
}

}  // namespace nga

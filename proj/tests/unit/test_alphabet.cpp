#include <set>
#include <sstream>

#include "doctest.h"
#include "nga/alphabet.hpp"
#include "nga/errors.hpp"

using namespace nga;

TEST_CASE("encode_grid is row-major") {
  GlyphGrid g;
  g.side = 4;
  g.label = 'x';
  g.cells.assign(16, 0);
  g.cells[0] = 1;  // cell (0,0)
  Pattern p = encode_grid(g);
  CHECK(p.size() == 16);
  CHECK(p[0] == 1);
  CHECK(p.popcount() == 1);

  g.cells.assign(16, 1);
  CHECK(encode_grid(g).popcount() == 16);

  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      g.cells.assign(16, 0);
      g.cells[r * 4 + c] = 1;
      const Pattern q = encode_grid(g);
      for (std::size_t i = 0; i < 16; ++i) CHECK(q[i] == (i == r * 4 + c ? 1 : 0));
    }
  }
}

TEST_CASE("decode_pattern inverts encode_grid") {
  GlyphGrid g;
  g.side = 5;
  g.label = 'q';
  for (std::size_t i = 0; i < 25; ++i) g.cells.push_back((i * 7 + 3) % 3 == 0 ? 1 : 0);

  const Pattern p = encode_grid(g);
  const GlyphGrid back = decode_pattern(p, 5, 'q');
  CHECK(back.cells == g.cells);
  CHECK(encode_grid(back) == p);

  CHECK(decode_pattern(Pattern(16), 4).cells == std::vector<std::uint8_t>(16, 0));
  CHECK_THROWS_AS(decode_pattern(Pattern(15), 4), std::invalid_argument);
}

TEST_CASE("builtin alphabet shape") {
  const GlyphSet& glyphs = builtin_alphabet();
  REQUIRE(glyphs.size() == 26);

  std::set<std::string> encodings;
  for (std::size_t i = 0; i < 26; ++i) {
    CHECK(glyphs[i].label == static_cast<char>('A' + i));
    CHECK(glyphs[i].side == 4);
    const Pattern p = encode_grid(glyphs[i]);
    CHECK(p.size() == 16);
    encodings.insert(p.to_string());
  }
  CHECK(encodings.size() == 26);  // pairwise distinct
}

TEST_CASE("builtin alphabet is a pinned asset") {
  // Census numbers are only comparable against this exact bitmap set; a
  // changed fingerprint means the asset version must be bumped.
  CHECK(glyph_set_fingerprint(builtin_alphabet()) == 11445099750630593864ull);
}

TEST_CASE("glyph file round trip") {
  const std::string text = glyph_set_to_text(builtin_alphabet());
  std::istringstream in(text);
  const GlyphSet parsed = load_glyph_set(in);
  REQUIRE(parsed.size() == 26);
  CHECK(glyph_set_fingerprint(parsed) == glyph_set_fingerprint(builtin_alphabet()));
}

TEST_CASE("glyph parser accepts 0/1 and CRLF") {
  std::istringstream in("@A\r\n0110\r\n1001\r\n1111\r\n1001\r\n");
  const GlyphSet set = load_glyph_set(in);
  REQUIRE(set.size() == 1);
  CHECK(set[0].label == 'A');
  CHECK(encode_grid(set[0]) == Pattern::parse("0110100111111001"));
}

TEST_CASE("glyph parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_glyph_set(in);
  };

  CHECK(parse("").empty());  // empty file is a valid empty set

  CHECK_THROWS_WITH_AS(parse("@A\n#.\n#x\n"), doctest::Contains("invalid character 'x'"),
                       RuntimeError);
  // The set side is fixed by the first glyph; a wider later glyph fails on
  // its first row.
  CHECK_THROWS_WITH_AS(parse("@A\n##\n#.\n@B\n###\n###\n###\n"),
                       doctest::Contains("expected 2 characters, got 3"), RuntimeError);
  CHECK_THROWS_WITH_AS(parse("@A\n##\n#.\n@A\n..\n.#\n"), doctest::Contains("duplicate label"),
                       RuntimeError);
  CHECK_THROWS_WITH_AS(parse("@A\n##\n#.\n@B\n##\n#.\n"), doctest::Contains("duplicate bitmap"),
                       RuntimeError);
  CHECK_THROWS_WITH_AS(parse("no header\n"), doctest::Contains("expected '@<label>'"),
                       RuntimeError);
  CHECK_THROWS_WITH_AS(parse("@A\n##\n"), doctest::Contains("unexpected end of file"),
                       RuntimeError);
  CHECK_THROWS_WITH_AS(parse("@A\n##\n###\n"), doctest::Contains("expected 2 characters"),
                       RuntimeError);
}

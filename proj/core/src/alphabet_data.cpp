#include <sstream>

#include "nga/alphabet.hpp"

namespace nga {

namespace {

// Canonical 4x4 Latin alphabet. This is a versioned data asset: the bitmaps
// are pinned by a fingerprint test and must not change within a release
// line, or census numbers stop being comparable across runs.
//
// Every glyph keeps an odd number of filled cells. Odd-weight patterns are
// far more likely to be stable states of a random +-1 group (an inactive
// neuron then sees an odd, hence nonzero, input sum), which keeps the
// initial covering of the alphabet healthy at practical repertoire sizes.
constexpr const char* kBuiltinAlphabet = R"(@A
.#..
#.#.
####
#..#

@B
###.
#..#
###.
#.##

@C
.###
#...
#...
####

@D
##..
#.#.
#.#.
###.

@E
####
#...
##..
####

@F
####
#...
###.
#...

@G
.###
#...
#.##
.##.

@H
#.#.
###.
#.#.
#.#.

@I
####
.#..
.#..
.###

@J
.###
..#.
..#.
####

@K
#..#
#.#.
###.
#.#.

@L
##..
##..
#...
####

@M
#..#
##.#
#..#
#..#

@N
#...
##.#
#.##
#..#

@O
####
#..#
#..#
###.

@P
###.
#..#
###.
#...

@Q
.##.
#..#
#.#.
.###

@R
###.
#..#
##..
#.#.

@S
.###
#...
..##
###.

@T
####
.##.
.##.
.#..

@U
#..#
#..#
#..#
.###

@V
#..#
#..#
.##.
.###

@W
#..#
#..#
####
.#..

@X
#..#
.##.
###.
#..#

@Y
#..#
.##.
.#..
####

@Z
####
..#.
.#..
###.
)";

}  // namespace

const GlyphSet& builtin_alphabet() {
  static const GlyphSet glyphs = [] {
    std::istringstream in(kBuiltinAlphabet);
    return load_glyph_set(in);
  }();
  return glyphs;
}

}  // namespace nga

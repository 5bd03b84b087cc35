#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "odz/matrix.hpp"
#include "odz/words.hpp"

namespace odz {

// (j, k, l): last moved column, lde of that column, odd entries of its scaled form.
struct Level {
  int j = 0;
  unsigned long k = 0;
  int l = 0;
  friend auto operator<=>(const Level&, const Level&) = default;
  friend bool operator==(const Level&, const Level&) = default;
};

std::string to_string(const Level& lv);

Level level_of(const DyadicMatrix& m);
// Skips the membership check; callers inside the synthesis loop already know it holds.
Level level_unchecked(const DyadicMatrix& m);

// Values at a<b<c<d, all odd. Returns K[a,b,c,d] (-1)[a]^ta ... (-1)[d]^td.
Word reduce_quad(const std::array<int, 4>& indices, const std::array<mpz_class, 4>& values);

Word pivot_syllable(const DyadicMatrix& m);

// The syllables exact synthesis emits from m, in emission order W_1, W_2, ...
std::vector<Word> synthesis_syllables(const DyadicMatrix& m);

struct SynthesisStep {
  Word syllable;
  Level before;
  Level after;
};
// Same syllables with the level before and after each one.
std::vector<SynthesisStep> synthesis_trace(const DyadicMatrix& m);

Word synthesize(const DyadicMatrix& m);

// Generators G_q ... G_1 (as a word) with interp(word) v = e_j. j is 1-based.
Word column_reduce(const DyadicVector& v, int j);

Word synthesize_scaled(const ScaledMatrix& s);

}  // namespace odz

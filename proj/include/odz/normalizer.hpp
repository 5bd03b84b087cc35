#pragma once

#include <string>
#include <vector>

#include "odz/matrix.hpp"
#include "odz/synthesis.hpp"
#include "odz/words.hpp"

namespace odz {

// s --top--> r on the top row, s ==left==> t, r ==right==> q (syllables in emission
// order), t --bottom--> q. Words act on states by left multiplication.
struct Square {
  DyadicMatrix s, r, t, q;
  Generator top;
  Word left;
  std::vector<Word> right;
  Word bottom;
  std::string case_name;

  // W_k ... W_1 as one word.
  Word right_word() const;
};

struct SquareCheck {
  bool commutes = false;
  bool level_ok = false;
  Level source_level;
  // Maximum over every state visited by bottom, t and q included.
  Level bottom_level;
};

SquareCheck check_square(const Square& sq);

Word normal_syllable(const DyadicMatrix& s);
Word normal_word(const DyadicMatrix& s);

// Word over basic generators (X[a,a+1], (-1)[1], K[1,2,3,4]) with the same interpretation
// and extent.
Word basic_decompose(const Generator& g);
Word basic_decompose(const Word& w);

// g basic, s != I. Throws RetrogradeError when g moves a column the algorithm has fixed.
Square complete_square_basic(const DyadicMatrix& s, const Generator& g);

// Connecting simple word between the ends of two normal-syllable sequences from a common
// source. Throws std::logic_error when neither sequence is a prefix of the other.
Word wedge(const std::vector<Word>& nstar, const std::vector<Word>& mstar);

Square complete_square(const DyadicMatrix& s, const Generator& g);

Word normalize(const Word& w, int n);
// Accepts IH; the result is an IH-free normal word, followed by one IH when the
// interpretation has odd sqrt(2)-exponent.
Word normalize_scaled(const Word& w, int n);
bool decide_equal(const Word& v, const Word& w, int n);

}  // namespace odz

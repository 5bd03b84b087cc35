#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace odz {

enum class GenKind : unsigned char { MinusOne, X, K, IH };

// One letter of the alphabet. Indices are 1-based and strictly increasing.
struct Generator {
  GenKind kind = GenKind::MinusOne;
  std::array<int, 4> idx{};

  static Generator minus_one(int a);
  static Generator x(int a, int b);
  static Generator k(int a, int b, int c, int d);
  static Generator ih();

  int arity() const;
  int operator[](int i) const { return idx[static_cast<std::size_t>(i)]; }
  bool touches(int index) const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> gens) : gens_(gens) {}
  explicit Word(std::vector<Generator> gens) : gens_(std::move(gens)) {}

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }
  const std::vector<Generator>& gens() const { return gens_; }

  void push_back(const Generator& g) { gens_.push_back(g); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  Word slice(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Generator> gens_;
};

Generator parse_generator(std::string_view token);
Word parse_word(std::string_view text);
std::string to_string(const Generator& g);
// Tokens separated by single spaces; the empty word renders as "eps".
std::string to_string(const Word& w);

Word inverse_word(const Word& w);

int extent(const Generator& g);
int extent(const Word& w);
bool is_basic(const Generator& g);
bool contains_ih(const Word& w);

// Throws IndexError unless every index lies in 1..n (and n is even when IH occurs).
void check_dimension(const Word& w, int n);
void check_dimension(const Generator& g, int n);

// (-1)[a]^e: the one-letter word when e is odd, otherwise the empty word.
Word sign_pow(int a, int e);

}  // namespace odz

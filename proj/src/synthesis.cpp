#include "odz/synthesis.hpp"

#include <algorithm>

#include "odz/error.hpp"

namespace odz {

std::string to_string(const Level& lv) {
  return "(" + std::to_string(lv.j) + "," + std::to_string(lv.k) + "," + std::to_string(lv.l) + ")";
}

namespace {

void require_member(const DyadicMatrix& m) {
  if (!is_member_od(m)) throw MembershipError("matrix is not in O_n(Z[1/2])");
}

mpz_class scaled_entry(const Dyadic& x, unsigned long k) {
  mpz_class v = x.num();
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k - x.exp());
  return v;
}

bool is_odd(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// Syllable taking the unit vector v to e_j, where v has exactly one nonzero entry ±1 at row a.
Word base_syllable(const DyadicVector& v, int j) {
  int a = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) a = static_cast<int>(i) + 1;
  bool negative = v[static_cast<std::size_t>(a - 1)] == Dyadic(-1);
  if (a == j) return negative ? Word{Generator::minus_one(j)} : Word{};
  Word w{Generator::x(std::min(a, j), std::max(a, j))};
  if (negative) w.push_back(Generator::minus_one(a));
  return w;
}

}  // namespace

Level level_unchecked(const DyadicMatrix& m) {
  int j = m.last_moved_column();
  if (j == 0) return {};
  DyadicVector v = m.column(j - 1);
  unsigned long k = vec_lde(v);
  if (k == 0) return {j, 0, 0};
  int l = 0;
  for (const auto& x : v)
    if (!x.is_zero() && x.exp() == k) ++l;
  return {j, k, l};
}

Level level_of(const DyadicMatrix& m) {
  require_member(m);
  return level_unchecked(m);
}

Word reduce_quad(const std::array<int, 4>& indices, const std::array<mpz_class, 4>& values) {
  for (int i = 0; i < 4; ++i)
    if (!is_odd(values[static_cast<std::size_t>(i)]))
      throw PreconditionError("reduce_quad: entry at index " +
                              std::to_string(indices[static_cast<std::size_t>(i)]) + " is even");
  Word w{Generator::k(indices[0], indices[1], indices[2], indices[3])};
  for (std::size_t i = 0; i < 4; ++i) {
    mpz_class r = values[i] % 4;
    if (r < 0) r += 4;
    if (r == 3) w.push_back(Generator::minus_one(indices[i]));
  }
  return w;
}

Word pivot_syllable(const DyadicMatrix& m) {
  int j = m.last_moved_column();
  if (j == 0) throw Error("no pivot: matrix is the identity");
  DyadicVector v = m.column(j - 1);
  unsigned long k = vec_lde(v);
  if (k == 0) return base_syllable(v, j);
  std::vector<int> odd;
  std::vector<mpz_class> values;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && v[i].exp() == k) {
      odd.push_back(static_cast<int>(i) + 1);
      values.push_back(scaled_entry(v[i], k));
    }
  if (odd.size() % 4 != 0 || odd.empty())
    throw std::logic_error("pivot column has " + std::to_string(odd.size()) +
                           " odd entries; expected a positive multiple of 4");
  return reduce_quad({odd[0], odd[1], odd[2], odd[3]}, {values[0], values[1], values[2], values[3]});
}

std::vector<SynthesisStep> synthesis_trace(const DyadicMatrix& m) {
  require_member(m);
  std::vector<SynthesisStep> steps;
  DyadicMatrix state = m;
  Level lv = level_unchecked(state);
  while (lv.j != 0) {
    Word w = pivot_syllable(state);
    apply_left(w, state);
    Level next = level_unchecked(state);
    if (!(next < lv))
      throw std::logic_error("level did not decrease: " + to_string(lv) + " -> " + to_string(next));
    steps.push_back({std::move(w), lv, next});
    lv = next;
  }
  return steps;
}

std::vector<Word> synthesis_syllables(const DyadicMatrix& m) {
  std::vector<Word> out;
  for (auto& step : synthesis_trace(m)) out.push_back(std::move(step.syllable));
  return out;
}

Word synthesize(const DyadicMatrix& m) {
  // W_l ... W_1 M = I, so M = inverse(W_l ... W_1) = W_1^-1 ... W_l^-1.
  Word out;
  for (const auto& syl : synthesis_syllables(m)) out += inverse_word(syl);
  return out;
}

Word column_reduce(const DyadicVector& v, int j) {
  int n = static_cast<int>(v.size());
  if (j < 1 || j > n) throw IndexError("column_reduce: target index out of range");
  Dyadic norm;
  for (const auto& x : v) norm += x * x;
  if (norm != Dyadic(1)) throw PreconditionError("column_reduce: vector is not a unit vector");
  DyadicVector cur = v;
  Word acc;
  while (true) {
    unsigned long k = vec_lde(cur);
    if (k == 0) break;
    std::vector<int> odd;
    std::vector<mpz_class> values;
    for (int i = 0; i < n; ++i) {
      const Dyadic& x = cur[static_cast<std::size_t>(i)];
      if (!x.is_zero() && x.exp() == k) {
        odd.push_back(i + 1);
        values.push_back(scaled_entry(x, k));
      }
    }
    if (odd.size() % 4 != 0) throw std::logic_error("column_reduce: odd entries not a multiple of 4");
    for (std::size_t q = 0; q < odd.size(); q += 4) {
      Word syl = reduce_quad({odd[q], odd[q + 1], odd[q + 2], odd[q + 3]},
                             {values[q], values[q + 1], values[q + 2], values[q + 3]});
      apply_left(syl, cur);
      acc = syl + acc;
    }
  }
  Word last = base_syllable(cur, j);
  return last + acc;
}

Word synthesize_scaled(const ScaledMatrix& s) {
  if (!is_member_ln(s)) throw MembershipError("matrix is not in L_n");
  if (s.k() % 2 == 0) return synthesize(to_dyadic(s));
  if (s.n() % 2 != 0) throw IndexError("I(x)H undefined for odd n=" + std::to_string(s.n()));
  ScaledMatrix even = s * embed_scaled(Generator::ih(), s.n());
  Word w = synthesize(to_dyadic(even));
  w.push_back(Generator::ih());
  return w;
}

}  // namespace odz

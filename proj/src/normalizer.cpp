#include "odz/normalizer.hpp"

#include <stdexcept>
#include <string>

#include "odz/error.hpp"
#include "odz/relations.hpp"

namespace odz {

Word Square::right_word() const {
  Word w;
  for (auto it = right.rbegin(); it != right.rend(); ++it) w += *it;
  return w;
}

SquareCheck check_square(const Square& sq) {
  SquareCheck c;
  const int n = sq.s.n();
  DyadicMatrix via_left = interp(sq.bottom, n) * interp(sq.left, n) * sq.s;
  DyadicMatrix via_top = interp(sq.right_word(), n) * embed_generator(sq.top, n) * sq.s;
  c.commutes = via_left == via_top;
  c.source_level = level_unchecked(sq.s);
  DyadicMatrix state = sq.t;
  c.bottom_level = level_unchecked(state);
  for (auto it = sq.bottom.gens().rbegin(); it != sq.bottom.gens().rend(); ++it) {
    apply_left(*it, state);
    c.bottom_level = std::max(c.bottom_level, level_unchecked(state));
  }
  c.level_ok = c.bottom_level < c.source_level;
  return c;
}

Word normal_syllable(const DyadicMatrix& s) {
  if (!is_member_od(s)) throw MembershipError("normal_syllable: state is not orthogonal dyadic");
  if (s.is_identity()) throw PreconditionError("normal_syllable: the identity has no normal edge");
  return pivot_syllable(s);
}

Word normal_word(const DyadicMatrix& s) {
  std::vector<Word> syllables = synthesis_syllables(s);
  Word w;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) w += *it;
  return w;
}

namespace {

// X[lo,lo+1] X[lo+1,lo+2] ... X[hi-1,hi]
Word ladder_up(int lo, int hi) {
  Word w;
  for (int i = lo; i < hi; ++i) w.push_back(Generator::x(i, i + 1));
  return w;
}

}  // namespace

Word basic_decompose(const Generator& g) {
  switch (g.kind) {
    case GenKind::IH:
      throw PreconditionError("basic_decompose: IH has no basic decomposition");
    case GenKind::MinusOne: {
      // Carry index 1 up to a through adjacent swaps.
      Word c = inverse_word(ladder_up(1, g[0]));
      return c + Word{Generator::minus_one(1)} + inverse_word(c);
    }
    case GenKind::X: {
      Word c = ladder_up(g[0], g[1] - 1);
      return c + Word{Generator::x(g[1] - 1, g[1])} + inverse_word(c);
    }
    case GenKind::K: {
      // Move slot i (counting down from 4) to its target index; each chain stays below
      // the extent of g.
      Word c;
      for (int i = 1; i <= 4; ++i) c += inverse_word(ladder_up(i, g[i - 1]));
      return c + Word{Generator::k(1, 2, 3, 4)} + inverse_word(c);
    }
  }
  throw std::logic_error("basic_decompose: unknown generator kind");
}

Word basic_decompose(const Word& w) {
  Word out;
  for (const auto& g : w) out += basic_decompose(g);
  return out;
}

Word wedge(const std::vector<Word>& nstar, const std::vector<Word>& mstar) {
  const auto& shorter = nstar.size() <= mstar.size() ? nstar : mstar;
  const auto& longer = nstar.size() <= mstar.size() ? mstar : nstar;
  for (std::size_t i = 0; i < shorter.size(); ++i)
    if (shorter[i] != longer[i])
      throw std::logic_error("wedge: normal sequences diverge at syllable " + std::to_string(i));
  Word suffix;
  for (std::size_t i = longer.size(); i-- > shorter.size();) suffix += longer[i];
  return nstar.size() <= mstar.size() ? suffix : inverse_word(suffix);
}

Square complete_square(const DyadicMatrix& s, const Generator& g) {
  if (g.kind == GenKind::IH) throw PreconditionError("complete_square: IH is not a simple edge");
  if (is_basic(g)) return complete_square_basic(s, g);
  check_dimension(g, s.n());
  if (s.is_identity()) throw PreconditionError("complete_square: state is the identity");

  const Word h = basic_decompose(g);
  Square out;
  out.s = s;
  out.top = g;
  out.left = normal_syllable(s);
  out.t = s;
  apply_left(out.left, out.t);

  DyadicMatrix si = s;
  std::vector<Word> prev_right;  // N*_{i-1}
  bool first = true;
  std::string names;
  for (auto it = h.gens().rbegin(); it != h.gens().rend(); ++it) {
    std::vector<Word> ni;  // N_i as a sequence: empty at the identity
    if (!si.is_identity()) ni.push_back(normal_syllable(si));
    if (!first) out.bottom = wedge(prev_right, ni) + out.bottom;
    Word hstar;
    if (si.is_identity()) {
      // From I the square closes on the full normal path of the basic generator.
      apply_left(*it, si);
      prev_right = synthesis_syllables(si);
      names += names.empty() ? "identity" : "; identity";
    } else {
      Square sq = complete_square_basic(si, *it);
      si = sq.r;
      prev_right = sq.right;
      hstar = sq.bottom;
      names += (names.empty() ? "" : "; ") + sq.case_name;
    }
    out.bottom = hstar + out.bottom;
    first = false;
  }
  out.r = si;
  out.right = prev_right;
  out.q = si;
  for (const auto& syl : out.right) apply_left(syl, out.q);
  out.case_name = "chain(" + names + ")";
  DyadicMatrix end = out.t;
  apply_left(out.bottom, end);
  if (end != out.q) throw std::logic_error("complete_square: chained square does not commute");
  return out;
}

Word normalize(const Word& w, int n) {
  check_dimension(w, n);
  if (contains_ih(w)) throw PreconditionError("normalize: word contains IH; use normalize_scaled");
  return normal_word(transpose(interp(w, n)));
}

namespace {

// IH B IH for a basic B, read off the scaled relations.
Word conjugate_basic(const Generator& g, int n) {
  switch (g.kind) {
    case GenKind::K: return instantiate("S2", {}, n).second;
    case GenKind::MinusOne: return instantiate("S3", {}, n).second;
    case GenKind::X: return instantiate("S4", {{"a", g[0]}}, n).second;
    default: throw std::logic_error("conjugate_basic: IH");
  }
}

Word conjugate(const Word& w, int n) {
  Word out;
  for (const auto& g : w)
    for (const auto& b : basic_decompose(g)) out += conjugate_basic(b, n);
  return out;
}

}  // namespace

Word normalize_scaled(const Word& w, int n) {
  check_dimension(w, n);
  if (!contains_ih(w)) return normalize(w, n);
  // Reading right to left, the suffix seen so far equals tail IH^parity.
  Word tail;
  bool parity = false;
  for (auto it = w.gens().rbegin(); it != w.gens().rend(); ++it) {
    if (it->kind == GenKind::IH) {
      tail = normalize(conjugate(tail, n), n);
      parity = !parity;
    } else {
      tail = Word{*it} + tail;
    }
  }
  Word out = normalize(tail, n);
  if (parity) out.push_back(Generator::ih());
  return out;
}

bool decide_equal(const Word& v, const Word& w, int n) {
  if (contains_ih(v) || contains_ih(w)) return normalize_scaled(v, n) == normalize_scaled(w, n);
  return normalize(v, n) == normalize(w, n);
}

}  // namespace odz

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "odz/derived.hpp"
#include "odz/error.hpp"
#include "odz/matrix.hpp"
#include "odz/normalizer.hpp"
#include "odz/random_words.hpp"
#include "odz/relations.hpp"
#include "odz/residue.hpp"
#include "odz/synthesis.hpp"

using namespace odz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome relation_soundness() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& s : primitive_catalog()) {
    SoundnessReport r = verify_soundness(s, 8);
    count += r.instances;
    if (!r.ok) o.fail(s.id + " fails at " + to_string(*r.first_failure));
  }
  for (int n : {2, 4, 6, 8})
    for (const auto& s : scaled_catalog()) {
      SoundnessReport r = verify_soundness(s, n);
      count += r.instances;
      if (!r.ok) o.fail(s.id + " fails at n=" + std::to_string(n) + ": " + to_string(*r.first_failure));
    }
  if (o.ok) o.detail = std::to_string(count) + " instances hold exactly";
  return o;
}

Outcome derived_soundness() {
  Outcome o;
  std::size_t traces = 0;
  for (const auto& d : derived_catalog()) {
    try {
      if (!verify_derived_soundness(d)) o.fail(d.schema.id + " is not sound");
      if (!d.is_schematic()) {
        if (!verify_derivation(d)) o.fail(d.schema.id + " trace does not replay");
        ++traces;
      }
    } catch (const Error& e) {
      o.fail(d.schema.id + ": " + e.what());
    }
  }
  if (o.ok)
    o.detail = std::to_string(derived_catalog().size()) + " entries sound, " + std::to_string(traces) +
               " traces replay";
  return o;
}

Outcome synthesis_round_trip() {
  Outcome o;
  Rng rng(1003);
  const int dims[] = {4, 5, 6, 8};
  std::size_t syllables = 0;
  for (int i = 0; i < 1000 && o.ok; ++i) {
    int n = dims[rng() % 4];
    Word w = random_word(rng, n, rng() % 61);
    DyadicMatrix m = interp(w, n);
    if (interp(synthesize(m), n) != m) o.fail("round trip differs for " + to_string(w));
    for (const auto& step : synthesis_trace(m)) {
      ++syllables;
      if (!(step.after < step.before)) o.fail("level did not drop for " + to_string(w));
    }
  }
  if (o.ok) o.detail = "1000 words, " + std::to_string(syllables) + " syllables all descend";
  return o;
}

Outcome canonicity() {
  Outcome o;
  Rng rng(1004);
  int equal_pairs = 0, distinct_pairs = 0;
  while (equal_pairs < 200 && o.ok) {
    int n = 4 + static_cast<int>(rng() % 5);
    Word w = random_word(rng, n, rng() % 30);
    Word v = w;
    int steps = 1 + static_cast<int>(rng() % 10), applied = 0;
    for (int k = 0; k < steps; ++k)
      if (auto s = random_step(rng, v, n)) {
        v = apply_step(v, *s);
        ++applied;
      }
    if (applied == 0) continue;
    ++equal_pairs;
    if (normalize(w, n) != normalize(v, n)) o.fail("forms differ for " + to_string(w) + " / " + to_string(v));
  }
  while (distinct_pairs < 200 && o.ok) {
    int n = 3 + static_cast<int>(rng() % 6);
    Word v = random_word(rng, n, rng() % 30), w = random_word(rng, n, rng() % 30);
    if (interp(v, n) == interp(w, n)) continue;
    ++distinct_pairs;
    if (normalize(v, n) == normalize(w, n)) o.fail("forms coincide for " + to_string(v) + " / " + to_string(w));
  }
  if (o.ok) o.detail = "200 related pairs agree, 200 distinct pairs differ";
  return o;
}

Outcome two_dimensional_closure() {
  Outcome o;
  Rng rng(1005);
  std::set<std::string> forms;
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(rng, 2, rng() % 40);
    Word nw = normalize(w, 2);
    if (!is_signed_permutation(interp(nw, 2))) o.fail(to_string(nw) + " is not a signed permutation");
    forms.insert(to_string(nw));
  }
  if (forms.size() != 8) o.fail(std::to_string(forms.size()) + " canonical words instead of 8");
  if (o.ok) o.detail = "2000 words reach exactly 8 canonical words";
  return o;
}

Outcome residues() {
  Outcome o;
  std::size_t checks = 0;
  for (long a = -9; a <= 9; ++a)
    for (long b = -9; b <= 9; ++b)
      for (long c = -9; c <= 9; ++c)
        for (long d = -9; d <= 9; ++d) {
          Int4 u{a, b, c, d};
          for (const auto& p : k4_predictions(u)) {
            ++checks;
            auto actual = k4_actual_residue(u, p.target, std::max(p.modulus, 1));
            if (!actual) {
              o.fail(p.branch + ": K u not integral");
              continue;
            }
            if (p.modulus > 1 && std::find(p.patterns.begin(), p.patterns.end(), *actual) == p.patterns.end())
              o.fail(p.branch + " misses " + *actual);
          }
        }
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<long> q(-50, 50);
  for (int i = 0; i < 500; ++i) {
    Int8 u;
    for (auto& x : u) x = 4 * q(rng) + 1;
    int cls = norm_class8(u);
    if (cls != 0 && cls != 8) o.fail("norm class " + std::to_string(cls));
    auto actual = k8_actual_parity(u);
    auto p = classify_k8(u);
    if (!actual || std::find(p.patterns.begin(), p.patterns.end(), *actual) == p.patterns.end())
      o.fail(p.branch + " misses an 8-vector");
  }
  if (o.ok) o.detail = std::to_string(checks) + " 4-vector predictions and 500 8-vectors hold";
  return o;
}

Outcome scaled_completeness() {
  Outcome o;
  Rng rng(1007);
  const int dims[] = {2, 4, 6};
  for (int i = 0; i < 500; ++i) {
    int n = dims[rng() % 3];
    Word w = random_word(rng, n, rng() % 30, true);
    Word out = normalize_scaled(w, n);
    ScaledMatrix m = interp_scaled(w, n);
    bool ends_ih = !out.empty() && out[out.size() - 1].kind == GenKind::IH;
    if (ends_ih != (sqrt2_lde(m) % 2 == 1)) o.fail("IH parity wrong for " + to_string(w));
    if (interp_scaled(out, n) != m) o.fail("interpretation changed for " + to_string(w));
  }
  if (to_string(normalize_scaled(parse_word("IH"), 2)) != "IH") o.fail("H does not normalize to IH");
  if (o.ok) o.detail = "500 words keep interpretation and IH parity";
  return o;
}

Outcome main_lemma_squares() {
  Outcome o;
  Rng rng(1008);
  int squares = 0, retrograde = 0;
  for (int i = 0; i < 300; ++i) {
    int n = 4 + static_cast<int>(rng() % 3);
    DyadicMatrix s = interp(random_word(rng, n, 1 + rng() % 30), n);
    if (s.is_identity()) {
      --i;
      continue;
    }
    std::vector<Generator> basics{Generator::minus_one(1), Generator::k(1, 2, 3, 4)};
    for (int a = 1; a < n; ++a) basics.push_back(Generator::x(a, a + 1));
    for (const auto& g : basics) {
      Square sq;
      try {
        sq = complete_square_basic(s, g);
      } catch (const RetrogradeError&) {
        ++retrograde;
        continue;
      }
      ++squares;
      SquareCheck c = check_square(sq);
      if (!c.commutes) o.fail("square does not commute at " + to_string(Word{g}));
      if (!c.level_ok)
        o.fail("bottom level " + to_string(c.bottom_level) + " not below " + to_string(c.source_level));
    }
  }
  if (o.ok)
    o.detail = std::to_string(squares) + " squares hold, " + std::to_string(retrograde) + " retrograde edges skipped";
  return o;
}

Outcome word_problem() {
  Outcome o;
  Rng rng(1009);
  int agree_equal = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + static_cast<int>(rng() % 7);
    Word v = random_word(rng, n, rng() % 30), w;
    if (i % 2 == 0) {
      w = v;
      for (int k = 0; k < 8; ++k)
        if (auto s = random_step(rng, w, n)) w = apply_step(w, *s);
    } else {
      w = random_word(rng, n, rng() % 30);
    }
    bool semantic = interp(v, n) == interp(w, n);
    if (decide_equal(v, w, n) != semantic) o.fail("disagreement on " + to_string(v) + " / " + to_string(w));
    agree_equal += semantic;
  }
  if (o.ok) o.detail = "1000 pairs agree (" + std::to_string(agree_equal) + " equal)";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"relation soundness", relation_soundness},
      {"derived relations", derived_soundness},
      {"synthesis round trip", synthesis_round_trip},
      {"normal-form canonicity", canonicity},
      {"O_2 closure", two_dimensional_closure},
      {"residue oracles", residues},
      {"scaled completeness", scaled_completeness},
      {"main lemma squares", main_lemma_squares},
      {"word problem", word_problem},
  };
  int failures = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}

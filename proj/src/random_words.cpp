#include "odz/random_words.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "odz/error.hpp"

namespace odz {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// k distinct values from 1..n, increasing.
std::array<int, 4> sample_sorted(Rng& rng, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::array<int, 4> out{};
  for (int i = 0; i < k; ++i) {
    int j = uniform(rng, i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.begin() + k);
  return out;
}

}  // namespace

Generator random_generator(Rng& rng, int n, bool with_ih) {
  if (n < 1) throw DimensionError("random_generator: n must be positive");
  std::vector<GenKind> kinds{GenKind::MinusOne};
  if (n >= 2) kinds.push_back(GenKind::X);
  if (n >= 4) kinds.push_back(GenKind::K);
  if (with_ih && n % 2 == 0) kinds.push_back(GenKind::IH);
  switch (kinds[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kinds.size()) - 1))]) {
    case GenKind::MinusOne: return Generator::minus_one(uniform(rng, 1, n));
    case GenKind::X: {
      auto i = sample_sorted(rng, n, 2);
      return Generator::x(i[0], i[1]);
    }
    case GenKind::K: {
      auto i = sample_sorted(rng, n, 4);
      return Generator::k(i[0], i[1], i[2], i[3]);
    }
    case GenKind::IH: return Generator::ih();
  }
  throw std::logic_error("random_generator: unreachable");
}

Word random_word(Rng& rng, int n, std::size_t length, bool with_ih) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(random_generator(rng, n, with_ih));
  return w;
}

std::optional<RewriteStep> random_step(Rng& rng, const Word& w, int n,
                                       const std::vector<std::string_view>& relation_ids,
                                       int attempts) {
  if (relation_ids.empty()) return std::nullopt;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const auto& schema =
        find_schema(relation_ids[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(relation_ids.size()) - 1))]);
    if (static_cast<int>(schema.vars.size()) > n) continue;
    Substitution subst;
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < schema.vars.size(); ++i) subst[schema.vars[i]] = pool[i];
    RelationInstance inst{schema.id, subst, n};
    std::pair<Word, Word> sides;
    try {
      sides = instantiate(inst);
    } catch (const Error&) {
      continue;
    }
    std::vector<RewriteStep> options;
    for (Direction dir : {Direction::LhsToRhs, Direction::RhsToLhs}) {
      const Word& source = dir == Direction::LhsToRhs ? sides.first : sides.second;
      if (source.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + source.size() <= w.size(); ++pos)
        if (w.slice(pos, source.size()) == source) options.push_back({pos, inst, dir});
    }
    if (options.empty()) continue;
    return options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
  }
  return std::nullopt;
}

std::optional<RewriteStep> random_step(Rng& rng, const Word& w, int n, int attempts) {
  std::vector<std::string_view> ids;
  for (const auto& s : primitive_catalog()) ids.push_back(s.id);
  return random_step(rng, w, n, ids, attempts);
}

}  // namespace odz
